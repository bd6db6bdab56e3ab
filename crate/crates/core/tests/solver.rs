mod common;

use common::brute_force_gamma;
use domcells::domination::{gamma_exact, gamma_path, greedy_upper_bound, is_dominating, Budget};
use domcells::graph::{path_graph, random_gnp, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_matches_brute_force(g in arb_graph(11)) {
        let r = gamma_exact(&g, Budget::UNLIMITED).unwrap();
        prop_assert!(r.proven_optimal);
        prop_assert_eq!(r.gamma, brute_force_gamma(&g));
        prop_assert_eq!(r.witness.len(), r.gamma);
        prop_assert_eq!(r.lower_bound, r.gamma);
        prop_assert!(is_dominating(&g, &r.witness).unwrap());
    }

    #[test]
    fn greedy_is_a_dominating_upper_bound(g in arb_graph(14)) {
        let s = greedy_upper_bound(&g);
        prop_assert!(is_dominating(&g, &s).unwrap());
        let r = gamma_exact(&g, Budget::UNLIMITED).unwrap();
        prop_assert!(s.len() >= r.gamma);
    }
}

#[test]
fn seeded_graphs_match_brute_force() {
    for seed in 0..60u64 {
        let n = 1 + (seed as usize % 12);
        let p = [0.15, 0.3, 0.5][seed as usize % 3];
        let g = random_gnp(n, p, seed).unwrap();
        let r = gamma_exact(&g, Budget::UNLIMITED).unwrap();
        assert_eq!(r.gamma, brute_force_gamma(&g), "seed {seed}");
    }
}

#[test]
fn path_closed_form_matches_solver() {
    for n in 1..=30 {
        let r = gamma_exact(&path_graph(n).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!(gamma_path(n).unwrap(), r.gamma, "P{n}");
    }
    assert!(gamma_path(0).is_err());
}

#[test]
fn node_budget_reports_bounds() {
    let g = random_gnp(60, 0.08, 3).unwrap();
    let r = gamma_exact(&g, Budget::nodes(50)).unwrap();
    assert!(r.lower_bound <= r.gamma);
    assert!(is_dominating(&g, &r.witness).unwrap());
    if !r.proven_optimal {
        let full = gamma_exact(&g, Budget::UNLIMITED).unwrap();
        assert!(r.lower_bound <= full.gamma && full.gamma <= r.gamma);
    }
}

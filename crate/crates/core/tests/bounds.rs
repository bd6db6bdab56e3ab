mod common;

use common::{cn_reference, maroon_reference, rational_equals};
use domcells::bounds::{
    check_combined_inequality, check_fiber_maroon, check_main_lemma, check_theorem_bound,
    cn_coefficient, maroon_bound_factor, run_checks, CheckKind, GammaInputs, ProvenGamma, Rational,
};
use domcells::cells::{build_partition, color_cells};
use domcells::domination::{gamma_exact, Budget};
use domcells::graph::{empty_graph, path_graph};
use domcells::harness::{reproduce_example, ReproduceOptions};
use domcells::product::cartesian_with_path;

#[test]
fn closed_forms_match_reference_up_to_1000() {
    for n in 1..=1000u64 {
        let c = cn_coefficient(n as usize).unwrap().to_string();
        assert!(rational_equals(&c, cn_reference(n)), "c_{n} = {c}");
        let m = maroon_bound_factor(n as usize).unwrap().to_string();
        assert!(
            rational_equals(&m, maroon_reference(n)),
            "factor({n}) = {m}"
        );
    }
}

#[test]
fn coefficient_shape() {
    let three_quarters = Rational::new(3, 4).unwrap();
    assert_eq!(cn_coefficient(2).unwrap(), Rational::new(2, 3).unwrap());
    assert_eq!(cn_coefficient(3).unwrap(), three_quarters);
    let mut previous = Rational::integer(0);
    for k in 0..300 {
        let a = cn_coefficient(3 * k + 1).unwrap();
        let b = cn_coefficient(3 * k + 2).unwrap();
        assert!(a < three_quarters && b < three_quarters);
        assert!(a > previous);
        previous = a;
    }
    let half = cn_coefficient(1).unwrap() * Rational::integer(1);
    assert_eq!(half.to_string(), "1/2");
    let two_thirds = cn_coefficient(2).unwrap() * Rational::integer(1);
    assert_eq!(two_thirds.to_string(), "2/3");
}

#[test]
fn combined_inequality_on_examples() {
    let e1 = reproduce_example(1, ReproduceOptions::default()).unwrap();
    let l1 = e1.coloring.ledger();
    let p = ProvenGamma::certified;
    let r = check_combined_inequality(&l1, p(3), p(2), 2).unwrap();
    assert!(r.passed);
    assert_eq!(r.outcomes[0].rhs, Rational::integer(12));
    let e2 = reproduce_example(2, ReproduceOptions::default()).unwrap();
    let l2 = e2.coloring.ledger();
    let r = check_combined_inequality(&l2, p(3), p(2), 3).unwrap();
    assert!(r.passed);
    assert_eq!(r.outcomes[0].rhs, Rational::integer(18));
    assert!(check_combined_inequality(&l2, p(3), p(2), 2).is_err());
}

#[test]
fn grid_counterexample_to_sharper_maroon_factor() {
    // K1 □ P4 □ P4 is the 4x4 grid: gamma = 4, and every minimum dominating
    // set leaves six maroon cells, above 1 * gamma.
    let x = empty_graph(1).unwrap();
    let y = path_graph(4).unwrap();
    let prod = cartesian_with_path(&x, &y, 4).unwrap();
    let gp = gamma_exact(prod.flat(), Budget::UNLIMITED).unwrap();
    assert_eq!(gp.gamma, 4);
    let partition = build_partition(&x, &[0]).unwrap();
    let c = color_cells(&partition, &prod, &gp.witness).unwrap();
    let l = c.ledger();
    assert_eq!(l.total.cells_of(domcells::cells::CellColor::Maroon), 6);
    let r = check_main_lemma(&l, ProvenGamma::from_result(&gp).unwrap(), 4).unwrap();
    assert!(!r.passed);
    assert!(r.finding_of_interest);
    assert!(check_fiber_maroon(&l).unwrap().passed);
    let t = check_theorem_bound(
        ProvenGamma::certified(4),
        ProvenGamma::certified(1),
        ProvenGamma::certified(2),
        4,
    )
    .unwrap();
    assert!(t.passed);
}

#[test]
fn unproven_values_are_refused() {
    let g = path_graph(40).unwrap();
    let r = gamma_exact(&g, Budget::nodes(1)).unwrap();
    if !r.proven_optimal {
        assert!(ProvenGamma::from_result(&r).is_err());
    }
    let x = path_graph(2).unwrap();
    let prod = cartesian_with_path(&x, &x, 2).unwrap();
    let d = gamma_exact(prod.flat(), Budget::UNLIMITED).unwrap().witness;
    let c = color_cells(&build_partition(&x, &[0]).unwrap(), &prod, &d).unwrap();
    let p = ProvenGamma::certified;
    let g = GammaInputs {
        x: p(1),
        y: p(1),
        z: p(1),
        product: None,
    };
    let reports = run_checks(&c, &c.ledger(), &g, &CheckKind::ALL).unwrap();
    for r in reports {
        let refused = !r.applicable && r.note.as_deref().unwrap_or("").starts_with("refused");
        assert_eq!(
            refused,
            r.name == "main-lemma" || r.name == "theorem",
            "{}",
            r.name
        );
    }
}

#[test]
fn report_json_uses_exact_strings() {
    let r = check_theorem_bound(
        ProvenGamma::certified(25),
        ProvenGamma::certified(3),
        ProvenGamma::certified(2),
        3,
    )
    .unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["outcomes"][0]["lhs"], "25/1");
    assert_eq!(v["outcomes"][0]["rhs"], "9/2");
}

#[test]
fn checks_pass_on_both_examples() {
    for id in [1, 2] {
        let run = reproduce_example(id, ReproduceOptions::default()).unwrap();
        for c in &run.report.instances[0].checks {
            assert!(c.passed, "example {id}: {} failed", c.name);
        }
    }
}

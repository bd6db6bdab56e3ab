mod common;

use common::{definitional_color, truth_table_rows};
use domcells::cells::{build_partition, color_cells, color_cells_with, count_colors, CellColor};
use domcells::domination::{gamma_exact, Budget};
use domcells::graph::{path_graph, random_gnp, VertexSet};
use domcells::par::Parallelism;
use domcells::product::cartesian_with_path;
use proptest::prelude::*;

#[test]
fn every_flag_combination_has_its_color() {
    let rows = truth_table_rows();
    assert_eq!(rows.len(), 8);
    for r in &rows {
        let (d, y, z) = r.flags;
        assert_eq!(r.library, CellColor::classify(d, y, z));
        assert_eq!(r.library, r.definitional, "flags {:?}", r.flags);
    }
    let mut colors: Vec<_> = rows.iter().map(|r| r.library).collect();
    colors.sort();
    colors.dedup();
    assert_eq!(colors.len(), 8);
}

#[test]
fn bullet_definitions() {
    use CellColor::*;
    assert_eq!(CellColor::classify(true, false, false), Blue);
    assert_eq!(CellColor::classify(true, true, false), Green);
    assert_eq!(CellColor::classify(true, false, true), Yellow);
    assert_eq!(CellColor::classify(true, true, true), Orange);
    assert_eq!(CellColor::classify(false, false, false), Red);
    assert_eq!(CellColor::classify(false, true, false), Pink);
    assert_eq!(CellColor::classify(false, false, true), Maroon);
    assert_eq!(CellColor::classify(false, true, true), White);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Library colors agree with the definitions on random instances, and
    /// the ledger's counts add up.
    #[test]
    fn random_instances_match_definitions(
        nx in 1usize..6, ny in 1usize..5, n in 1usize..4,
        p in 0.1f64..0.7, seed in any::<u64>(), extra in proptest::collection::vec(any::<u16>(), 0..6),
    ) {
        let x = random_gnp(nx, p, seed).unwrap();
        let y = random_gnp(ny, p, seed.wrapping_add(1)).unwrap();
        let z = path_graph(n).unwrap();
        let prod = cartesian_with_path(&x, &y, n).unwrap();
        let gx = gamma_exact(&x, Budget::UNLIMITED).unwrap();
        let partition = build_partition(&x, &gx.witness.to_vec()).unwrap();
        let mut d = gamma_exact(prod.flat(), Budget::UNLIMITED).unwrap().witness;
        for e in extra {
            d.insert(e as usize % prod.order());
        }
        let c = color_cells(&partition, &prod, &d).unwrap();
        let seq = color_cells_with(&partition, &prod, &d, Parallelism::Sequential).unwrap();
        let triples: Vec<_> = d.iter().map(|id| {
            let t = prod.to_coord(id).unwrap();
            (t.x, t.y, t.z)
        }).collect();
        let (k, _, _) = c.dims();
        for i in 0..k {
            let cell = partition.cells()[i].to_vec();
            for yy in 0..ny {
                for zz in 0..n {
                    let want = definitional_color(&y, &z, &cell, yy, zz, &triples);
                    prop_assert_eq!(c.color(i, yy, zz).unwrap(), want);
                    prop_assert_eq!(seq.color(i, yy, zz).unwrap(), want);
                }
            }
        }
        let l = count_colors(&c);
        prop_assert_eq!(l.total.total_cells() as usize, k * ny * n);
        prop_assert_eq!(l.total.total_vertices() as usize, d.len());
        let fiber_sum: u64 = (0..k).flat_map(|i| (0..ny).map(move |yy| (i, yy)))
            .map(|(i, yy)| l.z_fiber(i, yy).total_cells()).sum();
        prop_assert_eq!(fiber_sum, l.total.total_cells());
    }
}

#[test]
fn two_factor_products_have_no_z_colors() {
    use domcells::product::cartesian2;
    let x = path_graph(4).unwrap();
    let y = path_graph(3).unwrap();
    let p = cartesian2(&x, &y).unwrap();
    let d = gamma_exact(p.flat(), Budget::UNLIMITED).unwrap().witness;
    let partition = build_partition(&x, &[1, 2]).unwrap();
    let l = color_cells(&partition, &p, &d).unwrap().ledger();
    for c in [
        CellColor::Yellow,
        CellColor::Orange,
        CellColor::Maroon,
        CellColor::White,
    ] {
        assert_eq!(l.total.cells_of(c), 0);
    }
}

#[test]
fn non_dominating_set_is_rejected() {
    let x = path_graph(3).unwrap();
    let p = cartesian_with_path(&x, &path_graph(2).unwrap(), 2).unwrap();
    let partition = build_partition(&x, &[1]).unwrap();
    let d = VertexSet::from_ids(p.order(), [0]).unwrap();
    assert!(color_cells(&partition, &p, &d).is_err());
}

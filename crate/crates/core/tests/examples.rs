use domcells::cells::CellColor;
use domcells::domination::first_undominated;
use domcells::harness::{
    golden_colors, max_maroon_fibers, render_svg, reproduce_example, worked_example,
    ReproduceOptions,
};
use domcells::Error;

#[test]
fn example_one_named_cells() {
    let run = reproduce_example(1, ReproduceOptions::default()).unwrap();
    let c = &run.coloring;
    assert_eq!(c.color(0, 3, 0).unwrap(), CellColor::Blue);
    assert_eq!(c.color(2, 0, 0).unwrap(), CellColor::Green);
    assert_eq!(c.color(0, 1, 0).unwrap(), CellColor::Yellow);
    assert_eq!(c.color(0, 1, 1).unwrap(), CellColor::Orange);
    assert_eq!(c.color(0, 0, 0).unwrap(), CellColor::White);
    assert_eq!(c.color(1, 0, 0).unwrap(), CellColor::Pink);
    assert_eq!(c.color(1, 3, 1).unwrap(), CellColor::Maroon);
    assert_eq!(c.ledger().total.cells_of(CellColor::Red), 0);
    assert!(run.report.passed());
    let g: Vec<usize> = run.factor_gammas.iter().map(|r| r.gamma).collect();
    assert_eq!(g, [3, 2, 1]);
}

#[test]
fn example_two_partition_and_maroon_fiber() {
    let e = worked_example(2).unwrap();
    let cells: Vec<Vec<usize>> = e.partition.cells().iter().map(|c| c.to_vec()).collect();
    assert_eq!(cells, [vec![0, 1, 2, 5], vec![3, 4], vec![6, 7, 8]]);
    let run = reproduce_example(2, ReproduceOptions::default()).unwrap();
    assert_eq!(max_maroon_fibers(&run.coloring), [(1, 1)]);
    let fiber = run.coloring.z_fiber_colors(1, 1);
    assert_eq!(fiber[0], CellColor::Maroon);
    assert!(matches!(fiber[1], CellColor::Blue | CellColor::Green));
    assert_eq!(fiber[2], CellColor::Maroon);
}

#[test]
fn golden_files_agree_with_library() {
    for id in [1, 2] {
        let run = reproduce_example(id, ReproduceOptions::default()).unwrap();
        let golden = golden_colors(id).unwrap();
        for (i, rows) in golden.iter().enumerate() {
            for (y, cols) in rows.iter().enumerate() {
                for (z, &want) in cols.iter().enumerate() {
                    assert_eq!(run.coloring.color(i, y, z).unwrap(), want);
                }
            }
        }
        let (k, ny, nz) = run.coloring.dims();
        assert_eq!(
            (golden.len(), golden[0].len(), golden[0][0].len()),
            (k, ny, nz)
        );
    }
    assert!(golden_colors(3).is_err());
}

#[test]
fn removing_a_vertex_breaks_domination() {
    let e = worked_example(1).unwrap();
    let mut d = e.dset.clone();
    let first = d.iter().next().unwrap();
    d.remove(first);
    assert!(first_undominated(e.product.flat(), &d).unwrap().is_some());
    let err = domcells::cells::color_cells(&e.partition, &e.product, &d).unwrap_err();
    assert!(matches!(err, Error::NotDominating { .. }));
}

#[test]
fn unknown_example_is_rejected() {
    assert!(worked_example(3).is_err());
    assert!(reproduce_example(0, ReproduceOptions::default()).is_err());
}

#[test]
fn svg_has_one_block_per_layer() {
    for (id, layers, rows, cols) in [(1u8, 2usize, 3usize, 4usize), (2, 3, 3, 5)] {
        let run = reproduce_example(id, ReproduceOptions::default()).unwrap();
        let svg = render_svg(&run.coloring);
        let doc = roxmltree::Document::parse(&svg).expect("well-formed SVG");
        let blocks: Vec<_> = doc
            .descendants()
            .filter(|n| n.attribute("class") == Some("layer"))
            .collect();
        assert_eq!(blocks.len(), layers);
        for b in blocks {
            let cells = b
                .descendants()
                .filter(|n| n.attribute("class") == Some("cell"))
                .count();
            assert_eq!(cells, rows * cols);
        }
        let dots = doc
            .descendants()
            .filter(|n| n.attribute("class") == Some("dvertex"))
            .count();
        assert_eq!(dots, run.coloring.dset().len());
        let dashed = doc
            .descendants()
            .filter(|n| n.attribute("stroke-dasharray").is_some())
            .count();
        assert_eq!(
            dashed as u64,
            run.coloring.ledger().total.cells_of(CellColor::White)
        );
    }
}

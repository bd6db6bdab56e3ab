//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use domcells::cells::CellColor;
use domcells::graph::Graph;

/// Minimum dominating set size by enumerating subsets in order of size.
pub fn brute_force_gamma(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20, "brute force limited to 20 vertices");
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &u| m | (1 << u)))
        .collect();
    let full = (1u32 << n) - 1;
    let mut best = n;
    for s in 0u32..(1 << n) {
        let size = s.count_ones() as usize;
        if size >= best {
            continue;
        }
        let covered = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .fold(0u32, |c, v| c | masks[v]);
        if covered == full {
            best = size;
        }
    }
    best
}

/// Cell color straight from the definitions, for product vertices given as
/// `(x, y, z)` triples and a dominating set `d` of such triples.
pub fn definitional_color(
    y: &Graph,
    z: &Graph,
    cell: &[usize],
    yy: usize,
    zz: usize,
    d: &[(usize, usize, usize)],
) -> CellColor {
    let in_d = |t: (usize, usize, usize)| d.contains(&t);
    let has_d = cell.iter().any(|&a| in_d((a, yy, zz)));
    let any_y = cell
        .iter()
        .any(|&a| y.neighbors(yy).iter().any(|&b| in_d((a, b, zz))));
    let any_z = cell
        .iter()
        .any(|&a| z.neighbors(zz).iter().any(|&c| in_d((a, yy, c))));
    match (has_d, any_y, any_z) {
        (true, false, false) => CellColor::Blue,
        (true, true, false) => CellColor::Green,
        (true, false, true) => CellColor::Yellow,
        (true, true, true) => CellColor::Orange,
        (false, false, false) => CellColor::Red,
        (false, true, false) => CellColor::Pink,
        (false, false, true) => CellColor::Maroon,
        (false, true, true) => CellColor::White,
    }
}

/// `(num, den)` of the path coefficient via `c_n = 3n / (4n + e)`, with
/// `e = 0, 2, 1` for `n mod 3 = 0, 1, 2`.
pub fn cn_reference(n: u64) -> (u64, u64) {
    let e = [0, 2, 1][(n % 3) as usize];
    (3 * n, 4 * n + e)
}

/// `(num, den)` of the maroon factor: `2`, `2(n-1)/(n+2)` or `(2n-1)/(n+1)`.
pub fn maroon_reference(n: u64) -> (u64, u64) {
    match n % 3 {
        0 => (2, 1),
        1 => (2 * (n - 1), n + 2),
        _ => (2 * n - 1, n + 1),
    }
}

/// Whether the rational rendered as `"p/q"` equals `num/den`.
pub fn rational_equals(text: &str, (num, den): (u64, u64)) -> bool {
    let (p, q) = text.split_once('/').expect("p/q form");
    let p: u128 = p.parse().unwrap();
    let q: u128 = q.parse().unwrap();
    p * den as u128 == q * num as u128
}

/// One synthetic instance per `(has_d, any_y, any_z)` combination.
pub struct TruthRow {
    pub flags: (bool, bool, bool),
    pub dset: Vec<usize>,
    pub definitional: CellColor,
    pub library: CellColor,
}

/// Searches all dominating sets of `C4 □ P2 □ P2` (partition `{0,1}`,
/// `{2,3}`) for one realizing each flag combination on cell `(0, 0, 0)`,
/// then colors that instance with the library.
pub fn truth_table_rows() -> Vec<TruthRow> {
    use domcells::cells::{color_cells, validate_partition};
    use domcells::graph::{cycle_graph, path_graph, VertexSet};
    use domcells::product::cartesian3;

    let x = cycle_graph(4).unwrap();
    let y = path_graph(2).unwrap();
    let z = path_graph(2).unwrap();
    let p = cartesian3(&x, &y, &z).unwrap();
    let partition = validate_partition(&x, &[0, 2], &[vec![0, 1], vec![2, 3]]).unwrap();
    let n = p.order();
    let masks: Vec<u32> = (0..n)
        .map(|v| {
            p.flat()
                .neighbors(v)
                .iter()
                .fold(1u32 << v, |m, &u| m | (1 << u))
        })
        .collect();
    let triple = |id: usize| {
        let c = p.to_coord(id).unwrap();
        (c.x, c.y, c.z)
    };
    let mut rows: Vec<TruthRow> = Vec::new();
    for s in 0u32..(1 << n) {
        let covered = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .fold(0, |c, v| c | masks[v]);
        if covered != (1u32 << n) - 1 {
            continue;
        }
        let ids: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let d: Vec<_> = ids.iter().map(|&v| triple(v)).collect();
        let cell = [0usize, 1];
        let flags = (
            cell.iter().any(|&a| d.contains(&(a, 0, 0))),
            cell.iter().any(|&a| d.contains(&(a, 1, 0))),
            cell.iter().any(|&a| d.contains(&(a, 0, 1))),
        );
        if rows.iter().any(|r| r.flags == flags) {
            continue;
        }
        let definitional = definitional_color(&y, &z, &cell, 0, 0, &d);
        let coloring = color_cells(
            &partition,
            &p,
            &VertexSet::from_ids(n, ids.clone()).unwrap(),
        )
        .unwrap();
        rows.push(TruthRow {
            flags,
            dset: ids,
            definitional,
            library: coloring.color(0, 0, 0).unwrap(),
        });
        if rows.len() == 8 {
            break;
        }
    }
    rows.sort_by_key(|r| r.flags);
    rows
}

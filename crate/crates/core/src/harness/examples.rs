//! The two worked examples, transcribed with 1-based labels and converted to
//! 0-based ids (`x_1 -> 0`, `y_1 -> 0`, `z_1 -> 0`).

use crate::cells::{validate_partition, CellColor, DominatingPartition};
use crate::domination::first_undominated;
use crate::error::{Error, Result};
use crate::graph::{path_graph, Graph, VertexSet};
use crate::product::{cartesian3, Coord3, TripleProduct};

/// A published cell color: `(i, y, z)` cell (0-based) and its color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NamedCell {
    pub i: usize,
    pub y: usize,
    pub z: usize,
    pub color: CellColor,
}

/// Published domination numbers of an example.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublishedGammas {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub product: usize,
}

#[derive(Debug, Clone)]
pub struct WorkedExample {
    pub id: u8,
    pub x: Graph,
    pub y: Graph,
    pub z: Graph,
    pub product: TripleProduct,
    pub dset: VertexSet,
    pub partition: DominatingPartition,
    pub gammas: PublishedGammas,
    pub named_cells: Vec<NamedCell>,
    /// Published count of red cells, when stated.
    pub red_cells: Option<u64>,
    /// Published Z-fiber `(i, y)` with the most maroon cells, when stated.
    pub max_maroon_fiber: Option<(usize, usize)>,
}

fn graph_1based(order: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(order, edges.iter().map(|&(u, v)| (u - 1, v - 1)))
        .expect("transcribed edge list is valid")
}

fn coords_1based(list: &[(usize, usize, usize)]) -> Vec<Coord3> {
    list.iter()
        .map(|&(x, y, z)| Coord3::new(x - 1, y - 1, z - 1))
        .collect()
}

fn named(i: usize, y: usize, z: usize, color: CellColor) -> NamedCell {
    NamedCell {
        i: i - 1,
        y: y - 1,
        z: z - 1,
        color,
    }
}

struct Transcript {
    id: u8,
    x: Graph,
    y: Graph,
    z: Graph,
    dominators: Vec<usize>,
    cells: Vec<Vec<usize>>,
    dset: Vec<Coord3>,
    gammas: PublishedGammas,
    named_cells: Vec<NamedCell>,
    red_cells: Option<u64>,
    max_maroon_fiber: Option<(usize, usize)>,
}

fn example1() -> Transcript {
    use CellColor::*;
    Transcript {
        id: 1,
        x: graph_1based(
            8,
            &[
                (1, 2),
                (2, 3),
                (2, 6),
                (3, 4),
                (4, 5),
                (5, 6),
                (5, 8),
                (6, 7),
                (7, 8),
            ],
        ),
        y: graph_1based(4, &[(1, 2), (1, 4), (2, 3), (3, 4)]),
        z: path_graph(2).expect("P2"),
        dominators: vec![1, 4, 6],
        cells: vec![vec![0, 1, 2], vec![3, 4], vec![5, 6, 7]],
        dset: coords_1based(&[
            (1, 4, 1),
            (2, 2, 1),
            (4, 4, 1),
            (5, 2, 1),
            (7, 1, 1),
            (7, 3, 1),
            (8, 4, 1),
            (1, 2, 2),
            (3, 1, 2),
            (3, 3, 2),
            (5, 2, 2),
            (6, 4, 2),
            (8, 2, 2),
        ]),
        gammas: PublishedGammas {
            x: 3,
            y: 2,
            z: 1,
            product: 13,
        },
        named_cells: vec![
            named(1, 4, 1, Blue),
            named(3, 1, 1, Green),
            named(1, 2, 1, Yellow),
            named(1, 2, 2, Orange),
            named(1, 1, 1, White),
            named(2, 1, 1, Pink),
            named(2, 4, 2, Maroon),
        ],
        red_cells: Some(0),
        max_maroon_fiber: None,
    }
}

fn example2() -> Transcript {
    Transcript {
        id: 2,
        x: graph_1based(
            9,
            &[
                (1, 2),
                (2, 3),
                (2, 6),
                (3, 4),
                (4, 5),
                (5, 6),
                (5, 8),
                (6, 7),
                (7, 8),
                (8, 9),
            ],
        ),
        y: graph_1based(5, &[(1, 2), (1, 4), (2, 3), (3, 4), (4, 5)]),
        z: path_graph(3).expect("P3"),
        dominators: vec![1, 4, 7],
        cells: vec![vec![0, 1, 2, 5], vec![3, 4], vec![6, 7, 8]],
        dset: coords_1based(&[
            (1, 4, 1),
            (2, 2, 1),
            (3, 4, 1),
            (4, 4, 1),
            (6, 5, 1),
            (8, 1, 1),
            (8, 2, 1),
            (8, 3, 1),
            (9, 5, 1),
            (1, 4, 2),
            (4, 2, 2),
            (4, 5, 2),
            (6, 1, 2),
            (6, 3, 2),
            (7, 4, 2),
            (9, 2, 2),
            (1, 2, 3),
            (2, 5, 3),
            (3, 1, 3),
            (3, 3, 3),
            (5, 4, 3),
            (7, 2, 3),
            (8, 2, 3),
            (8, 5, 3),
            (9, 4, 3),
        ]),
        gammas: PublishedGammas {
            x: 3,
            y: 2,
            z: 1,
            product: 25,
        },
        named_cells: Vec::new(),
        red_cells: None,
        max_maroon_fiber: Some((1, 1)),
    }
}

/// Loads example 1 or 2 and validates it: the partition must satisfy every
/// invariant and the published `D` must dominate the product with the
/// published size.
pub fn worked_example(id: u8) -> Result<WorkedExample> {
    let t = match id {
        1 => example1(),
        2 => example2(),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no example {id}; expected 1 or 2"
            )))
        }
    };
    let product = cartesian3(&t.x, &t.y, &t.z)?;
    let dset = VertexSet::from_ids(
        product.order(),
        t.dset
            .iter()
            .map(|&c| product.to_flat(c))
            .collect::<Result<Vec<_>>>()?,
    )?;
    if dset.len() != t.gammas.product {
        return Err(Error::InvalidArgument(format!(
            "example {id}: D has {} vertices, expected {}",
            dset.len(),
            t.gammas.product
        )));
    }
    if let Some(v) = first_undominated(product.flat(), &dset)? {
        return Err(Error::NotDominating { undominated: v });
    }
    let partition = validate_partition(&t.x, &t.dominators, &t.cells)?;
    Ok(WorkedExample {
        id: t.id,
        x: t.x,
        y: t.y,
        z: t.z,
        product,
        dset,
        partition,
        gammas: t.gammas,
        named_cells: t.named_cells,
        red_cells: t.red_cells,
        max_maroon_fiber: t.max_maroon_fiber,
    })
}

//! Three-factor Cartesian products with coordinate addressing.
//!
//! Flat ids are laid out with `z` outermost: `id = z*|Y||X| + y*|X| + x`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{path_graph, Graph, GraphSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coord3 {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Coord3 {
    pub const fn new(x: usize, y: usize, z: usize) -> Self {
        Self { x, y, z }
    }
}

/// `X □ Y □ Z` with its factors and the flat product graph.
#[derive(Debug, Clone)]
pub struct TripleProduct {
    factor_x: Graph,
    factor_y: Graph,
    factor_z: Graph,
    flat: Graph,
    canonical_path: bool,
}

/// Builds `X □ Y □ Z` in a single pass. `canonical_path` is set when `Z` is
/// exactly `path_graph(|Z|)`, i.e. its ids run along the path.
pub fn cartesian3(x: &Graph, y: &Graph, z: &Graph) -> Result<TripleProduct> {
    let (nx, ny, nz) = (x.order(), y.order(), z.order());
    if nx == 0 || ny == 0 || nz == 0 {
        return Err(Error::InvalidArgument(
            "product factors must be nonempty".into(),
        ));
    }
    let mut adjacency = Vec::with_capacity(nx * ny * nz);
    for c in 0..nz {
        for b in 0..ny {
            for a in 0..nx {
                let mut list = Vec::with_capacity(x.degree(a) + y.degree(b) + z.degree(c));
                list.extend(x.neighbors(a).iter().map(|&a2| (c * ny + b) * nx + a2));
                list.extend(y.neighbors(b).iter().map(|&b2| (c * ny + b2) * nx + a));
                list.extend(z.neighbors(c).iter().map(|&c2| (c2 * ny + b) * nx + a));
                list.sort_unstable();
                adjacency.push(list);
            }
        }
    }
    let canonical_path = path_graph(nz).map(|p| p.edges().eq(z.edges()))?;
    Ok(TripleProduct {
        factor_x: x.clone(),
        factor_y: y.clone(),
        factor_z: z.clone(),
        flat: Graph::from_sorted_adjacency(adjacency),
        canonical_path,
    })
}

/// `X □ Y □ P_n`.
pub fn cartesian_with_path(x: &Graph, y: &Graph, n: usize) -> Result<TripleProduct> {
    cartesian3(x, y, &path_graph(n)?)
}

/// `X □ Y`, represented with a single-vertex `Z`.
pub fn cartesian2(x: &Graph, y: &Graph) -> Result<TripleProduct> {
    cartesian_with_path(x, y, 1)
}

impl TripleProduct {
    pub fn factor_x(&self) -> &Graph {
        &self.factor_x
    }

    pub fn factor_y(&self) -> &Graph {
        &self.factor_y
    }

    pub fn factor_z(&self) -> &Graph {
        &self.factor_z
    }

    pub fn flat(&self) -> &Graph {
        &self.flat
    }

    /// Whether `Z` is a path whose ids follow the path order.
    pub fn canonical_path(&self) -> bool {
        self.canonical_path
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (
            self.factor_x.order(),
            self.factor_y.order(),
            self.factor_z.order(),
        )
    }

    pub fn order(&self) -> usize {
        self.flat.order()
    }

    pub fn to_flat(&self, c: Coord3) -> Result<usize> {
        let (nx, ny, nz) = self.dims();
        if c.x >= nx || c.y >= ny || c.z >= nz {
            return Err(Error::InvalidArgument(format!(
                "coordinate ({}, {}, {}) outside {nx}x{ny}x{nz}",
                c.x, c.y, c.z
            )));
        }
        Ok(self.flat_unchecked(c.x, c.y, c.z))
    }

    #[inline]
    pub(crate) fn flat_unchecked(&self, x: usize, y: usize, z: usize) -> usize {
        let (nx, ny, _) = self.dims();
        (z * ny + y) * nx + x
    }

    pub fn to_coord(&self, id: usize) -> Result<Coord3> {
        if id >= self.order() {
            return Err(Error::InvalidArgument(format!(
                "flat id {id} out of range for order {}",
                self.order()
            )));
        }
        Ok(self.coord_unchecked(id))
    }

    #[inline]
    pub(crate) fn coord_unchecked(&self, id: usize) -> Coord3 {
        let (nx, ny, _) = self.dims();
        Coord3::new(id % nx, id / nx % ny, id / (nx * ny))
    }

    fn check(&self, what: &str, value: usize, bound: usize) -> Result<()> {
        if value >= bound {
            return Err(Error::InvalidArgument(format!(
                "{what} coordinate {value} out of range {bound}"
            )));
        }
        Ok(())
    }

    /// `X^{y,z}`: ids of `(a, y, z)` for `a` in increasing order.
    pub fn x_fiber(&self, y: usize, z: usize) -> Result<Vec<usize>> {
        let (nx, ny, nz) = self.dims();
        self.check("y", y, ny)?;
        self.check("z", z, nz)?;
        Ok((0..nx).map(|a| self.flat_unchecked(a, y, z)).collect())
    }

    pub fn y_fiber(&self, x: usize, z: usize) -> Result<Vec<usize>> {
        let (nx, ny, nz) = self.dims();
        self.check("x", x, nx)?;
        self.check("z", z, nz)?;
        Ok((0..ny).map(|b| self.flat_unchecked(x, b, z)).collect())
    }

    pub fn z_fiber(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        let (nx, ny, nz) = self.dims();
        self.check("x", x, nx)?;
        self.check("y", y, ny)?;
        Ok((0..nz).map(|c| self.flat_unchecked(x, y, c)).collect())
    }

    pub fn sidecar(&self) -> ProductSidecar {
        let (nx, ny, nz) = self.dims();
        ProductSidecar {
            schema: 1,
            order: self.order(),
            orders: [nx, ny, nz],
            layout: "id = z*|Y|*|X| + y*|X| + x".into(),
            canonical_path: self.canonical_path,
            coords: (0..self.order())
                .map(|id| {
                    let c = self.coord_unchecked(id);
                    [c.x, c.y, c.z]
                })
                .collect(),
            factors: [
                GraphSummary::from(&self.factor_x),
                GraphSummary::from(&self.factor_y),
                GraphSummary::from(&self.factor_z),
            ],
        }
    }
}

/// JSON sidecar written next to a product edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSidecar {
    pub schema: u32,
    pub order: usize,
    /// `[|X|, |Y|, |Z|]`
    pub orders: [usize; 3],
    pub layout: String,
    pub canonical_path: bool,
    /// `coords[id] = [x, y, z]`
    pub coords: Vec<[usize; 3]>,
    pub factors: [GraphSummary; 3],
}

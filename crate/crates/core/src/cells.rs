//! Dominating partitions of `X`, the cells `pi_i^{y,z}` of `X □ Y □ Z`, and
//! the eight-color classification of those cells relative to a dominating
//! set `D` of the product.
//!
//! Direction semantics: a product vertex `(a, b, c)` is X-dominated when some
//! `(a', b, c)` in `D` has `a'` in the *closed* neighborhood `N_X[a]`; it is
//! Y-dominated (resp. Z-dominated) when some `(a, b', c)` (resp. `(a, b, c')`)
//! in `D` has `b'` adjacent to `b` (resp. `c'` adjacent to `c`). Only the X
//! direction counts a vertex of `D` as dominating itself.

use serde::{Deserialize, Serialize};

use crate::domination::{first_undominated, gamma_exact, Budget, GammaTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphSummary, VertexSet};
use crate::par::{map_range, Parallelism};
use crate::product::{cartesian3, Coord3, TripleProduct};

/// A partition `pi_1..pi_k` of `V(X)` indexed by a minimum dominating set
/// `u_1..u_k` with `u_i in pi_i ⊆ N[u_i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatingPartition {
    base: Graph,
    dominators: Vec<usize>,
    cells: Vec<VertexSet>,
    cell_of: Vec<usize>,
}

impl DominatingPartition {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn dominators(&self) -> &[usize] {
        &self.dominators
    }

    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    /// Number of classes, `k = gamma(X)`.
    pub fn k(&self) -> usize {
        self.dominators.len()
    }

    /// Index `i` of the class containing `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }
}

fn check_dominators(x: &Graph, dominators: &[usize]) -> Result<VertexSet> {
    let set = VertexSet::from_ids(x.order(), dominators.iter().copied())?;
    if set.len() != dominators.len() {
        return Err(Error::InvalidPartition("repeated dominator".into()));
    }
    if let Some(v) = first_undominated(x, &set)? {
        return Err(Error::NotDominating { undominated: v });
    }
    let gamma = gamma_exact(x, Budget::UNLIMITED)?.gamma;
    if gamma != dominators.len() {
        return Err(Error::NotMinimum {
            size: dominators.len(),
            gamma,
        });
    }
    Ok(set)
}

/// Default partition: each `u_i` joins `pi_i`; every other vertex joins the
/// class of the smallest `i` with `v in N[u_i]`.
pub fn build_partition(x: &Graph, dominators: &[usize]) -> Result<DominatingPartition> {
    check_dominators(x, dominators)?;
    let mut cells = vec![VertexSet::new(x.order()); dominators.len()];
    for v in 0..x.order() {
        let i = dominators
            .iter()
            .position(|&u| u == v)
            .or_else(|| dominators.iter().position(|&u| x.has_edge(u, v)))
            .expect("dominating set covers every vertex");
        cells[i].insert(v);
    }
    assemble(x, dominators, cells)
}

/// Accepts an explicit partition after checking every invariant.
pub fn validate_partition(
    x: &Graph,
    dominators: &[usize],
    cells: &[Vec<usize>],
) -> Result<DominatingPartition> {
    check_dominators(x, dominators)?;
    if cells.len() != dominators.len() {
        return Err(Error::InvalidPartition(format!(
            "{} cells for {} dominators",
            cells.len(),
            dominators.len()
        )));
    }
    let sets = cells
        .iter()
        .map(|c| VertexSet::from_ids(x.order(), c.iter().copied()))
        .collect::<Result<Vec<_>>>()?;
    assemble(x, dominators, sets)
}

fn assemble(x: &Graph, dominators: &[usize], cells: Vec<VertexSet>) -> Result<DominatingPartition> {
    let mut cell_of = vec![usize::MAX; x.order()];
    for (i, cell) in cells.iter().enumerate() {
        let u = dominators[i];
        if !cell.contains(u) {
            return Err(Error::InvalidPartition(format!(
                "u_{i} = {u} is not in cell {i}"
            )));
        }
        for v in cell.iter() {
            if cell_of[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!(
                    "vertex {v} lies in cells {} and {i}",
                    cell_of[v]
                )));
            }
            if v != u && !x.has_edge(u, v) {
                return Err(Error::InvalidPartition(format!(
                    "vertex {v} in cell {i} is outside N[{u}]"
                )));
            }
            cell_of[v] = i;
        }
    }
    if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
        return Err(Error::InvalidPartition(format!("vertex {v} is in no cell")));
    }
    Ok(DominatingPartition {
        base: x.clone(),
        dominators: dominators.to_vec(),
        cells,
        cell_of,
    })
}

/// Per-vertex X/Y/Z-domination flags of a dominating set of the product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationFlags {
    pub x_dom: VertexSet,
    pub y_dom: VertexSet,
    pub z_dom: VertexSet,
}

pub fn domination_flags(p: &TripleProduct, d: &VertexSet) -> Result<DominationFlags> {
    if let Some(v) = first_undominated(p.flat(), d)? {
        return Err(Error::NotDominating { undominated: v });
    }
    let (x, y, z) = (p.factor_x(), p.factor_y(), p.factor_z());
    let n = p.order();
    let mut flags = DominationFlags {
        x_dom: VertexSet::new(n),
        y_dom: VertexSet::new(n),
        z_dom: VertexSet::new(n),
    };
    for id in 0..n {
        let Coord3 { x: a, y: b, z: c } = p.coord_unchecked(id);
        let in_d = |a2, b2, c2| d.contains(p.flat_unchecked(a2, b2, c2));
        if in_d(a, b, c) || x.neighbors(a).iter().any(|&a2| in_d(a2, b, c)) {
            flags.x_dom.insert(id);
        }
        if y.neighbors(b).iter().any(|&b2| in_d(a, b2, c)) {
            flags.y_dom.insert(id);
        }
        if z.neighbors(c).iter().any(|&c2| in_d(a, b, c2)) {
            flags.z_dom.insert(id);
        }
        assert!(
            flags.x_dom.contains(id) || flags.y_dom.contains(id) || flags.z_dom.contains(id),
            "dominated vertex {id} has no domination direction"
        );
    }
    Ok(flags)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellColor {
    Blue,
    Green,
    Yellow,
    Orange,
    Red,
    Pink,
    Maroon,
    White,
}

impl CellColor {
    pub const ALL: [CellColor; 8] = [
        CellColor::Blue,
        CellColor::Green,
        CellColor::Yellow,
        CellColor::Orange,
        CellColor::Red,
        CellColor::Pink,
        CellColor::Maroon,
        CellColor::White,
    ];

    /// The eight-way truth table over (meets D, has a Y-dominated member,
    /// has a Z-dominated member).
    pub const fn classify(has_d: bool, any_y: bool, any_z: bool) -> CellColor {
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

    /// Blue, green, yellow and orange: the cells that meet `D`.
    pub const fn meets_dset(self) -> bool {
        matches!(
            self,
            CellColor::Blue | CellColor::Green | CellColor::Yellow | CellColor::Orange
        )
    }

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn name(self) -> &'static str {
        match self {
            CellColor::Blue => "blue",
            CellColor::Green => "green",
            CellColor::Yellow => "yellow",
            CellColor::Orange => "orange",
            CellColor::Red => "red",
            CellColor::Pink => "pink",
            CellColor::Maroon => "maroon",
            CellColor::White => "white",
        }
    }
}

/// Cell colors of a product relative to a dominating set `D`.
///
/// Cells are addressed by `(i, y, z)` with `i` the partition class.
#[derive(Debug, Clone)]
pub struct CellColoring {
    partition: DominatingPartition,
    product: TripleProduct,
    dset: VertexSet,
    flags: DominationFlags,
    /// Indexed by `(z * |Y| + y) * k + i`.
    colors: Vec<CellColor>,
}

pub fn color_cells(
    partition: &DominatingPartition,
    p: &TripleProduct,
    d: &VertexSet,
) -> Result<CellColoring> {
    color_cells_with(partition, p, d, Parallelism::default())
}

/// [`color_cells`] with an explicit execution mode; both modes give identical output.
pub fn color_cells_with(
    partition: &DominatingPartition,
    p: &TripleProduct,
    d: &VertexSet,
    mode: Parallelism,
) -> Result<CellColoring> {
    if partition.base() != p.factor_x() {
        return Err(Error::InvalidArgument(
            "partition base graph differs from the product's X factor".into(),
        ));
    }
    let d = VertexSet::from_ids(p.order(), d.iter())?;
    let flags = domination_flags(p, &d)?;
    let (_, ny, _) = p.dims();
    let k = partition.k();
    let members: Vec<Vec<usize>> = partition.cells.iter().map(VertexSet::to_vec).collect();
    let colors = map_range(k * ny * p.dims().2, mode, |idx| {
        let (i, y, z) = (idx % k, idx / k % ny, idx / (k * ny));
        let (mut has_d, mut any_y, mut any_z) = (false, false, false);
        for &a in &members[i] {
            let id = p.flat_unchecked(a, y, z);
            has_d |= d.contains(id);
            any_y |= flags.y_dom.contains(id);
            any_z |= flags.z_dom.contains(id);
        }
        CellColor::classify(has_d, any_y, any_z)
    });
    Ok(CellColoring {
        partition: partition.clone(),
        product: p.clone(),
        dset: d,
        flags,
        colors,
    })
}

impl CellColoring {
    pub fn partition(&self) -> &DominatingPartition {
        &self.partition
    }

    pub fn product(&self) -> &TripleProduct {
        &self.product
    }

    pub fn dset(&self) -> &VertexSet {
        &self.dset
    }

    pub fn flags(&self) -> &DominationFlags {
        &self.flags
    }

    /// `(k, |Y|, |Z|)`
    pub fn dims(&self) -> (usize, usize, usize) {
        let (_, ny, nz) = self.product.dims();
        (self.partition.k(), ny, nz)
    }

    fn index(&self, i: usize, y: usize, z: usize) -> Result<usize> {
        let (k, ny, nz) = self.dims();
        if i >= k || y >= ny || z >= nz {
            return Err(Error::InvalidArgument(format!(
                "cell ({i}, {y}, {z}) outside {k}x{ny}x{nz}"
            )));
        }
        Ok((z * ny + y) * k + i)
    }

    pub fn color(&self, i: usize, y: usize, z: usize) -> Result<CellColor> {
        Ok(self.colors[self.index(i, y, z)?])
    }

    #[inline]
    pub(crate) fn color_unchecked(&self, i: usize, y: usize, z: usize) -> CellColor {
        let (k, ny, _) = self.dims();
        self.colors[(z * ny + y) * k + i]
    }

    /// Flat ids of `pi_i^{y,z} = {(a, y, z) : a in pi_i}`.
    pub fn cell_members(&self, i: usize, y: usize, z: usize) -> Result<VertexSet> {
        self.index(i, y, z)?;
        let mut out = VertexSet::new(self.product.order());
        for a in self.partition.cells[i].iter() {
            out.insert(self.product.flat_unchecked(a, y, z));
        }
        Ok(out)
    }

    /// Color of the cell containing product vertex `id`.
    pub fn color_of_vertex(&self, id: usize) -> CellColor {
        let c = self.product.coord_unchecked(id);
        self.color_unchecked(self.partition.class_of(c.x), c.y, c.z)
    }

    /// The colors of the Z-fiber `Z_{i,y}` in `z` order.
    pub fn z_fiber_colors(&self, i: usize, y: usize) -> Vec<CellColor> {
        (0..self.dims().2)
            .map(|z| self.color_unchecked(i, y, z))
            .collect()
    }

    pub fn ledger(&self) -> ColorLedger {
        count_colors(self)
    }

    pub fn to_doc(&self, gammas: Option<GammaTable>) -> CellColoringDoc {
        let (k, ny, nz) = self.dims();
        CellColoringDoc {
            schema: 1,
            factors: Factors {
                x: self.product.factor_x().into(),
                y: self.product.factor_y().into(),
                z: self.product.factor_z().into(),
            },
            canonical_path: self.product.canonical_path(),
            dset: self.dset.to_vec(),
            dset_coords: self
                .dset
                .iter()
                .map(|id| {
                    let c = self.product.coord_unchecked(id);
                    [c.x, c.y, c.z]
                })
                .collect(),
            partition: PartitionDoc {
                dominators: self.partition.dominators.clone(),
                cells: self.partition.cells.iter().map(VertexSet::to_vec).collect(),
            },
            colors: (0..k)
                .map(|i| {
                    (0..ny)
                        .map(|y| (0..nz).map(|z| self.color_unchecked(i, y, z)).collect())
                        .collect()
                })
                .collect(),
            gammas,
        }
    }

    /// Rebuilds a coloring from its JSON document, recomputing every color and
    /// rejecting documents whose stored table disagrees.
    pub fn from_doc(doc: &CellColoringDoc) -> Result<CellColoring> {
        if doc.schema != 1 {
            return Err(Error::Format(format!(
                "unsupported coloring schema {}",
                doc.schema
            )));
        }
        let x = Graph::try_from(&doc.factors.x)?;
        let y = Graph::try_from(&doc.factors.y)?;
        let z = Graph::try_from(&doc.factors.z)?;
        let product = cartesian3(&x, &y, &z)?;
        let partition = validate_partition(&x, &doc.partition.dominators, &doc.partition.cells)?;
        let d = VertexSet::from_ids(product.order(), doc.dset.iter().copied())?;
        let coloring = color_cells(&partition, &product, &d)?;
        let stored = &doc.colors;
        let (k, ny, nz) = coloring.dims();
        let shape_ok = stored.len() == k
            && stored
                .iter()
                .all(|r| r.len() == ny && r.iter().all(|c| c.len() == nz));
        if !shape_ok {
            return Err(Error::Format(format!("color table is not {k}x{ny}x{nz}")));
        }
        for (i, rows) in stored.iter().enumerate() {
            for (yy, cols) in rows.iter().enumerate() {
                for (zz, &c) in cols.iter().enumerate() {
                    let actual = coloring.color_unchecked(i, yy, zz);
                    if actual != c {
                        return Err(Error::ReproductionFailure(format!(
                            "stored color of cell ({i}, {yy}, {zz}) is {} but recomputes to {}",
                            c.name(),
                            actual.name()
                        )));
                    }
                }
            }
        }
        Ok(coloring)
    }
}

/// JSON form of a [`CellColoring`]; `colors[i][y][z]` is the color of `pi_i^{y,z}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellColoringDoc {
    pub schema: u32,
    pub factors: Factors,
    pub canonical_path: bool,
    pub dset: Vec<usize>,
    #[serde(default)]
    pub dset_coords: Vec<[usize; 3]>,
    pub partition: PartitionDoc,
    pub colors: Vec<Vec<Vec<CellColor>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gammas: Option<GammaTable>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factors {
    pub x: GraphSummary,
    pub y: GraphSummary,
    pub z: GraphSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub dominators: Vec<usize>,
    pub cells: Vec<Vec<usize>>,
}

/// Cell counts per color and counts of `D`-vertices per (inherited) color.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub cells: [u64; 8],
    pub vertices: [u64; 4],
}

impl Tally {
    #[inline]
    pub fn cells_of(&self, c: CellColor) -> u64 {
        self.cells[c.index()]
    }

    /// `D`-vertices lying in cells of color `c` (zero for colors that miss `D`).
    #[inline]
    pub fn vertices_of(&self, c: CellColor) -> u64 {
        if c.meets_dset() {
            self.vertices[c.index()]
        } else {
            0
        }
    }

    pub fn total_cells(&self) -> u64 {
        self.cells.iter().sum()
    }

    pub fn total_vertices(&self) -> u64 {
        self.vertices.iter().sum()
    }

    /// Sum of cell counts over `colors`.
    pub fn cells_sum(&self, colors: &[CellColor]) -> u64 {
        colors.iter().map(|&c| self.cells_of(c)).sum()
    }

    fn add_cell(&mut self, c: CellColor) {
        self.cells[c.index()] += 1;
    }

    fn add_vertex(&mut self, c: CellColor) {
        self.vertices[c.index()] += 1;
    }
}

impl Serialize for Tally {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Named<'a, const N: usize>(&'a [u64; N]);
        impl<const N: usize> Serialize for Named<'_, N> {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                use serde::ser::SerializeMap;
                let mut m = s.serialize_map(Some(N))?;
                for (c, v) in CellColor::ALL.iter().zip(self.0) {
                    m.serialize_entry(c.name(), v)?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("Tally", 2)?;
        st.serialize_field("cells", &Named(&self.cells))?;
        st.serialize_field("vertices", &Named(&self.vertices))?;
        st.end()
    }
}

/// Global and per-fiber color counts.
///
/// Fiber families: `Y_{i,z}` (index `i * |Z| + z`), `X_{y,z}` (index
/// `y * |Z| + z`) and `Z_{i,y}` (index `i * |Y| + y`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorLedger {
    pub k: usize,
    pub order_y: usize,
    pub order_z: usize,
    pub canonical_path: bool,
    pub dset_size: usize,
    pub total: Tally,
    #[serde(skip)]
    pub by_iz: Vec<Tally>,
    #[serde(skip)]
    pub by_yz: Vec<Tally>,
    #[serde(skip)]
    pub by_iy: Vec<Tally>,
}

impl ColorLedger {
    pub fn y_fiber(&self, i: usize, z: usize) -> &Tally {
        &self.by_iz[i * self.order_z + z]
    }

    pub fn x_fiber(&self, y: usize, z: usize) -> &Tally {
        &self.by_yz[y * self.order_z + z]
    }

    pub fn z_fiber(&self, i: usize, y: usize) -> &Tally {
        &self.by_iy[i * self.order_y + y]
    }
}

pub fn count_colors(c: &CellColoring) -> ColorLedger {
    let (k, ny, nz) = c.dims();
    let mut ledger = ColorLedger {
        k,
        order_y: ny,
        order_z: nz,
        canonical_path: c.product.canonical_path(),
        dset_size: c.dset.len(),
        total: Tally::default(),
        by_iz: vec![Tally::default(); k * nz],
        by_yz: vec![Tally::default(); ny * nz],
        by_iy: vec![Tally::default(); k * ny],
    };
    for z in 0..nz {
        for y in 0..ny {
            for i in 0..k {
                let color = c.color_unchecked(i, y, z);
                ledger.total.add_cell(color);
                ledger.by_iz[i * nz + z].add_cell(color);
                ledger.by_yz[y * nz + z].add_cell(color);
                ledger.by_iy[i * ny + y].add_cell(color);
            }
        }
    }
    for id in c.dset.iter() {
        let coord = c.product.coord_unchecked(id);
        let i = c.partition.class_of(coord.x);
        let color = c.color_unchecked(i, coord.y, coord.z);
        debug_assert!(color.meets_dset());
        ledger.total.add_vertex(color);
        ledger.by_iz[i * nz + coord.z].add_vertex(color);
        ledger.by_yz[coord.y * nz + coord.z].add_vertex(color);
        ledger.by_iy[i * ny + coord.y].add_vertex(color);
    }
    ledger
}

//! Simple undirected graphs and dense vertex sets.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of `0..universe` stored as fixed-width 64-bit blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            blocks: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from ids, failing on any id outside the universe.
    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Result<Self> {
        let mut s = Self::new(universe);
        for v in ids {
            if v >= universe {
                return Err(Error::InvalidArgument(format!(
                    "vertex {v} out of range for order {universe}"
                )));
            }
            s.insert(v);
        }
        Ok(s)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let (w, b) = (v / WORD, v % WORD);
        let was = self.blocks[w] >> b & 1 == 1;
        self.blocks[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let was = self.blocks[w] >> b & 1 == 1;
        self.blocks[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.blocks[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(w, &block)| {
            let mut bits = block;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * WORD + t)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A simple finite undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    closed: Vec<VertexSet>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges collapse; loops and
    /// out-of-range ids are rejected.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(Error::InvalidArgument(
                "graph order must be at least 1".into(),
            ));
        }
        let mut adjacency = vec![Vec::new(); order];
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop on vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_adjacency(adjacency))
    }

    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        let order = adjacency.len();
        let closed = adjacency
            .iter()
            .enumerate()
            .map(|(v, list)| {
                let mut s = VertexSet::new(order);
                s.insert(v);
                for &u in list {
                    s.insert(u);
                }
                s
            })
            .collect();
        let g = Self {
            adjacency,
            closed,
            label: None,
        };
        g.assert_invariants();
        g
    }

    fn assert_invariants(&self) {
        let n = self.order();
        for (v, list) in self.adjacency.iter().enumerate() {
            for &u in list {
                assert!(u < n, "neighbor {u} of {v} out of range");
                assert_ne!(u, v, "self-loop on {v}");
                assert!(
                    self.adjacency[u].binary_search(&v).is_ok(),
                    "asymmetric edge {v}-{u}"
                );
            }
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// `N[v]`: `v` together with its neighbors.
    pub fn closed_neighborhood(&self, v: usize) -> Result<&VertexSet> {
        self.closed.get(v).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "vertex {v} out of range for order {}",
                self.order()
            ))
        })
    }

    #[inline]
    pub(crate) fn closed_unchecked(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices` (renumbered in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adjacency[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph::from_sorted_adjacency(adjacency)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("label", &self.label)
            .finish()
    }
}

/// Order and edge list, the JSON shape used in reports and sidecars.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl From<&Graph> for GraphSummary {
    fn from(g: &Graph) -> Self {
        Self {
            order: g.order(),
            edges: g.edges().collect(),
            label: g.label.clone(),
        }
    }
}

impl TryFrom<&GraphSummary> for Graph {
    type Error = Error;

    fn try_from(s: &GraphSummary) -> Result<Graph> {
        let g = Graph::from_edges(s.order, s.edges.iter().copied())?;
        Ok(match &s.label {
            Some(l) => g.with_label(l.clone()),
            None => g,
        })
    }
}

/// Path `0 - 1 - ... - (n-1)`; the index order is the canonical `z_1..z_n` order.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "path graph needs at least one vertex".into(),
        ));
    }
    Ok(Graph::from_edges(n, (1..n).map(|l| (l - 1, l)))?.with_label(format!("P{n}")))
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?.with_label(format!("K{n}")))
}

pub fn empty_graph(n: usize) -> Result<Graph> {
    Graph::from_edges(n, std::iter::empty())
}

/// Star with center 0 and `leaves` leaves.
pub fn star_graph(leaves: usize) -> Result<Graph> {
    Ok(Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l)))?
        .with_label(format!("K1,{leaves}")))
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "cycle needs at least three vertices".into(),
        ));
    }
    Ok(Graph::from_edges(n, (0..n).map(|l| (l, (l + 1) % n)))?.with_label(format!("C{n}")))
}

/// Erdős–Rényi `G(n, p)`.
///
/// The stream is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`; pairs
/// `(u, v)` with `u < v` are visited in lexicographic order and each is kept
/// when `rng.gen_bool(p)` is true. The output therefore depends only on
/// `(n, p, seed)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

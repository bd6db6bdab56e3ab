//! Dominating-set verification and the exact branch-and-bound solver.
//!
//! The solver treats domination as set cover by closed neighborhoods. It
//! branches on the uncovered vertex with the fewest admissible dominators,
//! trying each dominator in order of decreasing fresh coverage; earlier
//! siblings are excluded from later subtrees so every subset is explored at
//! most once. Nodes are pruned against the incumbent with two admissible
//! bounds: `ceil(uncovered / max coverage)` and the fractional bound
//! `ceil(sum over uncovered v of 1 / max coverage among N[v])`.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Optional limits for [`gamma_exact`]. Exhausting a budget is not an error.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        time: None,
        nodes: None,
    };

    pub fn time(limit: Duration) -> Self {
        Self {
            time: Some(limit),
            nodes: None,
        }
    }

    pub fn nodes(limit: u64) -> Self {
        Self {
            time: None,
            nodes: Some(limit),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    /// Size of the best dominating set found.
    pub gamma: usize,
    pub witness: VertexSet,
    pub proven_optimal: bool,
    /// Proven lower bound on the domination number; equals `gamma` when proven.
    pub lower_bound: usize,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// A domination number together with whether it was proven optimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaValue {
    pub value: usize,
    pub proven: bool,
}

impl From<&GammaResult> for GammaValue {
    fn from(r: &GammaResult) -> Self {
        Self {
            value: r.gamma,
            proven: r.proven_optimal,
        }
    }
}

/// The four domination numbers attached to a product coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaTable {
    pub x: GammaValue,
    pub y: GammaValue,
    pub z: GammaValue,
    pub product: GammaValue,
}

/// True iff every vertex has a member of `s` in its closed neighborhood.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    Ok(first_undominated(g, s)?.is_none())
}

/// The smallest vertex not dominated by `s`, if any.
pub fn first_undominated(g: &Graph, s: &VertexSet) -> Result<Option<usize>> {
    if let Some(bad) = s.iter().find(|&v| v >= g.order()) {
        return Err(Error::InvalidArgument(format!(
            "set member {bad} out of range for order {}",
            g.order()
        )));
    }
    if s.universe() != g.order() {
        let resized = VertexSet::from_ids(g.order(), s.iter())?;
        return first_undominated(g, &resized);
    }
    Ok((0..g.order()).find(|&v| !g.closed_unchecked(v).intersects(s)))
}

/// Repeatedly takes the vertex covering the most undominated vertices, ties
/// broken by smallest id.
pub fn greedy_upper_bound(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut covered = VertexSet::new(n);
    let mut chosen = VertexSet::new(n);
    let mut remaining = n;
    while remaining > 0 {
        let (best, gain) = (0..n)
            .map(|u| (u, uncovered_in(g.closed_unchecked(u), &covered)))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        debug_assert!(gain > 0);
        chosen.insert(best);
        covered.union_with(g.closed_unchecked(best));
        remaining -= gain;
    }
    chosen
}

fn uncovered_in(nbhd: &VertexSet, covered: &VertexSet) -> usize {
    nbhd.len() - nbhd.intersection_len(covered)
}

/// `gamma(P_n) = ceil(n / 3)`.
pub fn gamma_path(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "path length must be at least 1".into(),
        ));
    }
    Ok(n.div_ceil(3))
}

/// Exact domination number by branch and bound, solved per connected
/// component. Without a budget the result is always proven optimal.
pub fn gamma_exact(g: &Graph, budget: Budget) -> Result<GammaResult> {
    let start = Instant::now();
    let deadline = budget.time.map(|t| start + t);
    let mut witness = VertexSet::new(g.order());
    let mut gamma = 0;
    let mut lower_bound = 0;
    let mut nodes = 0u64;
    let mut proven = true;
    for comp in g.components() {
        let sub = g.induced(&comp);
        let remaining_nodes = budget.nodes.map(|cap| cap.saturating_sub(nodes));
        let mut search = Search::new(&sub, deadline, remaining_nodes);
        let out = search.run();
        nodes += search.nodes;
        gamma += out.best.len();
        lower_bound += out.lower_bound;
        proven &= out.proven;
        for local in out.best {
            witness.insert(comp[local]);
        }
    }
    debug_assert!(is_dominating(g, &witness)?);
    Ok(GammaResult {
        gamma,
        witness,
        proven_optimal: proven,
        lower_bound: if proven { gamma } else { lower_bound },
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

struct Outcome {
    best: Vec<usize>,
    lower_bound: usize,
    proven: bool,
}

/// Fixed-width bitset words for one component.
type Words = Vec<u64>;

/// Iterative-deepening branch and bound on one connected graph.
///
/// For `limit = lb, lb + 1, ...` the search decides whether a dominating set
/// of size at most `limit` exists. Every failed limit is a proven lower bound,
/// so an exhausted budget still reports the strongest bound reached.
struct Search {
    n: usize,
    words: usize,
    closed: Vec<Words>,
    closed_lists: Vec<Vec<usize>>,
    covered: Words,
    forbidden: Words,
    chosen: Vec<usize>,
    found: Option<Vec<usize>>,
    limit: usize,
    deadline: Option<Instant>,
    node_cap: Option<u64>,
    nodes: u64,
    aborted: bool,
    coverage: Vec<u32>,
    slack: Vec<f64>,
    upper: Vec<usize>,
}

#[inline]
fn bit(words: &[u64], v: usize) -> bool {
    words[v >> 6] >> (v & 63) & 1 == 1
}

#[inline]
fn set_bit(words: &mut [u64], v: usize) {
    words[v >> 6] |= 1 << (v & 63);
}

#[inline]
fn clear_bit(words: &mut [u64], v: usize) {
    words[v >> 6] &= !(1 << (v & 63));
}

/// Result of bounding one search node.
enum NodeBound {
    /// Every vertex is dominated.
    Covered,
    /// Some undominated vertex has no admissible dominator left.
    Infeasible,
    Open {
        bound: usize,
        branch: usize,
    },
}

impl Search {
    fn new(g: &Graph, deadline: Option<Instant>, node_cap: Option<u64>) -> Self {
        let n = g.order();
        let words = n.div_ceil(64);
        Self {
            n,
            words,
            closed: (0..n)
                .map(|v| g.closed_unchecked(v).blocks().to_vec())
                .collect(),
            closed_lists: (0..n).map(|v| g.closed_unchecked(v).to_vec()).collect(),
            covered: vec![0; words],
            forbidden: vec![0; words],
            chosen: Vec::new(),
            found: None,
            limit: 0,
            deadline,
            node_cap,
            nodes: 0,
            aborted: false,
            coverage: vec![0; n],
            slack: vec![0.0; n],
            upper: greedy_upper_bound(g).to_vec(),
        }
    }

    fn run(&mut self) -> Outcome {
        let mut lower = match self.bound() {
            NodeBound::Open { bound, .. } => bound,
            _ => 0,
        };
        while lower < self.upper.len() {
            self.limit = lower;
            self.found = None;
            self.dfs();
            if self.aborted {
                break;
            }
            if let Some(set) = self.found.take() {
                self.upper = set;
                break;
            }
            lower += 1;
        }
        let proven = !self.aborted;
        Outcome {
            best: std::mem::take(&mut self.upper),
            lower_bound: lower,
            proven,
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if let Some(cap) = self.node_cap {
            if self.nodes >= cap {
                self.aborted = true;
            }
        }
        if self.nodes & 1023 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    /// Lower bound on the number of further vertices needed, and the branching
    /// vertex: the undominated vertex with the fewest admissible dominators.
    fn bound(&mut self) -> NodeBound {
        let mut uncovered = 0usize;
        for w in 0..self.words {
            let mut mask = !self.covered[w];
            if w == self.words - 1 && !self.n.is_multiple_of(64) {
                mask &= (1u64 << (self.n % 64)) - 1;
            }
            uncovered += mask.count_ones() as usize;
        }
        if uncovered == 0 {
            return NodeBound::Covered;
        }
        let mut max_cov = 0u32;
        for u in 0..self.n {
            self.coverage[u] = if bit(&self.forbidden, u) {
                0
            } else {
                self.closed[u]
                    .iter()
                    .zip(&self.covered)
                    .map(|(a, c)| (a & !c).count_ones())
                    .sum()
            };
            max_cov = max_cov.max(self.coverage[u]);
            self.slack[u] = 1.0;
        }
        if max_cov == 0 {
            return NodeBound::Infeasible;
        }
        // Dual-feasible packing weights: start from 1 / (best coverage among
        // the vertex's dominators), then raise each weight into leftover slack.
        let mut dual = 0.0f64;
        let mut branch = usize::MAX;
        let mut fewest = usize::MAX;
        for v in 0..self.n {
            if bit(&self.covered, v) {
                continue;
            }
            let mut count = 0;
            let mut local_max = 0;
            for &u in &self.closed_lists[v] {
                if self.coverage[u] > 0 {
                    count += 1;
                    local_max = local_max.max(self.coverage[u]);
                }
            }
            if count == 0 {
                return NodeBound::Infeasible;
            }
            if count < fewest {
                fewest = count;
                branch = v;
            }
            let w = 1.0 / local_max as f64;
            dual += w;
            for &u in &self.closed_lists[v] {
                if self.coverage[u] > 0 {
                    self.slack[u] -= w;
                }
            }
        }
        for v in 0..self.n {
            if bit(&self.covered, v) {
                continue;
            }
            let mut room = f64::INFINITY;
            for &u in &self.closed_lists[v] {
                if self.coverage[u] > 0 {
                    room = room.min(self.slack[u]);
                }
            }
            if room > 1e-12 {
                dual += room;
                for &u in &self.closed_lists[v] {
                    if self.coverage[u] > 0 {
                        self.slack[u] -= room;
                    }
                }
            }
        }
        let simple = uncovered.div_ceil(max_cov as usize);
        let fractional = (dual - 1e-7).ceil().max(0.0) as usize;
        NodeBound::Open {
            bound: simple.max(fractional),
            branch,
        }
    }

    /// Returns true once a dominating set within `limit` has been found.
    fn dfs(&mut self) -> bool {
        self.nodes += 1;
        if self.out_of_budget() {
            return false;
        }
        let pick = match self.bound() {
            NodeBound::Covered => {
                self.found = Some(self.chosen.clone());
                return true;
            }
            NodeBound::Infeasible => return false,
            NodeBound::Open { bound, branch } => {
                if self.chosen.len() + bound > self.limit {
                    return false;
                }
                branch
            }
        };
        let mut candidates: Vec<(u32, usize)> = self.closed_lists[pick]
            .iter()
            .filter(|&&u| self.coverage[u] > 0)
            .map(|&u| (self.coverage[u], u))
            .collect();
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let saved = self.covered.clone();
        let mut excluded = Vec::with_capacity(candidates.len());
        let mut success = false;
        for (_, u) in candidates {
            self.chosen.push(u);
            for (c, a) in self.covered.iter_mut().zip(&self.closed[u]) {
                *c |= a;
            }
            success = self.dfs();
            self.covered.copy_from_slice(&saved);
            self.chosen.pop();
            if success || self.aborted {
                break;
            }
            set_bit(&mut self.forbidden, u);
            excluded.push(u);
        }
        for u in excluded {
            clear_bit(&mut self.forbidden, u);
        }
        success
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{empty_graph, path_graph, star_graph};

    #[test]
    fn dominating_checks() {
        let p3 = path_graph(3).unwrap();
        assert!(!is_dominating(&p3, &VertexSet::from_ids(3, [0]).unwrap()).unwrap());
        assert!(is_dominating(&p3, &VertexSet::full(3)).unwrap());
        assert!(is_dominating(&p3, &VertexSet::from_ids(3, [1]).unwrap()).unwrap());
        assert!(is_dominating(&p3, &VertexSet::from_ids(5, [4]).unwrap()).is_err());
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(
            greedy_upper_bound(&star_graph(5).unwrap()).to_vec(),
            vec![0]
        );
        assert_eq!(
            greedy_upper_bound(&path_graph(3).unwrap()).to_vec(),
            vec![1]
        );
    }

    #[test]
    fn single_vertex() {
        let r = gamma_exact(&path_graph(1).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!(r.gamma, 1);
        assert_eq!(r.witness.to_vec(), vec![0]);
        assert!(r.proven_optimal);
    }

    #[test]
    fn edgeless_graph_needs_every_vertex() {
        let r = gamma_exact(&empty_graph(6).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!(r.gamma, 6);
    }

    #[test]
    fn gamma_path_values() {
        assert_eq!(gamma_path(30).unwrap(), 10);
        assert_eq!(gamma_path(1).unwrap(), 1);
        assert!(gamma_path(0).is_err());
        for n in 1..=30 {
            let exact = gamma_exact(&path_graph(n).unwrap(), Budget::UNLIMITED).unwrap();
            assert_eq!(exact.gamma, gamma_path(n).unwrap(), "P_{n}");
        }
    }

    #[test]
    fn exhausted_budget_is_flagged() {
        let g = crate::graph::random_gnp(40, 0.1, 9).unwrap();
        let r = gamma_exact(&g, Budget::nodes(1)).unwrap();
        assert!(is_dominating(&g, &r.witness).unwrap());
        assert!(r.lower_bound <= r.gamma);
    }
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::instance::check_all;
use super::report::{GammaSource, InstanceReport, InstanceStatus, RunKind, RunReport};
use crate::bounds::{GammaInputs, ProvenGamma};
use crate::cells::{build_partition, color_cells_with, Factors};
use crate::domination::{gamma_exact, Budget, GammaResult, GammaTable, GammaValue};
use crate::error::{Error, Result};
use crate::graph::{path_graph, random_gnp, Graph};
use crate::par::{map_range, Parallelism};
use crate::product::cartesian_with_path;

/// Parameters of a randomized campaign over `X □ Y □ P_n`.
///
/// The report is a pure function of this value: the solver is limited by a
/// node count rather than wall time, and every instance draws from its own
/// random stream.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub instances: usize,
    pub seed: u64,
    pub max_x: usize,
    pub max_y: usize,
    pub n_values: Vec<usize>,
    /// Each instance picks one of these edge probabilities for both factors.
    pub p_values: Vec<f64>,
    /// Search-node limit for each domination number computed.
    pub node_budget: u64,
    /// Factor sizes are shrunk until the product has at most this many vertices.
    pub product_cap: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            instances: 100,
            seed: 0,
            max_x: 8,
            max_y: 6,
            n_values: vec![1, 2, 3, 4],
            p_values: vec![0.2, 0.4, 0.6],
            node_budget: 2_000_000,
            product_cap: 160,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if self.max_x == 0 || self.max_y == 0 {
            return bad("factor size limits must be at least 1".into());
        }
        if self.n_values.is_empty() || self.n_values.contains(&0) {
            return bad("n values must be a non-empty list of positive integers".into());
        }
        if self.p_values.is_empty() || self.p_values.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return bad("edge probabilities must be a non-empty list within [0, 1]".into());
        }
        let max_n = self.n_values.iter().copied().max().unwrap_or(1);
        if self.product_cap < max_n {
            return bad(format!(
                "product cap {} is below the largest n {max_n}",
                self.product_cap
            ));
        }
        Ok(())
    }
}

pub fn fuzz(cfg: &FuzzConfig) -> Result<RunReport<FuzzConfig>> {
    fuzz_with(cfg, Parallelism::default())
}

/// [`fuzz`] with an explicit execution mode; the report does not depend on it.
pub fn fuzz_with(cfg: &FuzzConfig, mode: Parallelism) -> Result<RunReport<FuzzConfig>> {
    cfg.validate()?;
    let instances = map_range(cfg.instances, mode, |i| run_instance(cfg, i))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(RunReport::new(RunKind::Fuzz, cfg.clone(), instances))
}

/// Factor sizes, path length and edge probability drawn for one instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceShape {
    pub order_x: usize,
    pub order_y: usize,
    pub n: usize,
    pub p: f64,
}

fn sample(cfg: &FuzzConfig, index: usize) -> (InstanceShape, Graph, Graph) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let mut order_x = rng.gen_range(1..=cfg.max_x);
    let mut order_y = rng.gen_range(1..=cfg.max_y);
    let n = cfg.n_values[rng.gen_range(0..cfg.n_values.len())];
    let p = cfg.p_values[rng.gen_range(0..cfg.p_values.len())];
    while order_x * order_y * n > cfg.product_cap {
        if order_x >= order_y {
            order_x -= 1;
        } else {
            order_y -= 1;
        }
    }
    let x = random_gnp(order_x, p, rng.gen()).expect("validated size and probability");
    let y = random_gnp(order_y, p, rng.gen()).expect("validated size and probability");
    let shape = InstanceShape {
        order_x,
        order_y,
        n,
        p,
    };
    (shape, x, y)
}

/// The factors an instance of `cfg` is built from, without solving anything.
pub fn instance_factors(cfg: &FuzzConfig, index: usize) -> Result<(InstanceShape, Graph, Graph)> {
    cfg.validate()?;
    Ok(sample(cfg, index))
}

fn value(r: &GammaResult) -> GammaValue {
    r.into()
}

fn run_instance(cfg: &FuzzConfig, index: usize) -> Result<InstanceReport> {
    let (shape, x, y) = sample(cfg, index);
    let z = path_graph(shape.n)?;
    let budget = Budget::nodes(cfg.node_budget);
    let gx = gamma_exact(&x, budget)?;
    let gy = gamma_exact(&y, budget)?;
    let gz = gamma_exact(&z, budget)?;
    let product = cartesian_with_path(&x, &y, shape.n)?;
    let gp = gamma_exact(product.flat(), budget)?;
    let nodes = gx.nodes_explored + gy.nodes_explored + gz.nodes_explored + gp.nodes_explored;
    let mut report = InstanceReport {
        index,
        label: format!("fuzz-{index:04}"),
        edge_probability: Some(shape.p),
        factors: Factors {
            x: (&x).into(),
            y: (&y).into(),
            z: (&z).into(),
        },
        status: InstanceStatus::SkippedUnproven,
        gammas: GammaTable {
            x: value(&gx),
            y: value(&gy),
            z: value(&gz),
            product: value(&gp),
        },
        product_gamma_source: GammaSource::Solver,
        product_lower_bound: (!gp.proven_optimal).then_some(gp.lower_bound),
        solver_nodes: nodes,
        ledger: None,
        checks: Vec::new(),
        slack: None,
        passed: true,
    };
    let proven = (|| {
        Ok::<_, Error>(GammaInputs {
            x: ProvenGamma::from_result(&gx)?,
            y: ProvenGamma::from_result(&gy)?,
            z: ProvenGamma::from_result(&gz)?,
            product: Some(ProvenGamma::from_result(&gp)?),
        })
    })();
    let Ok(gammas) = proven else {
        return Ok(report);
    };
    let partition = build_partition(&x, &gx.witness.to_vec())?;
    let coloring = color_cells_with(&partition, &product, &gp.witness, Parallelism::Sequential)?;
    let checked = check_all(&coloring, &gammas)?;
    report.status = InstanceStatus::Checked;
    report.passed = checked.checks.iter().all(|c| c.passed);
    report.ledger = Some(checked.ledger);
    report.checks = checked.checks;
    report.slack = checked.slack;
    Ok(report)
}

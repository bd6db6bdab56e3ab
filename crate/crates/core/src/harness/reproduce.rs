use serde::{Deserialize, Serialize};

use super::examples::{worked_example, WorkedExample};
use super::instance::check_all;
use super::report::{GammaSource, InstanceReport, InstanceStatus, RunKind, RunReport};
use crate::bounds::{GammaInputs, ProvenGamma};
use crate::cells::{color_cells, CellColor, CellColoring, Factors};
use crate::domination::{gamma_exact, Budget, GammaResult, GammaTable, GammaValue};
use crate::error::{Error, Result};

const GOLDEN_1: &str = include_str!("../../golden/example1.json");
const GOLDEN_2: &str = include_str!("../../golden/example2.json");

#[derive(Debug, Clone, Deserialize)]
struct GoldenDoc {
    schema: u32,
    id: u8,
    dims: [usize; 3],
    colors: Vec<Vec<Vec<CellColor>>>,
}

/// Reference colors of example `id` as `[i][y][z]`.
pub fn golden_colors(id: u8) -> Result<Vec<Vec<Vec<CellColor>>>> {
    let text = match id {
        1 => GOLDEN_1,
        2 => GOLDEN_2,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no example {id}; expected 1 or 2"
            )))
        }
    };
    let doc: GoldenDoc = serde_json::from_str(text)?;
    let [k, ny, nz] = doc.dims;
    let shape_ok = doc.colors.len() == k
        && doc
            .colors
            .iter()
            .all(|r| r.len() == ny && r.iter().all(|c| c.len() == nz));
    if doc.schema != 1 || doc.id != id || !shape_ok {
        return Err(Error::Format(format!("golden coloring {id} is malformed")));
    }
    Ok(doc.colors)
}

/// Z-fibers `(i, y)` holding the largest number of maroon cells.
pub fn max_maroon_fibers(c: &CellColoring) -> Vec<(usize, usize)> {
    let ledger = c.ledger();
    let (k, ny, _) = c.dims();
    let count = |i, y| ledger.z_fiber(i, y).cells_of(CellColor::Maroon);
    let best = (0..k)
        .flat_map(|i| (0..ny).map(move |y| (i, y)))
        .map(|(i, y)| count(i, y))
        .max()
        .unwrap_or(0);
    (0..k)
        .flat_map(|i| (0..ny).map(move |y| (i, y)))
        .filter(|&(i, y)| count(i, y) == best)
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReproduceOptions {
    /// Re-derive the product domination number with the exact solver.
    pub prove_product: Option<Budget>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleConfig {
    pub id: u8,
    pub reproved: bool,
}

#[derive(Debug, Clone)]
pub struct ExampleRun {
    pub example: WorkedExample,
    pub coloring: CellColoring,
    pub factor_gammas: [GammaResult; 3],
    pub product_gamma: Option<GammaResult>,
    pub report: RunReport<ExampleConfig>,
}

fn mismatch(msg: String) -> Error {
    Error::ReproductionFailure(msg)
}

fn compare_golden(id: u8, c: &CellColoring) -> Result<()> {
    let golden = golden_colors(id)?;
    let (k, ny, nz) = c.dims();
    if golden.len() != k || golden[0].len() != ny || golden[0][0].len() != nz {
        return Err(mismatch(format!(
            "coloring is {k}x{ny}x{nz}, golden differs"
        )));
    }
    for (i, rows) in golden.iter().enumerate() {
        for (y, cols) in rows.iter().enumerate() {
            for (z, &expected) in cols.iter().enumerate() {
                let actual = c.color_unchecked(i, y, z);
                if actual != expected {
                    return Err(mismatch(format!(
                        "cell (i={i}, y={y}, z={z}) is {} but golden says {}",
                        actual.name(),
                        expected.name()
                    )));
                }
            }
        }
    }
    Ok(())
}

fn compare_published(e: &WorkedExample, c: &CellColoring) -> Result<()> {
    for cell in &e.named_cells {
        let actual = c.color(cell.i, cell.y, cell.z)?;
        if actual != cell.color {
            return Err(mismatch(format!(
                "cell (i={}, y={}, z={}) is {} but the example names it {}",
                cell.i,
                cell.y,
                cell.z,
                actual.name(),
                cell.color.name()
            )));
        }
    }
    if let Some(red) = e.red_cells {
        let actual = c.ledger().total.cells_of(CellColor::Red);
        if actual != red {
            return Err(mismatch(format!("{actual} red cells, expected {red}")));
        }
    }
    if let Some(fiber) = e.max_maroon_fiber {
        let best = max_maroon_fibers(c);
        if best != [fiber] {
            return Err(mismatch(format!(
                "maximal-maroon Z-fibers are {best:?}, expected only {fiber:?}"
            )));
        }
    }
    Ok(())
}

fn factor_gamma(e: &WorkedExample, which: usize) -> Result<GammaResult> {
    let (g, published) = match which {
        0 => (&e.x, e.gammas.x),
        1 => (&e.y, e.gammas.y),
        _ => (&e.z, e.gammas.z),
    };
    let r = gamma_exact(g, Budget::UNLIMITED)?;
    if r.gamma != published {
        return Err(mismatch(format!(
            "factor {} has domination number {}, expected {published}",
            ["X", "Y", "Z"][which],
            r.gamma
        )));
    }
    Ok(r)
}

/// Rebuilds example `id`, compares its coloring with the reference colors and
/// the published cells, runs every applicable check, and optionally re-proves
/// the product domination number.
pub fn reproduce_example(id: u8, opts: ReproduceOptions) -> Result<ExampleRun> {
    let example = worked_example(id)?;
    let coloring = color_cells(&example.partition, &example.product, &example.dset)?;
    compare_golden(id, &coloring)?;
    compare_published(&example, &coloring)?;

    let factor_gammas = [
        factor_gamma(&example, 0)?,
        factor_gamma(&example, 1)?,
        factor_gamma(&example, 2)?,
    ];
    let published = example.gammas.product;
    let product_gamma = match opts.prove_product {
        Some(budget) => Some(gamma_exact(example.product.flat(), budget)?),
        None => None,
    };
    let mut source = GammaSource::Published;
    let mut lower_bound = None;
    if let Some(r) = &product_gamma {
        if r.proven_optimal {
            if r.gamma != published {
                return Err(mismatch(format!(
                    "product domination number is {}, expected {published}",
                    r.gamma
                )));
            }
            source = GammaSource::Solver;
        } else {
            if r.lower_bound > published {
                return Err(mismatch(format!(
                    "solver lower bound {} exceeds the published {published}",
                    r.lower_bound
                )));
            }
            lower_bound = Some(r.lower_bound);
        }
    }

    let gammas = GammaInputs {
        x: ProvenGamma::from_result(&factor_gammas[0])?,
        y: ProvenGamma::from_result(&factor_gammas[1])?,
        z: ProvenGamma::from_result(&factor_gammas[2])?,
        product: Some(ProvenGamma::certified(published)),
    };
    let checked = check_all(&coloring, &gammas)?;
    let instance = InstanceReport {
        index: 0,
        label: format!("example-{id}"),
        edge_probability: None,
        factors: Factors {
            x: (&example.x).into(),
            y: (&example.y).into(),
            z: (&example.z).into(),
        },
        status: InstanceStatus::Checked,
        gammas: GammaTable {
            x: (&factor_gammas[0]).into(),
            y: (&factor_gammas[1]).into(),
            z: (&factor_gammas[2]).into(),
            product: GammaValue {
                value: published,
                proven: true,
            },
        },
        product_gamma_source: source,
        product_lower_bound: lower_bound,
        solver_nodes: factor_gammas.iter().map(|r| r.nodes_explored).sum::<u64>()
            + product_gamma.as_ref().map_or(0, |r| r.nodes_explored),
        passed: checked.checks.iter().all(|c| c.passed),
        ledger: Some(checked.ledger),
        checks: checked.checks,
        slack: checked.slack,
    };
    let report = RunReport::new(
        RunKind::Example,
        ExampleConfig {
            id,
            reproved: source == GammaSource::Solver,
        },
        vec![instance],
    );
    Ok(ExampleRun {
        example,
        coloring,
        factor_gammas,
        product_gamma,
        report,
    })
}

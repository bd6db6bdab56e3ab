use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use domcells::bounds::{run_checks, CheckKind, CheckReport, GammaInputs, ProvenGamma};
use domcells::cells::{
    build_partition, color_cells, validate_partition, CellColor, CellColoring, CellColoringDoc,
    PartitionDoc,
};
use domcells::domination::{gamma_exact, Budget, GammaResult, GammaTable, GammaValue};
use domcells::graph::{path_graph, Graph, VertexSet};
use domcells::harness::{self, FuzzConfig, ReproduceOptions};
use domcells::io::{emit_edge_list, parse_edge_list, parse_graph6, parse_graph_auto};
use domcells::par::with_configured_pool;
use domcells::product::{cartesian3, Coord3, TripleProduct};

#[derive(Parser)]
#[command(
    name = "domcells",
    version,
    about = "Cell colorings and domination bounds for triple Cartesian products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the domination number of a graph.
    Gamma(GammaArgs),
    /// Build X □ Y □ Z and write it as an edge list plus a JSON sidecar.
    Product(ProductArgs),
    /// Color the cells of a product relative to a dominating set.
    Color(ColorArgs),
    /// Run checks on a saved coloring.
    Verify(VerifyArgs),
    /// Reproduce one of the two built-in worked examples.
    Example(ExampleArgs),
    /// Run a seeded randomized campaign over X □ Y □ P_n.
    Fuzz(FuzzArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Args)]
struct GammaArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    format: Format,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    budget: Option<f64>,
}

#[derive(Args)]
struct ProductArgs {
    #[arg(long)]
    x: PathBuf,
    #[arg(long)]
    y: PathBuf,
    #[arg(long)]
    z: PathBuf,
    /// Edge list output; the sidecar goes to `<out>.json` unless `--sidecar` is given.
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    x: PathBuf,
    #[arg(long)]
    y: PathBuf,
    #[arg(long, conflicts_with = "path")]
    z: Option<PathBuf>,
    /// Use Z = P_N.
    #[arg(long, required_unless_present = "z")]
    path: Option<usize>,
    /// Dominating set: one vertex per line, as a product id or as `x y z`.
    #[arg(long, conflicts_with = "solve", required_unless_present = "solve")]
    dset: Option<PathBuf>,
    /// Use a minimum dominating set found by the exact solver.
    #[arg(long)]
    solve: bool,
    /// Partition as JSON: {"dominators": [...], "cells": [[...], ...]}.
    #[arg(long, conflicts_with = "auto")]
    partition: Option<PathBuf>,
    /// Derive the partition from a minimum dominating set of X (the default).
    #[arg(long)]
    auto: bool,
    /// Wall-clock limit in seconds for solving the product.
    #[arg(long)]
    budget: Option<f64>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    coloring: PathBuf,
    /// Comma-separated: ledger, lemma1, lemma2, lemma3, p2, obs, fiber-maroon, main-lemma, theorem, combined.
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "all",
        required_unless_present = "all"
    )]
    checks: Vec<String>,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ExampleArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    id: u8,
    /// Re-prove the product domination number with the exact solver.
    #[arg(long)]
    prove: bool,
    /// Wall-clock limit in seconds for `--prove`.
    #[arg(long, requires = "prove")]
    budget: Option<f64>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 100)]
    instances: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    max_x: usize,
    #[arg(long, default_value_t = 6)]
    max_y: usize,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
    n_values: Vec<usize>,
    /// Edge probability, or a comma-separated list to draw from.
    #[arg(long, value_delimiter = ',', default_value = "0.2,0.4,0.6")]
    p: Vec<f64>,
    /// Solver node limit per domination number.
    #[arg(long, default_value_t = FuzzConfig::default().node_budget)]
    node_budget: u64,
    #[arg(long, default_value_t = FuzzConfig::default().product_cap)]
    product_cap: usize,
    #[arg(long)]
    json: Option<PathBuf>,
}

/// A command finished but something it checked did not hold.
#[derive(Debug)]
struct CheckFailed;

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("one or more checks failed")
    }
}

impl std::error::Error for CheckFailed {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match with_configured_pool(|| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<CheckFailed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<domcells::Error>() {
                Some(domcells::Error::ReproductionFailure(_)) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cmd: Command) -> anyhow::Result<()> {
    match cmd {
        Command::Gamma(a) => gamma(a),
        Command::Product(a) => product(a),
        Command::Color(a) => color(a),
        Command::Verify(a) => verify(a),
        Command::Example(a) => example(a),
        Command::Fuzz(a) => fuzz(a),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    parse_graph_auto(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn budget(seconds: Option<f64>) -> anyhow::Result<Budget> {
    match seconds {
        None => Ok(Budget::UNLIMITED),
        Some(s) if s.is_finite() && s > 0.0 => Ok(Budget::time(Duration::from_secs_f64(s))),
        Some(s) => bail!("budget must be a positive number of seconds, got {s}"),
    }
}

fn ids(set: &VertexSet) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn gamma(a: GammaArgs) -> anyhow::Result<()> {
    let text = read(&a.input)?;
    let g = match a.format {
        Format::Graph6 => parse_graph6(&text),
        Format::Edges => parse_edge_list(&text),
    }
    .with_context(|| format!("parsing {}", a.input.display()))?;
    let r = gamma_exact(&g, budget(a.budget)?)?;
    println!("gamma {}", r.gamma);
    println!("proven {}", r.proven_optimal);
    println!("lower_bound {}", r.lower_bound);
    println!("witness {}", ids(&r.witness));
    Ok(())
}

fn product(a: ProductArgs) -> anyhow::Result<()> {
    let p = cartesian3(&load_graph(&a.x)?, &load_graph(&a.y)?, &load_graph(&a.z)?)?;
    write(&a.out, &emit_edge_list(p.flat()))?;
    let sidecar = a.sidecar.unwrap_or_else(|| {
        let mut s = a.out.clone().into_os_string();
        s.push(".json");
        s.into()
    });
    write(&sidecar, &serde_json::to_string_pretty(&p.sidecar())?)?;
    println!("order {}", p.order());
    println!("edges {}", p.flat().edge_count());
    Ok(())
}

fn parse_dset(text: &str, p: &TripleProduct) -> anyhow::Result<VertexSet> {
    let mut ids = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::parse::<usize>)
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("dominating set line {}", n + 1))?;
        let id = match nums[..] {
            [id] => id,
            [x, y, z] => p.to_flat(Coord3::new(x, y, z))?,
            _ => bail!("dominating set line {}: expected an id or `x y z`", n + 1),
        };
        ids.push(id);
    }
    Ok(VertexSet::from_ids(p.order(), ids)?)
}

fn solve_factor(g: &Graph) -> anyhow::Result<GammaResult> {
    Ok(gamma_exact(g, Budget::UNLIMITED)?)
}

fn color(a: ColorArgs) -> anyhow::Result<()> {
    let x = load_graph(&a.x)?;
    let y = load_graph(&a.y)?;
    let z = match (&a.z, a.path) {
        (Some(path), _) => load_graph(path)?,
        (None, Some(n)) => path_graph(n)?,
        (None, None) => bail!("one of --z or --path is required"),
    };
    let p = cartesian3(&x, &y, &z)?;
    let gx = solve_factor(&x)?;
    let gy = solve_factor(&y)?;
    let gz = solve_factor(&z)?;
    let partition = match &a.partition {
        Some(path) => {
            let doc: PartitionDoc = serde_json::from_str(&read(path)?)
                .with_context(|| format!("parsing {}", path.display()))?;
            validate_partition(&x, &doc.dominators, &doc.cells)?
        }
        None => build_partition(&x, &gx.witness.to_vec())?,
    };
    let (dset, product_gamma) = match &a.dset {
        Some(path) => {
            let d = parse_dset(&read(path)?, &p)?;
            let proof = match a.budget {
                Some(_) => Some(gamma_exact(p.flat(), budget(a.budget)?)?),
                None => None,
            };
            let value = match &proof {
                Some(r) if r.proven_optimal => GammaValue::from(r),
                _ => GammaValue {
                    value: d.len(),
                    proven: false,
                },
            };
            (d, value)
        }
        None => {
            let r = gamma_exact(p.flat(), budget(a.budget)?)?;
            (r.witness.clone(), GammaValue::from(&r))
        }
    };
    if product_gamma.proven && dset.len() != product_gamma.value {
        eprintln!(
            "warning: D has {} vertices but the domination number is {}; counts assume a minimum D",
            dset.len(),
            product_gamma.value
        );
    }
    let coloring = color_cells(&partition, &p, &dset)?;
    let table = GammaTable {
        x: (&gx).into(),
        y: (&gy).into(),
        z: (&gz).into(),
        product: product_gamma,
    };
    print_ledger(&coloring, &table);
    if let Some(out) = &a.json {
        write(
            out,
            &serde_json::to_string_pretty(&coloring.to_doc(Some(table)))?,
        )?;
    }
    if let Some(out) = &a.svg {
        write(out, &harness::render_svg(&coloring))?;
    }
    Ok(())
}

fn print_ledger(c: &CellColoring, g: &GammaTable) {
    let (k, ny, nz) = c.dims();
    let l = c.ledger();
    println!("cells {k}x{ny}x{nz}  |D| {}", c.dset().len());
    let show = |v: &GammaValue| format!("{}{}", v.value, if v.proven { "" } else { " (unproven)" });
    println!(
        "gamma X {}  Y {}  Z {}  product {}",
        show(&g.x),
        show(&g.y),
        show(&g.z),
        show(&g.product)
    );
    let cells: Vec<String> = CellColor::ALL
        .iter()
        .map(|&col| format!("{} {}", col.name(), l.total.cells_of(col)))
        .collect();
    println!("cells: {}", cells.join(", "));
    let verts: Vec<String> = CellColor::ALL[..4]
        .iter()
        .map(|&col| format!("{} {}", col.name(), l.total.vertices_of(col)))
        .collect();
    println!("D vertices: {}", verts.join(", "));
}

fn print_reports(reports: &[CheckReport]) {
    for r in reports {
        if !r.applicable {
            println!("SKIP {} ({})", r.name, r.note.as_deref().unwrap_or(""));
            continue;
        }
        let status = if r.passed { "PASS" } else { "FAIL" };
        let extra = if r.finding_of_interest {
            " [finding of interest]"
        } else {
            ""
        };
        println!(
            "{status} {} ({} comparisons){extra}",
            r.name,
            r.outcomes.len()
        );
        for o in r.failures() {
            println!(
                "  {}",
                serde_json::to_string(o).unwrap_or_else(|_| o.name.clone())
            );
        }
    }
}

fn proven(v: &GammaValue, what: &str) -> anyhow::Result<ProvenGamma> {
    ProvenGamma::from_value(v).with_context(|| format!("gamma({what})"))
}

fn verify(a: VerifyArgs) -> anyhow::Result<()> {
    let doc: CellColoringDoc = serde_json::from_str(&read(&a.coloring)?)
        .with_context(|| format!("parsing {}", a.coloring.display()))?;
    let kinds = if a.all {
        CheckKind::ALL.to_vec()
    } else {
        a.checks
            .iter()
            .map(|s| CheckKind::parse(s))
            .collect::<Result<Vec<_>, _>>()?
    };
    let coloring = CellColoring::from_doc(&doc)?;
    let table = doc
        .gammas
        .ok_or_else(|| anyhow!("coloring has no domination numbers; recreate it with `color`"))?;
    let p = coloring.product();
    for (which, g, stored) in [
        ("X", p.factor_x(), &table.x),
        ("Y", p.factor_y(), &table.y),
        ("Z", p.factor_z(), &table.z),
    ] {
        let r = solve_factor(g)?;
        if stored.proven && r.gamma != stored.value {
            println!(
                "FAIL gamma({which}) stored {} but solves to {}",
                stored.value, r.gamma
            );
            return Err(CheckFailed.into());
        }
    }
    let gammas = GammaInputs {
        x: proven(&table.x, "X")?,
        y: proven(&table.y, "Y")?,
        z: proven(&table.z, "Z")?,
        product: table
            .product
            .proven
            .then(|| ProvenGamma::certified(table.product.value)),
    };
    let reports = run_checks(&coloring, &coloring.ledger(), &gammas, &kinds)?;
    print_reports(&reports);
    if let Some(out) = &a.json {
        write(out, &serde_json::to_string_pretty(&reports)?)?;
    }
    if !a.all {
        if let Some(r) = reports.iter().find(|r| !r.applicable) {
            bail!(
                "check {} not run: {}",
                r.name,
                r.note.as_deref().unwrap_or("")
            );
        }
    }
    if reports.iter().any(|r| !r.passed) {
        return Err(CheckFailed.into());
    }
    Ok(())
}

fn example(a: ExampleArgs) -> anyhow::Result<()> {
    let opts = ReproduceOptions {
        prove_product: if a.prove {
            Some(budget(a.budget)?)
        } else {
            None
        },
    };
    let run = harness::reproduce_example(a.id, opts)?;
    let inst = &run.report.instances[0];
    println!(
        "example {}: reproduction matches the reference coloring",
        a.id
    );
    print_ledger(&run.coloring, &inst.gammas);
    if let Some(r) = &run.product_gamma {
        println!(
            "solver: gamma {} proven {} lower_bound {} nodes {} in {:.1?}",
            r.gamma, r.proven_optimal, r.lower_bound, r.nodes_explored, r.elapsed
        );
    }
    print_reports(&inst.checks);
    if let Some(out) = &a.json {
        write(out, &run.report.to_json()?)?;
    }
    if let Some(out) = &a.svg {
        write(out, &harness::render_svg(&run.coloring))?;
    }
    if !run.report.passed() {
        return Err(CheckFailed.into());
    }
    Ok(())
}

fn fuzz(a: FuzzArgs) -> anyhow::Result<()> {
    let cfg = FuzzConfig {
        instances: a.instances,
        seed: a.seed,
        max_x: a.max_x,
        max_y: a.max_y,
        n_values: a.n_values,
        p_values: a.p,
        node_budget: a.node_budget,
        product_cap: a.product_cap,
    };
    let report = harness::fuzz(&cfg)?;
    let s = &report.summary;
    println!(
        "instances {}  checked {}  skipped-unproven {}",
        s.instances, s.checked, s.skipped_unproven
    );
    println!(
        "checks run {}  not applicable {}  failures {}  findings of interest {}",
        s.checks_run, s.checks_not_applicable, s.check_failures, s.findings_of_interest
    );
    if let (Some(min), Some(at), Some(mean)) = (&s.min_slack, s.min_slack_instance, s.mean_slack) {
        println!("theorem slack: min {min} (instance {at})  mean {mean:.4}");
    }
    for f in &s.failures {
        let tag = if f.finding_of_interest {
            " [finding of interest]"
        } else {
            ""
        };
        println!("FAIL instance {} {}{tag}", f.instance, f.check);
    }
    if let Some(out) = &a.json {
        write(out, &report.to_json()?)?;
    }
    if !report.passed() {
        return Err(CheckFailed.into());
    }
    Ok(())
}

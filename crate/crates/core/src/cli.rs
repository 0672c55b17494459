//! `equitree` command line: color, verify, gen, oracle, bench.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a claimed solution
//! failed verification, 3 solver failure, 4 oracle proved non-existence,
//! 5 oracle budget exhausted. `verify` also exits 2 on an invalid coloring.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::generator::{emit, generate, BackDegreeDist, GenSpec};
use crate::graph::{parse_edge_list, Graph};
use crate::layered::DiagnosticsReport;
use crate::oracle::{oracle_min_k, oracle_solve, OracleMode, OracleOutcome, OracleQuery};
use crate::solve::{solve, SolveOptions};
use crate::verify::{rebalance_strict, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_SOLVER_FAILED: i32 = 3;
pub const EXIT_NOT_EXIST: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "equitree", version, about = "Equitable tree-colorings of d-degenerate graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color a graph and verify the result.
    Color(ColorArgs),
    /// Check a coloring against a graph.
    Verify(VerifyArgs),
    /// Write a random d-degenerate graph.
    Gen(GenArgs),
    /// Exhaustive search on a graph with at most 20 vertices.
    Oracle(OracleArgs),
    /// Run generate + color + verify over a parameter grid, CSV out.
    Bench(BenchArgs),
}

#[derive(Debug, clap::Args)]
struct ColorArgs {
    /// Edge-list file, or `-` for stdin.
    input: PathBuf,
    #[arg(long)]
    k: usize,
    /// Include the layer diagnostics in the JSON output.
    #[arg(long)]
    diagnostics: bool,
    /// Even out class sizes after a successful run.
    #[arg(long)]
    rebalance: bool,
    /// Run the layered construction even when the small-t rule applies.
    #[arg(long)]
    force_layered: bool,
    /// Write JSON here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    graph: PathBuf,
    /// JSON array of colors, or an object with a `color` array.
    coloring: PathBuf,
    /// Number of colors; defaults to the `k` field of the coloring object.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DistArg {
    Fixed,
    Uniform,
}

impl From<DistArg> for BackDegreeDist {
    fn from(d: DistArg) -> Self {
        match d {
            DistArg::Fixed => BackDegreeDist::Fixed,
            DistArg::Uniform => BackDegreeDist::UniformUpTo,
        }
    }
}

#[derive(Debug, clap::Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    dmax: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "fixed")]
    dist: DistArg,
    /// Percent of back-edges aimed at the oldest vertex with spare degree.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=100))]
    hub_bias: u8,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    CapOnly,
    Strict,
}

#[derive(Debug, clap::Args)]
struct OracleArgs {
    graph: PathBuf,
    #[arg(long, required_unless_present = "min_k")]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "cap-only")]
    mode: ModeArg,
    /// Report the smallest feasible k instead.
    #[arg(long)]
    min_k: bool,
    #[arg(long, default_value_t = 50_000_000)]
    node_limit: u64,
}

#[derive(Debug, clap::Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    d: Vec<usize>,
    #[arg(long, value_delimiter = ',', required_unless_present = "alpha", conflicts_with = "alpha")]
    k: Vec<usize>,
    /// Sets k = alpha * max(d, 1) per grid point.
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    dmax: Vec<usize>,
    /// Seeds as a list, or a half-open range `a..b`.
    #[arg(long, default_value = "0", value_parser = parse_seeds)]
    seeds: SeedList,
    #[arg(long, value_enum, default_value = "fixed")]
    dist: DistArg,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=100))]
    hub_bias: u8,
    #[arg(long)]
    force_layered: bool,
    /// Fill the `ms` column (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Clone)]
struct SeedList(Vec<u64>);

fn parse_seeds(s: &str) -> Result<SeedList, String> {
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|e| format!("bad seed range start: {e}"))?;
        let b: u64 = b.trim().parse().map_err(|e| format!("bad seed range end: {e}"))?;
        if a >= b {
            return Err(format!("empty seed range {a}..{b}"));
        }
        return Ok(SeedList((a..b).collect()));
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|e| format!("bad seed {x:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(SeedList)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Color(a) => cmd_color(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Gen(a) => cmd_gen(&a),
        Command::Oracle(a) => cmd_oracle(&a),
        Command::Bench(a) => cmd_bench(&a),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("equitree: {msg}");
            EXIT_USAGE
        }
    }
}

fn read_input(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = read_input(path)?;
    parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("writing {}: {e}", p.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("writing stdout: {e}")),
    }
}

#[derive(Debug, Serialize)]
struct ErrorJson {
    kind: &'static str,
    message: String,
}

#[derive(Debug, Serialize)]
struct ColorJson<'a> {
    n: usize,
    k: usize,
    t: usize,
    alpha: usize,
    beta: usize,
    branch: &'static str,
    color: &'a [Option<usize>],
    class_sizes: Vec<usize>,
    valid: bool,
    spread: usize,
    diagnostics: Option<&'a DiagnosticsReport>,
    error: Option<ErrorJson>,
}

fn cmd_color(a: &ColorArgs) -> Result<i32, String> {
    if a.k == 0 {
        return Err("k must be at least 1".into());
    }
    let g = read_graph(&a.input)?;
    if g.n() == 0 {
        return Err("graph has no vertices".into());
    }
    let solution = solve(
        &g,
        a.k,
        SolveOptions {
            force_layered: a.force_layered,
            ..SolveOptions::default()
        },
    );
    let mut colors = solution.colors.clone();
    let mut report = verify(&g, &colors, a.k);

    let (code, error) = match &solution.error {
        Some(e) => (
            EXIT_SOLVER_FAILED,
            Some(ErrorJson {
                kind: e.kind(),
                message: e.to_string(),
            }),
        ),
        None if !report.is_valid() => (
            EXIT_VERIFY_FAILED,
            Some(ErrorJson {
                kind: "verify_failed",
                message: format!("{:?}", report.verdict),
            }),
        ),
        None => {
            if a.rebalance {
                (colors, report) = rebalance_strict(&g, &colors, a.k);
            }
            (EXIT_OK, None)
        }
    };

    let plan = &solution.plan;
    let out = ColorJson {
        n: plan.n,
        k: plan.k,
        t: plan.t,
        alpha: plan.alpha,
        beta: plan.beta,
        branch: plan.branch.as_str(),
        color: &colors,
        class_sizes: report.sizes(),
        valid: report.is_valid(),
        spread: report.spread,
        diagnostics: if a.diagnostics { solution.diagnostics.as_ref() } else { None },
        error,
    };
    let mut text = serde_json::to_string(&out).map_err(|e| e.to_string())?;
    text.push('\n');
    write_output(a.json.as_deref(), &text)?;
    Ok(code)
}

fn cmd_verify(a: &VerifyArgs) -> Result<i32, String> {
    let g = read_graph(&a.graph)?;
    let text = read_input(&a.coloring)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", a.coloring.display()))?;
    let (array, json_k) = match &value {
        Value::Array(_) => (&value, None),
        Value::Object(map) => (
            map.get("color").ok_or("coloring object has no `color` field")?,
            map.get("k").and_then(Value::as_u64).map(|k| k as usize),
        ),
        _ => return Err("coloring must be a JSON array or object".into()),
    };
    let colors: Vec<Option<usize>> =
        serde_json::from_value(array.clone()).map_err(|e| format!("bad `color` array: {e}"))?;
    let k = a.k.or(json_k).ok_or("pass --k or a coloring object with `k`")?;
    if k == 0 {
        return Err("k must be at least 1".into());
    }
    let report = verify(&g, &colors, k);
    let mut text = serde_json::to_string(&report).map_err(|e| e.to_string())?;
    text.push('\n');
    write_output(None, &text)?;
    Ok(if report.is_valid() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn gen_spec(n: usize, d: usize, dmax: usize, seed: u64, dist: DistArg, hub_bias: u8) -> Result<GenSpec, String> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    if dmax < d {
        return Err(format!("dmax ({dmax}) must be at least d ({d})"));
    }
    Ok(GenSpec::new(n, d, dmax, seed)
        .with_dist(dist.into())
        .with_hub_bias(hub_bias))
}

fn cmd_gen(a: &GenArgs) -> Result<i32, String> {
    let spec = gen_spec(a.n, a.d, a.dmax, a.seed, a.dist, a.hub_bias)?;
    let g = generate(&spec);
    write_output(a.out.as_deref(), &emit(&spec, &g))?;
    Ok(EXIT_OK)
}

fn cmd_oracle(a: &OracleArgs) -> Result<i32, String> {
    let g = read_graph(&a.graph)?;
    let mode = match a.mode {
        ModeArg::CapOnly => OracleMode::CapOnly,
        ModeArg::Strict => OracleMode::Strict,
    };
    if a.min_k {
        return match oracle_min_k(&g, mode, a.node_limit) {
            Ok(k) => {
                println!("min_k {k}");
                Ok(EXIT_OK)
            }
            Err(crate::oracle::OracleError::BudgetExceeded(k)) => {
                println!("BudgetExceeded at k={k}");
                Ok(EXIT_BUDGET)
            }
            Err(e) => Err(e.to_string()),
        };
    }
    let k = a.k.expect("clap requires --k without --min-k");
    let query = OracleQuery {
        graph: &g,
        k,
        mode,
        node_limit: a.node_limit,
    };
    match oracle_solve(&query).map_err(|e| e.to_string())? {
        OracleOutcome::Found(colors) => {
            println!("Found");
            println!("{}", serde_json::to_string(&colors).map_err(|e| e.to_string())?);
            Ok(EXIT_OK)
        }
        OracleOutcome::NotExist => {
            println!("NotExist");
            Ok(EXIT_NOT_EXIST)
        }
        OracleOutcome::BudgetExceeded => {
            println!("BudgetExceeded");
            Ok(EXIT_BUDGET)
        }
    }
}

/// One bench row; field order is the CSV column order.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub delta: usize,
    pub k: usize,
    pub t: usize,
    pub alpha: usize,
    pub beta: usize,
    pub branch: &'static str,
    pub success: bool,
    pub fail_kind: &'static str,
    pub ms: Option<u128>,
    pub max_class: usize,
    pub min_class: usize,
    pub diag_violations: usize,
}

struct GridPoint {
    spec: GenSpec,
    k: usize,
}

fn run_point(p: &GridPoint, force_layered: bool, timing: bool) -> RunRecord {
    let g = generate(&p.spec);
    let start = Instant::now();
    let solution = solve(
        &g,
        p.k,
        SolveOptions {
            force_layered,
            ..SolveOptions::default()
        },
    );
    let elapsed = start.elapsed().as_millis();
    let report = verify(&g, &solution.colors, p.k);
    let fail_kind = match &solution.error {
        Some(e) => e.kind(),
        None if !report.is_valid() => "verify_failed",
        None => "",
    };
    let sizes = report.sizes();
    let plan = &solution.plan;
    RunRecord {
        n: g.n(),
        m: g.m(),
        d: plan.d,
        delta: plan.max_degree,
        k: p.k,
        t: plan.t,
        alpha: plan.alpha,
        beta: plan.beta,
        branch: plan.branch.as_str(),
        success: fail_kind.is_empty(),
        fail_kind,
        ms: timing.then_some(elapsed),
        max_class: sizes.iter().copied().max().unwrap_or(0),
        min_class: sizes.iter().copied().min().unwrap_or(0),
        diag_violations: solution.diagnostics.as_ref().map_or(0, |r| r.violations),
    }
}

fn cmd_bench(a: &BenchArgs) -> Result<i32, String> {
    let mut points = Vec::new();
    for &n in &a.n {
        for &d in &a.d {
            let ks: Vec<usize> = if a.alpha.is_empty() {
                a.k.clone()
            } else {
                a.alpha.iter().map(|&al| al * d.max(1)).collect()
            };
            for &k in &ks {
                if k == 0 {
                    return Err("k must be at least 1".into());
                }
                for &dmax in &a.dmax {
                    for &seed in &a.seeds.0 {
                        points.push(GridPoint {
                            spec: gen_spec(n, d, dmax, seed, a.dist, a.hub_bias)?,
                            k,
                        });
                    }
                }
            }
        }
    }

    let records: Vec<RunRecord> = points
        .par_iter()
        .map(|p| run_point(p, a.force_layered, a.timing))
        .collect();

    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in &records {
        writer.serialize(r).map_err(|e| e.to_string())?;
    }
    let bytes = writer.into_inner().map_err(|e| e.to_string())?;
    let text = String::from_utf8(bytes).map_err(|e| e.to_string())?;
    write_output(a.csv.as_deref(), &text)?;
    Ok(EXIT_OK)
}

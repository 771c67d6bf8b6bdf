//! Command-line front end over the sum-graph library.
//!
//! Subcommands: `build`, `color`, `verify`, `sweep`, `export`. Exit codes
//! are a stable contract: 0 success/verified, 1 usage error (including
//! parameters no construction covers), 2 verification failed, 3 solver
//! budget exhausted (timeout or edge cap).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use sumgraph::audit::{audit_claims, write_csv, Engine, SweepRanges, SweepSpec};
use sumgraph::json::{
    coloring_from_json, coloring_to_json, graph_from_json, graph_to_json, report_to_json,
    solve_to_json, ColoringJson, SolveJson,
};
use sumgraph::{
    build_h, build_integral_sum_graph, build_sum_graph, dot, edge_sum_classes,
    exact_chromatic_index, greedy_coloring, paper_scheme, verify_coloring, Error, SolveOutcome,
    SolverBudget, SumGraph,
};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sumgraph",
    version,
    about = "Sum-graph families, edge colorings, and claim audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family graph and print its JSON
    Build(BuildArgs),
    /// Color a family graph with the selected engine and print coloring JSON
    Color(ColorArgs),
    /// Check a coloring file against a graph file; exit 0 iff proper and complete
    Verify(VerifyArgs),
    /// Audit a parameter grid and print the audit CSV
    Sweep(SweepArgs),
    /// Render a graph file and a verified coloring file as Graphviz DOT
    Export(ExportArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// Graph family: h, grs, or gn
    #[arg(long, default_value = "h")]
    family: String,

    /// Order of G_n
    #[arg(short = 'n', long)]
    n: Option<i64>,

    /// Lower label bound of G_{r,s}
    #[arg(short = 'r', long, allow_hyphen_values = true)]
    r: Option<i64>,

    /// Magnitude of the lower bound of H^{-i,s}
    #[arg(short = 'i', long)]
    i: Option<i64>,

    /// Upper label bound
    #[arg(short = 's', long)]
    s: Option<i64>,

    /// Negative removal label magnitude of H^{-i,s}_{m,j}
    #[arg(short = 'm', long)]
    m: Option<i64>,

    /// Positive removal label of H^{-i,s}_{m,j}
    #[arg(short = 'j', long)]
    j: Option<i64>,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args)]
struct ColorArgs {
    #[command(flatten)]
    family: FamilyArgs,

    /// Engine: paper, exact, edge-sum, or greedy
    #[arg(long)]
    engine: String,

    /// Solver edge cap
    #[arg(long, default_value_t = 256)]
    max_edges: usize,

    /// Solver time limit in milliseconds
    #[arg(long, default_value_t = 10_000)]
    time_limit_ms: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph JSON file
    graph: PathBuf,
    /// Coloring JSON file
    coloring: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    /// Family to sweep: h, grs, or gn
    #[arg(long)]
    family: String,

    /// Range lo:hi (or a single value) for i
    #[arg(long, value_parser = parse_range)]
    i: Option<(i64, i64)>,

    /// Range for s
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    s: Option<(i64, i64)>,

    /// Range for m
    #[arg(long, value_parser = parse_range)]
    m: Option<(i64, i64)>,

    /// Range for j
    #[arg(long, value_parser = parse_range)]
    j: Option<(i64, i64)>,

    /// Range for r (negative bounds allowed)
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    r: Option<(i64, i64)>,

    /// Range for n
    #[arg(long, value_parser = parse_range)]
    n: Option<(i64, i64)>,

    /// Comma-separated engines (default: all of edge-sum,paper-scheme,exact,greedy)
    #[arg(long, default_value = "edge-sum,paper-scheme,exact,greedy")]
    engines: String,

    /// Solver edge cap per instance
    #[arg(long, default_value_t = 256)]
    max_edges: usize,

    /// Solver time limit per instance in milliseconds
    #[arg(long, default_value_t = 10_000)]
    time_limit_ms: u64,

    /// Write the CSV here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// Graph JSON file
    graph: PathBuf,
    /// Coloring JSON file; must verify against the graph
    coloring: PathBuf,
}

fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let parse_bound = |part: &str| {
        part.trim()
            .parse::<i64>()
            .map_err(|_| format!("`{part}` is not an integer"))
    };
    match text.split_once(':') {
        Some((lo, hi)) => {
            let (lo, hi) = (parse_bound(lo)?, parse_bound(hi)?);
            if lo > hi {
                return Err(format!("empty range {lo}:{hi}"));
            }
            Ok((lo, hi))
        }
        None => {
            let v = parse_bound(text)?;
            Ok((v, v))
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match &err {
            Error::UnverifiedColoring(_) => EXIT_VERIFICATION,
            Error::EdgeBudget { .. } | Error::DegreeBudget { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn require(value: Option<i64>, flag: &str, family: &str) -> Result<i64, Failure> {
    value.ok_or_else(|| Failure::usage(format!("family `{family}` requires -{flag}")))
}

fn build_graph(args: &FamilyArgs) -> Result<SumGraph, Failure> {
    match args.family.as_str() {
        "h" | "H" => {
            let i = require(args.i, "i", "h")?;
            let s = require(args.s, "s", "h")?;
            let m = require(args.m, "m", "h")?;
            let j = require(args.j, "j", "h")?;
            Ok(build_h(i, s, m, j)?)
        }
        "grs" | "Grs" => {
            let r = require(args.r, "r", "grs")?;
            let s = require(args.s, "s", "grs")?;
            Ok(build_integral_sum_graph(r, s)?)
        }
        "gn" | "Gn" => {
            let n = require(args.n, "n", "gn")?;
            Ok(build_sum_graph(n)?)
        }
        other => Err(Failure::usage(format!(
            "unknown family `{other}` (expected h, grs, or gn)"
        ))),
    }
}

fn cmd_build(args: &BuildArgs) -> Result<(), Failure> {
    let g = build_graph(&args.family)?;
    println!("{}", graph_to_json(&g));
    Ok(())
}

fn cmd_color(args: &ColorArgs) -> Result<(), Failure> {
    let g = build_graph(&args.family)?;
    let payload = match args.engine.as_str() {
        "edge-sum" | "edgesum" => ColoringJson::from_edge_sum(&edge_sum_classes(&g)),
        "paper" | "paper-scheme" | "scheme" => {
            let (i, s, m, j) = match g.family() {
                sumgraph::Family::H(p) => (p.i, p.s, p.m, p.j),
                _ => {
                    return Err(Failure::usage(
                        "the paper engine colors family h graphs only",
                    ))
                }
            };
            let coloring = paper_scheme(i, s, m, j)?;
            let report = verify_coloring(&g, &coloring);
            ColoringJson::from_coloring(&coloring, &report, None)
        }
        "greedy" => {
            let coloring = greedy_coloring(&g);
            let report = verify_coloring(&g, &coloring);
            ColoringJson::from_coloring(&coloring, &report, None)
        }
        "exact" => {
            let budget = SolverBudget {
                max_edges: args.max_edges,
                time_limit: Duration::from_millis(args.time_limit_ms),
            };
            let outcome = exact_chromatic_index(&g, &budget)?;
            let solve = SolveJson::from_outcome(&outcome, g.max_degree());
            match outcome {
                SolveOutcome::Exact { coloring, .. } => {
                    let report = verify_coloring(&g, &coloring);
                    ColoringJson::from_coloring(&coloring, &report, Some(solve))
                }
                SolveOutcome::Timeout { .. } => {
                    println!("{}", solve_to_json(&solve));
                    return Err(Failure {
                        code: EXIT_BUDGET,
                        message: "solver timed out within the time limit".into(),
                    });
                }
            }
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown engine `{other}` (expected paper, exact, edge-sum, or greedy)"
            )))
        }
    };
    println!("{}", coloring_to_json(&payload));
    Ok(())
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let g = graph_from_json(&read_file(&args.graph)?)?;
    let payload = coloring_from_json(&read_file(&args.coloring)?)?;
    let coloring = payload.to_coloring();
    let report = verify_coloring(&g, &coloring);
    println!("{}", report_to_json(&report));
    if report.ok() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_VERIFICATION,
            message: "coloring is not a proper complete coloring of the graph".into(),
        })
    }
}

fn cmd_export(args: &ExportArgs) -> Result<(), Failure> {
    let g = graph_from_json(&read_file(&args.graph)?)?;
    let payload = coloring_from_json(&read_file(&args.coloring)?)?;
    let coloring = payload.to_coloring();
    print!("{}", dot::to_dot(&g, &coloring)?);
    Ok(())
}

fn parse_engines(text: &str) -> Result<Vec<Engine>, Failure> {
    let mut engines = Vec::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let engine = Engine::parse(part.trim())
            .ok_or_else(|| Failure::usage(format!("unknown engine `{part}`")))?;
        if !engines.contains(&engine) {
            engines.push(engine);
        }
    }
    if engines.is_empty() {
        return Err(Failure::usage("no engines selected"));
    }
    Ok(engines)
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), Failure> {
    let ranges = match args.family.as_str() {
        "h" | "H" => SweepRanges::H {
            i: args.i.ok_or_else(|| Failure::usage("sweep over h requires --i"))?,
            s: args.s.ok_or_else(|| Failure::usage("sweep over h requires --s"))?,
            m: args.m.ok_or_else(|| Failure::usage("sweep over h requires --m"))?,
            j: args.j.ok_or_else(|| Failure::usage("sweep over h requires --j"))?,
        },
        "grs" | "Grs" => SweepRanges::Grs {
            r: args.r.ok_or_else(|| Failure::usage("sweep over grs requires --r"))?,
            s: args.s.ok_or_else(|| Failure::usage("sweep over grs requires --s"))?,
        },
        "gn" | "Gn" => SweepRanges::Gn {
            n: args.n.ok_or_else(|| Failure::usage("sweep over gn requires --n"))?,
        },
        other => {
            return Err(Failure::usage(format!(
                "unknown family `{other}` (expected h, grs, or gn)"
            )))
        }
    };
    let spec = SweepSpec::new(
        ranges,
        parse_engines(&args.engines)?,
        SolverBudget {
            max_edges: args.max_edges,
            time_limit: Duration::from_millis(args.time_limit_ms),
        },
    );
    let rows = audit_claims(&spec)?;
    let csv = write_csv(&rows);
    match &args.output {
        Some(path) => fs::write(path, csv)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Color(args) => cmd_color(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Export(args) => cmd_export(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

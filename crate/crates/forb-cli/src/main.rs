//! `forb` — command-line driver for forbidden-configuration computations.
//!
//! Four subcommands: `gen` builds a construction and writes it in `.bm`
//! format, `contains` decides whether one matrix embeds in another as a
//! configuration, `forb` computes or bounds the extremal function
//! `forb(m, family)`, and `verify` replays a named suite of checks.
//!
//! Results are single-line `key=value` records so they grep cleanly;
//! `--json` switches every record to one JSON object per line with the
//! same fields. Exit codes are a stable contract: 0 success (or
//! "contained"), 1 negative result ("absent", or a failed verification
//! suite), 2 usage or parse error, 3 search budget exhausted.

use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use forb::constructions::{Built, ConstructionSpec};
use forb::solver::{
    bounds_report, max_avoid_exact, SearchBudget, SearchOptions, SearchStatus,
};
use forb::verify::{run_suite, SUITES};
use forb::{contains_configuration, BinaryMatrix};
use serde_json::json;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "forb",
    version,
    about = "Forbidden-configuration toolkit: constructions, containment, exact forb(m, F) search, and verification suites",
    after_help = "Matrix arguments are resolved in order: an existing file is parsed as .bm; \
an argument containing ':' is built as a construction spec (e.g. A_k:m=6,k=4); \
anything else is an inline literal with '/' between rows (e.g. 110/101)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a construction and write it in .bm format
    Gen(GenArgs),
    /// Decide whether configuration F embeds in A (row/column permutation of a submatrix)
    Contains(ContainsArgs),
    /// Compute forb(m, family) exactly, or bound it from constructions
    Forb(ForbArgs),
    /// Run a named verification suite and report each claim
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Construction spec, e.g. A_k:m=6,k=4 | boundary:i=3,k=4 | named:tag=F_3 | f:m=10,k=5
    spec: String,
    /// Write the result here instead of printing it after the record
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit the record as a JSON object
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ContainsArgs {
    /// The configuration to look for (file, spec, or inline literal)
    f: String,
    /// The matrix to search in (file, spec, or inline literal)
    a: String,
    /// Emit the record as a JSON object
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ForbMode {
    /// Branch-and-bound search for the exact value
    Exact,
    /// Lower/upper bounds from constructions, no search
    Bounds,
}

#[derive(Args)]
struct ForbArgs {
    /// Number of rows m
    #[arg(long)]
    m: usize,
    /// Family members (files, construction specs, or inline literals)
    #[arg(required = true)]
    family: Vec<String>,
    #[arg(long, value_enum, default_value_t = ForbMode::Exact)]
    mode: ForbMode,
    /// Give up (exit 3) after this many search nodes
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Give up (exit 3) after this much wall-clock time
    #[arg(long)]
    budget_seconds: Option<f64>,
    /// Search worker threads [default: machine parallelism]
    #[arg(long)]
    threads: Option<usize>,
    /// Write the extremal witness found by the exact search here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Extra candidate avoiders for the bounds-mode lower bound (repeatable)
    #[arg(long)]
    witness: Vec<String>,
    /// Emit the record as a JSON object
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: lemma-ak | thm-f1 | main-thm | code-construction | f38-gap | hypothesis | minimal-matrices
    suite: String,
    /// Emit one JSON object per claim
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(&args),
        Command::Contains(args) => cmd_contains(&args),
        Command::Forb(args) => cmd_forb(&args),
        Command::Verify(args) => cmd_verify(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

/// Turn a matrix argument into a matrix: an existing file is parsed as
/// `.bm`, a string containing `:` is built as a construction spec, and
/// anything else is read as an inline `/`-separated literal.
fn resolve_matrix(arg: &str) -> Result<BinaryMatrix> {
    if Path::new(arg).is_file() {
        let text =
            std::fs::read_to_string(arg).with_context(|| format!("reading `{arg}`"))?;
        return BinaryMatrix::parse_bm(&text).map_err(|e| anyhow!("parsing `{arg}`: {e}"));
    }
    if arg.contains(':') {
        let spec: ConstructionSpec = arg.parse()?;
        return match spec.build()? {
            Built::Matrix(mat) => Ok(mat),
            Built::Count(v) => bail!("`{arg}` evaluates to the number {v}, not a matrix"),
        };
    }
    BinaryMatrix::parse_inline(arg).map_err(|e| {
        anyhow!("`{arg}` is not a file, not a construction spec (no ':'), and fails as an inline literal: {e}")
    })
}

/// Quote a `key=value` value when it would not survive whitespace
/// splitting as-is.
fn kv(value: &str) -> String {
    if value.is_empty() || value.chars().any(|c| c.is_whitespace() || c == '"') {
        format!("{value:?}")
    } else {
        value.to_string()
    }
}

fn join_1based(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_gen(args: &GenArgs) -> Result<ExitCode> {
    let spec: ConstructionSpec = args.spec.parse()?;
    match spec.build()? {
        Built::Count(value) => {
            if let Some(path) = &args.out {
                std::fs::write(path, format!("{value}\n"))
                    .with_context(|| format!("writing `{}`", path.display()))?;
            }
            if args.json {
                println!(
                    "{}",
                    json!({"cmd": "gen", "spec": args.spec, "value": value.to_string()})
                );
            } else {
                println!("gen spec={} value={value}", kv(&args.spec));
            }
        }
        Built::Matrix(mat) => {
            let text = mat.to_bm();
            if let Some(path) = &args.out {
                std::fs::write(path, &text)
                    .with_context(|| format!("writing `{}`", path.display()))?;
            }
            let record = json!({
                "cmd": "gen",
                "spec": args.spec,
                "rows": mat.num_rows(),
                "cols": mat.num_cols(),
                "simple": mat.is_simple(),
            });
            if args.json {
                println!("{record}");
            } else {
                println!(
                    "gen spec={} rows={} cols={} simple={}",
                    kv(&args.spec),
                    mat.num_rows(),
                    mat.num_cols(),
                    mat.is_simple()
                );
            }
            if args.out.is_none() {
                print!("{text}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_contains(args: &ContainsArgs) -> Result<ExitCode> {
    let f = resolve_matrix(&args.f)?;
    let a = resolve_matrix(&args.a)?;
    match contains_configuration(&a, &f) {
        Some(witness) => {
            if args.json {
                println!(
                    "{}",
                    json!({
                        "cmd": "contains",
                        "result": "contained",
                        "rows": witness.row_map.iter().map(|r| r + 1).collect::<Vec<_>>(),
                        "cols": witness.column_assignment.iter().map(|c| c + 1).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!(
                    "contains result=contained rows={} cols={}",
                    join_1based(&witness.row_map),
                    join_1based(&witness.column_assignment)
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            if args.json {
                println!("{}", json!({"cmd": "contains", "result": "absent"}));
            } else {
                println!("contains result=absent");
            }
            Ok(ExitCode::from(EXIT_NEGATIVE))
        }
    }
}

fn machine_parallelism() -> usize {
    std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1)
}

fn cmd_forb(args: &ForbArgs) -> Result<ExitCode> {
    let family: Vec<BinaryMatrix> = args
        .family
        .iter()
        .map(|arg| resolve_matrix(arg))
        .collect::<Result<_>>()?;
    match args.mode {
        ForbMode::Exact => forb_exact(args, &family),
        ForbMode::Bounds => forb_bounds(args, &family),
    }
}

fn forb_exact(args: &ForbArgs, family: &[BinaryMatrix]) -> Result<ExitCode> {
    let max_duration = match args.budget_seconds {
        Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => bail!("--budget-seconds must be a non-negative number, got {s}"),
        None => None,
    };
    let threads = args.threads.unwrap_or_else(machine_parallelism);
    if threads == 0 {
        bail!("--threads must be at least 1");
    }
    let options = SearchOptions {
        budget: SearchBudget {
            max_nodes: args.budget_nodes,
            max_duration,
        },
        threads,
        ..SearchOptions::default()
    };
    let result = max_avoid_exact(args.m, family, &options)?;
    let status = match result.status {
        SearchStatus::Exact => "exact",
        SearchStatus::LowerBoundOnly => "lower-bound-only",
    };
    if let Some(path) = &args.out {
        std::fs::write(path, result.witness.to_bm())
            .with_context(|| format!("writing `{}`", path.display()))?;
    }
    if args.json {
        println!(
            "{}",
            json!({
                "cmd": "forb",
                "mode": "exact",
                "m": args.m,
                "value": result.value,
                "status": status,
                "nodes": result.stats.nodes,
                "elapsed_ms": result.stats.wall.as_millis() as u64,
            })
        );
    } else {
        println!(
            "forb m={} mode=exact value={} status={} nodes={} elapsed_ms={}",
            args.m,
            result.value,
            status,
            result.stats.nodes,
            result.stats.wall.as_millis()
        );
    }
    match result.status {
        SearchStatus::Exact => Ok(ExitCode::SUCCESS),
        SearchStatus::LowerBoundOnly => Ok(ExitCode::from(EXIT_BUDGET)),
    }
}

fn forb_bounds(args: &ForbArgs, family: &[BinaryMatrix]) -> Result<ExitCode> {
    let witnesses: Vec<BinaryMatrix> = args
        .witness
        .iter()
        .map(|arg| resolve_matrix(arg))
        .collect::<Result<_>>()?;
    let report = bounds_report(args.m, family, &witnesses)?;
    let status = if report.exact.is_some() { "exact" } else { "open" };
    if args.json {
        let mut record = json!({
            "cmd": "forb",
            "mode": "bounds",
            "m": report.m,
            "k": report.k,
            "status": status,
            "lower": report.lower.value.to_string(),
            "upper": report.upper.value.to_string(),
            "lower_provenance": report.lower.provenance,
            "upper_provenance": report.upper.provenance,
        });
        if let Some(exact) = &report.exact {
            record["value"] = json!(exact.to_string());
        }
        println!("{record}");
    } else {
        let value = match &report.exact {
            Some(exact) => format!(" value={exact}"),
            None => String::new(),
        };
        println!(
            "forb m={} mode=bounds k={} status={status}{value} lower={} upper={} lower_provenance={} upper_provenance={}",
            report.m,
            report.k,
            report.lower.value,
            report.upper.value,
            kv(&report.lower.provenance),
            kv(&report.upper.provenance)
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let report = run_suite(&args.suite)
        .with_context(|| format!("available suites: {}", SUITES.join(", ")))?;
    let failed = report.claims.iter().filter(|c| !c.pass).count();
    for claim in &report.claims {
        if args.json {
            println!(
                "{}",
                json!({
                    "cmd": "verify",
                    "suite": report.suite,
                    "claim": claim.id,
                    "anchor": claim.anchor,
                    "pass": claim.pass,
                    "details": claim.details,
                })
            );
        } else {
            println!(
                "claim suite={} id={} pass={} anchor={} details={}",
                report.suite,
                claim.id,
                claim.pass,
                kv(claim.anchor),
                kv(&claim.details)
            );
        }
    }
    if args.json {
        println!(
            "{}",
            json!({
                "cmd": "verify",
                "suite": report.suite,
                "claims": report.claims.len(),
                "failed": failed,
                "pass": report.passed(),
            })
        );
    } else {
        println!(
            "verify suite={} claims={} failed={failed} pass={}",
            report.suite,
            report.claims.len(),
            report.passed()
        );
    }
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_NEGATIVE))
    }
}

//! `hyperabc`: spectral radii, closed forms and the verification suite
//! from the command line.
//!
//! Exit status is 0 on success, 1 when `verify` or `closed-form --check`
//! finds a violated check, and 2 on any usage, input or solver error.

mod family;
mod output;

use clap::{Parser, Subcommand};
use family::{Source, SourceError};
use hyperabc::verify::{self, GridParams, CHECK_NAMES};
use hyperabc::{
    abc_index, closed_forms, spectral_radius, write_uhg, CheckResult, InitialVector, SolveOptions, Status,
    UniformHypergraph, Weighting,
};
use output::*;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "hyperabc", version, about = "ABC spectral radii of uniform hypergraphs")]
struct Cli {
    /// Print a single-line JSON record instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a hypergraph in UHG v1 format
    Gen {
        #[command(flatten)]
        source: Source,
    },
    /// Spectral radius of the adjacency, ABC or Randić tensor
    Rho {
        #[command(flatten)]
        source: Source,
        /// adjacency, abc or randic
        #[arg(long, short, default_value = "abc")]
        weighting: Weighting,
        /// Relative width of the certified bracket at which to stop
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 200_000)]
        max_iters: usize,
        /// Start from a seeded random vector instead of the all-ones vector
        #[arg(long)]
        start_seed: Option<u64>,
    },
    /// ABC index: sum over edges of omega(e)^(1/k), divided by (k-1)!
    Index {
        #[command(flatten)]
        source: Source,
    },
    /// Evaluate a named closed form
    ClosedForm {
        /// One of the names printed by `closed-form list`
        name: String,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Also solve the generating hypergraph and compare
        #[arg(long)]
        check: bool,
    },
    /// Run the verification suite, or one named check
    Verify {
        /// `all` or a check name
        #[arg(default_value = "all")]
        check: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
    },
    /// Structure report: connectivity, kind, linearity, girth, degrees
    Classify {
        #[command(flatten)]
        source: Source,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gen { .. } => "gen",
            Command::Rho { .. } => "rho",
            Command::Index { .. } => "index",
            Command::ClosedForm { .. } => "closed-form",
            Command::Verify { .. } => "verify",
            Command::Classify { .. } => "classify",
        }
    }
}

struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        Self { kind, message: message.to_string() }
    }
}

impl From<SourceError> for Failure {
    fn from(e: SourceError) -> Self {
        let kind = match e {
            SourceError::Usage(_) => "usage",
            SourceError::Io(_) => "io",
            SourceError::Parse(_) => "parse",
            SourceError::Gen(_) => "params",
        };
        Failure::new(kind, e)
    }
}

fn shape(g: &UniformHypergraph) -> Shape {
    Shape { k: g.k(), n: g.n(), m: g.m() }
}

fn weighting_name(w: Weighting) -> &'static str {
    match w {
        Weighting::Adjacency => "adjacency",
        Weighting::Abc => "abc",
        Weighting::Randic => "randic",
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Holds => "holds",
        Status::EqualityAttained => "equality-attained",
        Status::Violated => "violated",
        Status::Inconclusive => "inconclusive",
    }
}

fn print_check(r: &CheckResult) {
    println!("{:<18} {}  {}", status_word(r.status), r.name, r.detail);
}

/// Runs every check on its own thread; the result is sorted by name.
fn verify_all(p: &GridParams) -> Result<Vec<CheckResult>, hyperabc::VerifyError> {
    let parts: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = CHECK_NAMES.iter().map(|name| s.spawn(move || verify::run_check(name, p))).collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    let mut out = Vec::new();
    for part in parts {
        out.extend(part?);
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

fn run(cmd: Command, json: bool) -> Result<ExitCode, Failure> {
    match cmd {
        Command::Gen { source } => {
            let g = source.load()?;
            if json {
                print_json(&GenRecord { command: "gen", shape: shape(&g), edges: g.edges().to_vec() });
            } else {
                print!("{}", write_uhg(&g));
            }
        }
        Command::Rho { source, weighting, tol, max_iters, start_seed } => {
            let g = source.load()?;
            let initial = start_seed.map_or(InitialVector::Uniform, InitialVector::SeededRandom);
            let opts = SolveOptions { tol, max_iters, initial, ..SolveOptions::default() };
            let est = spectral_radius(&g, weighting, &opts).map_err(|e| Failure::new("solver", e))?;
            if json {
                print_json(&RhoRecord::new(shape(&g), weighting_name(weighting), &est));
            } else {
                println!("rho = {:.16e}", est.rho);
                println!("bracket = [{:.16e}, {:.16e}]", est.lower, est.upper);
                println!("iterations = {}, residual = {:.3e}", est.iters, est.residual);
            }
        }
        Command::Index { source } => {
            let g = source.load()?;
            let value = abc_index(&g);
            if json {
                print_json(&IndexRecord { command: "index", shape: shape(&g), abc_index: F17(value) });
            } else {
                println!("{value:.16e}");
            }
        }
        Command::ClosedForm { name, m, k, check } => {
            if name == "list" {
                if json {
                    print_json(&serde_json::json!({ "command": "closed-form", "names": closed_forms::NAMES }));
                } else {
                    closed_forms::NAMES.iter().for_each(|n| println!("{n}"));
                }
                return Ok(ExitCode::SUCCESS);
            }
            if !closed_forms::NAMES.contains(&name.as_str()) {
                return Err(Failure::new("usage", format!("unknown closed form `{name}`; try `closed-form list`")));
            }
            let value = closed_forms::by_name(&name, m, k).map_err(|e| Failure::new("params", e))?;
            let result = if check {
                Some(verify::check_closed_form(&name, m, k).map_err(|e| Failure::new("params", e))?)
            } else {
                None
            };
            if json {
                print_json(&ClosedFormRecord {
                    command: "closed-form",
                    name,
                    m,
                    k,
                    value: F17(value),
                    check: result.as_ref().map(CheckRecord::from),
                });
            } else {
                println!("{value:.16e}");
                if let Some(r) = &result {
                    print_check(r);
                }
            }
            if result.is_some_and(|r| r.status == Status::Violated) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Verify { check, m, k, g } => {
            let params = GridParams { m, k, g };
            let results = if check == "all" {
                verify_all(&params)
            } else if CHECK_NAMES.contains(&check.as_str()) {
                verify::run_check(&check, &params)
            } else {
                return Err(Failure::new(
                    "usage",
                    format!("unknown check `{check}`; expected `all` or one of {}", CHECK_NAMES.join(", ")),
                ));
            }
            .map_err(|e| Failure::new("params", e))?;
            let summary = Summary::of(&results);
            let violated = summary.violated > 0;
            if json {
                print_json(&VerifyRecord {
                    command: "verify",
                    check,
                    m,
                    k,
                    g,
                    summary,
                    results: results.iter().map(CheckRecord::from).collect(),
                });
            } else {
                results.iter().for_each(print_check);
                println!(
                    "{} checks: {} holds, {} equality, {} violated, {} inconclusive",
                    summary.total, summary.holds, summary.equality_attained, summary.violated, summary.inconclusive
                );
            }
            if violated {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Classify { source } => {
            let g = source.load()?;
            let report = g.classify();
            let d = g.degrees();
            let code = g.canonical_code().ok().map(|c| c.to_hex());
            if json {
                print_json(&ClassifyRecord {
                    command: "classify",
                    shape: shape(&g),
                    report,
                    max_degree: d.max_degree,
                    min_degree: d.min_degree,
                    degrees: d.degrees,
                    canonical_code: code,
                });
            } else {
                println!("k = {}, n = {}, m = {}", g.k(), g.n(), g.m());
                println!("connected: {}", report.connected);
                println!("kind: {:?}", report.kind);
                println!("linear: {}", report.linear);
                println!("girth: {:?}", report.girth);
                println!("power hypertree: {:?}", report.power_hypertree);
                println!("degrees: max {}, min {}", d.max_degree, d.min_degree);
                if let Some(c) = code {
                    println!("canonical code: {c}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let json = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !json || !e.use_stderr() => e.exit(),
        Err(e) => {
            let message = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
            print_json(&ErrorRecord { command: "error", subcommand: None, kind: "usage", message });
            return ExitCode::from(2);
        }
    };
    let command = cli.command.name();
    match run(cli.command, cli.json) {
        Ok(code) => code,
        Err(f) => {
            if cli.json {
                print_json(&ErrorRecord {
                    command: "error",
                    subcommand: Some(command),
                    kind: f.kind,
                    message: f.message,
                });
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(2)
        }
    }
}

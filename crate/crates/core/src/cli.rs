//! Command-line front end. Every subcommand reads JSON (or symbol text),
//! writes JSON to stdout and exits with 0 on success, 1 with
//! `{"error": …}` on a computation error and 2 on malformed input.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::abelian::{abelian_cover, abelian_covers_of_degree, AbelianChoice, AbelianCoverReport, FourTuple};
use crate::corpus::{random_targets, TargetParams, DEFAULT_SEED};
use crate::lift::{lift_cover, FrameRep};
use crate::symbol::{format_rational, AbelianGroup, SeifertSymbol};
use crate::universal::{plan_theorem45, verify_plan, CoveringPlan};

#[derive(Debug, Parser)]
#[command(name = "seifert", about = "Branched covers of Seifert fibered spaces", version)]
pub struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical form of a symbol.
    Normalize { symbol: String },
    /// Euler number as "p/q".
    Euler { symbol: String },
    /// First homology group.
    H1 { symbol: String },
    /// Whether two symbols describe the same fibered manifold.
    Equivalent { first: String, second: String },
    /// Lift a frame representation (JSON or path) to its cover.
    Lift { rep: String },
    /// All Abelian covers of degree n of (S²×S¹, t_{α,β}).
    AbelianEnumerate {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        beta: i64,
    },
    /// One Abelian cover, from a 4-tuple or a cyclic degree.
    AbelianCover {
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        beta: i64,
        /// a1,a2,delta,i0
        #[arg(long, conflicts_with = "cyclic", required_unless_present = "cyclic")]
        tuple: Option<String>,
        #[arg(long)]
        cyclic: Option<u64>,
    },
    /// Covering plan from the target down to (S²×S¹, t_{α,β}).
    Construct {
        #[arg(long)]
        target: String,
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        beta: i64,
    },
    /// Check a covering plan (JSON or path).
    Verify { plan: String },
    /// Construct and verify plans for seeded random targets.
    Corpus {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        beta: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// Failure of a subcommand, with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Exit code 2.
    Malformed(String),
    /// Exit code 1, with an optional JSON payload.
    Module(String, Option<Value>),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Malformed(_) => 2,
            Failure::Module(..) => 1,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Malformed(m) => json!({ "error": m, "kind": "malformed_input" }),
            Failure::Module(m, None) => json!({ "error": m }),
            Failure::Module(m, Some(extra)) => json!({ "error": m, "details": extra }),
        }
    }
}

fn module<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Module(e.to_string(), None)
}

/// Reads an argument that is inline text, `-` for stdin, or a file path.
fn read_input(arg: &str) -> Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') || trimmed.starts_with('(') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Malformed(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(arg).map_err(|e| Failure::Malformed(format!("{arg}: {e}")))
}

/// A symbol as JSON or in the text form `(Oo,g; b/a, …)`.
pub fn parse_symbol(arg: &str) -> Result<SeifertSymbol, Failure> {
    let text = read_input(arg)?;
    if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).map_err(|e| Failure::Malformed(e.to_string()))
    } else {
        text.trim().parse().map_err(|e: crate::symbol::SymbolError| Failure::Malformed(e.to_string()))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, Failure> {
    let text = read_input(arg)?;
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(e.to_string()))
}

fn parse_tuple(s: &str) -> Result<FourTuple, Failure> {
    let parts: Vec<u64> = s
        .split(',')
        .map(|p| p.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Malformed(format!("tuple {s}: {e}")))?;
    let [a1, a2, delta, i0] = parts[..] else {
        return Err(Failure::Malformed(format!("tuple {s} needs four entries")));
    };
    FourTuple::new(a1, a2, delta, i0).map_err(|e| Failure::Malformed(e.to_string()))
}

/// Abelian report with the Smith normal form homology next to the closed form.
#[derive(Debug, Serialize)]
struct AbelianOutput {
    #[serde(flatten)]
    report: AbelianCoverReport,
    h1_snf: AbelianGroup,
}

impl From<AbelianCoverReport> for AbelianOutput {
    fn from(report: AbelianCoverReport) -> Self {
        let h1_snf = report.cover_symbol.h1();
        AbelianOutput { report, h1_snf }
    }
}

#[derive(Debug, Serialize)]
struct CorpusEntry {
    target: SeifertSymbol,
    steps: usize,
    total_degree: u64,
    knot_preimage_count: usize,
    passed: bool,
    error: Option<String>,
}

fn corpus_entry(target: SeifertSymbol, alpha: i64, beta: i64) -> CorpusEntry {
    match plan_theorem45(&target, alpha, beta) {
        Ok(plan) => {
            let report = verify_plan(&plan);
            CorpusEntry {
                steps: plan.steps.len(),
                total_degree: plan.total_degree,
                knot_preimage_count: report.knot_preimage_count,
                passed: report.passed,
                error: None,
                target,
            }
        }
        Err(e) => CorpusEntry {
            target,
            steps: 0,
            total_degree: 0,
            knot_preimage_count: 0,
            passed: false,
            error: Some(e.to_string()),
        },
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

/// Runs one parsed command and returns its JSON result.
pub fn execute(command: &Command) -> Result<Value, Failure> {
    match command {
        Command::Normalize { symbol } => Ok(to_value(&parse_symbol(symbol)?.canonicalize())),
        Command::Euler { symbol } => {
            Ok(json!({ "euler": format_rational(&parse_symbol(symbol)?.euler_number()) }))
        }
        Command::H1 { symbol } => Ok(to_value(&parse_symbol(symbol)?.h1())),
        Command::Equivalent { first, second } => {
            Ok(json!({ "equivalent": parse_symbol(first)?.equivalent(&parse_symbol(second)?) }))
        }
        Command::Lift { rep } => {
            let rep: FrameRep = parse_json(rep)?;
            Ok(to_value(&lift_cover(&rep).map_err(module)?))
        }
        Command::AbelianEnumerate { n, alpha, beta } => {
            let reports = abelian_covers_of_degree(*alpha, *beta, *n).map_err(module)?;
            let out: Vec<AbelianOutput> = reports.into_iter().map(Into::into).collect();
            Ok(to_value(&out))
        }
        Command::AbelianCover { alpha, beta, tuple, cyclic } => {
            let choice = match (tuple, cyclic) {
                (Some(t), _) => AbelianChoice::Tuple(parse_tuple(t)?),
                (None, Some(n)) => AbelianChoice::Cyclic(*n),
                (None, None) => return Err(Failure::Malformed("give --tuple or --cyclic".into())),
            };
            let report = abelian_cover(*alpha, *beta, choice).map_err(module)?;
            Ok(to_value(&AbelianOutput::from(report)))
        }
        Command::Construct { target, alpha, beta } => {
            let target = parse_symbol(target)?;
            Ok(to_value(&plan_theorem45(&target, *alpha, *beta).map_err(module)?))
        }
        Command::Verify { plan } => {
            let plan: CoveringPlan = parse_json(plan)?;
            let report = verify_plan(&plan);
            let value = to_value(&report);
            if report.passed {
                Ok(value)
            } else {
                Err(Failure::Module("plan verification failed".into(), Some(value)))
            }
        }
        Command::Corpus { seed, count, alpha, beta, jobs } => {
            let targets = random_targets(*seed, *count, &TargetParams::default());
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads((*jobs).max(1))
                .build()
                .map_err(module)?;
            // par_iter + collect keeps input order
            let entries: Vec<CorpusEntry> =
                pool.install(|| targets.into_par_iter().map(|t| corpus_entry(t, *alpha, *beta)).collect());
            let passed = entries.iter().filter(|e| e.passed).count();
            Ok(json!({ "seed": seed, "alpha": alpha, "beta": beta, "passed": passed, "entries": to_value(&entries) }))
        }
    }
}

/// Parses `args`, runs the command and writes the JSON to `out`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let (value, code) = match execute(&cli.command) {
        Ok(v) => (v, 0),
        Err(f) => (f.to_json(), f.exit_code()),
    };
    let mut text = serde_json::to_string_pretty(&value).expect("json values serialize");
    text.push('\n');
    match (&cli.out, code) {
        (Some(path), 0) => {
            if let Err(e) = fs::write(path, &text) {
                let _ = writeln!(out, "{}", json!({ "error": format!("{}: {e}", path.display()) }));
                return 1;
            }
        }
        _ => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    code
}

/// Entry point of the `seifert` binary.
pub fn run() -> std::process::ExitCode {
    let code = run_with(std::env::args_os(), &mut io::stdout().lock());
    std::process::ExitCode::from(code as u8)
}

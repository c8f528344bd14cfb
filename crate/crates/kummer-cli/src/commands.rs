//! Subcommand implementations and the exit-code contract.
//!
//! Exit codes: `0` for a Kummer verdict or plain success, `1` for a
//! not-Kummer verdict (or a degeneration defect, or a missing index
//! witness), `64` for usage errors, `65` for structurally invalid data.
//! In JSON mode the verdict is always present in the payload as well,
//! never conveyed by the exit code alone.

use crate::element_file;
use crate::report::{Format, Report, Witness};
use clap::{Parser, Subcommand, ValueEnum};
use kummer_core::{
    admissible_triple, classify_triple, degeneration_report, dim3_residue_witness,
    enumerate_maximal, index_witness, is_kummer_space_power, is_kummer_space_trace, ClassifyError,
    EnumerationMode, MonomialSpace, PrimeCtx, Vec2p,
};
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use thiserror::Error;

/// Exit code for command-line usage errors.
pub const EXIT_USAGE: u8 = 64;
/// Exit code for structurally invalid input data.
pub const EXIT_DATA: u8 = 65;

/// A failure mapped onto the exit-code contract.
#[derive(Debug, Error)]
pub enum CliError {
    /// Invalid flags or flag values: exit code 64.
    #[error("{0}")]
    Usage(String),
    /// Structurally invalid input data: exit code 65.
    #[error("{0}")]
    Data(String),
}

impl CliError {
    /// The exit code this error maps to.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
        }
    }
}

/// Which symbolic Kummer criterion to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Criterion {
    /// Vanishing traces of all symmetric products of weight below p.
    Trace,
    /// Centrality of all symmetric products of weight exactly p.
    Power,
}

/// Exact-arithmetic checks and certified classification of Kummer spaces
/// in symbol algebras of prime degree.
#[derive(Debug, Parser)]
#[command(name = "kummer", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a set of exponent vectors spans a Kummer space of
    /// monomials, reporting a minimal zero-sum witness when it does not.
    CheckMonomial {
        /// Prime degree of the algebra (an odd prime ≤ 31).
        #[arg(long)]
        p: u32,
        /// Exponent vectors as "a1,b1;a2,b2;..."; whitespace is ignored.
        #[arg(long)]
        set: String,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide whether the elements in a JSON file span a Kummer space,
    /// using a symbolic criterion over exact cyclotomic arithmetic.
    CheckSymbolic {
        /// Prime degree of the algebra (an odd prime ≤ 31).
        #[arg(long)]
        p: u32,
        /// Path to an element file (see the file-format documentation).
        #[arg(long)]
        input: PathBuf,
        /// Which criterion to evaluate.
        #[arg(long, value_enum)]
        criterion: Criterion,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Enumerate all maximal Kummer spaces of monomials, certify each as
    /// standard, and write the certified list to a file.
    Classify {
        /// Prime degree: ≤ 7 exhaustively, ≤ 13 with --symmetry.
        #[arg(long)]
        p: u32,
        /// Output file for the certified JSON list.
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; 0 selects one per available core.
        #[arg(long, env = "KUMMER_WORKERS", default_value_t = 0)]
        workers: usize,
        /// Seed the search with a basis and expand by the linear-group
        /// action instead of enumerating every line exhaustively.
        #[arg(long)]
        symmetry: bool,
    },
    /// Print a CSV table classifying the triple {x, y, x^a y^b} for every
    /// a, b in [1, p).
    TripleTable {
        /// Prime degree of the algebra (an odd prime ≤ 31).
        #[arg(long)]
        p: u32,
    },
    /// Verify that every admissible exponent triple has an index witness.
    IndexVerify {
        /// Prime degree of the algebra (an odd prime ≤ 31).
        #[arg(long)]
        p: u32,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Degenerate a basis from a JSON file to its set of leading
    /// monomials and check the dimension bound.
    Degenerate {
        /// Prime degree of the algebra (an odd prime ≤ 31).
        #[arg(long)]
        p: u32,
        /// Path to an element file (see the file-format documentation).
        #[arg(long)]
        input: PathBuf,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

impl Cli {
    /// Runs the selected subcommand to an exit code, writing its report
    /// to stdout.
    pub fn run(self) -> Result<ExitCode, CliError> {
        match self.command {
            Command::CheckMonomial { p, set, format } => cmd_check_monomial(p, &set, format),
            Command::CheckSymbolic {
                p,
                input,
                criterion,
                format,
            } => cmd_check_symbolic(p, &input, criterion, format),
            Command::Classify {
                p,
                out,
                workers,
                symmetry,
            } => cmd_classify(p, &out, workers, symmetry),
            Command::TripleTable { p } => cmd_triple_table(p),
            Command::IndexVerify { p, format } => cmd_index_verify(p, format),
            Command::Degenerate { p, input, format } => cmd_degenerate(p, &input, format),
        }
    }
}

fn prime(p: u32) -> Result<PrimeCtx, CliError> {
    PrimeCtx::new(p).map_err(|err| CliError::Usage(format!("--p {p}: {err}")))
}

fn data_error(err: impl std::fmt::Display) -> CliError {
    CliError::Data(err.to_string())
}

/// Exit code carrying a binary verdict: 0 for Kummer, 1 for not Kummer.
fn verdict_exit(positive: bool) -> ExitCode {
    if positive {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit(report: &Report, format: Format) {
    print!("{}", report.render(format));
}

/// Parses the `--set` grammar: semicolon-separated comma pairs with
/// optional whitespace anywhere. Syntax errors are usage errors; the
/// semantic validity of the vectors is checked later.
fn parse_set(ctx: PrimeCtx, set: &str) -> Result<Vec<Vec2p>, CliError> {
    let entry_error = |entry: &str| {
        CliError::Usage(format!(
            "invalid --set entry {entry:?}: expected integer pairs \"a,b\" separated by ';'"
        ))
    };
    let mut vectors = Vec::new();
    for entry in set.split(';') {
        let entry = entry.trim();
        if entry.is_empty() {
            continue;
        }
        let (a, b) = entry.split_once(',').ok_or_else(|| entry_error(entry))?;
        let a: i64 = a.trim().parse().map_err(|_| entry_error(entry))?;
        let b: i64 = b.trim().parse().map_err(|_| entry_error(entry))?;
        vectors.push(Vec2p::new(ctx, a, b));
    }
    if vectors.is_empty() {
        return Err(CliError::Usage(
            "--set must contain at least one vector".into(),
        ));
    }
    Ok(vectors)
}

fn cmd_check_monomial(p: u32, set: &str, format: Format) -> Result<ExitCode, CliError> {
    let ctx = prime(p)?;
    let vectors = parse_set(ctx, set)?;
    let start = Instant::now();
    let space = MonomialSpace::new(ctx, &vectors).map_err(data_error)?;
    let verdict = space.verdict();
    let mut report = Report::new(
        p,
        "check-monomial",
        if verdict.is_kummer() {
            "kummer"
        } else {
            "not_kummer"
        },
    );
    report.witness = verdict.witness().cloned().map(Witness::ZeroSum);
    report.timing_ms = start.elapsed().as_millis();
    emit(&report, format);
    Ok(verdict_exit(verdict.is_kummer()))
}

fn cmd_check_symbolic(
    p: u32,
    input: &std::path::Path,
    criterion: Criterion,
    format: Format,
) -> Result<ExitCode, CliError> {
    let ctx = prime(p)?;
    let basis = element_file::load_elements(input, ctx).map_err(data_error)?;
    let start = Instant::now();
    let verdict = match criterion {
        Criterion::Trace => is_kummer_space_trace(&basis),
        Criterion::Power => is_kummer_space_power(&basis),
    }
    .map_err(data_error)?;
    let mut report = Report::new(
        p,
        "check-symbolic",
        if verdict.is_kummer() {
            "kummer"
        } else {
            "not_kummer"
        },
    );
    report.witness = verdict.witness().cloned().map(Witness::Tuple);
    report.timing_ms = start.elapsed().as_millis();
    emit(&report, format);
    Ok(verdict_exit(verdict.is_kummer()))
}

fn cmd_classify(
    p: u32,
    out: &std::path::Path,
    workers: usize,
    symmetry: bool,
) -> Result<ExitCode, CliError> {
    let ctx = prime(p)?;
    let mode = if symmetry {
        EnumerationMode::SymmetryReduced
    } else {
        EnumerationMode::Exhaustive
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|err| CliError::Usage(format!("--workers {workers}: {err}")))?;
    let spaces = pool
        .install(|| enumerate_maximal(ctx, mode))
        .map_err(|err| match err {
            ClassifyError::UnsupportedPrime { .. } => CliError::Usage(err.to_string()),
            other => CliError::Data(other.to_string()),
        })?;
    let entries: Vec<Value> = spaces
        .iter()
        .map(|(space, certificate)| {
            let vectors: Vec<[u32; 2]> = space.vectors().iter().map(|v| [v.a(), v.b()]).collect();
            json!({
                "certificate": {
                    "k": certificate.k(),
                    "u": [certificate.u().a(), certificate.u().b()],
                },
                "space": vectors,
            })
        })
        .collect();
    let mut payload = serde_json::to_string(&Value::Array(entries))
        .expect("classification serialization cannot fail");
    payload.push('\n');
    std::fs::write(out, payload)
        .map_err(|err| CliError::Data(format!("cannot write {}: {err}", out.display())))?;
    let max_dimension = spaces
        .iter()
        .map(|(space, _)| space.dimension())
        .max()
        .unwrap_or(0);
    println!(
        "p = {p}: {} maximal Kummer spaces of monomials, maximum dimension {max_dimension}",
        spaces.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_triple_table(p: u32) -> Result<ExitCode, CliError> {
    let ctx = prime(p)?;
    let stdout = std::io::stdout().lock();
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(stdout);
    let io_error = |err: csv::Error| CliError::Data(format!("cannot write CSV: {err}"));
    writer
        .write_record([
            "a",
            "b",
            "verdict",
            "matched_condition",
            "residue_witness_k",
        ])
        .map_err(io_error)?;
    let v1 = Vec2p::new(ctx, 1, 0);
    let v2 = Vec2p::new(ctx, 0, 1);
    for a in 1..p {
        for b in 1..p {
            let v3 = Vec2p::new(ctx, i64::from(a), i64::from(b));
            let verdict = classify_triple(&v1, &v2, &v3).map_err(data_error)?;
            let (token, condition) = match verdict.condition() {
                Some(condition) => ("kummer", condition.to_string()),
                None => ("not_kummer", "none".to_string()),
            };
            let witness = dim3_residue_witness(ctx, i64::from(a), i64::from(b))
                .map_err(data_error)?
                .map(|k| k.to_string())
                .unwrap_or_default();
            writer
                .write_record([
                    a.to_string(),
                    b.to_string(),
                    token.to_string(),
                    condition,
                    witness,
                ])
                .map_err(io_error)?;
        }
    }
    writer
        .flush()
        .map_err(|err| CliError::Data(format!("cannot write CSV: {err}")))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_index_verify(p: u32, format: Format) -> Result<ExitCode, CliError> {
    let ctx = prime(p)?;
    let start = Instant::now();
    let mut all_witnessed = true;
    for a in 1..i64::from(p) {
        for b in 1..i64::from(p) {
            for c in 1..i64::from(p) {
                if admissible_triple(ctx, a, b, c) && index_witness(ctx, a, b, c).is_none() {
                    all_witnessed = false;
                }
            }
        }
    }
    let mut report = Report::new(
        p,
        "index-verify",
        if all_witnessed {
            "all_witnessed"
        } else {
            "missing_witness"
        },
    );
    report.timing_ms = start.elapsed().as_millis();
    emit(&report, format);
    Ok(verdict_exit(all_witnessed))
}

fn cmd_degenerate(p: u32, input: &std::path::Path, format: Format) -> Result<ExitCode, CliError> {
    let ctx = prime(p)?;
    let basis = element_file::load_elements(input, ctx).map_err(data_error)?;
    let start = Instant::now();
    let outcome = degeneration_report(ctx, &basis).map_err(data_error)?;
    let verdict = if outcome.mp_defect() {
        "defect"
    } else if outcome.degeneration_verdict().is_kummer() {
        "kummer"
    } else {
        "not_kummer"
    };
    let mut report = Report::new(p, "degenerate", verdict);
    report.dimension = Some(outcome.dimension());
    report.timing_ms = start.elapsed().as_millis();
    emit(&report, format);
    Ok(verdict_exit(verdict == "kummer"))
}

/// Entry point shared by `main` and the integration tests: parses
/// arguments from the process environment and runs the subcommand.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests print to stdout and succeed; real
            // parse failures print to stderr and exit with the usage code.
            let failed = err.use_stderr();
            let _ = err.print();
            return if failed {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.run() {
        Ok(code) => code,
        Err(err) => {
            let mut stderr = std::io::stderr().lock();
            let _ = writeln!(stderr, "error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

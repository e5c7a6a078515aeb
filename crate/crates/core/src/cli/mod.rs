//! `spectral-forge <command> --job <file> [--out <file>] [--latex]
//! [--orientation y|x] [--numeric-checks]`.
//!
//! Results are canonical JSON (sorted keys, rationals as `"p/q"`) on
//! stdout or in `--out`. Errors are one JSON object on stderr and the
//! process exits with the code of [`Error::exit_code`]; a command that
//! ran but whose checks failed exits with 1.

pub mod commands;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::curve::Orientation;
use crate::error::{Error, Result};
use crate::io::JobSpec;

#[derive(Parser, Debug)]
#[command(name = "spectral-forge", version, about = "Exact Lax matrices from spectral curves and divisors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrientationArg {
    Y,
    X,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// JSON job file.
    #[arg(long)]
    pub job: PathBuf,
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also emit LaTeX (next to `--out` with extension `.tex`, or alone on stdout).
    #[arg(long)]
    pub latex: bool,
    #[arg(long, value_enum)]
    pub orientation: Option<OrientationArg>,
    /// Add floating-point identity checks at sample points.
    #[arg(long)]
    pub numeric_checks: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rebuild L(x) by the residue formula.
    Reconstruct(CommonArgs),
    /// Check a matrix file against the job's curve.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Matrix artifact (output of `reconstruct`).
        #[arg(long)]
        matrix: PathBuf,
        /// Matrix for the target divisor, checked for `P L = L~ P`.
        #[arg(long, requires = "transition")]
        target_matrix: Option<PathBuf>,
        /// Transition matrix artifact (output of `change-divisor`).
        #[arg(long, requires = "target_matrix")]
        transition: Option<PathBuf>,
    },
    /// Kernel values, Brill-Noether data and residues.
    Kernel(CommonArgs),
    /// Normalized holomorphic and second-kind differentials.
    Differentials(CommonArgs),
    /// Transition matrix to the job's `target_divisor`.
    ChangeDivisor(CommonArgs),
    /// Spectral projectors at the job's points.
    Projector(CommonArgs),
    /// The full invariant suite.
    Selftest(CommonArgs),
}

/// What a command produced.
pub struct Outcome {
    pub json: Value,
    pub latex: Option<String>,
    pub pass: bool,
}

impl CommonArgs {
    pub fn orientation(&self) -> Option<Orientation> {
        self.orientation.map(|o| match o {
            OrientationArg::Y => Orientation::Y,
            OrientationArg::X => Orientation::X,
        })
    }

    pub fn job(&self) -> Result<JobSpec> {
        JobSpec::load(&self.job)
    }
}

pub fn execute(command: &Command) -> Result<(Outcome, &CommonArgs)> {
    Ok(match command {
        Command::Reconstruct(c) => (commands::reconstruct(c)?, c),
        Command::Verify { common, matrix, target_matrix, transition } => {
            let pair = target_matrix.as_deref().zip(transition.as_deref());
            (commands::verify(common, matrix, pair)?, common)
        }
        Command::Kernel(c) => (commands::kernel(c)?, c),
        Command::Differentials(c) => (commands::differentials(c)?, c),
        Command::ChangeDivisor(c) => (commands::change_divisor(c)?, c),
        Command::Projector(c) => (commands::projector(c)?, c),
        Command::Selftest(c) => (commands::selftest(c)?, c),
    })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display())))
}

fn emit(outcome: &Outcome, args: &CommonArgs) -> Result<()> {
    let text = serde_json::to_string_pretty(&outcome.json).map_err(|e| Error::Internal(e.to_string()))? + "\n";
    match (&args.out, args.latex.then_some(outcome.latex.as_ref()).flatten()) {
        (Some(out), latex) => {
            write_file(out, &text)?;
            if let Some(tex) = latex {
                write_file(&out.with_extension("tex"), tex)?;
            }
        }
        (None, Some(tex)) => print!("{tex}"),
        (None, None) => print!("{text}"),
    }
    Ok(())
}

/// Structured error for stderr.
pub fn error_json(e: &Error) -> Value {
    json!({ "error": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() })
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command).and_then(|(o, args)| emit(&o, args).map(|_| o.pass)) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("{}", error_json(&e));
            e.exit_code()
        }
    }
}

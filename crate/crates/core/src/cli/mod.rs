//! Command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 3 unachievable target,
//! 4 numerical convergence failure.

mod format;
mod plot;
mod report;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::inverse::{solve_w_for_area, solve_w_for_volume};
use crate::quadrature::DEFAULT_TOL;

pub use format::{canonical_json, round_sig};
pub use report::ShapeReport;

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_UNACHIEVABLE: u8 = 3;
pub const EXIT_CONVERGENCE: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "eggshape",
    version,
    about = "Area, volume and surface of Hügelschäffer eggs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuantityArg {
    Area,
    Volume,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one shape
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, allow_negative_numbers = true)]
        w: f64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Model areas for a CSV of measured profiles (columns L, B, w, A)
    Table {
        /// CSV file; the bundled sewer table is used when omitted
        path: Option<PathBuf>,
        /// Column mapping override, e.g. `--column L=length`
        #[arg(long = "column", value_name = "KEY=HEADER")]
        columns: Vec<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Recover w from a target area or volume
    Solve {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, value_enum)]
        quantity: QuantityArg,
        #[arg(long, allow_negative_numbers = true)]
        target: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Write the curve as SVG
    Plot {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, allow_negative_numbers = true)]
        w: f64,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Reproduce the worked examples and report pass/fail
    Examples,
}

/// Error carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::OutOfRange { .. } => EXIT_UNACHIEVABLE,
            Error::Convergence { .. }
            | Error::SurfaceMismatch { .. }
            | Error::RootFinding(_)
            | Error::Ambiguous { .. } => EXIT_CONVERGENCE,
            _ => EXIT_INPUT,
        };
        let message = match &e {
            Error::OutOfRange { target, lo, hi } => {
                format!("target {target} is not achievable; achievable range is ({lo}, {hi})")
            }
            _ => e.to_string(),
        };
        Self { code, message }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Eval {
            a,
            b,
            w,
            tol,
            format,
        } => {
            let report = ShapeReport::compute(a, b, w, tol)?;
            match format {
                Format::Json => writeln!(out, "{}", canonical_json(&report.to_json()))?,
                Format::Table => write!(out, "{}", report.to_table())?,
            }
        }
        Command::Table {
            path,
            columns,
            format,
        } => {
            let batch = table::run(path.as_deref(), &columns)?;
            for warning in &batch.warnings {
                eprintln!("warning: {warning}");
            }
            match format {
                Format::Json => writeln!(out, "{}", canonical_json(&batch.to_json()))?,
                Format::Table => write!(out, "{}", batch.to_table())?,
            }
        }
        Command::Solve {
            a,
            b,
            quantity,
            target,
            tol,
            format,
        } => {
            let report = match quantity {
                QuantityArg::Area => solve_w_for_area(a, b, target, tol)?,
                QuantityArg::Volume => solve_w_for_volume(a, b, target, tol)?,
            };
            match format {
                Format::Json => writeln!(out, "{}", canonical_json(&report::solve_json(&report)))?,
                Format::Table => write!(out, "{}", report::solve_table(&report))?,
            }
            if !report.converged {
                return Err(CliError {
                    code: EXIT_CONVERGENCE,
                    message: format!("residual {} above tolerance", report.residual),
                });
            }
        }
        Command::Plot {
            a,
            b,
            w,
            samples,
            out: path,
        } => {
            let svg = plot::render(a, b, w, samples)?;
            std::fs::write(&path, svg)
                .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
        }
        Command::Examples => report::examples(out)?,
    }
    Ok(())
}

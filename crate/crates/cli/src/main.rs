//! `powergraph`: closed-form counts for cyclic groups, catalog verification
//! and bound scans.
//!
//! Exit status: 0 when everything verified, 1 when a check produced a
//! counterexample, 2 for usage, parse or I/O errors.

mod bounds;
mod formulas;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "powergraph", version, about = "Power graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Divisor sums and power graph edge counts of Z_n.
    Formulas {
        /// 1 <= N <= 2^31
        n: u64,
    },
    /// Compare every group of order N in a catalog against Z_n.
    Verify(VerifyArgs),
    /// Scan an inclusive range A..B with one of eq7, eq8, phi-lower.
    Bounds(BoundsArgs),
    /// Print the undirected power graph of a Cayley table file as "u v" lines.
    Edges {
        file: PathBuf,
    },
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Group order.
    pub n: usize,
    /// Built-in family constructors (the default).
    #[arg(long, conflicts_with = "complete")]
    pub families: bool,
    /// Every isomorphism class; only for N <= 15.
    #[arg(long)]
    pub complete: bool,
    /// Cayley table file; repeatable. Without --families or --complete only
    /// Z_n is added from the built-ins.
    #[arg(long = "file", value_name = "PATH")]
    pub files: Vec<PathBuf>,
    /// Write the report as JSON.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write the aligned-column text report.
    #[arg(long, value_name = "PATH")]
    pub text: Option<PathBuf>,
}

#[derive(Args)]
pub struct BoundsArgs {
    /// Inclusive range A..B with 2 <= A <= B <= 10^6.
    pub range: String,
    /// eq7, eq8 or phi-lower.
    pub check: String,
    /// Write rows here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Emit a row for every n, not just inapplicable, failing and equality rows.
    #[arg(long)]
    pub all: bool,
}

/// A usage, parse or I/O error; reported with exit status 2.
pub struct Failure(pub String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Whether every check verified.
pub type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Formulas { n } => formulas::run(n),
        Command::Verify(args) => verify::run(&args),
        Command::Bounds(args) => bounds::run(&args),
        Command::Edges { file } => verify::edges(&file),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

//! `bondkit`: bond analysis of closed revolute linkages.

mod output;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use bondkit::bonds::{DEFAULT_ORDER, DEFAULT_PRECISION};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bondkit", version, about = "Bonds, distances and bond diagrams of closed revolute linkages")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Check the closure condition along the configuration curve.
    Verify(Args),
    /// List the bonds with their local joint lengths, distances and connection numbers.
    Bonds(Args),
    /// Aggregate joint lengths, distance matrix and connection numbers.
    Distances(Args),
    /// Bond diagram as DOT or a JSON adjacency dump.
    Diagram(Args),
    /// Non-degeneracy checks and Goldberg verdict for 5R linkages.
    Classify(Args),
    /// Every analysis in sequence.
    All(Args),
}

#[derive(clap::Args, Debug, Clone)]
pub struct Args {
    /// Linkage JSON file.
    #[arg(required_unless_present = "fixture")]
    pub linkage: Option<PathBuf>,
    /// Configuration curve JSON file.
    pub curve: Option<PathBuf>,
    /// Use a built-in fixture instead of input files.
    #[arg(long, conflicts_with_all = ["linkage", "curve"])]
    pub fixture: Option<String>,
    /// Series truncation order.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    /// Working precision in bits for approximate points.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    pub precision: u32,
    /// Output format; `diagram` defaults to dot, the others to text.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report to a file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run::main(cli.command))
}

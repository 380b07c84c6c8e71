mod oracle;
mod output;
mod table;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact checks of mass formulae for finite abelian p-groups.
#[derive(Parser)]
#[command(name = "massform", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify registry entries.
    Verify(verify::VerifyArgs),
    /// List registry entries and their parameters.
    List(ListArgs),
    /// Print numeric tables.
    Table(table::TableArgs),
    /// Run a brute-force oracle directly.
    Oracle(oracle::OracleArgs),
    /// Print the JSON schema of verification reports.
    Schema,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone, Debug)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write to a file instead of stdout.
    #[arg(long, value_name = "PATH", global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
struct ListArgs {
    #[command(flatten)]
    output: OutputArgs,
}

pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

/// The run finished but some verification failed.
pub const EXIT_FAILED: u8 = 1;
/// Bad usage or a request the library refused.
pub const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => verify::run(&args),
        Command::List(args) => table::list(&args.output).map(|()| ExitCode::SUCCESS),
        Command::Table(args) => table::run(&args).map(|()| ExitCode::SUCCESS),
        Command::Oracle(args) => oracle::run(&args).map(|()| ExitCode::SUCCESS),
        Command::Schema => output::emit(None, REPORT_SCHEMA.as_bytes()).map(|()| ExitCode::SUCCESS),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(EXIT_USAGE)
    })
}

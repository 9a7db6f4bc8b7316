use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tfrde_cli::format::{convergence_csv, convergence_json, single_csv, single_json};
use tfrde_cli::{run_convergence, run_single, CliError, CliResult, Format, RunConfig};

/// Solvers and convergence studies for time-fractional reaction-diffusion
/// equations with a time drift term.
#[derive(Debug, Parser)]
#[command(name = "tfrde", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// JSON run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output format; overrides the configuration.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file; overrides the configuration. Standard output if neither is set.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One solve, optionally writing a grid snapshot.
    Solve(Common),
    /// Error and rate table over a refinement ladder.
    Convergence(Common),
}

fn emit(text: &str, path: Option<PathBuf>) -> CliResult<()> {
    match path {
        Some(path) => fs::write(&path, text).map_err(|e| CliError::io(path, e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn execute(command: Command) -> CliResult<()> {
    let (common, is_solve) = match command {
        Command::Solve(c) => (c, true),
        Command::Convergence(c) => (c, false),
    };
    let config = RunConfig::load(&common.config)?;
    let format = common.format.unwrap_or(config.format);
    let out = common.out.or_else(|| config.output.clone());
    let text = if is_solve {
        let run = run_single(&config)?;
        match format {
            Format::Csv => single_csv(&run),
            Format::Json => single_json(&run),
        }
    } else {
        let table = run_convergence(&config)?;
        match format {
            Format::Csv => convergence_csv(&table),
            Format::Json => convergence_json(&table),
        }
    };
    emit(&text, out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("tfrde: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

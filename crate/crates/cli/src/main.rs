//! `tension` — command-line runner for the interface tension solver.
//!
//! Subcommands: `solve` (tension + interface velocity for one configuration),
//! `eig` (spectrum of the tension operator), `sweep` (leading eigenvalue as
//! a function of perturbation amplitude), and `verify` (self-checks).
//!
//! Exit codes: 0 success, 1 verification check failure, 2 configuration
//! error, 3 numerical error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod checks;
mod commands;
mod config;
mod output;

use config::Overrides;

/// Why a run could not complete successfully.
#[derive(Debug)]
pub enum Failure {
    /// Bad or incomplete configuration — exit code 2.
    Config(String),
    /// The solver or an operator rejected the problem — exit code 3.
    Numerical(stokes_tension::error::Error),
}

impl From<stokes_tension::error::Error> for Failure {
    fn from(e: stokes_tension::error::Error) -> Self {
        Failure::Numerical(e)
    }
}

#[derive(Parser)]
#[command(name = "tension", version, about = "Tension determination for an inextensible interface in 2D Stokes flow")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Run configuration (TOML)
    #[arg(long)]
    config: PathBuf,
    /// Output directory (overrides the config's `out`)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Grid size (overrides the config's `n`)
    #[arg(long)]
    n: Option<usize>,
    /// Output formats, comma separated: csv,json
    #[arg(long, value_delimiter = ',')]
    format: Option<Vec<String>>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Optional run configuration (TOML); defaults to the quick level
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory (overrides the config's `out`)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Accepted for interface uniformity; verification picks its own grids
    #[arg(long)]
    n: Option<usize>,
    /// Output formats, comma separated: csv,json
    #[arg(long, value_delimiter = ',')]
    format: Option<Vec<String>>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve for the tension and interface velocity on one curve
    Solve(CommonArgs),
    /// Compute the spectrum of the tension operator on one curve
    Eig(CommonArgs),
    /// Sweep the leading eigenvalue over perturbation amplitudes
    Sweep(CommonArgs),
    /// Run the built-in verification checks
    Verify(VerifyArgs),
}

fn run(cli: Cli) -> Result<usize, Failure> {
    match cli.command {
        Command::Solve(args) => {
            let settings = settings_from(&args)?;
            commands::cmd_solve(&settings)?;
            Ok(0)
        }
        Command::Eig(args) => {
            let settings = settings_from(&args)?;
            commands::cmd_eig(&settings)?;
            Ok(0)
        }
        Command::Sweep(args) => {
            let settings = settings_from(&args)?;
            commands::cmd_sweep(&settings)?;
            Ok(0)
        }
        Command::Verify(args) => {
            let raw = match &args.config {
                Some(path) => config::load(path)?,
                None => config::RawConfig::default(),
            };
            let overrides = Overrides {
                out: args.out.clone(),
                n: args.n,
                format: args.format.clone(),
            };
            let settings = config::resolve(raw, &overrides)?;
            checks::cmd_verify(&settings)
        }
    }
}

fn settings_from(args: &CommonArgs) -> Result<config::Settings, Failure> {
    let raw = config::load(&args.config)?;
    let overrides = Overrides {
        out: args.out.clone(),
        n: args.n,
        format: args.format.clone(),
    };
    config::resolve(raw, &overrides)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_failed_checks) => ExitCode::from(1),
        Err(Failure::Config(message)) => {
            eprintln!("config error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(error)) => {
            eprintln!("error: {error}");
            ExitCode::from(3)
        }
    }
}

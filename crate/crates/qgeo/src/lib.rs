//! Command-line front end and file formats for `qgeo-core`.

pub mod commands;
pub mod display;
pub mod error;
pub mod formats;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(
    name = "qgeo",
    version,
    about = "Quaternionic geometry of two-qubit states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print S, C, the Wootters pre-concurrence, P and its S⁴ point.
    Analyze {
        state: PathBuf,
        /// Full-precision JSON instead of rounded text.
        #[arg(long)]
        json: bool,
    },
    /// Apply a local unitary to a state and write the result.
    Transform {
        state: PathBuf,
        transform: PathBuf,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Run the randomized verification suite.
    Verify {
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, env = "QGEO_TOL", default_value_t = qgeo_core::DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value = "report.json")]
        report: PathBuf,
    },
    /// Write the S⁴ orbit of P under repeated application of a transform.
    Orbit {
        state: PathBuf,
        transform: PathBuf,
        #[arg(long)]
        steps: u64,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Write Haar-random state files.
    Sample {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: PathBuf,
    },
}

pub fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze { state, json } => commands::analyze(&state, json),
        Command::Transform {
            state,
            transform,
            out,
        } => commands::transform(&state, &transform, &out),
        Command::Verify {
            trials,
            seed,
            tol,
            report,
        } => commands::verify(trials, seed, tol, &report),
        Command::Orbit {
            state,
            transform,
            steps,
            out,
        } => commands::orbit(&state, &transform, steps, &out),
        Command::Sample { count, seed, out } => commands::sample(count, seed, &out),
    }
}

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    match qgeo::run(qgeo::Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

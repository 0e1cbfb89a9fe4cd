//! `charlier-lab`: evaluate, tabulate and verify bivariate and d-variate
//! Charlier polynomials from the command line.
//!
//! Exit status: 0 when every check passes, 1 when an identity is violated,
//! 2 for invalid or degenerate input.

mod commands;
mod error;
mod output;
mod params;

use std::process::ExitCode;

use clap::Parser;

use crate::commands::Command;

#[derive(Debug, Parser)]
#[command(
    name = "charlier-lab",
    version,
    about = "Evaluate and verify multivariate Charlier polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, out) = cli.command.output();
    let outcome = match cli.command.run() {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("charlier-lab: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = output::emit(&outcome, format, out.as_deref()) {
        eprintln!("charlier-lab: {e}");
        return ExitCode::from(2);
    }
    match outcome.failure {
        None => ExitCode::SUCCESS,
        Some(reason) => {
            eprintln!("charlier-lab: {reason}");
            ExitCode::from(1)
        }
    }
}

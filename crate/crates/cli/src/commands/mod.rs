//! Subcommands. Each returns an [`Outcome`] holding every output format.

mod bench;
mod eval;
mod limit;
mod table;
mod verify;

use std::path::PathBuf;

use charlier_core::Real;
use clap::{Args, Subcommand};

use crate::error::Result;
use crate::output::{Format, Outcome};

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one value and cross-check it against the raising evaluator.
    Eval(eval::EvalArgs),
    /// Tabulate values over a box of degrees and lattice points.
    Table(table::TableArgs),
    /// Run identity suites; exit 1 if any identity is violated.
    Verify(verify::VerifyArgs),
    /// Compare bivariate Krawtchouk polynomials with their large-N limit.
    Limit(limit::LimitArgs),
    /// Time each evaluator over a grid.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format (default depends on the command).
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

impl Command {
    pub fn run(&self) -> Result<Outcome> {
        match self {
            Command::Eval(args) => eval::run(args),
            Command::Table(args) => table::run(args),
            Command::Verify(args) => verify::run(args),
            Command::Limit(args) => limit::run(args),
            Command::Bench(args) => bench::run(args),
        }
    }

    pub fn output(&self) -> (Option<Format>, Option<PathBuf>) {
        let o = match self {
            Command::Eval(a) => &a.output,
            Command::Table(a) => &a.output,
            Command::Verify(a) => &a.output,
            Command::Limit(a) => &a.output,
            Command::Bench(a) => &a.output,
        };
        (o.format, o.out.clone())
    }
}

/// `|value − reference| / max(|reference|, 1)`, formed in the working precision.
pub(crate) fn discrepancy<R: Real>(value: R, reference: R) -> f64 {
    ((value - reference).abs() / reference.abs().max(R::one())).approx()
}

/// Every vector in `[0, max]^d`, last coordinate fastest.
pub(crate) fn box_indices(d: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut v = vec![0; d];
    loop {
        out.push(v.clone());
        let mut axis = d;
        loop {
            if axis == 0 {
                return out;
            }
            axis -= 1;
            if v[axis] < max {
                v[axis] += 1;
                break;
            }
            v[axis] = 0;
        }
    }
}

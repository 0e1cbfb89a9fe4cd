use std::hint::black_box;
use std::time::Instant;

use charlier_core::{evaluate_with_error, Algorithm, EuclidParams2, Extended, MultiIndex2, Real};
use clap::Args;
use serde::Serialize;
use serde_json::json;

use super::{discrepancy, OutputArgs};
use crate::error::Result;
use crate::output::{opt_real, Format, Outcome, Table};
use crate::params::{ParamArgs, Precision};

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub params: ParamArgs,

    /// Degrees with m + n <= degmax.
    #[arg(long, default_value_t = 6)]
    pub degmax: usize,

    /// Points with i, k <= ptmax.
    #[arg(long, default_value_t = 10)]
    pub ptmax: usize,

    /// Untimed passes over the grid before timing.
    #[arg(long, default_value_t = 1)]
    pub warmup: usize,

    /// Timed passes over the grid.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub repetitions: u64,

    /// Evaluators to time (default: all four).
    #[arg(long, value_delimiter = ',')]
    pub algorithm: Vec<Algorithm>,

    #[arg(long, value_enum, default_value_t = Precision::Double)]
    pub precision: Precision,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Serialize)]
struct BenchRow {
    algorithm: Algorithm,
    status: String,
    cells: usize,
    total_seconds: Option<f64>,
    seconds_per_cell: Option<f64>,
    max_discrepancy: Option<f64>,
}

pub fn run(args: &BenchArgs) -> Result<Outcome> {
    let set = args.params.resolve()?;
    let params = set.planar("bench")?;
    let algorithms = if args.algorithm.is_empty() {
        Algorithm::ALL.to_vec()
    } else {
        args.algorithm.clone()
    };
    let rows = match args.precision {
        Precision::Double => time_all(params, &algorithms, args),
        Precision::Extended => time_all(&params.cast::<Extended>(), &algorithms, args),
    };

    let mut table = Table::new([
        "algorithm",
        "status",
        "cells",
        "warmup",
        "repetitions",
        "total_seconds",
        "seconds_per_cell",
        "max_discrepancy",
    ]);
    let mut plain = format!(
        "grid m+n <= {}, i,k <= {}; warmup {}, repetitions {}, precision {}\n",
        args.degmax, args.ptmax, args.warmup, args.repetitions, args.precision
    );
    for r in &rows {
        table.push(vec![
            r.algorithm.to_string(),
            r.status.clone(),
            r.cells.to_string(),
            args.warmup.to_string(),
            args.repetitions.to_string(),
            opt_real(r.total_seconds),
            opt_real(r.seconds_per_cell),
            opt_real(r.max_discrepancy),
        ]);
        plain += &match (r.seconds_per_cell, r.max_discrepancy) {
            (Some(per), Some(disc)) => format!(
                "{:<15} {:>6} cells  {:>10.3e} s/cell  max discrepancy {:.3e}\n",
                r.algorithm.name(),
                r.cells,
                per,
                disc
            ),
            _ => format!("{:<15} {}\n", r.algorithm.name(), r.status),
        };
    }
    Ok(Outcome {
        command: "bench",
        default_format: Format::Csv,
        params: set.to_json(),
        json: json!({
            "degmax": args.degmax,
            "ptmax": args.ptmax,
            "warmup": args.warmup,
            "repetitions": args.repetitions,
            "precision": args.precision,
            "rows": rows,
        }),
        table,
        plain,
        failure: None,
    })
}

fn time_all<R: Real>(p: &EuclidParams2<R>, algorithms: &[Algorithm], args: &BenchArgs) -> Vec<BenchRow> {
    let cells: Vec<(MultiIndex2, MultiIndex2)> = MultiIndex2::up_to_total(args.degmax)
        .flat_map(|d| (0..=args.ptmax).flat_map(move |i| (0..=args.ptmax).map(move |k| (d, MultiIndex2::new(i, k)))))
        .collect();
    let reference: Vec<R> = cells
        .iter()
        .map(|&(d, x)| evaluate_with_error(Algorithm::Raising, p, d, x).map(|v| v.0))
        .collect::<Result<_, _>>()
        .expect("the raising evaluator is total");

    algorithms
        .iter()
        .map(|&alg| {
            let pass = || -> charlier_core::Result<Vec<R>> {
                cells
                    .iter()
                    .map(|&(d, x)| evaluate_with_error(alg, black_box(p), d, x).map(|v| v.0))
                    .collect()
            };
            let values = match pass() {
                Ok(v) => v,
                Err(e) => {
                    return BenchRow {
                        algorithm: alg,
                        status: format!("skipped: {e}"),
                        cells: cells.len(),
                        total_seconds: None,
                        seconds_per_cell: None,
                        max_discrepancy: None,
                    }
                }
            };
            for _ in 0..args.warmup {
                black_box(pass().ok());
            }
            let start = Instant::now();
            for _ in 0..args.repetitions {
                black_box(pass().ok());
            }
            let total = start.elapsed().as_secs_f64();
            let disc = values
                .iter()
                .zip(&reference)
                .map(|(&v, &r)| discrepancy(v, r))
                .fold(0.0, f64::max);
            BenchRow {
                algorithm: alg,
                status: "ok".into(),
                cells: cells.len(),
                total_seconds: Some(total),
                seconds_per_cell: Some(total / (cells.len() as f64 * args.repetitions as f64)),
                max_discrepancy: Some(disc),
            }
        })
        .collect()
}

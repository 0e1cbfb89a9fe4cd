use charlier_core::multivariate::eval_raising_d;
use charlier_core::{
    eval_charlier_d, evaluate_with_error, Algorithm, EuclidParams2, EuclidParamsD, Extended, MultiIndex2, MultiIndexD,
    Real,
};
use clap::Args;
use serde::Serialize;
use serde_json::json;

use super::eval::cast_d;
use super::{box_indices, discrepancy, OutputArgs};
use crate::error::{CliError, Result};
use crate::output::{real, Format, Outcome, Table};
use crate::params::{ParamArgs, ParamSet, Precision};

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub params: ParamArgs,

    /// Every degree entry runs over 0..=degmax.
    #[arg(long, default_value_t = 3)]
    pub degmax: usize,

    /// Every point coordinate runs over 0..=ptmax.
    #[arg(long, default_value_t = 5)]
    pub ptmax: usize,

    #[arg(long, default_value = "raising")]
    pub algorithm: Algorithm,

    #[arg(long, value_enum, default_value_t = Precision::Double)]
    pub precision: Precision,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Serialize)]
struct Row {
    deg: Vec<usize>,
    pt: Vec<usize>,
    value: f64,
    discrepancy_vs_reference: f64,
}

pub fn run(args: &TableArgs) -> Result<Outcome> {
    let set = args.params.resolve()?;
    let d = set.dim();
    let degrees = box_indices(d, args.degmax);
    let points = box_indices(d, args.ptmax);
    let rows = match (&set, args.precision) {
        (ParamSet::Planar(p), Precision::Double) => planar(p, args.algorithm, &degrees, &points)?,
        (ParamSet::Planar(p), Precision::Extended) => planar(&p.cast::<Extended>(), args.algorithm, &degrees, &points)?,
        (ParamSet::Multi(p), Precision::Double) => multi(p, args.algorithm, &degrees, &points)?,
        (ParamSet::Multi(p), Precision::Extended) => multi(&cast_d(p)?, args.algorithm, &degrees, &points)?,
    };

    let header: Vec<String> = if d == 2 {
        ["m", "n", "i", "k"].map(String::from).to_vec()
    } else {
        (1..=d)
            .map(|j| format!("n{j}"))
            .chain((1..=d).map(|j| format!("i{j}")))
            .collect()
    };
    let mut table = Table::new(
        header
            .iter()
            .cloned()
            .chain(["value", "algorithm", "discrepancy_vs_reference"].map(String::from)),
    );
    let mut plain = String::new();
    for row in &rows {
        let mut cells: Vec<String> = row.deg.iter().chain(&row.pt).map(|e| e.to_string()).collect();
        cells.push(real(row.value));
        cells.push(args.algorithm.to_string());
        cells.push(real(row.discrepancy_vs_reference));
        plain += &cells.join("  ");
        plain.push('\n');
        table.push(cells);
    }
    let worst = rows.iter().map(|r| r.discrepancy_vs_reference).fold(0.0, f64::max);
    Ok(Outcome {
        command: "table",
        default_format: Format::Csv,
        params: set.to_json(),
        json: json!({
            "algorithm": args.algorithm,
            "precision": args.precision,
            "degmax": args.degmax,
            "ptmax": args.ptmax,
            "max_discrepancy": worst,
            "rows": rows,
        }),
        table,
        plain,
        failure: None,
    })
}

fn planar<R: Real>(
    p: &EuclidParams2<R>,
    alg: Algorithm,
    degrees: &[Vec<usize>],
    points: &[Vec<usize>],
) -> Result<Vec<Row>> {
    let mut rows = Vec::with_capacity(degrees.len() * points.len());
    for deg in degrees {
        for pt in points {
            let (dm, pm) = (MultiIndex2::new(deg[0], deg[1]), MultiIndex2::new(pt[0], pt[1]));
            let (value, _) = evaluate_with_error(alg, p, dm, pm)?;
            let (reference, _) = evaluate_with_error(Algorithm::Raising, p, dm, pm)?;
            rows.push(Row {
                deg: deg.clone(),
                pt: pt.clone(),
                value: value.approx(),
                discrepancy_vs_reference: discrepancy(value, reference),
            });
        }
    }
    Ok(rows)
}

fn multi<R: Real>(
    p: &EuclidParamsD<R>,
    alg: Algorithm,
    degrees: &[Vec<usize>],
    points: &[Vec<usize>],
) -> Result<Vec<Row>> {
    if !matches!(alg, Algorithm::Raising | Algorithm::GenFun) {
        return Err(CliError::Usage(format!(
            "algorithm `{alg}` exists for the bivariate family only; use raising or genfun"
        )));
    }
    let mut rows = Vec::with_capacity(degrees.len() * points.len());
    for deg in degrees {
        let deg_idx = MultiIndexD::new(deg.clone());
        for pt in points {
            let pt_idx = MultiIndexD::new(pt.clone());
            let reference = eval_raising_d(p, &deg_idx, &pt_idx)?;
            let value = match alg {
                Algorithm::GenFun => eval_charlier_d(p, &deg_idx, &pt_idx)?,
                _ => reference,
            };
            rows.push(Row {
                deg: deg.clone(),
                pt: pt.clone(),
                value: value.approx(),
                discrepancy_vs_reference: discrepancy(value, reference),
            });
        }
    }
    Ok(rows)
}

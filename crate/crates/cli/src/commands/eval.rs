use charlier_core::multivariate::eval_raising_d;
use charlier_core::{
    eval_charlier_d, evaluate_with_error, Algorithm, EuclidParams2, Extended, MultiIndex2, MultiIndexD, Real,
};
use clap::Args;
use serde::Serialize;
use serde_json::to_value;

use super::{discrepancy, OutputArgs};
use crate::error::{CliError, Result};
use crate::output::{opt_real, real, Format, Outcome, Table};
use crate::params::{ParamArgs, ParamSet, Precision};

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub params: ParamArgs,

    /// Degree, `m,n` (or `n1,...,nd`).
    #[arg(long)]
    pub deg: MultiIndexD,

    /// Lattice point, `i,k` (or `i1,...,id`).
    #[arg(long)]
    pub pt: MultiIndexD,

    /// raising, genfun, hyper or decomp. Only raising and genfun exist for d-variate parameters.
    #[arg(long, default_value = "raising")]
    pub algorithm: Algorithm,

    #[arg(long, value_enum, default_value_t = Precision::Double)]
    pub precision: Precision,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Serialize)]
struct EvalResult {
    deg: MultiIndexD,
    pt: MultiIndexD,
    value: f64,
    algorithm: Algorithm,
    error_estimate: Option<f64>,
    reference: f64,
    reference_algorithm: Algorithm,
    discrepancy: f64,
    precision: Precision,
}

pub fn run(args: &EvalArgs) -> Result<Outcome> {
    let set = args.params.resolve()?;
    let (value, error_estimate, reference, disc) = match &set {
        ParamSet::Planar(p) => {
            let (deg, pt) = (planar_index(&args.deg)?, planar_index(&args.pt)?);
            match args.precision {
                Precision::Double => planar(p, args.algorithm, deg, pt)?,
                Precision::Extended => planar(&p.cast::<Extended>(), args.algorithm, deg, pt)?,
            }
        }
        ParamSet::Multi(p) => match args.precision {
            Precision::Double => multi(p, args)?,
            Precision::Extended => multi(&cast_d(p)?, args)?,
        },
    };
    let result = EvalResult {
        deg: args.deg.clone(),
        pt: args.pt.clone(),
        value,
        algorithm: args.algorithm,
        error_estimate,
        reference,
        reference_algorithm: Algorithm::Raising,
        discrepancy: disc,
        precision: args.precision,
    };

    let mut table = Table::new([
        "deg",
        "pt",
        "value",
        "algorithm",
        "error_estimate",
        "reference",
        "discrepancy_vs_reference",
    ]);
    table.push(vec![
        result.deg.to_string(),
        result.pt.to_string(),
        real(value),
        args.algorithm.to_string(),
        opt_real(error_estimate),
        real(reference),
        real(disc),
    ]);
    let mut plain = format!("C{}{} = {}\n", result.deg, result.pt, real(value));
    plain += &format!("  algorithm       {}\n", args.algorithm);
    if let Some(e) = error_estimate {
        plain += &format!("  error estimate  {e:.3e}\n");
    }
    plain += &format!("  raising         {}\n", real(reference));
    plain += &format!("  discrepancy     {disc:.3e}\n");

    Ok(Outcome {
        command: "eval",
        default_format: Format::Plain,
        params: set.to_json(),
        json: to_value(&result)?,
        table,
        plain,
        failure: None,
    })
}

pub(crate) fn planar_index(idx: &MultiIndexD) -> Result<MultiIndex2> {
    match idx.entries() {
        &[a, b] => Ok(MultiIndex2::new(a, b)),
        _ => Err(charlier_core::Error::DimensionMismatch {
            expected: 2,
            got: idx.dim(),
        }
        .into()),
    }
}

fn planar<R: Real>(
    p: &EuclidParams2<R>,
    alg: Algorithm,
    deg: MultiIndex2,
    pt: MultiIndex2,
) -> Result<(f64, Option<f64>, f64, f64)> {
    let (value, err) = evaluate_with_error(alg, p, deg, pt)?;
    let (reference, _) = evaluate_with_error(Algorithm::Raising, p, deg, pt)?;
    Ok((
        value.approx(),
        Some(err.approx().abs()),
        reference.approx(),
        discrepancy(value, reference),
    ))
}

fn multi<R: Real>(p: &charlier_core::EuclidParamsD<R>, args: &EvalArgs) -> Result<(f64, Option<f64>, f64, f64)> {
    let reference = eval_raising_d(p, &args.deg, &args.pt)?;
    let value = match args.algorithm {
        Algorithm::Raising => reference,
        Algorithm::GenFun => eval_charlier_d(p, &args.deg, &args.pt)?,
        other => {
            return Err(CliError::Usage(format!(
                "algorithm `{other}` exists for the bivariate family only; use raising or genfun"
            )))
        }
    };
    Ok((value.approx(), None, reference.approx(), discrepancy(value, reference)))
}

pub(crate) fn cast_d(p: &charlier_core::EuclidParamsD) -> Result<charlier_core::EuclidParamsD<Extended>> {
    let rows = p
        .rotation_rows()
        .into_iter()
        .map(|r| r.into_iter().map(Extended::lit).collect())
        .collect();
    let alphas = p.alphas().iter().map(|&a| Extended::lit(a)).collect();
    Ok(charlier_core::EuclidParamsD::new(rows, alphas)?)
}

use charlier_core::bivariate::verify::{
    verify_cross_algorithm, verify_difference, verify_duality, verify_integral_box, verify_lowering,
    verify_orthogonality, verify_recurrence,
};
use charlier_core::multivariate::verify_orthogonality_d;
use charlier_core::{EuclidParams2, Extended, Real, VerifyReport};
use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::json;

use super::OutputArgs;
use crate::error::{CliError, Result};
use crate::output::{real, Format, Outcome, Table};
use crate::params::{ParamArgs, ParamSet, Precision};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Weighted Gram matrix against the identity (degmax 4, cutoff 60, tol 1e-8).
    Orthogonality,
    /// Three-term recurrences in the degree (degmax 5, ptmax 12, tol 1e-9).
    Recurrence,
    /// Difference equations in the lattice point (degmax 5, ptmax 12, tol 1e-9).
    Difference,
    /// Lowering relations (degmax 5, ptmax 12, tol 1e-9).
    Lowering,
    /// Degree/point exchange under the inverse motion (degmax 4, tol 1e-10).
    Duality,
    /// Oscillator overlap integral by quadrature (degmax 3, nodes 40, tol 1e-8).
    Integral,
    /// Agreement of the four evaluators (degmax 6, ptmax 10; scaled bound, tolerance 1).
    Cross,
}

impl Suite {
    const PLANAR: [Suite; 7] = [
        Suite::Orthogonality,
        Suite::Recurrence,
        Suite::Difference,
        Suite::Lowering,
        Suite::Duality,
        Suite::Integral,
        Suite::Cross,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Recurrence => "recurrence",
            Suite::Difference => "difference",
            Suite::Lowering => "lowering",
            Suite::Duality => "duality",
            Suite::Integral => "integral",
            Suite::Cross => "cross",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,

    /// Suites to run (default: all; d-variate parameters support orthogonality only).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub suite: Vec<Suite>,

    /// Overrides each suite's degree bound.
    #[arg(long)]
    pub degmax: Option<usize>,

    /// Overrides the lattice bound of the relation and cross suites.
    #[arg(long)]
    pub ptmax: Option<usize>,

    /// Truncation of the orthogonality sums (default 60, or 40 per axis for d-variate).
    #[arg(long)]
    pub cutoff: Option<usize>,

    /// Gauss-Hermite nodes per axis for the integral suite.
    #[arg(long, default_value_t = 40)]
    pub nodes: usize,

    /// Overrides each suite's tolerance (the cross suite keeps its scaled bound).
    #[arg(long, value_parser = positive)]
    pub tol: Option<f64>,

    /// Precision of the recurrence, difference, lowering, duality and cross suites.
    #[arg(long, value_enum, default_value_t = Precision::Extended)]
    pub precision: Precision,

    #[command(flatten)]
    pub output: OutputArgs,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got `{s}`")),
    }
}

#[derive(Debug, Serialize)]
struct SuiteResult {
    suite: Suite,
    #[serde(flatten)]
    report: VerifyReport,
}

pub fn run(args: &VerifyArgs) -> Result<Outcome> {
    let set = args.params.resolve()?;
    let suites = if args.suite.is_empty() {
        match set {
            ParamSet::Planar(_) => Suite::PLANAR.to_vec(),
            ParamSet::Multi(_) => vec![Suite::Orthogonality],
        }
    } else {
        args.suite.clone()
    };

    let mut results = Vec::with_capacity(suites.len());
    for suite in suites {
        let mut report = match &set {
            ParamSet::Planar(p) => planar_suite(p, suite, args)?,
            ParamSet::Multi(p) => {
                if suite != Suite::Orthogonality {
                    return Err(CliError::Usage(format!(
                        "suite `{}` exists for the bivariate family only",
                        suite.name()
                    )));
                }
                verify_orthogonality_d(
                    p,
                    args.degmax.unwrap_or(2),
                    args.cutoff.unwrap_or(40),
                    args.tol.unwrap_or(1e-7),
                )
            }
        };
        // an unresolved truncation tail leaves the residual meaningless
        if report.tail_bound > report.tolerance {
            report.pass = false;
            if !report.notes.iter().any(|n| n.contains("tail bound")) {
                report.note(format!(
                    "truncation tail bound {:.3e} exceeds tolerance; increase the cutoff",
                    report.tail_bound
                ));
            }
        }
        results.push(SuiteResult { suite, report });
    }

    let mut table = Table::new([
        "suite",
        "identity",
        "pass",
        "max_residual",
        "tolerance",
        "tail_bound",
        "grid",
        "worst_location",
        "suspect_term",
        "notes",
    ]);
    let mut plain = format!("parameters: {}\n", set.describe());
    for SuiteResult { suite, report: r } in &results {
        table.push(vec![
            suite.name().into(),
            r.identity.clone(),
            r.pass.to_string(),
            real(r.max_residual),
            real(r.tolerance),
            real(r.tail_bound),
            r.grid.clone(),
            r.worst_location.clone().unwrap_or_default(),
            r.suspect_term.clone().unwrap_or_default(),
            r.notes.join("; "),
        ]);
        plain += &format!(
            "[{}] {}: max residual {:.3e} (tolerance {:.1e}) over {}\n",
            if r.pass { "PASS" } else { "FAIL" },
            suite.name(),
            r.max_residual,
            r.tolerance,
            r.grid
        );
        if let Some(w) = &r.worst_location {
            plain += &format!("       worst at {w}\n");
        }
        if r.tail_bound > 0.0 {
            plain += &format!("       tail bound {:.3e}\n", r.tail_bound);
        }
        if let Some(s) = &r.suspect_term {
            plain += &format!("       suspect term {s}\n");
        }
        for n in &r.notes {
            plain += &format!("       note: {n}\n");
        }
    }
    let failed: Vec<&SuiteResult> = results.iter().filter(|s| !s.report.pass).collect();
    plain += &format!("{} of {} suites passed\n", results.len() - failed.len(), results.len());
    let failure = failed.first().map(|s| {
        format!(
            "{} failed: residual {:.3e} > {:.1e} at {}",
            s.suite.name(),
            s.report.max_residual,
            s.report.tolerance,
            s.report.worst_location.as_deref().unwrap_or("?")
        )
    });

    Ok(Outcome {
        command: "verify",
        default_format: Format::Plain,
        params: set.to_json(),
        json: json!({
            "pass": failed.is_empty(),
            "precision": args.precision,
            "suites": results,
        }),
        table,
        plain,
        failure,
    })
}

fn planar_suite(p: &EuclidParams2, suite: Suite, args: &VerifyArgs) -> Result<VerifyReport> {
    let tol = |default: f64| args.tol.unwrap_or(default);
    Ok(match suite {
        Suite::Orthogonality => verify_orthogonality(p, args.degmax.unwrap_or(4), args.cutoff.unwrap_or(60), tol(1e-8)),
        Suite::Integral => verify_integral_box(p, args.degmax.unwrap_or(3), args.nodes, tol(1e-8))?,
        _ => match args.precision {
            Precision::Double => generic_suite(p, suite, args)?,
            Precision::Extended => generic_suite(&p.cast::<Extended>(), suite, args)?,
        },
    })
}

fn generic_suite<R: Real>(p: &EuclidParams2<R>, suite: Suite, args: &VerifyArgs) -> Result<VerifyReport> {
    let tol = |default: f64| args.tol.unwrap_or(default);
    let (deg5, pt12) = (args.degmax.unwrap_or(5), args.ptmax.unwrap_or(12));
    Ok(match suite {
        Suite::Recurrence => verify_recurrence(p, deg5, pt12, tol(1e-9)),
        Suite::Difference => verify_difference(p, deg5, pt12, tol(1e-9)),
        Suite::Lowering => verify_lowering(p, deg5, pt12, tol(1e-9)),
        Suite::Duality => verify_duality(p, args.degmax.unwrap_or(4), tol(1e-10))?,
        Suite::Cross => verify_cross_algorithm(p, args.degmax.unwrap_or(6), args.ptmax.unwrap_or(10)),
        Suite::Orthogonality | Suite::Integral => unreachable!("handled in f64"),
    })
}

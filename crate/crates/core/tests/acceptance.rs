//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p charlier-core --test acceptance`.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};
use std::process::ExitCode;
use std::time::Instant;

use charlier_core::bivariate::verify::{
    integral_value, verify_cross_algorithm, verify_difference, verify_duality, verify_integral_box, verify_lowering,
    verify_orthogonality, verify_recurrence, verify_zero_angle_factorization,
};
use charlier_core::multivariate::{
    random_orthogonal, verify_identity_factorization_d, verify_orthogonality_d, verify_planar_reduction,
};
use charlier_core::univariate::{charlier_orthocheck, hermite_orthocheck, CharlierParam};
use charlier_core::{
    eval_decomposition, eval_genfun, eval_hypergeometric, eval_raising, limit_study, Error, EuclidParams2,
    EuclidParamsD, MultiIndex2, Real, VerifyReport,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twofloat::TwoFloat;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn params(theta: f64, alpha: f64, beta: f64) -> EuclidParams2 {
    EuclidParams2::new(theta, alpha, beta).expect("valid parameters")
}

fn standard_sets() -> [EuclidParams2; 3] {
    [
        params(FRAC_PI_6, 1.0, 1.0),
        params(FRAC_PI_4, 0.7, 1.3),
        params(1.1, 0.8, 1.7),
    ]
}

fn label(p: &EuclidParams2) -> String {
    format!("({:.4}, {}, {})", p.theta(), p.alpha(), p.beta())
}

/// Folds reports; fails with the first failing report's details.
fn all_pass<'a>(reports: impl IntoIterator<Item = (String, &'a VerifyReport)>) -> Outcome {
    let mut worst = 0.0f64;
    for (what, r) in reports {
        if !r.pass {
            return Err(format!(
                "{what}: {} residual {:.3e} > {:.1e} at {}{}",
                r.identity,
                r.max_residual,
                r.tolerance,
                r.worst_location.as_deref().unwrap_or("?"),
                r.suspect_term
                    .as_ref()
                    .map(|s| format!("; suspect {s}"))
                    .unwrap_or_default()
            ));
        }
        worst = worst.max(r.max_residual / r.tolerance);
    }
    Ok(format!("worst residual/tolerance {worst:.3e}"))
}

fn cross_algorithm() -> Outcome {
    // agreement is checked in extended precision: at |C| < 1 the 1e-12
    // absolute bound is below f64 rounding of the alternating sums
    let reports: Vec<_> = standard_sets()
        .iter()
        .map(|p| (label(p), verify_cross_algorithm(&p.cast::<TwoFloat>(), 6, 10)))
        .collect();
    for (what, r) in &reports {
        if !r.notes.is_empty() {
            return Err(format!("{what}: an evaluator was skipped: {}", r.notes.join("; ")));
        }
    }
    let f64_worst = standard_sets()
        .iter()
        .map(|p| verify_cross_algorithm(p, 6, 10).max_residual)
        .fold(0.0, f64::max);
    all_pass(reports.iter().map(|(w, r)| (w.clone(), r))).map(|s| format!("{s} (f64 backend alone: {f64_worst:.3e})"))
}

fn orthogonality() -> Outcome {
    let reports: Vec<_> = standard_sets()
        .iter()
        .map(|p| (label(p), verify_orthogonality(p, 4, 60, 1e-8)))
        .collect();
    for (what, r) in &reports {
        if r.tail_bound > r.tolerance {
            return Err(format!("{what}: tail bound {:.3e} exceeds tolerance", r.tail_bound));
        }
    }
    all_pass(reports.iter().map(|(w, r)| (w.clone(), r)))
}

fn relations() -> Outcome {
    let mut reports = Vec::new();
    for p in standard_sets() {
        // absolute residuals with terms up to ~1e7: evaluated in extended precision
        let px = p.cast::<TwoFloat>();
        reports.push((label(&p), verify_recurrence(&px, 5, 12, 1e-9)));
        reports.push((label(&p), verify_difference(&px, 5, 12, 1e-9)));
        reports.push((label(&p), verify_lowering(&px, 5, 12, 1e-9)));
    }
    all_pass(reports.iter().map(|(w, r)| (w.clone(), r)))
}

fn duality() -> Outcome {
    let mut reports = Vec::new();
    for p in standard_sets() {
        let r = verify_duality(&p, 4, 1e-10).map_err(|e| format!("{}: {e}", label(&p)))?;
        if !r.notes.is_empty() {
            return Err(format!("{}: {}", label(&p), r.notes.join("; ")));
        }
        reports.push((label(&p), r));
    }
    all_pass(reports.iter().map(|(w, r)| (w.clone(), r)))
}

fn zero_angle() -> Outcome {
    let mut reports = Vec::new();
    for (alpha, beta) in [(1.0, 1.0), (0.7, 1.3), (1.6, 0.5)] {
        let r = verify_zero_angle_factorization(alpha, beta, 6, 10, 1e-11).map_err(|e| e.to_string())?;
        reports.push((format!("(0, {alpha}, {beta})"), r));
    }
    all_pass(reports.iter().map(|(w, r)| (w.clone(), r)))
}

fn integral() -> Outcome {
    let sets = [
        params(FRAC_PI_6, 0.5, 0.5),
        params(FRAC_PI_6, 1.0, 1.0),
        params(1.1, 0.8, 1.7),
    ];
    let mut reports = Vec::new();
    let mut ground = 0.0f64;
    for p in &sets {
        let r = verify_integral_box(p, 3, 40, 1e-8).map_err(|e| format!("{}: {e}", label(p)))?;
        reports.push((label(p), r));
        for i in 0..=3 {
            for k in 0..=3 {
                let v =
                    integral_value(p, MultiIndex2::new(0, 0), MultiIndex2::new(i, k), 40).map_err(|e| e.to_string())?;
                ground = ground.max((v - 1.0).abs());
            }
        }
    }
    if ground > 1e-10 {
        return Err(format!("ground state deviates from 1 by {ground:.3e}"));
    }
    all_pass(reports.iter().map(|(w, r)| (w.clone(), r))).map(|s| format!("{s}; ground-state deviation {ground:.1e}"))
}

fn krawtchouk_limit() -> Outcome {
    let study = limit_study(
        &params(FRAC_PI_6, 1.0, 1.0),
        MultiIndex2::new(1, 1),
        MultiIndex2::new(2, 1),
        &[16, 64, 256, 1024],
    )
    .map_err(|e| e.to_string())?;
    let errors: Vec<String> = study.rows.iter().map(|r| format!("{:.3e}", r.error)).collect();
    match study.converged {
        Some(conv) if study.report.pass => Ok(format!(
            "converges under the {} convention; errors [{}]; {}",
            conv.name(),
            errors.join(", "),
            study.report.notes.join("; ")
        )),
        _ => Err(format!(
            "errors [{}]; {}",
            errors.join(", "),
            study.report.notes.join("; ")
        )),
    }
}

fn three_variables() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let rotation = random_orthogonal(3, &mut rng);
    let p3 = EuclidParamsD::new(rotation, vec![0.8, 1.1, 0.6]).map_err(|e| e.to_string())?;
    let ortho = verify_orthogonality_d(&p3, 2, 40, 1e-7);
    let ident = verify_identity_factorization_d(&[0.8, 1.1, 0.6], 4, 8, 1e-10).map_err(|e| e.to_string())?;
    let planar = verify_planar_reduction(&params(FRAC_PI_6, 0.7, 1.3), 5, 8, 1e-12);
    all_pass([
        ("orthogonality".to_string(), &ortho),
        ("identity".to_string(), &ident),
        ("planar".to_string(), &planar),
    ])
}

fn univariate_baselines() -> Outcome {
    let mut reports = Vec::new();
    for a in [1.0, 4.0] {
        let r = charlier_orthocheck(3, CharlierParam::new(a).map_err(|e| e.to_string())?, 80, 1e-10);
        reports.push((format!("charlier a={a}"), r));
    }
    let h = hermite_orthocheck(10, 40, 1e-10).map_err(|e| e.to_string())?;
    reports.push(("hermite".to_string(), h));
    all_pass(reports.iter().map(|(w, r)| (w.clone(), r)))
}

fn degeneracy() -> Outcome {
    let p = params(FRAC_PI_4, 1.0, 1.0);
    let (d, x) = (MultiIndex2::new(2, 1), MultiIndex2::new(3, 2));
    match eval_hypergeometric(&p, d, x) {
        Err(e @ Error::Degenerate { .. }) => println!("    hypergeometric: {e}"),
        other => return Err(format!("hypergeometric did not refuse: {other:?}")),
    }
    match eval_decomposition(&p, d, x) {
        Err(e @ Error::Degenerate { .. }) => println!("    decomposition: {e}"),
        other => return Err(format!("decomposition did not refuse: {other:?}")),
    }
    let worst = |p: &EuclidParams2<TwoFloat>| {
        let mut worst = 0.0f64;
        for deg in MultiIndex2::up_to_total(6) {
            for i in 0..=10 {
                for k in 0..=10 {
                    let pt = MultiIndex2::new(i, k);
                    let r = eval_raising(p, deg, pt);
                    let g = eval_genfun(p, deg, pt);
                    worst = worst.max(((r - g).abs() / r.abs().max(TwoFloat::from(1.0))).approx());
                }
            }
        }
        worst
    };
    let px = p.cast::<TwoFloat>();
    let w = worst(&px);
    if w > 1e-11 {
        return Err(format!("raising vs genfun {w:.3e} > 1e-11"));
    }
    Ok(format!(
        "both closed forms refuse; raising vs genfun {w:.3e} over m+n <= 6, i,k <= 10"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 cross-algorithm equivalence", cross_algorithm),
        ("2 orthogonality", orthogonality),
        ("3 recurrence, difference and lowering residuals", relations),
        ("4 duality", duality),
        ("5 zero-angle factorization", zero_angle),
        ("6 integral representation", integral),
        ("7 krawtchouk contraction", krawtchouk_limit),
        ("8 three-variable suite", three_variables),
        ("9 univariate baselines", univariate_baselines),
        ("10 degeneracy handling", degeneracy),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name} ({secs:.2}s): {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

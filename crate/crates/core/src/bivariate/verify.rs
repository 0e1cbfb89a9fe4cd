//! Numerical checks of the structural identities of `C_{m,n}(i,k)`.
//!
//! Every verifier returns a [`VerifyReport`]; failures are reported, not
//! raised. Only invalid input (degenerate duals, quadrature underflow)
//! produces an `Err`.

use super::{
    eval_decomposition, eval_genfun, eval_hypergeometric, eval_raising, eval_s_hypergeometric, monic_prefactor,
    Algorithm, MultiIndex2, RaisingGrid,
};
use crate::combinatorics::{factorial_real, NeumaierSum};
use crate::error::{Error, Result};
use crate::params::EuclidParams2;
use crate::poisson;
use crate::quadrature::GaussHermite;
use crate::real::Real;
use crate::report::VerifyReport;
use crate::univariate::{charlier, hermite_function_poly, hermite_function_polys, CharlierParam};

/// Smallest weight amplitude for which the integral check divides by `W`.
pub const UNDERFLOW_THRESHOLD: f64 = 1e-280;

/// Allowed discrepancy between two evaluators: `1e−10 |ref|` when
/// `|ref| ≥ 1`, otherwise `1e−12`.
pub fn cross_algorithm_bound(reference: f64) -> f64 {
    if reference.abs() >= 1.0 {
        1e-10 * reference.abs()
    } else {
        1e-12
    }
}

/// `Σ w_{i,k} C_{m,n} C_{m',n'} = δ_{mm'} δ_{nn'}` over `m+n, m'+n' ≤ degmax`,
/// summing `i, k ≤ cutoff`.
pub fn verify_orthogonality(params: &EuclidParams2, degmax: usize, cutoff: usize, tolerance: f64) -> VerifyReport {
    let (a2, b2) = (params.alpha().powi(2), params.beta().powi(2));
    let wi = poisson::pmf_table(a2, cutoff);
    let wk = poisson::pmf_table(b2, cutoff);
    let top = cutoff as i64;
    let grid = RaisingGrid::new(params, degmax, 0..=top, 0..=top);
    let degrees: Vec<MultiIndex2> = MultiIndex2::up_to_total(degmax).collect();
    let nd = degrees.len();

    let mut gram = vec![NeumaierSum::<f64>::new(); nd * nd];
    let mut values = vec![0.0; nd];
    for i in 0..=top {
        for k in 0..=top {
            let w = wi[i as usize] * wk[k as usize];
            for (slot, d) in degrees.iter().enumerate() {
                values[slot] = grid.get(d.first as i64, d.second as i64, i, k);
            }
            for a in 0..nd {
                let wa = w * values[a];
                for b in a..nd {
                    gram[a * nd + b].add(wa * values[b]);
                }
            }
        }
    }

    let mut report = VerifyReport::new(
        "orthogonality",
        tolerance,
        format!("m+n, m'+n' <= {degmax}; i,k <= {cutoff}"),
    );
    for a in 0..nd {
        for b in a..nd {
            let target = if a == b { 1.0 } else { 0.0 };
            report.observe(gram[a * nd + b].value() - target, || {
                format!("{} vs {}", degrees[a], degrees[b])
            });
        }
    }

    // largest |C|² on the outermost shell times the omitted Poisson mass
    let mut growth = 0.0f64;
    for d in &degrees {
        for j in 0..=top {
            for (i, k) in [(top, j), (j, top)] {
                growth = growth.max(grid.get(d.first as i64, d.second as i64, i, k).powi(2));
            }
        }
    }
    report.tail_bound = (poisson::tail(a2, cutoff) + poisson::tail(b2, cutoff)) * growth.max(1.0);
    if report.tail_bound > tolerance {
        report.note(format!(
            "truncation tail bound {:.3e} exceeds tolerance; increase the cutoff",
            report.tail_bound
        ));
    }
    report
}

/// One displayed identity `lhs = Σ terms`, with a label per term.
struct Relation {
    name: &'static str,
    terms: &'static [&'static str],
    rows: Vec<RelationRow>,
}

struct RelationRow {
    deg: (usize, usize),
    pt: (i64, i64),
    /// `lhs − Σ terms`, formed in the working precision.
    residual: f64,
    /// The residual with term `j` sign-flipped.
    flipped: Vec<f64>,
}

impl Relation {
    fn new(name: &'static str, terms: &'static [&'static str]) -> Self {
        Self {
            name,
            terms,
            rows: Vec::new(),
        }
    }

    fn push<R: Real>(&mut self, deg: (usize, usize), pt: (i64, i64), lhs: R, terms: &[R]) {
        debug_assert_eq!(terms.len(), self.terms.len());
        let mut acc = NeumaierSum::new();
        acc += lhs;
        for &t in terms {
            acc += -t;
        }
        let residual = acc.value();
        let two = R::lit(2.0);
        self.rows.push(RelationRow {
            deg,
            pt,
            residual: residual.approx(),
            flipped: terms.iter().map(|&t| (residual + two * t).approx()).collect(),
        });
    }

    fn residual(row: &RelationRow, flipped: Option<usize>) -> f64 {
        flipped.map_or(row.residual, |j| row.flipped[j])
    }

    fn max_residual(&self, flipped: Option<usize>) -> f64 {
        self.rows
            .iter()
            .map(|r| Self::residual(r, flipped).abs())
            .fold(0.0, |a, b| if b.is_nan() { f64::INFINITY } else { a.max(b) })
    }
}

/// Folds relations into one report. When a relation fails, each of its
/// terms is sign-flipped in turn; a term whose flip makes the relation hold
/// everywhere is named as the suspect.
fn assess(identity: &str, tolerance: f64, grid: String, relations: &[Relation]) -> VerifyReport {
    let mut report = VerifyReport::new(identity, tolerance, grid);
    for rel in relations {
        for row in &rel.rows {
            report.observe(Relation::residual(row, None), || {
                format!(
                    "{}: (m,n)=({},{}) at (i,k)=({},{})",
                    rel.name, row.deg.0, row.deg.1, row.pt.0, row.pt.1
                )
            });
        }
        if rel.max_residual(None) > tolerance {
            for (j, label) in rel.terms.iter().enumerate() {
                let flipped = rel.max_residual(Some(j));
                if flipped <= tolerance {
                    report.suspect_term = Some(format!(
                        "{}: term `{label}` (with its sign flipped the max residual is {flipped:.3e})",
                        rel.name
                    ));
                    break;
                }
            }
        }
    }
    report
}

const RECURRENCE_I: &[&str] = &[
    "[m cos²θ + n sin²θ + α²] C",
    "α sinθ √(n+1) C_{m,n+1}",
    "α sinθ √n C_{m,n−1}",
    "sinθ cosθ √(n(m+1)) C_{m+1,n−1}",
    "α cosθ √(m+1) C_{m+1,n}",
    "α cosθ √m C_{m−1,n}",
    "sinθ cosθ √(m(n+1)) C_{m−1,n+1}",
];

const RECURRENCE_K: &[&str] = &[
    "[m sin²θ + n cos²θ + β²] C",
    "β cosθ √(n+1) C_{m,n+1}",
    "β cosθ √n C_{m,n−1}",
    "−sinθ cosθ √(n(m+1)) C_{m+1,n−1}",
    "−β sinθ √(m+1) C_{m+1,n}",
    "−β sinθ √m C_{m−1,n}",
    "−sinθ cosθ √(m(n+1)) C_{m−1,n+1}",
];

/// The two three-term-in-degree recurrences (multiplication by `i` and by `k`).
pub fn verify_recurrence<R: Real>(
    params: &EuclidParams2<R>,
    degmax: usize,
    ptmax: usize,
    tolerance: f64,
) -> VerifyReport {
    let top = ptmax as i64;
    let grid = RaisingGrid::new(params, degmax + 1, 0..=top, 0..=top);
    let (a, b, c, s) = (params.alpha(), params.beta(), params.cos(), params.sin());
    let (c2, s2, sc) = (c * c, s * s, s * c);
    let mut rel_i = Relation::new("recurrence in i", RECURRENCE_I);
    let mut rel_k = Relation::new("recurrence in k", RECURRENCE_K);
    for d in MultiIndex2::up_to_total(degmax) {
        let (m, n) = (d.first as i64, d.second as i64);
        let (fm, fn_) = (R::of_i64(m), R::of_i64(n));
        let sq = |x: R| x.sqrt();
        for i in 0..=top {
            for k in 0..=top {
                let g = |dm: i64, dn: i64| grid.get(m + dm, n + dn, i, k);
                let cc = g(0, 0);
                let common = [
                    sq(fn_ + R::one()) * g(0, 1),
                    sq(fn_) * g(0, -1),
                    sq(fn_ * (fm + R::one())) * g(1, -1),
                    sq(fm + R::one()) * g(1, 0),
                    sq(fm) * g(-1, 0),
                    sq(fm * (fn_ + R::one())) * g(-1, 1),
                ];
                rel_i.push(
                    (d.first, d.second),
                    (i, k),
                    R::of_i64(i) * cc,
                    &[
                        (fm * c2 + fn_ * s2 + a * a) * cc,
                        a * s * common[0],
                        a * s * common[1],
                        sc * common[2],
                        a * c * common[3],
                        a * c * common[4],
                        sc * common[5],
                    ],
                );
                rel_k.push(
                    (d.first, d.second),
                    (i, k),
                    R::of_i64(k) * cc,
                    &[
                        (fm * s2 + fn_ * c2 + b * b) * cc,
                        b * c * common[0],
                        b * c * common[1],
                        -sc * common[2],
                        -b * s * common[3],
                        -b * s * common[4],
                        -sc * common[5],
                    ],
                );
            }
        }
    }
    assess(
        "recurrence",
        tolerance,
        format!("m+n <= {degmax}; i,k <= {ptmax}"),
        &[rel_i, rel_k],
    )
}

const DIFFERENCE_M: &[&str] = &[
    "[i cos²θ + k sin²θ + ω²] C(i,k)",
    "−ω cosθ (i/α) C(i−1,k)",
    "−ω cosθ α C(i+1,k)",
    "−(iβ/α) cosθ sinθ C(i−1,k+1)",
    "ω sinθ (k/β) C(i,k−1)",
    "ω sinθ β C(i,k+1)",
    "−(kα/β) cosθ sinθ C(i+1,k−1)",
];

const DIFFERENCE_N: &[&str] = &[
    "[i sin²θ + k cos²θ + ζ²] C(i,k)",
    "−ζ sinθ (i/α) C(i−1,k)",
    "−ζ sinθ α C(i+1,k)",
    "(iβ/α) cosθ sinθ C(i−1,k+1)",
    "−ζ cosθ (k/β) C(i,k−1)",
    "−ζ cosθ β C(i,k+1)",
    "(kα/β) cosθ sinθ C(i+1,k−1)",
];

/// The two difference equations in `(i, k)` (eigenvalues `m` and `n`).
/// `C(−1, ·)` is the polynomial continued to negative arguments.
pub fn verify_difference<R: Real>(
    params: &EuclidParams2<R>,
    degmax: usize,
    ptmax: usize,
    tolerance: f64,
) -> VerifyReport {
    let top = ptmax as i64;
    let grid = RaisingGrid::new(params, degmax, -1..=top + 1, -1..=top + 1);
    let (a, b, c, s) = (params.alpha(), params.beta(), params.cos(), params.sin());
    let (c2, s2, sc) = (c * c, s * s, s * c);
    let (w, z) = (params.omega(), params.zeta());
    let mut rel_m = Relation::new("difference equation in m", DIFFERENCE_M);
    let mut rel_n = Relation::new("difference equation in n", DIFFERENCE_N);
    for d in MultiIndex2::up_to_total(degmax) {
        let (m, n) = (d.first as i64, d.second as i64);
        for i in 0..=top {
            for k in 0..=top {
                let g = |di: i64, dk: i64| grid.get(m, n, i + di, k + dk);
                let (fi, fk) = (R::of_i64(i), R::of_i64(k));
                let cc = g(0, 0);
                rel_m.push(
                    (d.first, d.second),
                    (i, k),
                    R::of_i64(m) * cc,
                    &[
                        (fi * c2 + fk * s2 + w * w) * cc,
                        -w * c * (fi / a) * g(-1, 0),
                        -w * c * a * g(1, 0),
                        -(fi * b / a) * sc * g(-1, 1),
                        w * s * (fk / b) * g(0, -1),
                        w * s * b * g(0, 1),
                        -(fk * a / b) * sc * g(1, -1),
                    ],
                );
                rel_n.push(
                    (d.first, d.second),
                    (i, k),
                    R::of_i64(n) * cc,
                    &[
                        (fi * s2 + fk * c2 + z * z) * cc,
                        -z * s * (fi / a) * g(-1, 0),
                        -z * s * a * g(1, 0),
                        (fi * b / a) * sc * g(-1, 1),
                        -z * c * (fk / b) * g(0, -1),
                        -z * c * b * g(0, 1),
                        (fk * a / b) * sc * g(1, -1),
                    ],
                );
            }
        }
    }
    assess(
        "difference",
        tolerance,
        format!("m+n <= {degmax}; i,k <= {ptmax}"),
        &[rel_m, rel_n],
    )
}

const LOWERING_M: &[&str] = &["α cosθ C(i+1,k)", "−β sinθ C(i,k+1)", "(β sinθ − α cosθ) C(i,k)"];

const LOWERING_N: &[&str] = &["α sinθ C(i+1,k)", "β cosθ C(i,k+1)", "−(α sinθ + β cosθ) C(i,k)"];

/// The two lowering relations `√m C_{m−1,n}` and `√n C_{m,n−1}`.
pub fn verify_lowering<R: Real>(
    params: &EuclidParams2<R>,
    degmax: usize,
    ptmax: usize,
    tolerance: f64,
) -> VerifyReport {
    let top = ptmax as i64;
    let grid = RaisingGrid::new(params, degmax, 0..=top + 1, 0..=top + 1);
    let (a, b, c, s) = (params.alpha(), params.beta(), params.cos(), params.sin());
    let mut rel_m = Relation::new("lowering in m", LOWERING_M);
    let mut rel_n = Relation::new("lowering in n", LOWERING_N);
    for d in MultiIndex2::up_to_total(degmax) {
        let (m, n) = (d.first as i64, d.second as i64);
        for i in 0..=top {
            for k in 0..=top {
                let g = |di: i64, dk: i64| grid.get(m, n, i + di, k + dk);
                rel_m.push(
                    (d.first, d.second),
                    (i, k),
                    R::of_i64(m).sqrt() * grid.get(m - 1, n, i, k),
                    &[a * c * g(1, 0), -b * s * g(0, 1), (b * s - a * c) * g(0, 0)],
                );
                rel_n.push(
                    (d.first, d.second),
                    (i, k),
                    R::of_i64(n).sqrt() * grid.get(m, n - 1, i, k),
                    &[a * s * g(1, 0), b * c * g(0, 1), -(a * s + b * c) * g(0, 0)],
                );
            }
        }
    }
    assess(
        "lowering",
        tolerance,
        format!("m+n <= {degmax}; i,k <= {ptmax}"),
        &[rel_m, rel_n],
    )
}

/// `S_{m,n}(i,k)` by the sum when possible, otherwise by inverting the
/// monic prefactor of the reference value.
fn s_value<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, pt: MultiIndex2) -> Option<R> {
    if let Ok(s) = eval_s_hypergeometric(params, deg, pt) {
        return Some(s);
    }
    let eps = params.linear_threshold();
    if params.omega().abs() <= eps || params.zeta().abs() <= eps {
        return None;
    }
    Some(eval_raising(params, deg, pt) / monic_prefactor(params, deg))
}

/// Exchange of degrees and variables under `T ↦ T⁻¹`:
///
/// ```text
/// C_{i,k}(m,n) = √(m! n! / (i! k!)) α̃^i β̃^k / (α^m β^n) C̃_{m,n}(i,k)
/// S_{i,k}(m,n) = S̃_{m,n}(i,k)
/// ```
///
/// over `m + n, i + k ≤ degmax`. Residuals are relative to `max(1, |lhs|)`.
pub fn verify_duality<R: Real>(params: &EuclidParams2<R>, degmax: usize, tolerance: f64) -> Result<VerifyReport> {
    let dual = params.dual()?;
    let (a, b) = (params.alpha(), params.beta());
    let (at, bt) = (dual.alpha(), dual.beta());
    let mut report = VerifyReport::new("duality", tolerance, format!("m+n, i+k <= {degmax}"));
    let s_form = s_value(params, MultiIndex2::new(1, 1), MultiIndex2::new(0, 0)).is_some()
        && s_value(&dual, MultiIndex2::new(1, 1), MultiIndex2::new(0, 0)).is_some();
    if !s_form {
        report.note("S-form skipped: ω or ζ vanishes for these parameters");
    }
    for deg in MultiIndex2::up_to_total(degmax) {
        for pt in MultiIndex2::up_to_total(degmax) {
            let (m, n, i, k) = (deg.first, deg.second, pt.first, pt.second);
            let lhs = eval_raising(params, pt, deg);
            let scale = (factorial_real::<R>(m) * factorial_real::<R>(n)
                / (factorial_real::<R>(i) * factorial_real::<R>(k)))
            .sqrt()
                * at.powi(i as i32)
                * bt.powi(k as i32)
                / (a.powi(m as i32) * b.powi(n as i32));
            let rhs = scale * eval_raising(&dual, deg, pt);
            let rel = ((lhs - rhs).abs() / lhs.abs().max(R::one())).approx();
            report.observe(rel, || format!("C-form: (m,n)={deg} (i,k)={pt}"));
            if s_form {
                if let (Some(sl), Some(sr)) = (s_value(params, pt, deg), s_value(&dual, deg, pt)) {
                    let rel = ((sl - sr).abs() / sl.abs().max(R::one())).approx();
                    report.observe(rel, || format!("S-form: (m,n)={deg} (i,k)={pt}"));
                }
            }
        }
    }
    Ok(report)
}

/// `C_{m,n}(i,k)` from the oscillator integral
/// `(1/W_{i,k}) ∫∫ Ψ_i(x₁) Ψ_k(x₂) Ψ_m(x̃₁) Ψ_n(x̃₂) dx₁ dx₂`.
///
/// With `x̃ = Qx + t` and `b = Qᵀt`, the substitution `y = x + b/2` turns
/// the product of the four Gaussians into `e^{−|y|²} e^{−(α²+β²)/2}`; the
/// constant cancels against `1/W`, so a plain tensor Gauss–Hermite rule in
/// `y` applies to a polynomial integrand.
pub fn integral_value(params: &EuclidParams2, deg: MultiIndex2, pt: MultiIndex2, nodes: usize) -> Result<f64> {
    let (m, n, i, k) = (deg.first, deg.second, pt.first, pt.second);
    let needed = m.max(n).max(i).max(k) + 1;
    if nodes < needed {
        return Err(Error::TooFewNodes { needed, got: nodes });
    }
    let w = params.weight_amp(i, k);
    if !(w >= UNDERFLOW_THRESHOLD) {
        return Err(Error::Underflow {
            value: w,
            threshold: UNDERFLOW_THRESHOLD,
        });
    }
    let map = params.affine_map();
    let (c, s) = (map.cos(), map.sin());
    let (ta, tb) = (map.a, map.b);
    let (b1, b2) = (c * ta + s * tb, -s * ta + c * tb);
    let rule = GaussHermite::new(nodes);
    let h_i: Vec<f64> = rule
        .nodes
        .iter()
        .map(|&y| hermite_function_polys(i, y - b1 / 2.0)[i])
        .collect();
    let h_k: Vec<f64> = rule
        .nodes
        .iter()
        .map(|&y| hermite_function_polys(k, y - b2 / 2.0)[k])
        .collect();
    let mut acc = NeumaierSum::new();
    for (p, (&y1, &w1)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        for (q, (&y2, &w2)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
            let xt1 = c * y1 - s * y2 + ta / 2.0;
            let xt2 = s * y1 + c * y2 + tb / 2.0;
            acc += w1 * w2 * h_i[p] * h_k[q] * hermite_function_poly(m, xt1) * hermite_function_poly(n, xt2);
        }
    }
    let scale = (factorial_real::<f64>(i) * factorial_real::<f64>(k)).sqrt()
        / (params.alpha().powi(i as i32) * params.beta().powi(k as i32));
    Ok(scale * acc.value())
}

/// Quadrature value against the reference evaluator at one `(deg, pt)`.
pub fn verify_integral(
    params: &EuclidParams2,
    deg: MultiIndex2,
    pt: MultiIndex2,
    nodes: usize,
    tolerance: f64,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(
        "integral",
        tolerance,
        format!("(m,n)={deg} (i,k)={pt}; {nodes} nodes per axis"),
    );
    let quad = integral_value(params, deg, pt, nodes)?;
    report.observe(quad - eval_raising(params, deg, pt), || {
        format!("(m,n)={deg} (i,k)={pt}")
    });
    Ok(report)
}

/// [`verify_integral`] over every `m, n, i, k ≤ max`.
pub fn verify_integral_box(params: &EuclidParams2, max: usize, nodes: usize, tolerance: f64) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(
        "integral",
        tolerance,
        format!("m,n,i,k <= {max}; {nodes} nodes per axis"),
    );
    for m in 0..=max {
        for n in 0..=max {
            for i in 0..=max {
                for k in 0..=max {
                    let (deg, pt) = (MultiIndex2::new(m, n), MultiIndex2::new(i, k));
                    let quad = integral_value(params, deg, pt, nodes)?;
                    report.observe(quad - eval_raising(params, deg, pt), || {
                        format!("(m,n)={deg} (i,k)={pt}")
                    });
                }
            }
        }
    }
    Ok(report)
}

/// At `θ = 0` the family factors as
/// `(−α)^m (−β)^n / √(m! n!) · C_m(i; α²) C_n(k; β²)`; checks every
/// evaluator defined there, relative to `max(1, |value|)`.
pub fn verify_zero_angle_factorization(
    alpha: f64,
    beta: f64,
    maxdeg: usize,
    ptmax: usize,
    tolerance: f64,
) -> Result<VerifyReport> {
    let params = EuclidParams2::new(0.0, alpha, beta)?;
    let ca = CharlierParam::new(alpha * alpha)?;
    let cb = CharlierParam::new(beta * beta)?;
    let mut report = VerifyReport::new(
        "zero-angle factorization",
        tolerance,
        format!("m,n <= {maxdeg}; i,k <= {ptmax}"),
    );
    for m in 0..=maxdeg {
        for n in 0..=maxdeg {
            let pre = (-alpha).powi(m as i32) * (-beta).powi(n as i32)
                / (factorial_real::<f64>(m) * factorial_real::<f64>(n)).sqrt();
            for i in 0..=ptmax {
                for k in 0..=ptmax {
                    let want = pre * charlier(m, i as f64, ca) * charlier(n, k as f64, cb);
                    let (deg, pt) = (MultiIndex2::new(m, n), MultiIndex2::new(i, k));
                    let got = [
                        ("raising", eval_raising(&params, deg, pt)),
                        ("genfun", eval_genfun(&params, deg, pt)),
                        ("hypergeometric", eval_hypergeometric(&params, deg, pt)?),
                    ];
                    for (name, v) in got {
                        report.observe((v - want).abs() / want.abs().max(1.0), || {
                            format!("{name}: (m,n)={deg} (i,k)={pt}")
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Compares every applicable evaluator with the reference over
/// `m + n ≤ degmax`, `i, k ≤ ptmax`.
///
/// The residual is the discrepancy divided by [`cross_algorithm_bound`], so
/// the tolerance is 1. Evaluators whose preconditions fail are skipped and
/// noted.
pub fn verify_cross_algorithm<R: Real>(params: &EuclidParams2<R>, degmax: usize, ptmax: usize) -> VerifyReport {
    let mut report = VerifyReport::new(
        "cross-algorithm",
        1.0,
        format!("m+n <= {degmax}; i,k <= {ptmax}; residual = |Δ| / bound"),
    );
    let probe = (MultiIndex2::new(0, 0), MultiIndex2::new(0, 0));
    let mut active = vec![Algorithm::GenFun];
    match eval_hypergeometric(params, probe.0, probe.1) {
        Ok(_) => active.push(Algorithm::Hypergeometric),
        Err(e) => report.note(format!("hypergeometric skipped: {e}")),
    }
    match eval_decomposition(params, probe.0, probe.1) {
        Ok(_) => active.push(Algorithm::Decomposition),
        Err(e) => report.note(format!("decomposition skipped: {e}")),
    }
    for deg in MultiIndex2::up_to_total(degmax) {
        for i in 0..=ptmax {
            for k in 0..=ptmax {
                let pt = MultiIndex2::new(i, k);
                let reference = eval_raising(params, deg, pt);
                let bound = cross_algorithm_bound(reference.approx());
                for &alg in &active {
                    let v = match alg {
                        Algorithm::GenFun => Ok(eval_genfun(params, deg, pt)),
                        Algorithm::Hypergeometric => eval_hypergeometric(params, deg, pt),
                        Algorithm::Decomposition => eval_decomposition(params, deg, pt),
                        Algorithm::Raising => Ok(reference),
                    };
                    let delta = v.map_or(f64::NAN, |v| (v - reference).approx());
                    report.observe(delta.abs() / bound, || {
                        format!(
                            "{alg}: (m,n)={deg} (i,k)={pt}, difference {delta:e} from {:e}",
                            reference.approx()
                        )
                    });
                }
            }
        }
    }
    report
}

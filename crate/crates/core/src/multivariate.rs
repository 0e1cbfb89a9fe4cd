//! d-variate Charlier polynomials attached to an element `(R, α)` of `E(d)`:
//!
//! ```text
//! e^{−Σ_{ij} R_{ij} α_i x_j} Π_k (1 + Σ_l R_{kl} x_l / α_k)^{i_k}
//!     = Σ C_n(i) x^n / √(n₁! ⋯ n_d!)
//! ```
//!
//! At `d = 2` the matrix `R = [[cosθ, sinθ], [−sinθ, cosθ]]`, the rotation
//! block of `T(θ, α, β)`, reproduces the bivariate family without transposition.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bivariate::{eval_genfun, eval_raising, MultiIndex2};
use crate::combinatorics::{factorial_real, NeumaierSum};
use crate::error::{Error, Result};
use crate::params::{EuclidParams2, EuclidParamsD};
use crate::poisson;
use crate::real::Real;
use crate::report::VerifyReport;
use crate::series::{MonomialBasis, SeriesPoly};
use crate::univariate::{charlier, CharlierParam};

/// A degree `(n₁, …, n_d)` or a lattice point `(i₁, …, i_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndexD(pub Vec<usize>);

impl MultiIndexD {
    pub fn new(entries: Vec<usize>) -> Self {
        Self(entries)
    }

    pub fn zeros(d: usize) -> Self {
        Self(vec![0; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// All indices of dimension `d` with total at most `max`, by total degree.
    pub fn up_to_total(d: usize, max: usize) -> Vec<MultiIndexD> {
        let basis = MonomialBasis::new(d, max);
        (0..basis.len()).map(|i| Self(basis.exponents(i).to_vec())).collect()
    }
}

impl fmt::Display for MultiIndexD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for MultiIndexD {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Invalid(format!("expected comma-separated non-negative integers, got `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// `W_i = e^{−Σ α_k²/2} Π α_k^{i_k} / √(i_k!)`.
pub fn weight_amp_d<R: Real>(params: &EuclidParamsD<R>, pt: &MultiIndexD) -> Result<R> {
    check_dim(params.dim(), pt.dim())?;
    let alphas = params.alphas();
    let norm_sq = alphas.iter().fold(R::zero(), |acc, &a| acc + a * a);
    let amp = alphas
        .iter()
        .zip(pt.entries())
        .fold(R::one(), |acc, (&a, &i)| acc * crate::params::scaled_power(a, i));
    Ok((-norm_sq / R::lit(2.0)).exp() * amp)
}

/// `e^{Σ λ_j x_j} Π_k (1 + Σ_l rows[k][l] x_l / α_k)^{pt_k}` and the same
/// product with every coefficient replaced by its absolute value.
pub(crate) fn generating_series<R: Real, Row: AsRef<[R]>>(
    basis: &Arc<MonomialBasis>,
    lambdas: &[R],
    rows: &[Row],
    alphas: &[R],
    pt: &[usize],
) -> (SeriesPoly<R>, SeriesPoly<R>) {
    let abs_lambdas: Vec<R> = lambdas.iter().map(|l| l.abs()).collect();
    let mut value = SeriesPoly::exp_linear(basis, lambdas);
    let mut magnitude = SeriesPoly::exp_linear(basis, &abs_lambdas);
    for ((row, &alpha), &e) in rows.iter().zip(alphas).zip(pt) {
        if e == 0 {
            continue;
        }
        let lin: Vec<R> = row.as_ref().iter().map(|&r| r / alpha).collect();
        let factor = SeriesPoly::binomial_power(basis, R::of_usize(e), &lin);
        magnitude = magnitude.mul(&factor.abs());
        value = value.mul(&factor);
    }
    (value, magnitude)
}

/// `λ_j = −Σ_i R_{ij} α_i`.
fn exponent<R: Real>(params: &EuclidParamsD<R>) -> Vec<R> {
    let d = params.dim();
    (0..d)
        .map(|j| -(0..d).fold(R::zero(), |acc, i| acc + params.rotation(i, j) * params.alphas()[i]))
        .collect()
}

/// Every `C_n(i) / √(n!)` with `|n| ≤ degmax` at the point `pt`.
pub fn charlier_d_coefficients<R: Real>(
    params: &EuclidParamsD<R>,
    degmax: usize,
    pt: &MultiIndexD,
) -> Result<SeriesPoly<R>> {
    check_dim(params.dim(), pt.dim())?;
    let basis = MonomialBasis::new(params.dim(), degmax);
    let rows = params.rotation_rows();
    Ok(generating_series(&basis, &exponent(params), &rows, params.alphas(), pt.entries()).0)
}

fn sqrt_factorials<R: Real>(deg: &MultiIndexD) -> R {
    deg.entries()
        .iter()
        .fold(R::one(), |acc, &n| acc * factorial_real::<R>(n))
        .sqrt()
}

/// `C_n(i)` by coefficient extraction.
pub fn eval_charlier_d<R: Real>(params: &EuclidParamsD<R>, deg: &MultiIndexD, pt: &MultiIndexD) -> Result<R> {
    check_dim(params.dim(), deg.dim())?;
    let series = charlier_d_coefficients(params, deg.total(), pt)?;
    Ok(series.coeff(deg.entries()) * sqrt_factorials::<R>(deg))
}

/// `C_n(i)` by the raising relations
///
/// ```text
/// √(n_j + 1) C_{n+e_j}(i) = −(Σ_l R_{lj} α_l) C_n(i) + Σ_l (i_l R_{lj} / α_l) C_n(i − e_l)
/// ```
///
/// raising the coordinates in order.
pub fn eval_raising_d<R: Real>(params: &EuclidParamsD<R>, deg: &MultiIndexD, pt: &MultiIndexD) -> Result<R> {
    check_dim(params.dim(), deg.dim())?;
    check_dim(params.dim(), pt.dim())?;
    let lambdas = exponent(params);
    let x: Vec<i64> = pt.entries().iter().map(|&i| i as i64).collect();
    let mut memo = HashMap::new();
    Ok(raise_d(params, &lambdas, deg.entries().to_vec(), x, &mut memo))
}

fn raise_d<R: Real>(
    params: &EuclidParamsD<R>,
    lambdas: &[R],
    deg: Vec<usize>,
    x: Vec<i64>,
    memo: &mut HashMap<(Vec<usize>, Vec<i64>), R>,
) -> R {
    let Some(j) = deg.iter().rposition(|&n| n > 0) else {
        return R::one();
    };
    if let Some(&v) = memo.get(&(deg.clone(), x.clone())) {
        return v;
    }
    let mut lower = deg.clone();
    lower[j] -= 1;
    let mut acc = NeumaierSum::new();
    acc += lambdas[j] * raise_d(params, lambdas, lower.clone(), x.clone(), memo);
    for l in 0..deg.len() {
        if x[l] == 0 {
            continue;
        }
        let mut shifted = x.clone();
        shifted[l] -= 1;
        let coef = R::of_i64(x[l]) * params.rotation(l, j) / params.alphas()[l];
        acc += coef * raise_d(params, lambdas, lower.clone(), shifted, memo);
    }
    let value = acc.value() / R::of_usize(deg[j]).sqrt();
    memo.insert((deg, x), value);
    value
}

/// `Σ_i W_i² C_n(i) C_m(i) = δ_{nm}` over `|n|, |m| ≤ degmax`, summing every
/// `i_k ≤ cutoff`.
pub fn verify_orthogonality_d(params: &EuclidParamsD, degmax: usize, cutoff: usize, tolerance: f64) -> VerifyReport {
    let d = params.dim();
    let degrees = MultiIndexD::up_to_total(d, degmax);
    let nd = degrees.len();
    let scales: Vec<f64> = degrees.iter().map(sqrt_factorials::<f64>).collect();
    let pmfs: Vec<Vec<f64>> = params
        .alphas()
        .iter()
        .map(|a| poisson::pmf_table(a * a, cutoff))
        .collect();
    let basis = MonomialBasis::new(d, degmax);
    let rows = params.rotation_rows();
    let lambdas = exponent(params);

    let mut gram = vec![NeumaierSum::<f64>::new(); nd * nd];
    let mut growth = 0.0f64;
    let mut pt = vec![0usize; d];
    loop {
        let w: f64 = pt.iter().zip(&pmfs).map(|(&i, p)| p[i]).product();
        let series = generating_series(&basis, &lambdas, &rows, params.alphas(), &pt).0;
        let values: Vec<f64> = degrees
            .iter()
            .zip(&scales)
            .map(|(deg, s)| series.coeff(deg.entries()) * s)
            .collect();
        for a in 0..nd {
            let wa = w * values[a];
            for b in a..nd {
                gram[a * nd + b].add(wa * values[b]);
            }
        }
        if pt.contains(&cutoff) {
            growth = values.iter().fold(growth, |g, v| g.max(v * v));
        }
        // odometer over [0, cutoff]^d
        let mut axis = 0;
        while axis < d && pt[axis] == cutoff {
            pt[axis] = 0;
            axis += 1;
        }
        if axis == d {
            break;
        }
        pt[axis] += 1;
    }

    let mut report = VerifyReport::new(
        "orthogonality (d-variate)",
        tolerance,
        format!("d = {d}; |n|, |m| <= {degmax}; i_k <= {cutoff}"),
    );
    for a in 0..nd {
        for b in a..nd {
            let target = if a == b { 1.0 } else { 0.0 };
            report.observe(gram[a * nd + b].value() - target, || {
                format!("{} vs {}", degrees[a], degrees[b])
            });
        }
    }
    let tail: f64 = params.alphas().iter().map(|a| poisson::tail(a * a, cutoff)).sum();
    report.tail_bound = tail * growth.max(1.0);
    if report.tail_bound > tolerance {
        report.note(format!(
            "truncation tail bound {:.3e} exceeds tolerance; increase the cutoff",
            report.tail_bound
        ));
    }
    report
}

/// With `R = I` the family factors as `Π_k (−α_k)^{n_k} / √(n_k!) C_{n_k}(i_k; α_k²)`.
/// Residuals are relative to `max(1, |value|)`.
pub fn verify_identity_factorization_d(
    alphas: &[f64],
    degmax: usize,
    ptmax: usize,
    tolerance: f64,
) -> Result<VerifyReport> {
    let d = alphas.len();
    let identity: Vec<Vec<f64>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let params = EuclidParamsD::new(identity, alphas.to_vec())?;
    let cps = alphas
        .iter()
        .map(|a| CharlierParam::new(a * a))
        .collect::<Result<Vec<_>>>()?;
    let mut report = VerifyReport::new(
        "identity-rotation factorization",
        tolerance,
        format!("d = {d}; |n| <= {degmax}; i_k <= {ptmax}"),
    );
    let points = MultiIndexD::up_to_total(d, ptmax * d)
        .into_iter()
        .filter(|p| p.entries().iter().all(|&i| i <= ptmax));
    let degrees = MultiIndexD::up_to_total(d, degmax);
    for pt in points {
        let series = charlier_d_coefficients(&params, degmax, &pt)?;
        for deg in &degrees {
            let want: f64 = (0..d)
                .map(|k| {
                    let n = deg.entries()[k];
                    (-alphas[k]).powi(n as i32) / factorial_real::<f64>(n).sqrt()
                        * charlier(n, pt.entries()[k] as f64, cps[k])
                })
                .product();
            let got = series.coeff(deg.entries()) * sqrt_factorials::<f64>(deg);
            report.observe((got - want).abs() / want.abs().max(1.0), || format!("n={deg} i={pt}"));
        }
    }
    Ok(report)
}

/// The `d = 2` family built from `T(θ, α, β)` against the bivariate
/// evaluators (generating function and raising).
pub fn verify_planar_reduction(params: &EuclidParams2, degmax: usize, ptmax: usize, tolerance: f64) -> VerifyReport {
    let pd = EuclidParamsD::from_planar(params);
    let mut report = VerifyReport::new("d = 2 reduction", tolerance, format!("m+n <= {degmax}; i,k <= {ptmax}"));
    for i in 0..=ptmax {
        for k in 0..=ptmax {
            let pt = MultiIndexD::new(vec![i, k]);
            let series = charlier_d_coefficients(&pd, degmax, &pt).expect("dimensions agree");
            for deg in MultiIndex2::up_to_total(degmax) {
                let dd = MultiIndexD::new(vec![deg.first, deg.second]);
                let got = series.coeff(dd.entries()) * sqrt_factorials::<f64>(&dd);
                let p2 = MultiIndex2::new(i, k);
                for (name, want) in [
                    ("genfun", eval_genfun(params, deg, p2)),
                    ("raising", eval_raising(params, deg, p2)),
                ] {
                    report.observe((got - want).abs() / want.abs().max(1.0), || {
                        format!("{name}: (m,n)={deg} (i,k)={p2}")
                    });
                }
            }
        }
    }
    report
}

/// A random element of `SO(d)`: Gram–Schmidt on a uniform random matrix,
/// then a sign flip of the first row if the determinant is negative.
pub fn random_orthogonal<G: Rng + ?Sized>(d: usize, rng: &mut G) -> Vec<Vec<f64>> {
    loop {
        let mut rows: Vec<Vec<f64>> = (0..d)
            .map(|_| (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .collect();
        let mut ok = true;
        for i in 0..d {
            for _ in 0..2 {
                for j in 0..i {
                    let dot: f64 = (0..d).map(|c| rows[i][c] * rows[j][c]).sum();
                    for c in 0..d {
                        rows[i][c] -= dot * rows[j][c];
                    }
                }
            }
            let norm = rows[i].iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-6 {
                ok = false;
                break;
            }
            rows[i].iter_mut().for_each(|x| *x /= norm);
        }
        if !ok {
            continue;
        }
        if determinant(&rows) < 0.0 {
            rows[0].iter_mut().for_each(|x| *x = -*x);
        }
        return rows;
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(m: &[Vec<f64>]) -> f64 {
    let d = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut det = 1.0;
    for col in 0..d {
        let pivot = (col..d)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .expect("non-empty");
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..d {
            let f = a[row][col] / a[col][col];
            for c in col..d {
                a[row][c] -= f * a[col][c];
            }
        }
    }
    det
}

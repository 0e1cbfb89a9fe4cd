//! Coefficient extraction from
//!
//! ```text
//! e^{−ωx − ζy} [1 + (x/α)cosθ + (y/α)sinθ]^i [1 − (x/β)sinθ + (y/β)cosθ]^k
//!     = Σ C_{m,n}(i,k) x^m y^n / √(m! n!)
//! ```

use super::{rounding_estimate, MultiIndex2};
use crate::combinatorics::factorial_real;
use crate::multivariate::generating_series;
use crate::params::EuclidParams2;
use crate::real::Real;
use crate::series::{MonomialBasis, SeriesPoly};

/// `C_{m,n}(i,k)` read off the truncated generating function.
pub fn eval_genfun<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, pt: MultiIndex2) -> R {
    eval_genfun_with_error(params, deg, pt).0
}

/// Value and rounding-error estimate.
pub fn eval_genfun_with_error<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, pt: MultiIndex2) -> (R, R) {
    let lambdas = [-params.omega(), -params.zeta()];
    extract(params, deg, pt, lambdas)
}

/// Same extraction with the exponential factor replaced by
/// `e^{λ₁x + λ₂y}`; used to compare sign conventions of the exponent.
pub fn eval_genfun_with_exponent<R: Real>(
    params: &EuclidParams2<R>,
    deg: MultiIndex2,
    pt: MultiIndex2,
    lambdas: [R; 2],
) -> R {
    extract(params, deg, pt, lambdas).0
}

/// Every coefficient `C_{m,n}(i,k) / √(m! n!)` with `m + n ≤ degmax`.
pub fn genfun_coefficients<R: Real>(params: &EuclidParams2<R>, degmax: usize, pt: MultiIndex2) -> SeriesPoly<R> {
    let basis = MonomialBasis::new(2, degmax);
    let lambdas = [-params.omega(), -params.zeta()];
    generating_series(
        &basis,
        &lambdas,
        &rows(params),
        &[params.alpha(), params.beta()],
        &[pt.first, pt.second],
    )
    .0
}

fn rows<R: Real>(params: &EuclidParams2<R>) -> [[R; 2]; 2] {
    let (c, s) = (params.cos(), params.sin());
    [[c, s], [-s, c]]
}

fn extract<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, pt: MultiIndex2, lambdas: [R; 2]) -> (R, R) {
    let basis = MonomialBasis::new(2, deg.total());
    let (series, magnitude) = generating_series(
        &basis,
        &lambdas,
        &rows(params),
        &[params.alpha(), params.beta()],
        &[pt.first, pt.second],
    );
    let scale = (factorial_real::<R>(deg.first) * factorial_real::<R>(deg.second)).sqrt();
    let exps = [deg.first, deg.second];
    let value = series.coeff(&exps) * scale;
    let mag = magnitude.coeff(&exps) * scale;
    (value, rounding_estimate(mag, 2 * deg.total() + 3))
}

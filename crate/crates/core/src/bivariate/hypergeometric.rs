//! Explicit quadruple sum
//!
//! ```text
//! S_{m,n}(i,k) = Σ (−m)_{ρ+μ} (−n)_{σ+ν} (−i)_{ρ+σ} (−k)_{μ+ν} / (ρ! σ! μ! ν!)
//!                  · u11^ρ u12^σ u21^μ u22^ν
//! C_{m,n}(i,k) = (−1)^{m+n} ω^m ζ^n S_{m,n}(i,k) / √(m! n!)
//! ```
//!
//! Every Pochhammer symbol of a negative integer truncates, so the sum is
//! finite with `ρ + μ ≤ m`, `σ + ν ≤ n`, `ρ + σ ≤ i`, `μ + ν ≤ k`.

use super::{rounding_estimate, MultiIndex2};
use crate::combinatorics::{factorial_real, pochhammer, NeumaierSum};
use crate::error::{Error, Result};
use crate::params::EuclidParams2;
use crate::real::{sign_pow, Real};

const DENOMINATORS: [&str; 4] = [
    "α²cosθ − αβ sinθ",
    "α²sinθ + αβ cosθ",
    "β²sinθ − αβ cosθ",
    "β²cosθ + αβ sinθ",
];

fn u_coefficients<R: Real>(params: &EuclidParams2<R>) -> Result<[R; 4]> {
    let d = params.derive();
    let us = [d.u11, d.u12, d.u21, d.u22];
    for (u, name) in us.iter().zip(DENOMINATORS) {
        if u.is_none() {
            return Err(Error::Degenerate {
                algorithm: "hypergeometric",
                denominator: name.to_string(),
            });
        }
    }
    let eps = params.linear_threshold();
    if d.omega.abs() <= eps {
        return Err(Error::Degenerate {
            algorithm: "hypergeometric",
            denominator: "ω = α cosθ − β sinθ".into(),
        });
    }
    if d.zeta.abs() <= eps {
        return Err(Error::Degenerate {
            algorithm: "hypergeometric",
            denominator: "ζ = α sinθ + β cosθ".into(),
        });
    }
    Ok(us.map(|u| u.expect("checked above")))
}

/// `S_{m,n}(i,k)`.
pub fn eval_s_hypergeometric<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, pt: MultiIndex2) -> Result<R> {
    let u = u_coefficients(params)?;
    Ok(s_sum(u, deg, pt).0)
}

/// `(−1)^{m+n} ω^m ζ^n / √(m! n!)`, the factor taking `S` to `C`.
pub fn monic_prefactor<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2) -> R {
    let (m, n) = (deg.first, deg.second);
    sign_pow::<R>(m + n) * params.omega().powi(m as i32) * params.zeta().powi(n as i32)
        / (factorial_real::<R>(m) * factorial_real::<R>(n)).sqrt()
}

/// `C_{m,n}(i,k)` from the hypergeometric sum; refuses degenerate parameters.
pub fn eval_hypergeometric<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, pt: MultiIndex2) -> Result<R> {
    Ok(eval_hypergeometric_with_error(params, deg, pt)?.0)
}

/// Value and rounding-error estimate.
pub fn eval_hypergeometric_with_error<R: Real>(
    params: &EuclidParams2<R>,
    deg: MultiIndex2,
    pt: MultiIndex2,
) -> Result<(R, R)> {
    let u = u_coefficients(params)?;
    let (s, magnitude) = s_sum(u, deg, pt);
    let pre = monic_prefactor(params, deg);
    Ok((pre * s, rounding_estimate(pre.abs() * magnitude, deg.total() + 4)))
}

/// The sum and the sum of its absolute terms.
fn s_sum<R: Real>([u11, u12, u21, u22]: [R; 4], deg: MultiIndex2, pt: MultiIndex2) -> (R, R) {
    let (m, n, i, k) = (deg.first, deg.second, pt.first, pt.second);
    let neg = |x: usize| -R::of_usize(x);
    let pow = |u: R, e: usize| u.powi(e as i32);
    let fact = factorial_real::<R>;
    let mut acc = NeumaierSum::new();
    let mut magnitude = R::zero();
    for rho in 0..=m.min(i) {
        for mu in 0..=(m - rho).min(k) {
            let a = pochhammer(neg(m), rho + mu);
            for sigma in 0..=n.min(i - rho) {
                let b = a * pochhammer(neg(i), rho + sigma);
                for nu in 0..=(n - sigma).min(k - mu) {
                    let term = b * pochhammer(neg(n), sigma + nu) * pochhammer(neg(k), mu + nu)
                        / (fact(rho) * fact(sigma) * fact(mu) * fact(nu))
                        * pow(u11, rho)
                        * pow(u12, sigma)
                        * pow(u21, mu)
                        * pow(u22, nu);
                    acc += term;
                    magnitude += term.abs();
                }
            }
        }
    }
    (acc.value(), magnitude)
}

//! Expansion in univariate Charlier and Krawtchouk polynomials:
//!
//! ```text
//! C_{m,n}(i,k) = (−1)^{m+n} α^{m+n} cos^m θ sin^n θ / √(m! n!)
//!     Σ_{v=0}^{m+n} C(m+n, v) (−β sinθ / (α cosθ))^v
//!         C_v(k; β²) C_{m+n−v}(i; α²) K_n(v; sin²θ, m+n)
//! ```

use super::{rounding_estimate, MultiIndex2};
use crate::combinatorics::{binomial_f64, factorial_real, NeumaierSum};
use crate::error::{Error, Result};
use crate::params::{EuclidParams2, TRIG_DEGENERACY};
use crate::real::{sign_pow, Real};
use crate::univariate::{charlier, krawtchouk, CharlierParam, KrawtchoukParam};

/// `C_{m,n}(i,k)` from the univariate expansion.
///
/// Undefined on the axes `sinθ cosθ = 0`. Like the hypergeometric evaluator
/// it also refuses where `ω` or `ζ` vanishes, so the two closed forms share
/// one domain and every refusal points to [`super::eval_raising`].
pub fn eval_decomposition<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, pt: MultiIndex2) -> Result<R> {
    Ok(eval_decomposition_with_error(params, deg, pt)?.0)
}

/// Value and rounding-error estimate.
pub fn eval_decomposition_with_error<R: Real>(
    params: &EuclidParams2<R>,
    deg: MultiIndex2,
    pt: MultiIndex2,
) -> Result<(R, R)> {
    let sc = (params.sin() * params.cos()).approx();
    if !(sc.abs() >= TRIG_DEGENERACY) {
        return Err(Error::DecompositionUndefined { value: sc.abs() });
    }
    let eps = params.linear_threshold();
    if params.omega().abs() <= eps {
        return Err(Error::Degenerate {
            algorithm: "decomposition",
            denominator: "ω = α cosθ − β sinθ".into(),
        });
    }
    if params.zeta().abs() <= eps {
        return Err(Error::Degenerate {
            algorithm: "decomposition",
            denominator: "ζ = α sinθ + β cosθ".into(),
        });
    }
    expansion(params, deg, pt)
}

/// The sum itself; needs only `sinθ cosθ ≠ 0`.
fn expansion<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, pt: MultiIndex2) -> Result<(R, R)> {
    let (a, b, c, s) = (params.alpha(), params.beta(), params.cos(), params.sin());
    let (m, n) = (deg.first, deg.second);
    let total = m + n;
    let x_i = R::of_usize(pt.first);
    let x_k = R::of_usize(pt.second);
    let charlier_i = CharlierParam::new(a * a)?;
    let charlier_k = CharlierParam::new(b * b)?;
    let kraw = KrawtchoukParam::new(s * s, total)?;
    let ratio = -b * s / (a * c);

    let mut acc = NeumaierSum::new();
    let mut magnitude = R::zero();
    let mut ratio_pow = R::one();
    for v in 0..=total {
        let term = R::lit(binomial_f64(total as u64, v as i64))
            * ratio_pow
            * charlier(v, x_k, charlier_k)
            * charlier(total - v, x_i, charlier_i)
            * krawtchouk(n, R::of_usize(v), kraw)?;
        acc += term;
        magnitude += term.abs();
        ratio_pow *= ratio;
    }
    let pre = sign_pow::<R>(total) * a.powi(total as i32) * c.powi(m as i32) * s.powi(n as i32)
        / (factorial_real::<R>(m) * factorial_real::<R>(n)).sqrt();
    Ok((
        pre * acc.value(),
        rounding_estimate(pre.abs() * magnitude, 2 * total + 4),
    ))
}

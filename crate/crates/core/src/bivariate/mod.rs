//! Bivariate Charlier polynomials `C_{m,n}(i,k)` attached to `T(θ, α, β)`.
//!
//! Four independent evaluators are provided. [`eval_raising`] is the
//! reference and is valid for every `α, β ≠ 0`; the others are checked
//! against it.

mod decomposition;
mod genfun;
mod hypergeometric;
mod raising;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::EuclidParams2;
use crate::real::Real;
use crate::report::EvalReport;

pub use decomposition::{eval_decomposition, eval_decomposition_with_error};
pub use genfun::{eval_genfun, eval_genfun_with_error, eval_genfun_with_exponent, genfun_coefficients};
pub use hypergeometric::{eval_hypergeometric, eval_hypergeometric_with_error, eval_s_hypergeometric, monic_prefactor};
pub use raising::{eval_raising, eval_raising_at, eval_raising_with_error, RaisingGrid, RaisingOrder};

/// A degree `(m, n)` or a lattice point `(i, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct MultiIndex2 {
    pub first: usize,
    pub second: usize,
}

impl MultiIndex2 {
    pub const fn new(first: usize, second: usize) -> Self {
        Self { first, second }
    }

    pub const fn total(&self) -> usize {
        self.first + self.second
    }

    /// All indices with `first + second ≤ max`, ordered by total degree.
    pub fn up_to_total(max: usize) -> impl Iterator<Item = MultiIndex2> {
        (0..=max).flat_map(|t| (0..=t).rev().map(move |a| MultiIndex2::new(a, t - a)))
    }
}

impl From<(usize, usize)> for MultiIndex2 {
    fn from((first, second): (usize, usize)) -> Self {
        Self { first, second }
    }
}

impl fmt::Display for MultiIndex2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

impl FromStr for MultiIndex2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("expected two non-negative integers `a,b`, got `{s}`"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok(Self::new(
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Raising,
    GenFun,
    Hypergeometric,
    Decomposition,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Raising,
        Algorithm::GenFun,
        Algorithm::Hypergeometric,
        Algorithm::Decomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Raising => "raising",
            Algorithm::GenFun => "genfun",
            Algorithm::Hypergeometric => "hypergeometric",
            Algorithm::Decomposition => "decomposition",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "raising" => Ok(Algorithm::Raising),
            "genfun" => Ok(Algorithm::GenFun),
            "hyper" | "hypergeometric" => Ok(Algorithm::Hypergeometric),
            "decomp" | "decomposition" => Ok(Algorithm::Decomposition),
            other => Err(Error::Invalid(format!("unknown algorithm `{other}`"))),
        }
    }
}

/// Evaluates `C_{m,n}(i,k)` with the chosen algorithm.
pub fn evaluate<R: Real>(
    algorithm: Algorithm,
    params: &EuclidParams2<R>,
    deg: MultiIndex2,
    pt: MultiIndex2,
) -> Result<EvalReport> {
    let (value, error) = evaluate_with_error(algorithm, params, deg, pt)?;
    Ok(EvalReport {
        value: value.approx(),
        algorithm,
        error_estimate: error.approx().abs(),
    })
}

/// Value and rounding-error estimate in the working precision.
pub fn evaluate_with_error<R: Real>(
    algorithm: Algorithm,
    params: &EuclidParams2<R>,
    deg: MultiIndex2,
    pt: MultiIndex2,
) -> Result<(R, R)> {
    match algorithm {
        Algorithm::Raising => Ok(eval_raising_with_error(params, deg, pt)),
        Algorithm::GenFun => Ok(eval_genfun_with_error(params, deg, pt)),
        Algorithm::Hypergeometric => eval_hypergeometric_with_error(params, deg, pt),
        Algorithm::Decomposition => eval_decomposition_with_error(params, deg, pt),
    }
}

/// Rounding-error estimate for a value assembled from terms of total
/// magnitude `magnitude` in `steps` dependent operations.
pub(crate) fn rounding_estimate<R: Real>(magnitude: R, steps: usize) -> R {
    R::rounding_unit() * magnitude * R::of_usize(steps.max(1))
}

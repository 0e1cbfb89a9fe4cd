//! Multivariate Charlier polynomials arising as matrix elements of the
//! Euclidean group acting on harmonic-oscillator states.
//!
//! The bivariate family `C_{m,n}(i,k)` is orthogonal on the product of two
//! Poisson distributions with parameters `α²` and `β²`. This crate evaluates it
//! four independent ways and checks the structural identities it satisfies:
//!
//! - [`bivariate::eval_raising`]: iterated raising relations (the reference)
//! - [`bivariate::eval_genfun`]: coefficient extraction from the generating function
//! - [`bivariate::eval_hypergeometric`]: the four-fold hypergeometric sum
//! - [`bivariate::eval_decomposition`]: sum of univariate Charlier × Krawtchouk products
//!
//! plus the d-variate generalization in [`multivariate`] and the bivariate
//! Krawtchouk contraction limit in [`krawtchouk2d`].
//!
//! All evaluators are generic over [`Real`]; `f64` is the default and the
//! `extended` feature adds a double-double backend.

// `!(x >= bound)` guards reject NaN; index loops mirror the matrix formulas
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod bivariate;
pub mod combinatorics;
pub mod error;
pub mod krawtchouk2d;
pub mod multivariate;
pub mod params;
pub mod poisson;
pub mod quadrature;
pub mod real;
pub mod report;
pub mod series;
pub mod univariate;

pub use bivariate::{
    eval_decomposition, eval_genfun, eval_hypergeometric, eval_raising, evaluate, evaluate_with_error, Algorithm,
    MultiIndex2,
};
pub use error::{Error, Result};
pub use krawtchouk2d::{krawtchouk2, limit_study, rotation_zxz, KrawtchoukParams2, Rotation3};
pub use multivariate::{eval_charlier_d, weight_amp_d, MultiIndexD};
pub use params::{AffineMap2, DerivedParams2, EuclidParams2, EuclidParamsD};
#[cfg(feature = "extended")]
pub use real::Extended;
pub use real::Real;
pub use report::{EvalReport, VerifyReport};
pub use series::SeriesPoly;

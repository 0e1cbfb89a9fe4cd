use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("factorial argument {n} exceeds the configured cap {cap}")]
    FactorialCap { n: u64, cap: u64 },

    #[error("multinomial requires m + n <= N (got N={total}, m={m}, n={n})")]
    MultinomialRange { total: u64, m: u64, n: u64 },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// An evaluator's closed form divides by a quantity that vanishes for
    /// these parameters. The message names the vanishing denominator.
    #[error(
        "{algorithm} is degenerate for these parameters: {denominator} vanishes; use the raising evaluator instead"
    )]
    Degenerate {
        algorithm: &'static str,
        denominator: String,
    },

    /// The decomposition into univariate families divides by `cosθ` and
    /// carries `sin^n θ`; it is undefined on the coordinate axes.
    #[error("decomposition undefined at sinθcosθ=0 (|sinθ cosθ| = {value:e})")]
    DecompositionUndefined { value: f64 },

    #[error("degenerate dual parameters: {which} = {value:e} vanishes (tanθ = α/β or α tanθ = -β)")]
    DegenerateDual { which: &'static str, value: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("dimension {d} exceeds the configured maximum {max}")]
    DimensionTooLarge { d: usize, max: usize },

    #[error("matrix is not orthogonal: max |R Rᵀ - I| = {deviation:e}")]
    NotOrthogonal { deviation: f64 },

    #[error("rotation has determinant {det}, expected 1")]
    NotProperRotation { det: f64 },

    #[error("{what} ({m}, {n}) leaves the simplex of size N = {total}")]
    OutOfSimplex {
        what: &'static str,
        m: usize,
        n: usize,
        total: usize,
    },

    #[error("weight amplitude W = {value:e} underflows (threshold {threshold:e})")]
    Underflow { value: f64, threshold: f64 },

    #[error("quadrature needs at least {needed} nodes per axis, got {got}")]
    TooFewNodes { needed: usize, got: usize },

    #[error("{0}")]
    Invalid(String),
}

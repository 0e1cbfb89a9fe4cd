//! Result records shared by the evaluators, the verifiers and the CLI.

use serde::{Deserialize, Serialize};

use crate::bivariate::Algorithm;

/// A polynomial value with the algorithm that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub value: f64,
    pub algorithm: Algorithm,
    /// Rounding-error estimate, `ε` times the magnitude of the terms that
    /// were combined to form `value`. Always `≥ 0`.
    pub error_estimate: f64,
}

/// Outcome of checking one identity over a grid.
///
/// `pass` holds exactly when `max_residual <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub grid: String,
    /// Bound on what truncating an infinite sum may have dropped; zero for
    /// finite identities.
    pub tail_bound: f64,
    pub pass: bool,
    /// Grid location of the largest residual.
    pub worst_location: Option<String>,
    /// For failed identities: the single term whose sign flip makes the
    /// identity hold, if there is one.
    pub suspect_term: Option<String>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn new(identity: impl Into<String>, tolerance: f64, grid: impl Into<String>) -> Self {
        Self {
            identity: identity.into(),
            max_residual: 0.0,
            tolerance,
            grid: grid.into(),
            tail_bound: 0.0,
            pass: true,
            worst_location: None,
            suspect_term: None,
            notes: Vec::new(),
        }
    }

    /// Records one residual; NaN counts as an infinite violation.
    pub fn observe(&mut self, residual: f64, location: impl FnOnce() -> String) {
        let r = if residual.is_nan() {
            f64::INFINITY
        } else {
            residual.abs()
        };
        if r > self.max_residual || self.worst_location.is_none() {
            self.max_residual = r.max(self.max_residual);
            self.worst_location = Some(location());
        }
        self.pass = self.max_residual <= self.tolerance;
    }

    /// Folds another report's residuals into this one.
    pub fn absorb(&mut self, other: &VerifyReport) {
        if other.max_residual > self.max_residual || self.worst_location.is_none() {
            self.max_residual = self.max_residual.max(other.max_residual);
            self.worst_location = other
                .worst_location
                .as_ref()
                .map(|w| format!("{}: {w}", other.identity));
        }
        self.tail_bound = self.tail_bound.max(other.tail_bound);
        if self.suspect_term.is_none() {
            self.suspect_term = other.suspect_term.clone();
        }
        self.notes.extend(other.notes.iter().cloned());
        self.pass = self.max_residual <= self.tolerance;
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

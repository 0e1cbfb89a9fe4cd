//! Parameter flags shared by every subcommand.

use std::path::PathBuf;
use std::str::FromStr;

use charlier_core::{EuclidParams2, EuclidParamsD};
use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, Result};

/// `p/q`, an angle of `pπ/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiFraction {
    pub p: i64,
    pub q: i64,
}

impl FromStr for PiFraction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected `p/q` with integers p and q, got `{s}`");
        let (p, q) = s.split_once('/').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err("denominator of --theta-pi-frac must be nonzero".into());
        }
        Ok(Self { p, q })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    /// f64
    Double,
    /// double-double, about 32 significant digits
    Extended,
}

impl std::fmt::Display for Precision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Precision::Double => "double",
            Precision::Extended => "extended",
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Rotation angle in radians.
    #[arg(
        long,
        default_value_t = 0.0,
        allow_hyphen_values = true,
        conflicts_with = "theta_pi_frac"
    )]
    pub theta: f64,

    /// Rotation angle as a rational multiple of π, e.g. `1/4`.
    #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
    pub theta_pi_frac: Option<PiFraction>,

    /// First translation component.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub alpha: f64,

    /// Second translation component.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub beta: f64,

    /// Number of variables; selects the d-variate family.
    #[arg(long, conflicts_with_all = ["theta", "theta_pi_frac", "alpha", "beta"])]
    pub dim: Option<usize>,

    /// JSON file holding the d×d orthogonal matrix as an array of rows
    /// (identity when omitted).
    #[arg(long = "R", value_name = "PATH", conflicts_with_all = ["theta", "theta_pi_frac", "alpha", "beta"])]
    pub rotation: Option<PathBuf>,

    /// Translation components of the d-variate family.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with_all = ["theta", "theta_pi_frac", "alpha", "beta"]
    )]
    pub alphas: Option<Vec<f64>>,
}

#[derive(Debug, Clone)]
pub enum ParamSet {
    Planar(EuclidParams2),
    Multi(EuclidParamsD),
}

impl ParamArgs {
    pub fn resolve(&self) -> Result<ParamSet> {
        if self.dim.is_none() && self.rotation.is_none() && self.alphas.is_none() {
            let params = match self.theta_pi_frac {
                Some(PiFraction { p, q }) => EuclidParams2::from_pi_fraction(p, q, self.alpha, self.beta)?,
                None => EuclidParams2::new(self.theta, self.alpha, self.beta)?,
            };
            return Ok(ParamSet::Planar(params));
        }
        let alphas = self
            .alphas
            .clone()
            .ok_or_else(|| CliError::Usage("--alphas is required for the d-variate family".into()))?;
        if let Some(d) = self.dim {
            if d != alphas.len() {
                return Err(charlier_core::Error::DimensionMismatch {
                    expected: d,
                    got: alphas.len(),
                }
                .into());
            }
        }
        let rows = match &self.rotation {
            Some(path) => read_matrix(path)?,
            None => identity(alphas.len()),
        };
        Ok(ParamSet::Multi(EuclidParamsD::new(rows, alphas)?))
    }
}

fn read_matrix(path: &PathBuf) -> Result<Vec<Vec<f64>>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::ReadJson {
        path: path.clone(),
        source,
    })
}

fn identity(d: usize) -> Vec<Vec<f64>> {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

impl ParamSet {
    pub fn to_json(&self) -> Value {
        match self {
            ParamSet::Planar(p) => json!({
                "theta": p.theta(),
                "alpha": p.alpha(),
                "beta": p.beta(),
                "theta_pi_frac": p.pi_fraction().map(|(p, q)| format!("{p}/{q}")),
            }),
            ParamSet::Multi(p) => json!({ "R": p.rotation_rows(), "alphas": p.alphas() }),
        }
    }

    /// The bivariate parameters, for commands without a d-variate form.
    pub fn planar(&self, command: &str) -> Result<&EuclidParams2> {
        match self {
            ParamSet::Planar(p) => Ok(p),
            ParamSet::Multi(_) => Err(CliError::Usage(format!(
                "`{command}` works on the bivariate family only; drop --dim/--R/--alphas"
            ))),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ParamSet::Planar(_) => 2,
            ParamSet::Multi(p) => p.dim(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            ParamSet::Planar(p) => match p.pi_fraction() {
                Some((n, q)) => {
                    let num = match n {
                        1 => String::new(),
                        -1 => "-".into(),
                        n => n.to_string(),
                    };
                    format!("θ = {num}π/{q}, α = {}, β = {}", p.alpha(), p.beta())
                }
                None => format!("θ = {}, α = {}, β = {}", p.theta(), p.alpha(), p.beta()),
            },
            ParamSet::Multi(p) => format!("d = {}, alphas = {:?}", p.dim(), p.alphas()),
        }
    }
}

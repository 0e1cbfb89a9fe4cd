//! Euclidean-group parameters and everything derived from them.
//!
//! A planar element `T(θ, α, β)` acts as
//!
//! ```text
//!     ⎛  cosθ  sinθ  α/√2 ⎞
//!     ⎜ -sinθ  cosθ  β/√2 ⎟
//!     ⎝   0     0     1   ⎠
//! ```
//!
//! and the matrix elements of its oscillator representation factor as
//! `W_{i,k} C_{m,n}(i,k)`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::real::Real;

/// Relative threshold below which a denominator counts as vanishing; it is
/// scaled by `α² + β²` (or its square root for linear quantities).
pub const DEFAULT_DEGENERACY_REL: f64 = 1e-10;

/// `|sinθ cosθ|` below this makes the univariate decomposition undefined.
pub const TRIG_DEGENERACY: f64 = 1e-10;

/// Largest dimension accepted by [`EuclidParamsD::new`].
pub const DEFAULT_MAX_DIM: usize = 4;

/// Tolerance on `‖R Rᵀ − I‖_max` for d-dimensional rotations.
pub const ORTHOGONALITY_TOL: f64 = 1e-12;

/// Planar Euclidean group element `T(θ, α, β)` with `α, β ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclidParams2<R = f64> {
    theta: R,
    alpha: R,
    beta: R,
    cos: R,
    sin: R,
    pi_fraction: Option<(i64, i64)>,
    degeneracy_rel: f64,
}

impl<R: Real> EuclidParams2<R> {
    pub fn new(theta: R, alpha: R, beta: R) -> Result<Self> {
        check_translation("alpha", alpha)?;
        check_translation("beta", beta)?;
        if !theta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "theta",
                value: theta.approx(),
                reason: "angle must be finite",
            });
        }
        let (sin, cos) = theta.sin_cos();
        Ok(Self {
            theta,
            alpha,
            beta,
            cos,
            sin,
            pi_fraction: None,
            degeneracy_rel: DEFAULT_DEGENERACY_REL,
        })
    }

    /// `θ = π p / q`, with `sinθ`, `cosθ` exact at multiples of `π/2` and
    /// exactly equal in magnitude at odd multiples of `π/4`.
    pub fn from_pi_fraction(p: i64, q: i64, alpha: R, beta: R) -> Result<Self> {
        if q == 0 {
            return Err(Error::Invalid("π-fraction denominator must be nonzero".into()));
        }
        let mut params = Self::new(R::zero(), alpha, beta)?;
        let (sin, cos) = sin_cos_pi_fraction::<R>(p, q);
        params.theta = R::PI() * R::of_i64(p) / R::of_i64(q);
        params.sin = sin;
        params.cos = cos;
        params.pi_fraction = Some((p, q));
        Ok(params)
    }

    pub fn with_degeneracy_threshold(mut self, rel: f64) -> Self {
        self.degeneracy_rel = rel;
        self
    }

    pub fn theta(&self) -> R {
        self.theta
    }

    pub fn alpha(&self) -> R {
        self.alpha
    }

    pub fn beta(&self) -> R {
        self.beta
    }

    pub fn cos(&self) -> R {
        self.cos
    }

    pub fn sin(&self) -> R {
        self.sin
    }

    pub fn pi_fraction(&self) -> Option<(i64, i64)> {
        self.pi_fraction
    }

    /// `ω = α cosθ − β sinθ`.
    pub fn omega(&self) -> R {
        self.alpha * self.cos - self.beta * self.sin
    }

    /// `ζ = α sinθ + β cosθ`.
    pub fn zeta(&self) -> R {
        self.alpha * self.sin + self.beta * self.cos
    }

    /// `α² + β²`, the squared translation length.
    pub fn norm_sq(&self) -> R {
        self.alpha * self.alpha + self.beta * self.beta
    }

    /// Absolute threshold for quadratic denominators such as `α ω`.
    pub fn degeneracy_threshold(&self) -> R {
        R::lit(self.degeneracy_rel) * self.norm_sq()
    }

    /// Absolute threshold for linear quantities such as `ω` or `α̃`.
    pub fn linear_threshold(&self) -> R {
        R::lit(self.degeneracy_rel) * self.norm_sq().sqrt()
    }

    pub fn derive(&self) -> DerivedParams2<R> {
        let (a, b, c, s) = (self.alpha, self.beta, self.cos, self.sin);
        let omega = self.omega();
        let zeta = self.zeta();
        let eps = self.degeneracy_threshold();
        let guarded = |num: R, den: R| if den.abs() > eps { Some(num / den) } else { None };
        DerivedParams2 {
            omega,
            zeta,
            theta_t: -self.theta,
            alpha_t: b * s - a * c,
            beta_t: -(a * s + b * c),
            u11: guarded(-c, a * a * c - a * b * s),
            u12: guarded(-s, a * a * s + a * b * c),
            u21: guarded(-s, b * b * s - a * b * c),
            u22: guarded(-c, b * b * c + a * b * s),
        }
    }

    /// Parameters of `T⁻¹`: `θ̃ = −θ`, `α̃ = β sinθ − α cosθ`,
    /// `β̃ = −(α sinθ + β cosθ)`.
    pub fn dual(&self) -> Result<Self> {
        let alpha_t = self.beta * self.sin - self.alpha * self.cos;
        let beta_t = -(self.alpha * self.sin + self.beta * self.cos);
        let eps = self.linear_threshold();
        if alpha_t.abs() <= eps {
            return Err(Error::DegenerateDual {
                which: "α̃ = β sinθ − α cosθ",
                value: alpha_t.approx(),
            });
        }
        if beta_t.abs() <= eps {
            return Err(Error::DegenerateDual {
                which: "β̃ = −(α sinθ + β cosθ)",
                value: beta_t.approx(),
            });
        }
        Ok(Self {
            theta: -self.theta,
            alpha: alpha_t,
            beta: beta_t,
            cos: self.cos,
            sin: -self.sin,
            pi_fraction: self.pi_fraction.map(|(p, q)| (-p, q)),
            degeneracy_rel: self.degeneracy_rel,
        })
    }

    /// `W_{i,k} = e^{−(α²+β²)/2} αⁱ βᵏ / √(i! k!)`.
    pub fn weight_amp(&self, i: usize, k: usize) -> R {
        (-self.norm_sq() / R::lit(2.0)).exp() * scaled_power(self.alpha, i) * scaled_power(self.beta, k)
    }

    /// `W̃_{i,k} = e^{−(α²+β²)/2} (β sinθ − α cosθ)ⁱ (−α sinθ − β cosθ)ᵏ / √(i! k!)`.
    pub fn tilde_weight_amp(&self, i: usize, k: usize) -> R {
        let alpha_t = self.beta * self.sin - self.alpha * self.cos;
        let beta_t = -self.alpha * self.sin - self.beta * self.cos;
        (-self.norm_sq() / R::lit(2.0)).exp() * scaled_power(alpha_t, i) * scaled_power(beta_t, k)
    }

    pub fn affine_map(&self) -> AffineMap2<R> {
        let scale = -R::lit(2.0).sqrt();
        AffineMap2 {
            a: scale * self.omega(),
            b: scale * self.zeta(),
            theta: self.theta,
            cos: self.cos,
            sin: self.sin,
        }
    }

    /// The 3×3 affine matrix of `T(θ, α, β)`.
    pub fn matrix(&self) -> [[R; 3]; 3] {
        let r2 = R::lit(2.0).sqrt();
        [
            [self.cos, self.sin, self.alpha / r2],
            [-self.sin, self.cos, self.beta / r2],
            [R::zero(), R::zero(), R::one()],
        ]
    }

    /// The same group element in another scalar type; trigonometric values
    /// are recomputed in the target type.
    pub fn cast<S: Real>(&self) -> EuclidParams2<S> {
        let alpha = S::lit(self.alpha.approx());
        let beta = S::lit(self.beta.approx());
        let params = match self.pi_fraction {
            Some((p, q)) => EuclidParams2::from_pi_fraction(p, q, alpha, beta),
            None => EuclidParams2::new(S::lit(self.theta.approx()), alpha, beta),
        };
        params
            .expect("validated parameters stay valid under conversion")
            .with_degeneracy_threshold(self.degeneracy_rel)
    }
}

/// `xⁿ / √(n!)` as a running product, free of intermediate overflow.
pub(crate) fn scaled_power<R: Real>(x: R, n: usize) -> R {
    (1..=n).fold(R::one(), |acc, j| acc * x / R::of_usize(j).sqrt())
}

fn check_translation<R: Real>(name: &'static str, value: R) -> Result<()> {
    if !value.is_finite() || value.is_zero() {
        return Err(Error::InvalidParameter {
            name,
            value: value.approx(),
            reason: "translation parameter must be finite and nonzero",
        });
    }
    Ok(())
}

/// `(sin(πp/q), cos(πp/q))` reduced to the first octant, so that quarter
/// turns give exact zeros and `π/4` gives equal sine and cosine.
pub fn sin_cos_pi_fraction<R: Real>(p: i64, q: i64) -> (R, R) {
    let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
    // x = p/q mod 2, as numerator over q
    let num = p.rem_euclid(2 * q);
    let quadrant = (2 * num) / q;
    // angle inside the quadrant is π r / (2q)
    let r = 2 * num - quadrant * q;
    let (s0, c0) = if r == 0 {
        (R::zero(), R::one())
    } else if 2 * r == q {
        let h = R::lit(0.5).sqrt();
        (h, h)
    } else if 2 * r > q {
        let phi = R::PI() * R::of_i64(q - r) / R::of_i64(2 * q);
        let (s, c) = phi.sin_cos();
        (c, s)
    } else {
        (R::PI() * R::of_i64(r) / R::of_i64(2 * q)).sin_cos()
    };
    match quadrant {
        0 => (s0, c0),
        1 => (c0, -s0),
        2 => (-s0, -c0),
        _ => (-c0, s0),
    }
}

#[derive(Serialize, Deserialize)]
struct Params2Json {
    theta: f64,
    alpha: f64,
    beta: f64,
}

impl Serialize for EuclidParams2<f64> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Params2Json {
            theta: self.theta,
            alpha: self.alpha,
            beta: self.beta,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EuclidParams2<f64> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Params2Json::deserialize(deserializer)?;
        EuclidParams2::new(raw.theta, raw.alpha, raw.beta).map_err(serde::de::Error::custom)
    }
}

/// Quantities derived from `(θ, α, β)`.
///
/// Each `u_{ij}` is `None` when its denominator is below the degeneracy
/// threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams2<R = f64> {
    pub omega: R,
    pub zeta: R,
    pub theta_t: R,
    pub alpha_t: R,
    pub beta_t: R,
    pub u11: Option<R>,
    pub u12: Option<R>,
    pub u21: Option<R>,
    pub u22: Option<R>,
}

impl<R: Real> DerivedParams2<R> {
    /// `[u11, u12, u21, u22]` when none is degenerate.
    pub fn u_all(&self) -> Option<[R; 4]> {
        Some([self.u11?, self.u12?, self.u21?, self.u22?])
    }
}

/// The coordinate map `x̃ = rot(θ) x + (A, B)` with
/// `A = −√2 (α cosθ − β sinθ)`, `B = −√2 (α sinθ + β cosθ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap2<R = f64> {
    pub a: R,
    pub b: R,
    pub theta: R,
    cos: R,
    sin: R,
}

impl<R: Real> AffineMap2<R> {
    pub fn apply(&self, x1: R, x2: R) -> (R, R) {
        (
            self.cos * x1 - self.sin * x2 + self.a,
            self.sin * x1 + self.cos * x2 + self.b,
        )
    }

    pub fn cos(&self) -> R {
        self.cos
    }

    pub fn sin(&self) -> R {
        self.sin
    }
}

/// Element of `E(d)`: an orthogonal `d×d` matrix and a nonzero translation vector.
#[derive(Debug, Clone, PartialEq)]
pub struct EuclidParamsD<R = f64> {
    dim: usize,
    /// Row-major.
    rotation: Vec<R>,
    alphas: Vec<R>,
}

impl<R: Real> EuclidParamsD<R> {
    pub fn new(rotation: Vec<Vec<R>>, alphas: Vec<R>) -> Result<Self> {
        Self::new_with_max_dim(rotation, alphas, DEFAULT_MAX_DIM)
    }

    pub fn new_with_max_dim(rotation: Vec<Vec<R>>, alphas: Vec<R>, max_dim: usize) -> Result<Self> {
        let dim = alphas.len();
        if dim == 0 {
            return Err(Error::Invalid("dimension must be at least 1".into()));
        }
        if dim > max_dim {
            return Err(Error::DimensionTooLarge { d: dim, max: max_dim });
        }
        if rotation.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: rotation.len(),
            });
        }
        if let Some(row) = rotation.iter().find(|row| row.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: row.len(),
            });
        }
        for &a in &alphas {
            check_translation("alphas", a)?;
        }
        let flat: Vec<R> = rotation.into_iter().flatten().collect();
        let deviation = orthogonality_deviation(&flat, dim);
        if !(deviation < ORTHOGONALITY_TOL) {
            return Err(Error::NotOrthogonal { deviation });
        }
        Ok(Self {
            dim,
            rotation: flat,
            alphas,
        })
    }

    /// The planar element `T(θ, α, β)` seen as a `d = 2` element: `R` is the
    /// upper-left block of its affine matrix.
    pub fn from_planar(params: &EuclidParams2<R>) -> Self {
        let (c, s) = (params.cos(), params.sin());
        Self {
            dim: 2,
            rotation: vec![c, s, -s, c],
            alphas: vec![params.alpha(), params.beta()],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rotation(&self, row: usize, col: usize) -> R {
        self.rotation[row * self.dim + col]
    }

    pub fn rotation_rows(&self) -> Vec<Vec<R>> {
        self.rotation.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn alphas(&self) -> &[R] {
        &self.alphas
    }
}

pub(crate) fn orthogonality_deviation<R: Real>(flat: &[R], dim: usize) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..dim {
        for j in 0..dim {
            let mut dot = R::zero();
            for k in 0..dim {
                dot += flat[i * dim + k] * flat[j * dim + k];
            }
            let target = if i == j { R::one() } else { R::zero() };
            let dev = (dot - target).abs().approx();
            worst = if dev.is_nan() { f64::INFINITY } else { worst.max(dev) };
        }
    }
    worst
}

#[derive(Serialize, Deserialize)]
struct ParamsDJson {
    #[serde(rename = "R")]
    rotation: Vec<Vec<f64>>,
    alphas: Vec<f64>,
}

impl Serialize for EuclidParamsD<f64> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ParamsDJson {
            rotation: self.rotation_rows(),
            alphas: self.alphas.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EuclidParamsD<f64> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ParamsDJson::deserialize(deserializer)?;
        EuclidParamsD::new(raw.rotation, raw.alphas).map_err(serde::de::Error::custom)
    }
}

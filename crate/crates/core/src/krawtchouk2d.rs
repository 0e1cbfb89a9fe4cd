//! Bivariate Krawtchouk polynomials `P_{m,n}(i,k;N)` attached to a rotation
//! of `SO(3)`, and their contraction to bivariate Charlier polynomials.
//!
//! ```text
//! (1 + R₁₁/R₁₃ u + R₁₂/R₁₃ v)^i (1 + R₂₁/R₂₃ u + R₂₂/R₂₃ v)^k (1 + R₃₁/R₃₃ u + R₃₂/R₃₃ v)^{N−i−k}
//!     = Σ_{m+n ≤ N} √(N! / (m! n! (N−m−n)!)) P_{m,n}(i,k;N) u^m v^n
//! ```

use serde::{Deserialize, Serialize};

use crate::bivariate::{eval_genfun_with_exponent, MultiIndex2};
use crate::combinatorics::{factorial_real, falling_factorial, NeumaierSum};
use crate::error::{Error, Result};
use crate::params::{orthogonality_deviation, EuclidParams2, ORTHOGONALITY_TOL};
use crate::real::Real;
use crate::report::VerifyReport;
use crate::series::{MonomialBasis, SeriesPoly};

/// A proper rotation of three-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3<R = f64> {
    m: [[R; 3]; 3],
}

impl<R: Real> Rotation3<R> {
    pub fn new(m: [[R; 3]; 3]) -> Result<Self> {
        let flat: Vec<R> = m.iter().flatten().copied().collect();
        let deviation = orthogonality_deviation(&flat, 3);
        if !(deviation < ORTHOGONALITY_TOL) {
            return Err(Error::NotOrthogonal { deviation });
        }
        let det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
            .approx();
        if !((det - 1.0).abs() < ORTHOGONALITY_TOL) {
            return Err(Error::NotProperRotation { det });
        }
        Ok(Self { m })
    }

    pub fn identity() -> Self {
        let (o, z) = (R::one(), R::zero());
        Self {
            m: [[o, z, z], [z, o, z], [z, z, o]],
        }
    }

    /// `R_{row,col}`, zero-based.
    pub fn get(&self, row: usize, col: usize) -> R {
        self.m[row][col]
    }

    pub fn matrix(&self) -> [[R; 3]; 3] {
        self.m
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = [[R::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).fold(R::zero(), |acc, k| acc + self.m[i][k] * other.m[k][j]);
            }
        }
        Self { m: out }
    }
}

/// `r_{x₂}(δ) r_{x₁}(γ) r_{x₃}(θ)` with
///
/// ```text
/// r_{x₂}(δ) = [[cosδ, 0, sinδ], [0, 1, 0], [−sinδ, 0, cosδ]]
/// r_{x₁}(γ) = [[1, 0, 0], [0, cosγ, sinγ], [0, −sinγ, cosγ]]
/// r_{x₃}(θ) = [[cosθ, sinθ, 0], [−sinθ, cosθ, 0], [0, 0, 1]]
/// ```
pub fn rotation_zxz<R: Real>(delta: R, gamma: R, theta: R) -> Rotation3<R> {
    let (o, z) = (R::one(), R::zero());
    let (sd, cd) = delta.sin_cos();
    let (sg, cg) = gamma.sin_cos();
    let (st, ct) = theta.sin_cos();
    let r2 = Rotation3 {
        m: [[cd, z, sd], [z, o, z], [-sd, z, cd]],
    };
    let r1 = Rotation3 {
        m: [[o, z, z], [z, cg, sg], [z, -sg, cg]],
    };
    let r3 = Rotation3 {
        m: [[ct, st, z], [-st, ct, z], [z, z, o]],
    };
    r2.mul(&r1).mul(&r3)
}

/// A rotation with nonzero third column, and the simplex size `N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KrawtchoukParams2<R = f64> {
    rotation: Rotation3<R>,
    size: usize,
}

impl<R: Real> KrawtchoukParams2<R> {
    pub fn new(rotation: Rotation3<R>, size: usize) -> Result<Self> {
        for (row, name) in ["R₁₃", "R₂₃", "R₃₃"].iter().enumerate() {
            if rotation.get(row, 2).abs() <= R::lit(1e-14) {
                return Err(Error::Degenerate {
                    algorithm: "Krawtchouk generating function",
                    denominator: (*name).to_string(),
                });
            }
        }
        Ok(Self { rotation, size })
    }

    pub fn rotation(&self) -> &Rotation3<R> {
        &self.rotation
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `N! / (i! k! (N−i−k)!) R₁₃^{2i} R₂₃^{2k} R₃₃^{2(N−i−k)}`.
    pub fn weight(&self, pt: MultiIndex2) -> Result<R> {
        self.check(pt, "point")?;
        let (i, k) = (pt.first, pt.second);
        let rest = self.size - i - k;
        let r = &self.rotation;
        Ok(trinomial::<R>(self.size, i, k)
            * r.get(0, 2).powi(2 * i as i32)
            * r.get(1, 2).powi(2 * k as i32)
            * r.get(2, 2).powi(2 * rest as i32))
    }

    fn check(&self, idx: MultiIndex2, what: &'static str) -> Result<()> {
        if idx.total() > self.size {
            return Err(Error::OutOfSimplex {
                what,
                m: idx.first,
                n: idx.second,
                total: self.size,
            });
        }
        Ok(())
    }

    /// The generating function truncated at total degree `degmax`; the
    /// coefficient of `u^m v^n` is `√(N; m, n) P_{m,n}(i,k;N)`.
    pub fn generating_series(&self, pt: MultiIndex2, degmax: usize) -> Result<SeriesPoly<R>> {
        self.check(pt, "point")?;
        let basis = MonomialBasis::new(2, degmax);
        let r = &self.rotation;
        let exps = [pt.first, pt.second, self.size - pt.total()];
        let mut out = SeriesPoly::constant(&basis, R::one());
        for (row, &e) in exps.iter().enumerate() {
            let lin = [r.get(row, 0) / r.get(row, 2), r.get(row, 1) / r.get(row, 2)];
            out = out.mul(&SeriesPoly::binomial_power(&basis, R::of_usize(e), &lin));
        }
        Ok(out)
    }
}

/// `N! / (m! n! (N−m−n)!)`, formed as a falling factorial over `m! n!`.
fn trinomial<R: Real>(size: usize, m: usize, n: usize) -> R {
    falling_factorial(R::of_usize(size), m + n) / (factorial_real::<R>(m) * factorial_real::<R>(n))
}

/// `P_{m,n}(i,k;N)`.
pub fn krawtchouk2<R: Real>(params: &KrawtchoukParams2<R>, deg: MultiIndex2, pt: MultiIndex2) -> Result<R> {
    params.check(deg, "degree")?;
    let series = params.generating_series(pt, deg.total())?;
    Ok(series.coeff(&[deg.first, deg.second]) / trinomial::<R>(params.size, deg.first, deg.second).sqrt())
}

/// `Σ w_{i,k;N} P_{m,n} P_{m',n'} = δ δ` over the whole simplex.
pub fn verify_krawtchouk_orthogonality(params: &KrawtchoukParams2, tolerance: f64) -> Result<VerifyReport> {
    let size = params.size();
    let degrees: Vec<MultiIndex2> = MultiIndex2::up_to_total(size).collect();
    let nd = degrees.len();
    let mut gram = vec![NeumaierSum::<f64>::new(); nd * nd];
    for pt in MultiIndex2::up_to_total(size) {
        let w = params.weight(pt)?;
        let series = params.generating_series(pt, size)?;
        let values: Vec<f64> = degrees
            .iter()
            .map(|d| series.coeff(&[d.first, d.second]) / trinomial::<f64>(size, d.first, d.second).sqrt())
            .collect();
        for a in 0..nd {
            for b in a..nd {
                gram[a * nd + b].add(w * values[a] * values[b]);
            }
        }
    }
    let mut report = VerifyReport::new(
        "krawtchouk orthogonality",
        tolerance,
        format!("N = {size}; whole simplex"),
    );
    for a in 0..nd {
        for b in a..nd {
            let target = if a == b { 1.0 } else { 0.0 };
            report.observe(gram[a * nd + b].value() - target, || {
                format!("{} vs {}", degrees[a], degrees[b])
            });
        }
    }
    Ok(report)
}

/// Sign convention for the `y`-exponent of the limiting generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitConvention {
    /// `e^{−x(α cosθ − β sinθ) − y(α sinθ + β cosθ)}`, the bivariate Charlier
    /// generating function.
    Charlier,
    /// `e^{−x(α cosθ − β sinθ) − y(α sinθ − β cosθ)}`.
    FlippedY,
}

impl LimitConvention {
    pub fn exponent(self, params: &EuclidParams2) -> [f64; 2] {
        let (a, b, c, s) = (params.alpha(), params.beta(), params.cos(), params.sin());
        match self {
            LimitConvention::Charlier => [-(a * c - b * s), -(a * s + b * c)],
            LimitConvention::FlippedY => [-(a * c - b * s), -(a * s - b * c)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LimitConvention::Charlier => "charlier",
            LimitConvention::FlippedY => "flipped-y",
        }
    }
}

/// One row of the contraction table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitRow {
    pub n: usize,
    pub krawtchouk: f64,
    /// `|P − C|` under [`LimitConvention::Charlier`].
    pub error: f64,
    /// `|P − C|` under [`LimitConvention::FlippedY`].
    pub error_flipped: f64,
}

/// Outcome of [`limit_study`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitStudy {
    pub deg: MultiIndex2,
    pub pt: MultiIndex2,
    pub charlier: f64,
    pub charlier_flipped: f64,
    pub rows: Vec<LimitRow>,
    /// The convention under which the errors converge, if any.
    pub converged: Option<LimitConvention>,
    pub report: VerifyReport,
}

/// Terminal error allowed at the largest `N`, relative to `max(|C|, 1)`.
pub const LIMIT_FINAL_REL_TOL: f64 = 0.05;

/// Below this an error counts as zero for the monotonicity test.
const LIMIT_ZERO: f64 = 1e-13;

/// `P_{m,n}(i,k;N)` with `R = rotation_zxz(α/√N, β/√N, θ)` against
/// `C_{m,n}(i,k)`, for each `N` in `ns`.
///
/// A convention converges when its error decreases strictly along `ns` (or
/// stays at rounding level) and ends below 5% of `max(|C|, 1)`, the same
/// relative-above-one, absolute-below-one rule used between evaluators;
/// `C` itself can vanish at a lattice point. The report passes
/// when some convention converges, and when the two conventions give
/// different limits it names the one that did.
pub fn limit_study(params: &EuclidParams2, deg: MultiIndex2, pt: MultiIndex2, ns: &[usize]) -> Result<LimitStudy> {
    if ns.is_empty() {
        return Err(Error::Invalid("limit study needs at least one N".into()));
    }
    let target = eval_genfun_with_exponent(params, deg, pt, LimitConvention::Charlier.exponent(params));
    let target_flipped = eval_genfun_with_exponent(params, deg, pt, LimitConvention::FlippedY.exponent(params));
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let root = (n as f64).sqrt();
        let rotation = rotation_zxz(params.alpha() / root, params.beta() / root, params.theta());
        let kp = KrawtchoukParams2::new(rotation, n)?;
        let p = krawtchouk2(&kp, deg, pt)?;
        rows.push(LimitRow {
            n,
            krawtchouk: p,
            error: (p - target).abs(),
            error_flipped: (p - target_flipped).abs(),
        });
    }
    let converges = |errors: &[f64], reference: f64| {
        let decreasing = errors
            .windows(2)
            .all(|w| w[1] < w[0] || (w[0] <= LIMIT_ZERO && w[1] <= LIMIT_ZERO));
        let last = *errors.last().expect("non-empty");
        decreasing && (last <= LIMIT_FINAL_REL_TOL * reference.abs().max(1.0) || last <= LIMIT_ZERO)
    };
    let errs: Vec<f64> = rows.iter().map(|r| r.error).collect();
    let errs_flipped: Vec<f64> = rows.iter().map(|r| r.error_flipped).collect();
    let ok = converges(&errs, target);
    let ok_flipped = converges(&errs_flipped, target_flipped);
    let distinct = (target - target_flipped).abs() > LIMIT_ZERO * target.abs().max(1.0);

    let ns_text = ns.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",");
    let mut report = VerifyReport::new(
        "krawtchouk limit",
        LIMIT_FINAL_REL_TOL,
        format!("(m,n)={deg} (i,k)={pt}; N in [{ns_text}]"),
    );
    let last = rows.last().expect("non-empty");
    report.max_residual = last.error / target.abs().max(1.0);
    report.worst_location = Some(format!("N = {}", last.n));
    let converged = match (ok, ok_flipped) {
        (true, false) => Some(LimitConvention::Charlier),
        (false, true) => Some(LimitConvention::FlippedY),
        (true, true) if !distinct => Some(LimitConvention::Charlier),
        _ => None,
    };
    report.pass = converged.is_some();
    match converged {
        Some(conv) if distinct => report.note(format!("converges under the {} convention only", conv.name())),
        Some(_) => report.note("both conventions give the same limit at this degree"),
        None if ok && ok_flipped => report.note("both conventions appear to converge; the limit is ambiguous"),
        None => report.note("no convention converges along these N"),
    }
    if converged == Some(LimitConvention::FlippedY) {
        report.note("the bivariate Charlier generating function does not give the limit; check the exponent sign");
    }
    Ok(LimitStudy {
        deg,
        pt,
        charlier: target,
        charlier_flipped: target_flipped,
        rows,
        converged,
        report,
    })
}

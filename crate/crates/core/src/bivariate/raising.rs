//! Reference evaluator: iterate the two raising relations from `C_{0,0} = 1`.
//!
//! ```text
//! √(m+1) C_{m+1,n}(i,k) = (i/α) cosθ C(i−1,k) − (k/β) sinθ C(i,k−1) + (β sinθ − α cosθ) C(i,k)
//! √(n+1) C_{m,n+1}(i,k) = (i/α) sinθ C(i−1,k) + (k/β) cosθ C(i,k−1) − (α sinθ + β cosθ) C(i,k)
//! ```
//!
//! Both relations are polynomial in `(i, k)`, so the same iteration
//! evaluates the polynomial at any real point, including negative ones.

use std::ops::RangeInclusive;

use super::{rounding_estimate, MultiIndex2};
use crate::params::EuclidParams2;
use crate::real::Real;

/// Which degree is raised first. The two orders must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RaisingOrder {
    #[default]
    MFirst,
    NFirst,
}

#[derive(Clone, Copy)]
enum Step {
    M,
    N,
}

struct Coefficients<R> {
    // (cx, cy, c0) for the m-raise and the n-raise
    m: (R, R, R),
    n: (R, R, R),
}

impl<R: Real> Coefficients<R> {
    fn new(params: &EuclidParams2<R>) -> Self {
        let (a, b, c, s) = (params.alpha(), params.beta(), params.cos(), params.sin());
        Self {
            m: (c / a, -s / b, b * s - a * c),
            n: (s / a, c / b, -(a * s + b * c)),
        }
    }
}

/// `C_{m,n}(i,k)` by the raising relations, `m` first.
pub fn eval_raising<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, pt: MultiIndex2) -> R {
    eval_raising_at(
        params,
        deg,
        R::of_usize(pt.first),
        R::of_usize(pt.second),
        RaisingOrder::MFirst,
    )
}

/// Value and rounding-error estimate.
pub fn eval_raising_with_error<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, pt: MultiIndex2) -> (R, R) {
    let (value, magnitude) = raise(
        params,
        deg,
        R::of_usize(pt.first),
        R::of_usize(pt.second),
        RaisingOrder::MFirst,
    );
    (value, rounding_estimate(magnitude, 3 * deg.total()))
}

/// The polynomial `C_{m,n}` at an arbitrary real point `(x, y)`.
pub fn eval_raising_at<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, x: R, y: R, order: RaisingOrder) -> R {
    raise(params, deg, x, y, order).0
}

/// Carries `C(x − a, y − b)` for all offsets `a + b ≤ remaining`, together
/// with the same recursion run on absolute values.
fn raise<R: Real>(params: &EuclidParams2<R>, deg: MultiIndex2, x: R, y: R, order: RaisingOrder) -> (R, R) {
    let total = deg.total();
    if total == 0 {
        return (R::one(), R::one());
    }
    let coef = Coefficients::new(params);
    let width = total + 1;
    let mut val = vec![R::one(); width * width];
    let mut mag = vec![R::one(); width * width];
    let steps = match order {
        RaisingOrder::MFirst => std::iter::repeat_n(Step::M, deg.first)
            .chain(std::iter::repeat_n(Step::N, deg.second))
            .collect::<Vec<_>>(),
        RaisingOrder::NFirst => std::iter::repeat_n(Step::N, deg.second)
            .chain(std::iter::repeat_n(Step::M, deg.first))
            .collect(),
    };
    let (mut m, mut n) = (0usize, 0usize);
    for (done, step) in steps.into_iter().enumerate() {
        let remaining = total - done - 1;
        let ((cx, cy, c0), norm) = match step {
            Step::M => {
                m += 1;
                (coef.m, R::of_usize(m).sqrt())
            }
            Step::N => {
                n += 1;
                (coef.n, R::of_usize(n).sqrt())
            }
        };
        // ascending a, b: entry (a, b) reads only (a+1, b) and (a, b+1)
        for a in 0..=remaining {
            let xa = x - R::of_usize(a);
            for b in 0..=remaining - a {
                let yb = y - R::of_usize(b);
                let here = a * width + b;
                let left = (a + 1) * width + b;
                let down = a * width + b + 1;
                let tx = xa * cx;
                let ty = yb * cy;
                val[here] = (tx * val[left] + ty * val[down] + c0 * val[here]) / norm;
                mag[here] = (tx.abs() * mag[left] + ty.abs() * mag[down] + c0.abs() * mag[here]) / norm;
            }
        }
    }
    (val[0], mag[0])
}

/// `C_{m,n}(i,k)` for every `m + n ≤ degmax` on a rectangle of integer
/// points, which may include negative coordinates.
#[derive(Debug, Clone)]
pub struct RaisingGrid<R = f64> {
    degmax: usize,
    i_lo: i64,
    k_lo: i64,
    i_hi: i64,
    k_hi: i64,
    ni: usize,
    nk: usize,
    /// Indexed by `degree_slot(m, n)`, then row-major over the padded grid.
    values: Vec<Vec<R>>,
}

impl<R: Real> RaisingGrid<R> {
    pub fn new(
        params: &EuclidParams2<R>,
        degmax: usize,
        i_range: RangeInclusive<i64>,
        k_range: RangeInclusive<i64>,
    ) -> Self {
        let pad = degmax as i64;
        let (i_lo, i_hi) = (*i_range.start(), *i_range.end());
        let (k_lo, k_hi) = (*k_range.start(), *k_range.end());
        assert!(i_lo <= i_hi && k_lo <= k_hi, "empty point range");
        let ni = (i_hi - i_lo + 1 + pad) as usize;
        let nk = (k_hi - k_lo + 1 + pad) as usize;
        let coef = Coefficients::new(params);
        let slots = (degmax + 1) * (degmax + 2) / 2;
        let mut values: Vec<Vec<R>> = vec![Vec::new(); slots];
        values[degree_slot(0, 0)] = vec![R::one(); ni * nk];

        let x0 = i_lo - pad;
        let y0 = k_lo - pad;
        let raise_from = |prev: &[R], (cx, cy, c0): (R, R, R), norm: R| -> Vec<R> {
            let mut out = vec![R::nan(); ni * nk];
            for a in 1..ni {
                let x = R::of_i64(x0 + a as i64);
                for b in 1..nk {
                    let y = R::of_i64(y0 + b as i64);
                    out[a * nk + b] =
                        (x * cx * prev[(a - 1) * nk + b] + y * cy * prev[a * nk + b - 1] + c0 * prev[a * nk + b])
                            / norm;
                }
            }
            out
        };
        for m in 0..=degmax {
            if m > 0 {
                let next = raise_from(&values[degree_slot(m - 1, 0)], coef.m, R::of_usize(m).sqrt());
                values[degree_slot(m, 0)] = next;
            }
            for n in 1..=degmax - m {
                let next = raise_from(&values[degree_slot(m, n - 1)], coef.n, R::of_usize(n).sqrt());
                values[degree_slot(m, n)] = next;
            }
        }
        Self {
            degmax,
            i_lo,
            k_lo,
            i_hi,
            k_hi,
            ni,
            nk,
            values,
        }
    }

    pub fn degmax(&self) -> usize {
        self.degmax
    }

    /// `C_{m,n}(i,k)`, with `C = 0` whenever `m` or `n` is negative.
    ///
    /// Panics if the degree exceeds `degmax` or the point lies outside the
    /// rectangle the grid was built on.
    pub fn get(&self, m: i64, n: i64, i: i64, k: i64) -> R {
        if m < 0 || n < 0 {
            return R::zero();
        }
        assert!(
            (m + n) as usize <= self.degmax,
            "degree ({m},{n}) beyond grid degmax {}",
            self.degmax
        );
        assert!(
            (self.i_lo..=self.i_hi).contains(&i) && (self.k_lo..=self.k_hi).contains(&k),
            "point ({i},{k}) outside the grid"
        );
        let pad = self.degmax as i64;
        let a = (i - self.i_lo + pad) as usize;
        let b = (k - self.k_lo + pad) as usize;
        debug_assert!(a < self.ni && b < self.nk);
        self.values[degree_slot(m as usize, n as usize)][a * self.nk + b]
    }
}

/// Position of `(m, n)` in the total-degree ordering.
fn degree_slot(m: usize, n: usize) -> usize {
    let t = m + n;
    t * (t + 1) / 2 + n
}

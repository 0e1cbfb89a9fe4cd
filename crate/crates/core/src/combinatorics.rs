//! Exact and compensated combinatorial primitives.
//!
//! Factorials, binomials and multinomials are exact big integers; they are
//! rounded to a real only at the point of use. Sums whose terms alternate in
//! sign go through [`compensated_sum`] / [`NeumaierSum`].

use std::ops::{Add, AddAssign};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::real::Real;

/// Largest `n` accepted by [`factorial`] unless a different cap is given.
pub const DEFAULT_FACTORIAL_CAP: u64 = 500;

/// Largest `n` with `n!` finite in double precision.
pub const MAX_F64_FACTORIAL: usize = 170;

/// Exact `n!`, refusing arguments above [`DEFAULT_FACTORIAL_CAP`].
pub fn factorial(n: u64) -> Result<BigUint> {
    factorial_capped(n, DEFAULT_FACTORIAL_CAP)
}

pub fn factorial_capped(n: u64, cap: u64) -> Result<BigUint> {
    if n > cap {
        return Err(Error::FactorialCap { n, cap });
    }
    Ok((2..=n).fold(BigUint::one(), |acc, j| acc * j))
}

fn f64_factorial_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut exact = BigUint::one();
        let mut out = Vec::with_capacity(MAX_F64_FACTORIAL + 1);
        out.push(1.0);
        for j in 1..=MAX_F64_FACTORIAL as u64 {
            exact *= j;
            // BigUint -> f64 rounds to nearest
            out.push(exact.to_f64().unwrap_or(f64::INFINITY));
        }
        out
    })
}

/// `n!` correctly rounded to `f64`; `+∞` above 170.
pub fn factorial_f64(n: usize) -> f64 {
    f64_factorial_table().get(n).copied().unwrap_or(f64::INFINITY)
}

/// `n!` in the requested scalar type.
///
/// For `n ≤ 170` the `f64` rounding of the exact value is refined by a
/// product in `R`, so extended backends get more than 53 bits.
pub fn factorial_real<R: Real>(n: usize) -> R {
    if n <= 20 {
        // 20! < 2^63: every partial product is exact in both backends
        return R::lit(factorial_f64(n));
    }
    (21..=n).fold(R::lit(factorial_f64(20)), |acc, j| acc * R::of_usize(j))
}

/// Binomial coefficient; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Binomial coefficient rounded to `f64`.
pub fn binomial_f64(n: u64, k: i64) -> f64 {
    binomial(n, k).to_f64().unwrap_or(f64::INFINITY)
}

/// Trinomial coefficient `N! / (m! n! (N-m-n)!)`.
pub fn multinomial(total: u64, m: u64, n: u64) -> Result<BigUint> {
    if m + n > total {
        return Err(Error::MultinomialRange { total, m, n });
    }
    Ok(binomial(total, m as i64) * binomial(total - m, n as i64))
}

/// Rising factorial `(a)_n = a (a+1) ⋯ (a+n-1)`, with `(a)_0 = 1`.
///
/// Returns an exact zero as soon as a factor vanishes, which is the
/// truncation `(-m)_n = 0` for `n > m` that the hypergeometric sums rely on.
pub fn pochhammer<R: Real>(a: R, n: usize) -> R {
    let mut acc = R::one();
    for j in 0..n {
        let factor = a + R::of_usize(j);
        if factor.is_zero() {
            return R::zero();
        }
        acc *= factor;
    }
    acc
}

/// Exact rising factorial of an integer.
pub fn pochhammer_int(a: i64, n: usize) -> BigInt {
    (0..n as i64).fold(BigInt::one(), |acc, j| acc * BigInt::from(a + j))
}

/// Falling factorial `p (p-1) ⋯ (p-j+1)`; for integer `p ≥ 0` this vanishes
/// when `j > p`.
pub fn falling_factorial<R: Real>(p: R, j: usize) -> R {
    let mut acc = R::one();
    for t in 0..j {
        let factor = p - R::of_usize(t);
        if factor.is_zero() {
            return R::zero();
        }
        acc *= factor;
    }
    acc
}

/// Kahan–Babuška–Neumaier running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum<R = f64> {
    sum: R,
    compensation: R,
}

impl<R: Real> NeumaierSum<R> {
    pub fn new() -> Self {
        Self {
            sum: R::zero(),
            compensation: R::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, term: R) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.compensation += (self.sum - t) + term;
        } else {
            self.compensation += (term - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> R {
        self.sum + self.compensation
    }
}

impl<R: Real> AddAssign<R> for NeumaierSum<R> {
    fn add_assign(&mut self, rhs: R) {
        NeumaierSum::add(self, rhs);
    }
}

impl<R: Real> Add<R> for NeumaierSum<R> {
    type Output = Self;

    fn add(mut self, rhs: R) -> Self {
        self += rhs;
        self
    }
}

impl<R: Real> FromIterator<R> for NeumaierSum<R> {
    fn from_iter<I: IntoIterator<Item = R>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for t in iter {
            acc += t;
        }
        acc
    }
}

/// Compensated sum of a sequence; the error does not grow with the number of
/// terms to first order.
pub fn compensated_sum<R: Real, I: IntoIterator<Item = R>>(terms: I) -> R {
    terms.into_iter().collect::<NeumaierSum<R>>().value()
}

//! Scalar abstraction shared by every evaluator.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar used by the evaluators.
///
/// Implemented for `f64` and, with the `extended` feature, for
/// [`twofloat::TwoFloat`] (about 106 bits of significand).
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Default + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal; exact for both backends.
    fn lit(x: f64) -> Self;

    /// Nearest `f64`.
    fn approx(self) -> f64;

    /// Spacing of the representable numbers just above 1. Used in place of
    /// `Float::epsilon`, which twofloat reports as `f64::MIN_POSITIVE`.
    fn rounding_unit() -> Self;

    fn of_usize(n: usize) -> Self {
        Self::lit(n as f64)
    }

    fn of_i64(n: i64) -> Self {
        Self::lit(n as f64)
    }
}

impl Real for f64 {
    #[inline]
    fn lit(x: f64) -> Self {
        x
    }

    #[inline]
    fn approx(self) -> f64 {
        self
    }

    fn rounding_unit() -> Self {
        f64::EPSILON
    }
}

/// The double-double scalar of the `extended` feature.
#[cfg(feature = "extended")]
pub type Extended = twofloat::TwoFloat;

#[cfg(feature = "extended")]
impl Real for twofloat::TwoFloat {
    #[inline]
    fn lit(x: f64) -> Self {
        twofloat::TwoFloat::from(x)
    }

    #[inline]
    fn approx(self) -> f64 {
        self.hi() + self.lo()
    }

    fn rounding_unit() -> Self {
        // 106-bit significand
        twofloat::TwoFloat::from(2f64.powi(-105))
    }
}

/// `(-1)^n` as a real.
#[inline]
pub fn sign_pow<R: Real>(n: usize) -> R {
    if n.is_multiple_of(2) {
        R::one()
    } else {
        -R::one()
    }
}

#[cfg(all(test, feature = "extended"))]
mod tests {
    use super::*;
    use num_traits::One;
    use twofloat::TwoFloat;

    fn err(x: TwoFloat) -> f64 {
        x.abs().approx()
    }

    #[test]
    fn extended_arithmetic_is_double_double() {
        let (a, b) = (
            TwoFloat::lit(1.0) / TwoFloat::lit(3.0),
            TwoFloat::lit(0.7) / TwoFloat::lit(1.3),
        );
        assert!(err(a * TwoFloat::lit(3.0) - TwoFloat::one()) < 1e-31);
        assert!(err((a / b) * b - a) < 1e-31);
        assert!(err(b.recip() * b - TwoFloat::one()) < 1e-31);
        assert!(err(b.sqrt() * b.sqrt() - b) < 1e-31);
    }

    #[test]
    fn rounding_units() {
        assert_eq!(f64::rounding_unit(), f64::EPSILON);
        let u = TwoFloat::rounding_unit();
        assert!(u.approx() > 1e-33 && u.approx() < 1e-31);
        assert!(err(a_third() * TwoFloat::lit(3.0) - TwoFloat::one()) <= u.approx());
    }

    fn a_third() -> TwoFloat {
        TwoFloat::lit(1.0) / TwoFloat::lit(3.0)
    }

    #[test]
    fn extended_transcendentals() {
        for theta in [0.1, 0.5235987755982988, 1.1, 2.9] {
            let t = TwoFloat::lit(theta);
            let (s, c) = t.sin_cos();
            assert!(err(s * s + c * c - TwoFloat::one()) < 1e-20, "theta={theta}");
        }
        let third = TwoFloat::PI() / TwoFloat::lit(3.0);
        assert!(err(third.cos() - TwoFloat::lit(0.5)) < 1e-20);
        assert!(err(TwoFloat::one().exp() - TwoFloat::E()) < 1e-20);
    }
}

//! Scalar arithmetic shared by the float and exact computation modes.
//!
//! Every quantity computed by this crate is a polynomial with rational
//! coefficients in the state amplitudes, so the whole library is generic
//! over a single complex field: [`num_complex::Complex64`] for fast
//! floating-point work, or [`GaussianRational`] for exact certificates.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};
use serde_json::Value;
use std::fmt::{Debug, Display};
use std::ops::Neg;

/// Exact complex rationals `p/q + (r/s) i`.
pub type GaussianRational = Complex<BigRational>;

/// Field element used for state amplitudes and every derived quantity.
pub trait Scalar:
    Num + Clone + Neg<Output = Self> + PartialEq + Debug + Display + Send + Sync + 'static
{
    /// Whether arithmetic is exact. Exact mode replaces every tolerance
    /// test with an exact zero test.
    const EXACT: bool;

    fn from_int(n: i64) -> Self;

    /// The rational `num/den`; panics if `den == 0`.
    fn ratio(num: i64, den: i64) -> Self;

    /// Embeds a complex float. Binary fractions are rational, so the exact
    /// mode embedding is lossless. Returns `None` for non-finite parts.
    fn from_f64_parts(re: f64, im: f64) -> Option<Self>;

    fn re_f64(&self) -> f64;
    fn im_f64(&self) -> f64;

    /// `|z|` as a float. Approximate in exact mode; used only for scale
    /// estimates and reporting, never for exact-mode zero tests.
    fn magnitude(&self) -> f64 {
        self.re_f64().hypot(self.im_f64())
    }

    /// `[re, im]` as JSON: numbers in float mode, `"p/q"` strings in exact
    /// mode (so exact output round-trips without loss).
    fn to_json(&self) -> Value;
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Complex64::new(num as f64 / den as f64, 0.0)
    }

    fn from_f64_parts(re: f64, im: f64) -> Option<Self> {
        (re.is_finite() && im.is_finite()).then(|| Complex64::new(re, im))
    }

    fn re_f64(&self) -> f64 {
        self.re
    }

    fn im_f64(&self) -> f64 {
        self.im
    }

    fn to_json(&self) -> Value {
        Value::Array(vec![float_json(self.re), float_json(self.im)])
    }
}

impl Scalar for GaussianRational {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Complex::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    fn from_f64_parts(re: f64, im: f64) -> Option<Self> {
        Some(Complex::new(
            BigRational::from_float(re)?,
            BigRational::from_float(im)?,
        ))
    }

    fn re_f64(&self) -> f64 {
        self.re.to_f64().unwrap_or(f64::NAN)
    }

    fn im_f64(&self) -> f64 {
        self.im.to_f64().unwrap_or(f64::NAN)
    }

    fn to_json(&self) -> Value {
        Value::Array(vec![
            Value::String(self.re.to_string()),
            Value::String(self.im.to_string()),
        ])
    }
}

fn float_json(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

/// Multiplies by a small integer without leaving the scalar field.
pub(crate) fn times<T: Scalar>(k: i64, v: T) -> T {
    T::from_int(k) * v
}

/// Scale-aware negligibility: exact zero in exact mode, otherwise
/// `|v| <= tol * max(scale, tiny)`.
pub(crate) fn is_negligible<T: Scalar>(v: &T, tol: f64, scale: f64) -> bool {
    if T::EXACT {
        v.is_zero()
    } else {
        v.magnitude() <= tol * scale.max(f64::MIN_POSITIVE)
    }
}

/// Residual of a difference relative to `scale`. Exact mode returns 0.0
/// when the difference is exactly zero and a strictly positive value
/// otherwise (even if the float image of the difference underflows).
pub(crate) fn scaled_residual<T: Scalar>(diff: &T, scale: f64) -> f64 {
    if T::EXACT {
        if diff.is_zero() {
            0.0
        } else {
            (diff.magnitude() / scale.max(f64::MIN_POSITIVE)).max(f64::MIN_POSITIVE)
        }
    } else {
        diff.magnitude() / scale.max(f64::MIN_POSITIVE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_and_int_constructors_agree() {
        assert_eq!(Complex64::ratio(3, 2), Complex64::new(1.5, 0.0));
        let q = GaussianRational::ratio(3, 2);
        assert_eq!(q.re, BigRational::new(BigInt::from(3), BigInt::from(2)));
        assert!(q.im.is_zero());
        assert_eq!(GaussianRational::from_int(-7), GaussianRational::ratio(-7, 1));
    }

    #[test]
    fn float_embedding_is_exact() {
        let z = GaussianRational::from_f64_parts(0.375, -2.5).unwrap();
        assert_eq!(z.re, BigRational::new(BigInt::from(3), BigInt::from(8)));
        assert_eq!(z.im, BigRational::new(BigInt::from(-5), BigInt::from(2)));
        assert!(GaussianRational::from_f64_parts(f64::NAN, 0.0).is_none());
        assert!(Complex64::from_f64_parts(0.0, f64::INFINITY).is_none());
    }

    #[test]
    fn magnitudes_match_between_modes() {
        let zf = Complex64::new(3.0, -4.0);
        let zq = GaussianRational::from_f64_parts(3.0, -4.0).unwrap();
        assert_eq!(zf.magnitude(), 5.0);
        assert_eq!(zq.magnitude(), 5.0);
    }

    #[test]
    fn exact_json_uses_rational_strings() {
        let z = GaussianRational::ratio(-5, 4);
        assert_eq!(z.to_json(), serde_json::json!(["-5/4", "0"]));
        let f = Complex64::new(0.5, 0.0);
        assert_eq!(f.to_json(), serde_json::json!([0.5, 0.0]));
    }
}

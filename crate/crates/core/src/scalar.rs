use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Field-like scalar the probability and linear-algebra code is written over.
///
/// Exact zero tests (`is_zero`) are only meaningful for [`Rational`]; the
/// float implementations exist for quick approximate evaluation.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync {
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn from_count(n: usize) -> Self {
        Self::from_ratio(n as i64, 1)
    }

    fn to_f64(&self) -> f64;

    /// Equality used for normalization checks: exact for rationals, within a
    /// small tolerance for floats.
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl Scalar for f64 {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        numer as f64 / denom as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).abs() <= 1e-9 * (1.0 + self.abs().max(other.abs()))
    }
}

impl Scalar for f32 {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        (numer as f64 / denom as f64) as f32
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).abs() <= 1e-5 * (1.0 + self.abs().max(other.abs()))
    }
}

impl Scalar for BigRational {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Sum of a slice of scalars.
pub fn sum<T: Scalar>(values: &[T]) -> T {
    values.iter().fold(T::zero(), |acc, v| acc + v.clone())
}

/// Parses `"p/q"` or an integer `"p"`. Decimal notation is rejected so that
/// no value silently loses precision.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("`{text}` is not a rational of the form p/q"));
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(numer) || !is_int(denom) {
        return Err(bad());
    }
    let numer = BigInt::from_str_radix(numer, 10).map_err(|_| bad())?;
    let denom = BigInt::from_str_radix(denom, 10).map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("`{text}` has a zero denominator")));
    }
    Ok(BigRational::new(numer, denom))
}

/// Formats as reduced `"numerator/denominator"`, always with a denominator.
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// `base^exp` for a non-negative integer exponent.
pub fn pow<T: Scalar>(base: &T, exp: usize) -> T {
    (0..exp).fold(T::one(), |acc, _| acc * base.clone())
}

//! Scalar abstraction shared by every geometric routine.
//!
//! All algorithms are written against [`Scalar`], an ordered field. The exact
//! instance is [`BigRational`]; `f64`/`f32` are supported for fast approximate
//! work but cannot witness boundary cases exactly.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

/// An ordered field usable as a coordinate type.
pub trait Scalar: Clone + Debug + Display + PartialOrd + Num + Signed + Send + Sync + 'static {
    /// `true` when arithmetic and comparisons are exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// `numer / denom`; `denom` must be nonzero.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// Largest integer not above `self`.
    fn floor_i64(&self) -> i64;

    /// Smallest integer not below `self`.
    fn ceil_i64(&self) -> i64;

    fn to_f64(&self) -> f64;

    /// `Some(s)` with `s >= 0` and `s * s == self`, when such an `s` is
    /// representable. Negative inputs yield `None`.
    fn exact_sqrt(&self) -> Option<Self>;

    /// `(numer, denom)` with `denom > 0` in lowest terms, for exact values
    /// that fit in `i128`.
    fn to_i128_ratio(&self) -> Option<(i128, i128)>;

    fn from_i128_ratio(numer: i128, denom: i128) -> Self;

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn floor_i64(&self) -> i64 {
        self.floor()
            .to_integer()
            .to_i64()
            .expect("coordinate exceeds i64 range")
    }

    fn ceil_i64(&self) -> i64 {
        self.ceil().to_integer().to_i64().expect("coordinate exceeds i64 range")
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_i128_ratio(&self) -> Option<(i128, i128)> {
        Some((self.numer().to_i128()?, self.denom().to_i128()?))
    }

    fn from_i128_ratio(numer: i128, denom: i128) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
}

macro_rules! impl_float_scalar {
    ($f:ty) => {
        impl Scalar for $f {
            const EXACT: bool = false;

            fn from_i64(v: i64) -> Self {
                v as $f
            }

            fn from_ratio(numer: i64, denom: i64) -> Self {
                numer as $f / denom as $f
            }

            fn floor_i64(&self) -> i64 {
                self.floor() as i64
            }

            fn ceil_i64(&self) -> i64 {
                self.ceil() as i64
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn exact_sqrt(&self) -> Option<Self> {
                (*self >= 0.0).then(|| self.sqrt())
            }

            fn to_i128_ratio(&self) -> Option<(i128, i128)> {
                None
            }

            fn from_i128_ratio(numer: i128, denom: i128) -> Self {
                numer as $f / denom as $f
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

/// Smallest integer `s >= 0` with `s * s >= value`.
pub fn ceil_sqrt<T: Scalar>(value: &T) -> i64 {
    if *value <= T::zero() {
        return 0;
    }
    let mut s = value.to_f64().sqrt().ceil().max(0.0) as i64;
    while s > 0 && T::from_i64((s - 1) * (s - 1)) >= *value {
        s -= 1;
    }
    while T::from_i64(s * s) < *value {
        s += 1;
    }
    s
}

/// Formats a scalar as a decimal with `digits` significant digits.
pub fn format_sig(value: f64, digits: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

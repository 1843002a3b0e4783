//! Offset discretizations of punctured geometric scenes on the integer
//! lattice, computed with exact arithmetic.
//!
//! Everything is generic over a [`Scalar`] field. [`Rational`] (arbitrary
//! precision) is the exact instance and the one the analysis and boundary
//! semantics are designed for; `f64` works for quick approximate scans.

pub mod error;
pub mod geometry;
pub mod lattice;
pub mod radii;
pub mod scalar;
pub mod scene_file;
pub mod union_find;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{ExactDistance, Point, Primitive, Scene};
pub use lattice::{DiscreteSet, LatticePoint, Voxel};
pub use scalar::Scalar;

/// Exact coordinates and squared radii.
pub type Rational = num_rational::BigRational;

pub type ExactPoint = Point<Rational>;
pub type ExactPrimitive = Primitive<Rational>;
pub type ExactScene = Scene<Rational>;
pub type ExactDist = ExactDistance<Rational>;
pub type ExactBall = geometry::EnclosingBall<Rational>;
pub type ExactGapMatrix = radii::GapMatrix<Rational>;
pub type ExactRadiiReport = radii::RadiiReport<Rational>;

pub type F64Point = Point<f64>;
pub type F64Scene = Scene<f64>;
pub type F64Dist = ExactDistance<f64>;

/// Parses `"p/q"`, an integer, or a finite decimal such as `"-0.125"` into an
/// exact rational. Decimals are read as `digits / 10^k`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    use num_bigint::BigInt;
    use num_traits::Zero;

    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mantissa, exp) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(digits);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    if neg {
        value = -value;
    }
    Some(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_exactly() {
        assert_eq!(parse_rational("3/4"), Some(Rational::from_ratio(3, 4)));
        assert_eq!(parse_rational("-6/8"), Some(Rational::from_ratio(-3, 4)));
        assert_eq!(parse_rational("0.49"), Some(Rational::from_ratio(49, 100)));
        assert_eq!(parse_rational("-1.5"), Some(Rational::from_ratio(-3, 2)));
        assert_eq!(parse_rational("12"), Some(Rational::from_ratio(12, 1)));
        assert_eq!(parse_rational("2.5e-1"), Some(Rational::from_ratio(1, 4)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("."), None);
    }
}

//! Exact distances and the radical sign oracle behind their comparisons.

use std::cmp::Ordering;
use std::fmt;

use crate::scalar::{format_sig, Scalar};

fn sign_of<T: Scalar>(v: &T) -> Ordering {
    v.partial_cmp(&T::zero()).unwrap_or(Ordering::Equal)
}

/// An element `Σ_S c_S · Π_{i∈S} √r_i` of the field generated by the
/// square roots of nonnegative radicands `r_i`, indexed by subset bitmask.
///
/// The sign is decided exactly: splitting off the last radical as
/// `A + B√r`, opposite signs of `A` and `B` are resolved by the sign of
/// `A² − B²·r`, which lives in a field with one radical fewer.
#[derive(Clone, Debug)]
pub struct SurdSum<T> {
    radicands: Vec<T>,
    coeffs: Vec<T>,
}

impl<T: Scalar> SurdSum<T> {
    pub fn new(radicands: Vec<T>) -> Self {
        assert!(
            radicands.iter().all(|r| *r >= T::zero()),
            "radicands must be nonnegative"
        );
        assert!(radicands.len() < 16, "too many radicals");
        let coeffs = vec![T::zero(); 1 << radicands.len()];
        Self { radicands, coeffs }
    }

    /// Adds `c · Π_{i∈mask} √r_i`.
    pub fn add(mut self, mask: usize, c: T) -> Self {
        let slot = &mut self.coeffs[mask];
        *slot = slot.clone() + c;
        self
    }

    pub fn sign(&self) -> Ordering {
        sign_rec(&self.coeffs, &self.radicands)
    }
}

fn sign_rec<T: Scalar>(coeffs: &[T], radicands: &[T]) -> Ordering {
    let Some((last, rest)) = radicands.split_last() else {
        return sign_of(&coeffs[0]);
    };
    let (a, b) = coeffs.split_at(coeffs.len() / 2);
    let sa = sign_rec(a, rest);
    if last.is_zero() {
        return sa;
    }
    let sb = sign_rec(b, rest);
    match (sa, sb) {
        (s, Ordering::Equal) | (Ordering::Equal, s) => s,
        (x, y) if x == y => x,
        (sa, _) => {
            let a2 = mul(a, a, rest);
            let b2 = mul(b, b, rest);
            let diff: Vec<T> = a2.into_iter().zip(b2).map(|(x, y)| x - y * last.clone()).collect();
            match sign_rec(&diff, rest) {
                Ordering::Greater => sa,
                Ordering::Less => sa.reverse(),
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

fn mul<T: Scalar>(a: &[T], b: &[T], radicands: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len()];
    for (s, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (t, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            let mut term = x.clone() * y.clone();
            let shared = s & t;
            for (i, r) in radicands.iter().enumerate() {
                if shared & (1 << i) != 0 {
                    term = term * r.clone();
                }
            }
            let slot = &mut out[s ^ t];
            *slot = slot.clone() + term;
        }
    }
    out
}

/// An exact nonnegative distance.
///
/// `Sq(q)` is the distance `√q`. `BallForm { center2, radius }` is
/// `max(√center2 − radius, 0)`, the distance to a solid ball of the given
/// radius whose center lies at squared distance `center2`.
///
/// Equality and ordering compare the represented values, not the forms.
#[derive(Clone, Debug)]
pub enum ExactDistance<T> {
    Sq(T),
    BallForm { center2: T, radius: T },
}

impl<T: Scalar> ExactDistance<T> {
    pub fn zero() -> Self {
        ExactDistance::Sq(T::zero())
    }

    pub fn ball(center2: T, radius: T) -> Self {
        ExactDistance::BallForm { center2, radius }
    }

    /// `(radicand, offset)` such that the value is `√radicand − offset`,
    /// with the clamp at zero already applied.
    pub fn surd_parts(&self) -> (T, T) {
        match self {
            ExactDistance::Sq(q) => (q.clone(), T::zero()),
            ExactDistance::BallForm { center2, radius } => {
                if self.clamped() {
                    (T::zero(), T::zero())
                } else {
                    (center2.clone(), radius.clone())
                }
            }
        }
    }

    fn clamped(&self) -> bool {
        match self {
            ExactDistance::Sq(_) => false,
            ExactDistance::BallForm { center2, radius } => *center2 <= radius.clone() * radius.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactDistance::Sq(q) => q.is_zero(),
            ExactDistance::BallForm { .. } => self.clamped(),
        }
    }

    /// The squared value when it is representable in `T`.
    pub fn squared(&self) -> Option<T> {
        match self {
            ExactDistance::Sq(q) => Some(q.clone()),
            ExactDistance::BallForm { center2, radius } => {
                if self.clamped() {
                    Some(T::zero())
                } else if radius.is_zero() {
                    Some(center2.clone())
                } else {
                    let root = center2.exact_sqrt()?;
                    let d = root - radius.clone();
                    Some(d.clone() * d)
                }
            }
        }
    }

    /// Compares this distance against `√r2` with at most two squarings.
    pub fn cmp_r2(&self, r2: &T) -> Ordering {
        if *r2 < T::zero() {
            return Ordering::Greater;
        }
        let (q1, q2) = self.surd_parts();
        if q2.is_zero() {
            return q1.partial_cmp(r2).unwrap_or(Ordering::Equal);
        }
        // √q1 − q2 vs √r2  ⇔  q1 − r2 − q2² vs 2·q2·√r2 (right side ≥ 0)
        let lhs = q1 - r2.clone() - q2.clone() * q2.clone();
        if lhs < T::zero() {
            return Ordering::Less;
        }
        let two = T::from_i64(2);
        let rhs2 = two.clone() * two * q2.clone() * q2 * r2.clone();
        (lhs.clone() * lhs).partial_cmp(&rhs2).unwrap_or(Ordering::Equal)
    }

    /// Exact value comparison.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        if let ExactDistance::Sq(b) = other {
            return self.cmp_r2(b);
        }
        if let ExactDistance::Sq(a) = self {
            return other.cmp_r2(a).reverse();
        }
        let (a, oa) = self.surd_parts();
        let (c, oc) = other.surd_parts();
        SurdSum::new(vec![a, c])
            .add(0b00, oc - oa)
            .add(0b01, T::one())
            .add(0b10, -T::one())
            .sign()
    }

    /// Half of this distance.
    pub fn halved(&self) -> Self {
        let four = T::from_i64(4);
        match self {
            ExactDistance::Sq(q) => ExactDistance::Sq(q.clone() / four),
            ExactDistance::BallForm { center2, radius } => ExactDistance::BallForm {
                center2: center2.clone() / four,
                radius: radius.half(),
            },
        }
    }

    /// Is `self <= other + √extra2`?
    pub fn le_plus_sqrt(&self, other: &Self, extra2: &T) -> bool {
        let (a, oa) = self.surd_parts();
        let (c, oc) = other.surd_parts();
        // (√a − oa) − (√c − oc) − √extra2 ≤ 0
        let s = SurdSum::new(vec![a, c, extra2.clone()])
            .add(0b000, oc - oa)
            .add(0b001, T::one())
            .add(0b010, -T::one())
            .add(0b100, -T::one());
        s.sign() != Ordering::Greater
    }

    pub fn to_f64(&self) -> f64 {
        let (q1, q2) = self.surd_parts();
        (q1.to_f64().sqrt() - q2.to_f64()).max(0.0)
    }

    /// Canonical exact text: `r2=<q>` when the square is representable,
    /// else `r=sqrt(<q1>)-<q2>`.
    pub fn exact_text(&self) -> String {
        match self.squared() {
            Some(q) => format!("r2={q}"),
            None => {
                let (q1, q2) = self.surd_parts();
                format!("r=sqrt({q1})-{q2}")
            }
        }
    }
}

impl<T: Scalar> PartialEq for ExactDistance<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl<T: Scalar> PartialOrd for ExactDistance<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl<T: Scalar> fmt::Display for ExactDistance<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {}", self.exact_text(), format_sig(self.to_f64(), 12))
    }
}

//! Machine-integer evaluation of lattice-point distances for scenes made of
//! points, segments and polylines with small rational coordinates.
//!
//! Coordinates are scaled by the common denominator `L`, so every squared
//! distance from an integer point becomes a fraction of `i128`s. Any
//! overflow falls back to the generic exact path.

use std::cmp::Ordering;

use super::query::{entry, offset_member, reached, Entry};
use super::{ExactDistance, Point, Primitive, Scene};
use crate::scalar::Scalar;

const MAX_SCALE: i128 = 1 << 24;
const MAX_COORD: i128 = 1 << 40;

struct Piece {
    prim: usize,
    a: Vec<i128>,
    b: Vec<i128>,
    d: Vec<i128>,
    len2: i128,
}

struct IntKernel {
    scale: i128,
    scale2: i128,
    pieces: Vec<Piece>,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

fn dot(u: &[i128], v: &[i128]) -> Option<i128> {
    u.iter()
        .zip(v)
        .try_fold(0i128, |acc, (x, y)| acc.checked_add(x.checked_mul(*y)?))
}

fn diff(u: &[i128], v: &[i128]) -> Option<Vec<i128>> {
    u.iter().zip(v).map(|(x, y)| x.checked_sub(*y)).collect()
}

/// Compares `a/b` with `c/d` for positive denominators.
fn cmp_frac((a, b): (i128, i128), (c, d): (i128, i128)) -> Option<Ordering> {
    Some(a.checked_mul(d)?.cmp(&c.checked_mul(b)?))
}

impl IntKernel {
    fn new<T: Scalar>(scene: &Scene<T>) -> Option<Self> {
        let mut segs: Vec<(usize, &Point<T>, &Point<T>)> = Vec::new();
        for (i, prim) in scene.primitives().iter().enumerate() {
            match prim {
                Primitive::Point(p) => segs.push((i, p, p)),
                Primitive::Segment(a, b) => segs.push((i, a, b)),
                Primitive::Polyline(ps) => segs.extend(ps.windows(2).map(|w| (i, &w[0], &w[1]))),
                Primitive::Ball { .. } => return None,
            }
        }
        let mut ratios: Vec<Vec<(i128, i128)>> = Vec::new();
        let mut scale = 1i128;
        for (_, a, b) in &segs {
            for p in [a, b] {
                let r: Vec<(i128, i128)> = p.coords().iter().map(Scalar::to_i128_ratio).collect::<Option<_>>()?;
                for &(_, den) in &r {
                    scale = (scale / gcd(scale, den)).checked_mul(den)?;
                    if scale > MAX_SCALE {
                        return None;
                    }
                }
                ratios.push(r);
            }
        }
        let lift = |r: &[(i128, i128)]| -> Option<Vec<i128>> {
            r.iter()
                .map(|&(num, den)| {
                    let v = num.checked_mul(scale / den)?;
                    (v.abs() <= MAX_COORD).then_some(v)
                })
                .collect()
        };
        let mut pieces = Vec::with_capacity(segs.len());
        for (k, (prim, _, _)) in segs.iter().enumerate() {
            let a = lift(&ratios[2 * k])?;
            let b = lift(&ratios[2 * k + 1])?;
            let d = diff(&b, &a)?;
            let len2 = dot(&d, &d)?;
            pieces.push(Piece {
                prim: *prim,
                a,
                b,
                d,
                len2,
            });
        }
        Some(Self {
            scale,
            scale2: scale.checked_mul(scale)?,
            pieces,
        })
    }

    /// Squared distance from the integer point `z` to a piece, as a fraction
    /// in scaled units (divide by `L²` for the true value).
    fn piece_dist2(&self, piece: &Piece, z: &[i128]) -> Option<(i128, i128)> {
        let za = diff(z, &piece.a)?;
        let proj = dot(&za, &piece.d)?;
        if proj <= 0 || piece.len2 == 0 {
            Some((dot(&za, &za)?, 1))
        } else if proj >= piece.len2 {
            let zb = diff(z, &piece.b)?;
            Some((dot(&zb, &zb)?, 1))
        } else {
            let num = dot(&za, &za)?
                .checked_mul(piece.len2)?
                .checked_sub(proj.checked_mul(proj)?)?;
            Some((num, piece.len2))
        }
    }

    fn lift(&self, z: &[i64]) -> Option<Vec<i128>> {
        z.iter().map(|&c| (c as i128).checked_mul(self.scale)).collect()
    }

    /// `Some(true)` when inside, `Some(false)` when outside, and the tied
    /// primitives when `z` lies exactly on the boundary sphere of radius √r2.
    fn member(&self, z: &[i64], r2: (i128, i128)) -> Option<Result<bool, Vec<usize>>> {
        let zl = self.lift(z)?;
        let target = (r2.0.checked_mul(self.scale2)?, r2.1);
        let mut tied: Vec<usize> = Vec::new();
        for piece in &self.pieces {
            match cmp_frac(self.piece_dist2(piece, &zl)?, target)? {
                Ordering::Less => return Some(Ok(true)),
                Ordering::Equal => {
                    if !tied.contains(&piece.prim) {
                        tied.push(piece.prim);
                    }
                }
                Ordering::Greater => {}
            }
        }
        Some(if tied.is_empty() { Ok(false) } else { Err(tied) })
    }

    /// Smallest scaled distance and the primitives attaining it.
    fn nearest(&self, z: &[i64]) -> Option<((i128, i128), Vec<usize>)> {
        let zl = self.lift(z)?;
        let mut best: Option<(i128, i128)> = None;
        let mut tied: Vec<usize> = Vec::new();
        for piece in &self.pieces {
            let d = self.piece_dist2(piece, &zl)?;
            let ord = match best {
                None => Ordering::Less,
                Some(b) => cmp_frac(d, b)?,
            };
            match ord {
                Ordering::Less => {
                    best = Some(d);
                    tied.clear();
                    tied.push(piece.prim);
                }
                Ordering::Equal => {
                    if !tied.contains(&piece.prim) {
                        tied.push(piece.prim);
                    }
                }
                Ordering::Greater => {}
            }
        }
        Some((best?, tied))
    }
}

/// A scene prepared for many lattice-point queries.
pub(crate) struct Prepared<'a, T> {
    scene: &'a Scene<T>,
    kernel: Option<IntKernel>,
}

impl<'a, T: Scalar> Prepared<'a, T> {
    pub(crate) fn new(scene: &'a Scene<T>) -> Self {
        Self {
            scene,
            kernel: IntKernel::new(scene),
        }
    }

    fn tied_entry(&self, z: &Point<T>, tied: &[usize]) -> Entry {
        let prims: Vec<&Primitive<T>> = tied.iter().map(|&i| &self.scene.primitives()[i]).collect();
        reached(self.scene, z, &prims)
    }

    /// Same as [`offset_member`] at the lattice point `z`.
    pub(crate) fn member(&self, z: &[i64], r2: &T, r2_ratio: Option<(i128, i128)>) -> bool {
        if let (Some(k), Some(ratio)) = (&self.kernel, r2_ratio) {
            match k.member(z, ratio) {
                Some(Ok(inside)) => return inside,
                Some(Err(tied)) => return self.tied_entry(&Point::from_ints(z), &tied) == Entry::Closed,
                None => {}
            }
        }
        offset_member(self.scene, &Point::from_ints(z), r2)
    }

    /// Same as [`entry`] at the lattice point `z`.
    pub(crate) fn entry(&self, z: &[i64]) -> (ExactDistance<T>, Entry) {
        let point = Point::from_ints(z);
        if let Some(k) = &self.kernel {
            if let Some(((num, den), tied)) = k.nearest(z) {
                if let Some(den) = den.checked_mul(k.scale2) {
                    let dist = ExactDistance::Sq(T::from_i128_ratio(num, den));
                    return (dist, self.tied_entry(&point, &tied));
                }
            }
        }
        entry(self.scene, &point)
    }
}

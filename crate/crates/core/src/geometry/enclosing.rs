//! Minimal enclosing ball by randomized incremental construction with the
//! move-to-front heuristic. Exact for rational input.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{dot, Point};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct EnclosingBall<T> {
    pub center: Point<T>,
    /// Squared radius.
    pub r2: T,
}

impl<T: Scalar> EnclosingBall<T> {
    pub fn contains(&self, p: &Point<T>) -> bool {
        p.dist2(&self.center) <= self.r2
    }

    pub fn on_boundary(&self, p: &Point<T>) -> bool {
        p.dist2(&self.center) == self.r2
    }

    pub fn radius_f64(&self) -> f64 {
        self.r2.to_f64().sqrt()
    }
}

const DEFAULT_SEED: u64 = 0x6d65_625f_7365_6564;

/// Smallest closed ball containing `points`, with a fixed shuffle seed.
pub fn min_enclosing_ball<T: Scalar>(points: &[Point<T>]) -> Result<EnclosingBall<T>> {
    min_enclosing_ball_seeded(points, DEFAULT_SEED)
}

pub fn min_enclosing_ball_seeded<T: Scalar>(points: &[Point<T>], seed: u64) -> Result<EnclosingBall<T>> {
    let dim = points.first().ok_or(Error::EmptyInput)?.dim();
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }
    let mut pts = points.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut support = Vec::with_capacity(dim + 1);
    let end = pts.len();
    Ok(move_to_front(&mut pts, end, &mut support, dim).expect("nonempty input has a ball"))
}

fn move_to_front<T: Scalar>(
    pts: &mut [Point<T>],
    end: usize,
    support: &mut Vec<Point<T>>,
    dim: usize,
) -> Option<EnclosingBall<T>> {
    let mut ball = circumball(support);
    if support.len() == dim + 1 {
        return ball;
    }
    for i in 0..end {
        if ball.as_ref().is_none_or(|b| !b.contains(&pts[i])) {
            support.push(pts[i].clone());
            ball = move_to_front(pts, i, support, dim);
            support.pop();
            pts[..=i].rotate_right(1);
        }
    }
    ball
}

/// Smallest ball with every support point on its boundary; the center lies in
/// the affine hull of the support.
fn circumball<T: Scalar>(support: &[Point<T>]) -> Option<EnclosingBall<T>> {
    let (origin, rest) = support.split_first()?;
    let vs: Vec<Vec<T>> = rest.iter().map(|p| p.sub(origin)).collect();
    let m = vs.len();
    // 2 (v_i · v_j) λ_j = v_i · v_i
    let mut rows: Vec<Vec<T>> = (0..m)
        .map(|i| {
            let mut row: Vec<T> = (0..m).map(|j| T::from_i64(2) * dot(&vs[i], &vs[j])).collect();
            row.push(dot(&vs[i], &vs[i]));
            row
        })
        .collect();
    let lambda = solve(&mut rows, m)?;
    let mut center = origin.clone();
    for (v, l) in vs.iter().zip(&lambda) {
        center = center.along(v, l);
    }
    let r2 = center.dist2(origin);
    Some(EnclosingBall { center, r2 })
}

/// Gaussian elimination on an augmented `m × (m+1)` system. Free variables
/// are set to zero; `None` when inconsistent.
fn solve<T: Scalar>(rows: &mut [Vec<T>], m: usize) -> Option<Vec<T>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m {
        let pick = (r..m).filter(|&i| !rows[i][col].is_zero()).max_by(|&a, &b| {
            rows[a][col]
                .abs()
                .partial_cmp(&rows[b][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let Some(p) = pick else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone() / pivot[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x = x.clone() - p.clone() * f.clone();
                }
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[m].is_zero()) {
        return None;
    }
    let mut x = vec![T::zero(); m];
    for (row, col) in pivots {
        x[col] = rows[row][m].clone() / rows[row][col].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::from_ratio(n, d)
    }

    fn ipt(c: &[i64]) -> Point<Q> {
        Point::from_ints(c)
    }

    #[test]
    fn diameter_pair() {
        let b = min_enclosing_ball(&[ipt(&[0, 0]), ipt(&[3, 0])]).unwrap();
        assert_eq!(b.center, Point(vec![q(3, 2), q(0, 1)]));
        assert_eq!(b.r2, q(9, 4));
    }

    #[test]
    fn right_triangle_uses_hypotenuse() {
        let pts = [ipt(&[0, 0]), ipt(&[4, 0]), ipt(&[4, 3])];
        let b = min_enclosing_ball(&pts).unwrap();
        assert_eq!(b.center, Point(vec![q(2, 1), q(3, 2)]));
        assert_eq!(b.r2, q(25, 4));
        assert!(pts.iter().all(|p| b.on_boundary(p)));
    }

    #[test]
    fn single_point() {
        let b = min_enclosing_ball(&[ipt(&[7, -2, 1])]).unwrap();
        assert_eq!(b.center, ipt(&[7, -2, 1]));
        assert_eq!(b.r2, q(0, 1));
    }

    #[test]
    fn empty_input_rejected() {
        assert_eq!(min_enclosing_ball::<Q>(&[]).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn acute_triangle_circumcircle() {
        let pts = [ipt(&[0, 0]), ipt(&[2, 0]), ipt(&[1, 2])];
        let b = min_enclosing_ball(&pts).unwrap();
        assert_eq!(b.center, Point(vec![q(1, 1), q(3, 4)]));
        assert_eq!(b.r2, q(25, 16));
    }

    #[test]
    fn cocircular_square_in_3d() {
        let pts = [
            ipt(&[0, 0, 5]),
            ipt(&[2, 0, 5]),
            ipt(&[2, 2, 5]),
            ipt(&[0, 2, 5]),
            ipt(&[1, 1, 5]),
        ];
        let b = min_enclosing_ball(&pts).unwrap();
        assert_eq!(b.center, ipt(&[1, 1, 5]));
        assert_eq!(b.r2, q(2, 1));
    }

    #[test]
    fn float_instance_agrees() {
        let pts = [Point(vec![0.0f64, 0.0]), Point(vec![4.0, 0.0]), Point(vec![4.0, 3.0])];
        let b = min_enclosing_ball(&pts).unwrap();
        assert!((b.r2 - 6.25).abs() < 1e-12);
    }
}

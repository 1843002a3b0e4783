use std::cmp::Ordering;

use super::{dot, ExactDistance, Point, Primitive, Scene};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::union_find::UnionFind;

/// A point of a primitive attaining the minimum distance to a query point.
#[derive(Clone, Debug, PartialEq)]
pub enum Minimizer<T> {
    Point(Point<T>),
    /// The point of the sphere `|x − center| = radius` on the ray from
    /// `center` through `toward`. Its coordinates are irrational in general.
    BallSurface {
        center: Point<T>,
        toward: Point<T>,
        radius: T,
    },
}

impl<T: Scalar> Minimizer<T> {
    /// Whether this minimizer coincides with one of `punctures`.
    pub fn is_punctured(&self, punctures: &[Point<T>]) -> bool {
        match self {
            Minimizer::Point(p) => punctures.iter().any(|q| q == p),
            Minimizer::BallSurface { center, toward, radius } => {
                let ray = toward.sub(center);
                let r2 = radius.clone() * radius.clone();
                let ray2 = dot(&ray, &ray);
                punctures.iter().any(|p| {
                    let v = p.sub(center);
                    let v2 = dot(&v, &v);
                    let along = dot(&v, &ray);
                    v2 == r2 && along > T::zero() && along.clone() * along == v2 * ray2.clone()
                })
            }
        }
    }
}

/// Whether a lattice point enters the offset exactly at its threshold
/// (`Closed`) or only strictly above it (`Open`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    Closed,
    Open,
}

struct Nearest<T> {
    dist: ExactDistance<T>,
    feet: Vec<Minimizer<T>>,
}

/// Closest point of segment `[a, b]` to `z` and its squared distance.
fn point_segment<T: Scalar>(z: &Point<T>, a: &Point<T>, b: &Point<T>) -> (T, Point<T>) {
    let d = b.sub(a);
    let len2 = dot(&d, &d);
    if len2.is_zero() {
        return (z.dist2(a), a.clone());
    }
    let t = dot(&z.sub(a), &d) / len2;
    let foot = if t <= T::zero() {
        a.clone()
    } else if t >= T::one() {
        b.clone()
    } else {
        a.along(&d, &t)
    };
    (z.dist2(&foot), foot)
}

/// Squared distance between segments `[a1, b1]` and `[a2, b2]`; either may
/// be degenerate.
fn segment_segment<T: Scalar>(a1: &Point<T>, b1: &Point<T>, a2: &Point<T>, b2: &Point<T>) -> T {
    let d1 = b1.sub(a1);
    let d2 = b2.sub(a2);
    let a = dot(&d1, &d1);
    let e = dot(&d2, &d2);
    let b = dot(&d1, &d2);
    let det = a.clone() * e.clone() - b.clone() * b.clone();
    if det > T::zero() {
        let r = a1.sub(a2);
        let c = dot(&r, &d1);
        let f = dot(&r, &d2);
        let s = (b.clone() * f.clone() - c.clone() * e) / det.clone();
        let t = (a * f - b * c) / det;
        let unit = |x: &T| *x >= T::zero() && *x <= T::one();
        if unit(&s) && unit(&t) {
            return a1.along(&d1, &s).dist2(&a2.along(&d2, &t));
        }
    }
    [
        point_segment(a1, a2, b2).0,
        point_segment(b1, a2, b2).0,
        point_segment(a2, a1, b1).0,
        point_segment(b2, a1, b1).0,
    ]
    .into_iter()
    .reduce(|x, y| if y < x { y } else { x })
    .expect("four candidates")
}

/// Linear pieces `(a, b)` of a non-ball primitive; points are `(p, p)`.
fn pieces<T>(prim: &Primitive<T>) -> Vec<(&Point<T>, &Point<T>)> {
    match prim {
        Primitive::Point(p) => vec![(p, p)],
        Primitive::Segment(a, b) => vec![(a, b)],
        Primitive::Polyline(pts) => pts.windows(2).map(|w| (&w[0], &w[1])).collect(),
        Primitive::Ball { .. } => Vec::new(),
    }
}

fn min_by_value<T: Scalar>(values: impl Iterator<Item = T>) -> T {
    values.reduce(|x, y| if y < x { y } else { x }).expect("nonempty")
}

fn nearest<T: Scalar>(z: &Point<T>, prim: &Primitive<T>) -> Nearest<T> {
    if let Primitive::Ball { center, radius } = prim {
        let q1 = z.dist2(center);
        return if q1 <= radius.clone() * radius.clone() {
            Nearest {
                dist: ExactDistance::zero(),
                feet: vec![Minimizer::Point(z.clone())],
            }
        } else {
            Nearest {
                dist: ExactDistance::ball(q1, radius.clone()),
                feet: vec![Minimizer::BallSurface {
                    center: center.clone(),
                    toward: z.clone(),
                    radius: radius.clone(),
                }],
            }
        };
    }
    let mut best: Option<T> = None;
    let mut feet: Vec<Minimizer<T>> = Vec::new();
    for (a, b) in pieces(prim) {
        let (d2, foot) = point_segment(z, a, b);
        let ord = best
            .as_ref()
            .map_or(Ordering::Less, |m| d2.partial_cmp(m).unwrap_or(Ordering::Equal));
        match ord {
            Ordering::Less => {
                best = Some(d2);
                feet.clear();
                feet.push(Minimizer::Point(foot));
            }
            Ordering::Equal => {
                let foot = Minimizer::Point(foot);
                if !feet.contains(&foot) {
                    feet.push(foot);
                }
            }
            Ordering::Greater => {}
        }
    }
    Nearest {
        dist: ExactDistance::Sq(best.expect("primitive has a piece")),
        feet,
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Exact distance from `z` to the closed primitive.
pub fn exact_dist2<T: Scalar>(z: &Point<T>, prim: &Primitive<T>) -> Result<ExactDistance<T>> {
    check_dim(prim.dim(), z.dim())?;
    Ok(nearest(z, prim).dist)
}

/// All points of the closed primitive nearest to `z`.
pub fn minimizer_set<T: Scalar>(z: &Point<T>, prim: &Primitive<T>) -> Result<Vec<Minimizer<T>>> {
    check_dim(prim.dim(), z.dim())?;
    Ok(nearest(z, prim).feet)
}

/// Exact gap between two closed primitives.
pub fn gap2<T: Scalar>(a: &Primitive<T>, b: &Primitive<T>) -> Result<ExactDistance<T>> {
    check_dim(a.dim(), b.dim())?;
    Ok(match (a, b) {
        (Primitive::Ball { center: c1, radius: r1 }, Primitive::Ball { center: c2, radius: r2 }) => {
            ExactDistance::ball(c1.dist2(c2), r1.clone() + r2.clone())
        }
        (Primitive::Ball { center, radius }, other) | (other, Primitive::Ball { center, radius }) => {
            let q1 = min_by_value(pieces(other).into_iter().map(|(p, q)| point_segment(center, p, q).0));
            ExactDistance::ball(q1, radius.clone())
        }
        _ => {
            let pa = pieces(a);
            let pb = pieces(b);
            ExactDistance::Sq(min_by_value(pa.iter().flat_map(|(a1, b1)| {
                pb.iter().map(move |(a2, b2)| segment_segment(*a1, *b1, *a2, *b2))
            })))
        }
    })
}

/// Squared distance from `z` to segment `[a, b]`, without building the foot.
fn point_segment_dist2<T: Scalar>(z: &Point<T>, a: &Point<T>, b: &Point<T>) -> T {
    let d = b.sub(a);
    let za = z.sub(a);
    let len2 = dot(&d, &d);
    let proj = dot(&za, &d);
    if proj <= T::zero() || len2.is_zero() {
        dot(&za, &za)
    } else if proj >= len2 {
        z.dist2(b)
    } else {
        dot(&za, &za) - proj.clone() * proj / len2
    }
}

/// Exact distance from `z` to a primitive; same value as [`exact_dist2`].
fn distance_only<T: Scalar>(z: &Point<T>, prim: &Primitive<T>) -> ExactDistance<T> {
    match prim {
        Primitive::Ball { center, radius } => {
            let q1 = z.dist2(center);
            if q1 <= radius.clone() * radius.clone() {
                ExactDistance::zero()
            } else {
                ExactDistance::ball(q1, radius.clone())
            }
        }
        _ => ExactDistance::Sq(min_by_value(
            pieces(prim).into_iter().map(|(a, b)| point_segment_dist2(z, a, b)),
        )),
    }
}

pub(crate) fn reached<T: Scalar>(scene: &Scene<T>, z: &Point<T>, tied: &[&Primitive<T>]) -> Entry {
    let punctures = scene.punctures();
    if punctures.is_empty()
        || tied
            .iter()
            .any(|p| nearest(z, p).feet.iter().any(|f| !f.is_punctured(punctures)))
    {
        Entry::Closed
    } else {
        Entry::Open
    }
}

/// Distance from `z` to X and whether `z` is reached at that radius.
pub fn entry<T: Scalar>(scene: &Scene<T>, z: &Point<T>) -> (ExactDistance<T>, Entry) {
    let mut best: Option<ExactDistance<T>> = None;
    let mut tied: Vec<&Primitive<T>> = Vec::new();
    for prim in scene.primitives() {
        let d = distance_only(z, prim);
        let ord = best.as_ref().map_or(Ordering::Less, |b| d.cmp_exact(b));
        match ord {
            Ordering::Less => {
                best = Some(d);
                tied.clear();
                tied.push(prim);
            }
            Ordering::Equal => tied.push(prim),
            Ordering::Greater => {}
        }
    }
    let dist = best.expect("scene is nonempty");
    let kind = reached(scene, z, &tied);
    (dist, kind)
}

/// Is `z` in the closed r-offset of the punctured set, with `r2 = r²`?
pub fn offset_member<T: Scalar>(scene: &Scene<T>, z: &Point<T>, r2: &T) -> bool {
    let mut tied: Vec<&Primitive<T>> = Vec::new();
    for prim in scene.primitives() {
        match distance_only(z, prim).cmp_r2(r2) {
            Ordering::Less => return true,
            Ordering::Equal => tied.push(prim),
            Ordering::Greater => {}
        }
    }
    !tied.is_empty() && reached(scene, z, &tied) == Entry::Closed
}

/// Primitive indices grouped by connectivity of the zero-gap graph.
pub fn closure_groups<T: Scalar>(scene: &Scene<T>) -> Vec<Vec<usize>> {
    let prims = scene.primitives();
    let mut uf = UnionFind::new(prims.len());
    for i in 0..prims.len() {
        for j in i + 1..prims.len() {
            if uf.find(i) != uf.find(j) && gap2(&prims[i], &prims[j]).is_ok_and(|g| g.is_zero()) {
                uf.union(i, j);
            }
        }
    }
    uf.groups()
}

/// Whether the closure of the scene is connected.
pub fn closure_connected<T: Scalar>(scene: &Scene<T>) -> bool {
    closure_groups(scene).len() == 1
}

/// Intersection of a closed primitive with an axis-aligned box.
#[derive(Clone, Debug, PartialEq)]
pub enum BoxHit<T> {
    Empty,
    /// Finitely many points.
    Finite(Vec<Point<T>>),
    Infinite,
}

impl<T: Scalar> BoxHit<T> {
    pub fn is_empty(&self) -> bool {
        matches!(self, BoxHit::Empty)
    }

    /// Whether the hit contains a point outside `punctures`.
    pub fn meets_outside(&self, punctures: &[Point<T>]) -> bool {
        match self {
            BoxHit::Empty => false,
            BoxHit::Infinite => true,
            BoxHit::Finite(pts) => pts.iter().any(|p| !punctures.contains(p)),
        }
    }

    fn merge(self, other: Self) -> Self {
        match (self, other) {
            (BoxHit::Infinite, _) | (_, BoxHit::Infinite) => BoxHit::Infinite,
            (BoxHit::Empty, h) | (h, BoxHit::Empty) => h,
            (BoxHit::Finite(mut a), BoxHit::Finite(b)) => {
                for p in b {
                    if !a.contains(&p) {
                        a.push(p);
                    }
                }
                BoxHit::Finite(a)
            }
        }
    }
}

fn segment_box<T: Scalar>(a: &Point<T>, b: &Point<T>, lo: &[T], hi: &[T]) -> BoxHit<T> {
    let d = b.sub(a);
    let mut t0 = T::zero();
    let mut t1 = T::one();
    for i in 0..d.len() {
        let ai = &a.0[i];
        if d[i].is_zero() {
            if *ai < lo[i] || *ai > hi[i] {
                return BoxHit::Empty;
            }
            continue;
        }
        let mut u = (lo[i].clone() - ai.clone()) / d[i].clone();
        let mut v = (hi[i].clone() - ai.clone()) / d[i].clone();
        if u > v {
            std::mem::swap(&mut u, &mut v);
        }
        if u > t0 {
            t0 = u;
        }
        if v < t1 {
            t1 = v;
        }
        if t0 > t1 {
            return BoxHit::Empty;
        }
    }
    if t0 == t1 {
        BoxHit::Finite(vec![a.along(&d, &t0)])
    } else {
        BoxHit::Infinite
    }
}

/// Intersection of a closed primitive with the box `[lo, hi]` (degenerate
/// boxes such as shared faces of voxels are allowed).
pub fn box_hit<T: Scalar>(prim: &Primitive<T>, lo: &[T], hi: &[T]) -> BoxHit<T> {
    let inside = |p: &Point<T>| p.0.iter().zip(lo.iter().zip(hi)).all(|(c, (l, h))| c >= l && c <= h);
    match prim {
        Primitive::Point(p) => {
            if inside(p) {
                BoxHit::Finite(vec![p.clone()])
            } else {
                BoxHit::Empty
            }
        }
        Primitive::Ball { center, radius } => {
            let clamp = Point(
                center
                    .0
                    .iter()
                    .zip(lo.iter().zip(hi))
                    .map(|(c, (l, h))| {
                        if c < l {
                            l.clone()
                        } else if c > h {
                            h.clone()
                        } else {
                            c.clone()
                        }
                    })
                    .collect(),
            );
            let gap = center.dist2(&clamp);
            let r2 = radius.clone() * radius.clone();
            let point_box = lo.iter().zip(hi).all(|(l, h)| l == h);
            match gap.partial_cmp(&r2) {
                Some(Ordering::Greater) => BoxHit::Empty,
                Some(Ordering::Less) if !point_box => BoxHit::Infinite,
                _ => BoxHit::Finite(vec![clamp]),
            }
        }
        _ => pieces(prim)
            .into_iter()
            .map(|(a, b)| {
                if a == b {
                    if inside(a) {
                        BoxHit::Finite(vec![a.clone()])
                    } else {
                        BoxHit::Empty
                    }
                } else {
                    segment_box(a, b, lo, hi)
                }
            })
            .fold(BoxHit::Empty, BoxHit::merge),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::from_ratio(n, d)
    }

    fn pt(c: &[(i64, i64)]) -> Point<Q> {
        Point(c.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn ipt(c: &[i64]) -> Point<Q> {
        Point::from_ints(c)
    }

    fn seg(a: Point<Q>, b: Point<Q>) -> Primitive<Q> {
        Primitive::Segment(a, b)
    }

    fn diagonal() -> Scene<Q> {
        Scene::new(
            2,
            vec![seg(pt(&[(-1, 2), (-1, 2)]), pt(&[(3, 2), (3, 2)]))],
            vec![pt(&[(1, 2), (1, 2)])],
            None,
        )
        .unwrap()
    }

    /// Dense parameter sampling: minimum squared distance over t = i/steps.
    fn sampled_min(z: &Point<Q>, a: &Point<Q>, b: &Point<Q>, steps: i64) -> Q {
        let d = b.sub(a);
        (0..=steps)
            .map(|i| z.dist2(&a.along(&d, &q(i, steps))))
            .reduce(|x, y| if y < x { y } else { x })
            .unwrap()
    }

    #[test]
    fn perpendicular_foot() {
        let s = seg(pt(&[(-1, 2), (1, 2)]), pt(&[(3, 2), (1, 2)]));
        assert_eq!(exact_dist2(&ipt(&[0, 0]), &s).unwrap(), ExactDistance::Sq(q(1, 4)));
        assert_eq!(
            minimizer_set(&ipt(&[0, 0]), &s).unwrap(),
            vec![Minimizer::Point(pt(&[(0, 1), (1, 2)]))]
        );
    }

    #[test]
    fn diagonal_projection_matches_sampling() {
        let a = pt(&[(-1, 2), (-1, 2)]);
        let b = pt(&[(3, 2), (3, 2)]);
        let z = ipt(&[1, 0]);
        // the foot sits at parameter 1/2, which the 1000-step grid contains
        assert_eq!(sampled_min(&z, &a, &b, 1000), q(1, 2));
        let s = seg(a, b);
        assert_eq!(exact_dist2(&z, &s).unwrap(), ExactDistance::Sq(q(1, 2)));
        assert_eq!(
            minimizer_set(&z, &s).unwrap(),
            vec![Minimizer::Point(pt(&[(1, 2), (1, 2)]))]
        );
    }

    #[test]
    fn ball_distance_form() {
        let ball = Primitive::Ball {
            center: ipt(&[3, 0]),
            radius: q(1, 1),
        };
        let d = exact_dist2(&ipt(&[0, 0]), &ball).unwrap();
        assert!(matches!(
            &d,
            ExactDistance::BallForm { center2, radius } if *center2 == q(9, 1) && *radius == q(1, 1)
        ));
        assert_eq!(d.to_f64(), 2.0);
    }

    #[test]
    fn on_primitive_minimizer_is_self() {
        let s = seg(ipt(&[0, 0]), ipt(&[4, 2]));
        let z = ipt(&[2, 1]);
        assert!(exact_dist2(&z, &s).unwrap().is_zero());
        assert_eq!(minimizer_set(&z, &s).unwrap(), vec![Minimizer::Point(z)]);
    }

    #[test]
    fn v_shaped_polyline_has_two_minimizers() {
        let v = Primitive::Polyline(vec![ipt(&[-2, 2]), ipt(&[0, 0]), ipt(&[2, 2])]);
        let z = ipt(&[0, 2]);
        let feet = minimizer_set(&z, &v).unwrap();
        assert_eq!(
            feet,
            vec![Minimizer::Point(ipt(&[-1, 1])), Minimizer::Point(ipt(&[1, 1]))]
        );
        // sampling confirms the minimum value of 2 on both arms
        assert_eq!(sampled_min(&z, &ipt(&[-2, 2]), &ipt(&[0, 0]), 100), q(2, 1));
        assert_eq!(sampled_min(&z, &ipt(&[0, 0]), &ipt(&[2, 2]), 100), q(2, 1));
        assert_eq!(exact_dist2(&z, &v).unwrap(), ExactDistance::Sq(q(2, 1)));
    }

    #[test]
    fn gap_examples() {
        let p0 = Primitive::Point(ipt(&[0, 0]));
        let p3 = Primitive::Point(ipt(&[3, 0]));
        assert_eq!(gap2(&p0, &p3).unwrap(), ExactDistance::Sq(q(9, 1)));
        let s = seg(ipt(&[0, 0]), ipt(&[1, 0]));
        let p = Primitive::Point(ipt(&[3, 4]));
        assert_eq!(gap2(&s, &p).unwrap(), ExactDistance::Sq(q(20, 1)));
        let b1 = Primitive::Ball {
            center: ipt(&[0, 0]),
            radius: q(1, 1),
        };
        let b2 = Primitive::Ball {
            center: ipt(&[5, 0]),
            radius: q(1, 1),
        };
        let g = gap2(&b1, &b2).unwrap();
        assert_eq!(g, ExactDistance::Sq(q(9, 1)));
        assert_eq!(g.to_f64(), 3.0);
    }

    #[test]
    fn gap_dimension_mismatch() {
        let a = Primitive::Point(ipt(&[0, 0]));
        let b = Primitive::Point(ipt(&[0, 0, 0]));
        assert!(matches!(gap2(&a, &b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn crossing_segments_have_zero_gap() {
        let a = seg(ipt(&[0, 0]), ipt(&[2, 2]));
        let b = seg(ipt(&[0, 2]), ipt(&[2, 0]));
        assert!(gap2(&a, &b).unwrap().is_zero());
        let c = seg(ipt(&[0, 5]), ipt(&[5, 0]));
        assert_eq!(gap2(&a, &c).unwrap(), ExactDistance::Sq(q(1, 2)));
        // parallel segments one apart
        let d = seg(ipt(&[0, 1]), ipt(&[2, 3]));
        assert_eq!(gap2(&a, &d).unwrap(), ExactDistance::Sq(q(1, 2)));
    }

    #[test]
    fn diagonal_membership() {
        let scene = diagonal();
        assert!(!offset_member(&scene, &ipt(&[1, 0]), &q(1, 2)));
        assert!(offset_member(&scene, &ipt(&[0, 0]), &q(0, 1)));
        assert!(offset_member(&scene, &ipt(&[1, 0]), &q(51, 100)));
        // the witness at parameter offset: point (1/2+e, 1/2+e) with e = 1/20
        let w = pt(&[(11, 20), (11, 20)]);
        assert!(ipt(&[1, 0]).dist2(&w) <= q(51, 100));
        assert!(!scene.is_punctured(&w));
    }

    #[test]
    fn puncture_must_lie_on_scene() {
        let err = Scene::new(2, vec![seg(ipt(&[0, 0]), ipt(&[2, 0]))], vec![ipt(&[1, 1])], None).unwrap_err();
        assert!(matches!(err, Error::PunctureOffScene(_)));
    }

    #[test]
    fn invalid_primitives_rejected() {
        assert!(Scene::from_primitives(2, vec![seg(ipt(&[1, 1]), ipt(&[1, 1]))]).is_err());
        assert!(Scene::from_primitives(
            2,
            vec![Primitive::Polyline(vec![ipt(&[0, 0]), ipt(&[0, 0]), ipt(&[1, 0])])]
        )
        .is_err());
        assert!(Scene::<Q>::from_primitives(2, vec![]).is_err());
        assert!(Scene::from_primitives(2, vec![Primitive::Point(ipt(&[0, 0, 0]))]).is_err());
        assert!(Scene::new(
            2,
            vec![Primitive::Point(ipt(&[0, 0])), Primitive::Point(ipt(&[1, 0]))],
            vec![],
            Some(vec![vec![0]])
        )
        .is_err());
    }

    #[test]
    fn closure_connectivity() {
        let touching = Scene::from_primitives(
            2,
            vec![seg(ipt(&[0, 0]), ipt(&[1, 0])), seg(ipt(&[1, 0]), ipt(&[1, 1]))],
        )
        .unwrap();
        assert!(closure_connected(&touching));
        let apart = Scene::from_points(vec![ipt(&[0, 0]), ipt(&[3, 0])]).unwrap();
        assert!(!closure_connected(&apart));
        assert!(closure_connected(&diagonal()));
    }

    #[test]
    fn ball_surface_puncture() {
        let scene = Scene::new(
            2,
            vec![Primitive::Ball {
                center: ipt(&[0, 0]),
                radius: q(1, 1),
            }],
            vec![ipt(&[1, 0])],
            None,
        )
        .unwrap();
        // (2,0) is nearest to the punctured boundary point (1,0)
        assert_eq!(entry(&scene, &ipt(&[2, 0])).1, Entry::Open);
        assert_eq!(entry(&scene, &ipt(&[0, 2])).1, Entry::Closed);
        assert!(!offset_member(&scene, &ipt(&[2, 0]), &q(1, 1)));
        assert!(offset_member(&scene, &ipt(&[0, 2]), &q(1, 1)));
    }

    #[test]
    fn box_hits() {
        let s = seg(pt(&[(1, 2), (1, 2)]), pt(&[(5, 2), (1, 2)]));
        let face_lo = [q(1, 1), q(0, 1)];
        let face_hi = [q(1, 1), q(1, 1)];
        assert_eq!(
            box_hit(&s, &face_lo, &face_hi),
            BoxHit::Finite(vec![pt(&[(1, 1), (1, 2)])])
        );
        assert_eq!(box_hit(&s, &[q(0, 1), q(0, 1)], &[q(1, 1), q(1, 1)]), BoxHit::Infinite);
        assert_eq!(box_hit(&s, &[q(3, 1), q(0, 1)], &[q(4, 1), q(1, 1)]), BoxHit::Empty);
        let ball = Primitive::Ball {
            center: pt(&[(1, 2), (1, 2)]),
            radius: q(1, 2),
        };
        // touches the unit square anchored at (1,0) in a single point
        assert_eq!(
            box_hit(&ball, &[q(1, 1), q(0, 1)], &[q(2, 1), q(1, 1)]),
            BoxHit::Finite(vec![pt(&[(1, 1), (1, 2)])])
        );
    }
}

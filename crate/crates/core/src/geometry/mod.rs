//! The continuous set X: a punctured union of primitives, with exact
//! distance, gap, membership and enclosing-ball computations.

mod distance;
mod enclosing;
mod kernel;
mod query;

pub use distance::{ExactDistance, SurdSum};
pub use enclosing::{min_enclosing_ball, min_enclosing_ball_seeded, EnclosingBall};
pub(crate) use kernel::Prepared;
pub use query::{
    box_hit, closure_connected, closure_groups, entry, exact_dist2, gap2, minimizer_set, offset_member, BoxHit, Entry,
    Minimizer,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of ℝⁿ.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Point<T>(pub Vec<T>);

impl<T: Scalar> Point<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn sub(&self, other: &Self) -> Vec<T> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.clone() - b.clone())
            .collect()
    }

    pub fn dist2(&self, other: &Self) -> T {
        self.0.iter().zip(&other.0).fold(T::zero(), |acc, (a, b)| {
            let d = a.clone() - b.clone();
            acc + d.clone() * d
        })
    }

    /// `self + t·dir`.
    pub fn along(&self, dir: &[T], t: &T) -> Self {
        Point(
            self.0
                .iter()
                .zip(dir)
                .map(|(a, d)| a.clone() + t.clone() * d.clone())
                .collect(),
        )
    }

    pub fn translated(&self, shift: &[i64]) -> Self {
        Point(
            self.0
                .iter()
                .zip(shift)
                .map(|(a, &s)| a.clone() + T::from_i64(s))
                .collect(),
        )
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Point(perm.iter().map(|&i| self.0[i].clone()).collect())
    }
}

impl<T: fmt::Display> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// A closed geometric primitive.
#[derive(Clone, Debug, PartialEq)]
pub enum Primitive<T> {
    Point(Point<T>),
    Segment(Point<T>, Point<T>),
    Polyline(Vec<Point<T>>),
    /// Solid closed ball.
    Ball {
        center: Point<T>,
        radius: T,
    },
}

impl<T: Scalar> Primitive<T> {
    pub fn dim(&self) -> usize {
        match self {
            Primitive::Point(p) | Primitive::Segment(p, _) => p.dim(),
            Primitive::Polyline(pts) => pts.first().map_or(0, Point::dim),
            Primitive::Ball { center, .. } => center.dim(),
        }
    }

    fn validate(&self, index: usize, dim: usize) -> Result<()> {
        let invalid = |reason: &str| Error::InvalidPrimitive {
            index,
            reason: reason.to_owned(),
        };
        let check_dim = |p: &Point<T>| {
            if p.dim() == dim {
                Ok(())
            } else {
                Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                })
            }
        };
        match self {
            Primitive::Point(p) => check_dim(p),
            Primitive::Segment(a, b) => {
                check_dim(a)?;
                check_dim(b)?;
                if a == b {
                    return Err(invalid("segment endpoints coincide"));
                }
                Ok(())
            }
            Primitive::Polyline(pts) => {
                if pts.len() < 2 {
                    return Err(invalid("polyline needs at least two points"));
                }
                pts.iter().try_for_each(check_dim)?;
                if pts.windows(2).any(|w| w[0] == w[1]) {
                    return Err(invalid("polyline has repeated consecutive points"));
                }
                Ok(())
            }
            Primitive::Ball { center, radius } => {
                check_dim(center)?;
                if *radius <= T::zero() {
                    return Err(invalid("ball radius must be positive"));
                }
                Ok(())
            }
        }
    }

    /// Vertices whose convex hull contains the primitive; `None` for balls.
    pub fn hull_vertices(&self) -> Option<Vec<Point<T>>> {
        match self {
            Primitive::Point(p) => Some(vec![p.clone()]),
            Primitive::Segment(a, b) => Some(vec![a.clone(), b.clone()]),
            Primitive::Polyline(pts) => Some(pts.clone()),
            Primitive::Ball { .. } => None,
        }
    }

    /// Component-wise extent `(lo, hi)` of the primitive.
    pub fn extent(&self) -> (Vec<T>, Vec<T>) {
        let (mut lo, mut hi) = match self {
            Primitive::Point(p) | Primitive::Segment(p, _) => (p.0.clone(), p.0.clone()),
            Primitive::Polyline(pts) => (pts[0].0.clone(), pts[0].0.clone()),
            Primitive::Ball { center, radius } => (
                center.0.iter().map(|c| c.clone() - radius.clone()).collect(),
                center.0.iter().map(|c| c.clone() + radius.clone()).collect(),
            ),
        };
        let mut widen = |p: &Point<T>| {
            for (i, c) in p.0.iter().enumerate() {
                if *c < lo[i] {
                    lo[i] = c.clone();
                }
                if *c > hi[i] {
                    hi[i] = c.clone();
                }
            }
        };
        match self {
            Primitive::Segment(_, b) => widen(b),
            Primitive::Polyline(pts) => pts.iter().for_each(widen),
            _ => {}
        }
        (lo, hi)
    }

    pub fn map_points(&self, f: impl Fn(&Point<T>) -> Point<T>) -> Self {
        match self {
            Primitive::Point(p) => Primitive::Point(f(p)),
            Primitive::Segment(a, b) => Primitive::Segment(f(a), f(b)),
            Primitive::Polyline(pts) => Primitive::Polyline(pts.iter().map(f).collect()),
            Primitive::Ball { center, radius } => Primitive::Ball {
                center: f(center),
                radius: radius.clone(),
            },
        }
    }
}

/// A bounded set X ⊂ ℝⁿ: the union of closed primitives with finitely
/// many points removed.
#[derive(Clone, Debug, PartialEq)]
pub struct Scene<T> {
    dim: usize,
    primitives: Vec<Primitive<T>>,
    punctures: Vec<Point<T>>,
    components: Option<Vec<Vec<usize>>>,
}

impl<T: Scalar> Scene<T> {
    pub fn new(
        dim: usize,
        primitives: Vec<Primitive<T>>,
        punctures: Vec<Point<T>>,
        components: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if primitives.is_empty() {
            return Err(Error::EmptyScene);
        }
        for (i, prim) in primitives.iter().enumerate() {
            prim.validate(i, dim)?;
        }
        for p in &punctures {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            if !primitives
                .iter()
                .any(|prim| exact_dist2(p, prim).is_ok_and(|d| d.is_zero()))
            {
                return Err(Error::PunctureOffScene(p.to_string()));
            }
        }
        if let Some(parts) = &components {
            let mut seen = vec![false; primitives.len()];
            for &i in parts.iter().flatten() {
                match seen.get_mut(i) {
                    None => return Err(Error::InvalidPartition(format!("primitive index {i} out of range"))),
                    Some(true) => return Err(Error::InvalidPartition(format!("primitive index {i} listed twice"))),
                    Some(s) => *s = true,
                }
            }
            if let Some(i) = seen.iter().position(|s| !s) {
                return Err(Error::InvalidPartition(format!("primitive index {i} not covered")));
            }
            if parts.iter().any(Vec::is_empty) {
                return Err(Error::InvalidPartition("empty component".into()));
            }
        }
        let mut punctures = punctures;
        punctures.dedup();
        Ok(Scene {
            dim,
            primitives,
            punctures,
            components,
        })
    }

    /// Scene with no punctures and no explicit partition.
    pub fn from_primitives(dim: usize, primitives: Vec<Primitive<T>>) -> Result<Self> {
        Self::new(dim, primitives, Vec::new(), None)
    }

    /// Point scene in which every point is its own component.
    pub fn from_points(points: Vec<Point<T>>) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyInput)?.dim();
        let parts = (0..points.len()).map(|i| vec![i]).collect();
        Self::new(
            dim,
            points.into_iter().map(Primitive::Point).collect(),
            Vec::new(),
            Some(parts),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn primitives(&self) -> &[Primitive<T>] {
        &self.primitives
    }

    pub fn punctures(&self) -> &[Point<T>] {
        &self.punctures
    }

    pub fn explicit_components(&self) -> Option<&[Vec<usize>]> {
        self.components.as_deref()
    }

    pub fn is_punctured(&self, p: &Point<T>) -> bool {
        self.punctures.iter().any(|q| q == p)
    }

    /// The same primitives without punctures.
    pub fn closure(&self) -> Self {
        Scene {
            punctures: Vec::new(),
            ..self.clone()
        }
    }

    /// Component-wise extent of the whole scene.
    pub fn extent(&self) -> (Vec<T>, Vec<T>) {
        let mut iter = self.primitives.iter().map(Primitive::extent);
        let (mut lo, mut hi) = iter.next().expect("scene is nonempty");
        for (l, h) in iter {
            for i in 0..self.dim {
                if l[i] < lo[i] {
                    lo[i] = l[i].clone();
                }
                if h[i] > hi[i] {
                    hi[i] = h[i].clone();
                }
            }
        }
        (lo, hi)
    }

    fn map_points(&self, f: impl Fn(&Point<T>) -> Point<T>) -> Self {
        Scene {
            dim: self.dim,
            primitives: self.primitives.iter().map(|p| p.map_points(&f)).collect(),
            punctures: self.punctures.iter().map(&f).collect(),
            components: self.components.clone(),
        }
    }

    pub fn translated(&self, shift: &[i64]) -> Self {
        self.map_points(|p| p.translated(shift))
    }

    /// Reorders coordinates: new coordinate `i` is old coordinate `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        self.map_points(|p| p.permuted(perm))
    }
}

//! Integer-lattice side: Gauss and offset discretizations, k-adjacency,
//! k-components and the voxel cover of a scene.

mod components;
mod discretize;
mod voxel;

pub use components::{components, is_k_connected, ComponentLabeling, IncrementalComponents};
pub(crate) use discretize::box_points;
pub use discretize::{enumeration_box, gauss_discretize, offset_discretize};
pub use voxel::{check_voxel_order, order_voxels, voxel_cover, Voxel};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::scalar::Scalar;

/// A point of ℤⁿ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn to_point<T: Scalar>(&self) -> Point<T> {
        Point::from_ints(&self.0)
    }

    pub fn offset(&self, delta: &[i64]) -> Self {
        LatticePoint(self.0.iter().zip(delta).map(|(a, d)| a + d).collect())
    }
}

impl fmt::Display for LatticePoint {
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

/// Finite set of lattice points of one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteSet {
    dim: usize,
    points: BTreeSet<LatticePoint>,
}

impl DiscreteSet {
    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            points: BTreeSet::new(),
        }
    }

    pub fn from_points(dim: usize, points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let points: BTreeSet<_> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(Self { dim, points })
    }

    /// Convenience constructor from coordinate slices; panics on mixed dimensions.
    pub fn from_coords<const N: usize>(coords: &[[i64; N]]) -> Self {
        Self::from_points(N, coords.iter().map(|c| LatticePoint(c.to_vec()))).expect("uniform dimension")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }

    /// Points in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &LatticePoint> {
        self.points.iter()
    }

    pub fn points(&self) -> &BTreeSet<LatticePoint> {
        &self.points
    }

    pub fn insert(&mut self, p: LatticePoint) -> bool {
        assert_eq!(p.dim(), self.dim, "dimension mismatch");
        self.points.insert(p)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            dim: self.dim,
            points: self.points.union(&other.points).cloned().collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.points.is_subset(&other.points)
    }

    pub fn translated(&self, shift: &[i64]) -> Self {
        Self {
            dim: self.dim,
            points: self.points.iter().map(|p| p.offset(shift)).collect(),
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| LatticePoint(perm.iter().map(|&i| p.0[i]).collect()))
                .collect(),
        }
    }
}

fn check_level(k: usize, dim: usize) -> Result<()> {
    if k < dim {
        Ok(())
    } else {
        Err(Error::AdjacencyOutOfRange { k, dim })
    }
}

/// Two distinct lattice points are k-adjacent when every coordinate differs
/// by at most one and at most `n − k` coordinates differ.
pub fn k_adjacent(p: &LatticePoint, q: &LatticePoint, k: usize) -> Result<bool> {
    let n = p.dim();
    if q.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: q.dim(),
        });
    }
    check_level(k, n)?;
    let mut differing = 0;
    for (a, b) in p.0.iter().zip(&q.0) {
        match (a - b).abs() {
            0 => {}
            1 => differing += 1,
            _ => return Ok(false),
        }
    }
    Ok(differing >= 1 && differing <= n - k)
}

/// Offsets in `{−1, 0, 1}ⁿ \ {0}` with at most `n − k` nonzero entries.
pub fn stencil(n: usize, k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let delta: Vec<i64> = (0..n)
            .map(|_| {
                let d = (c % 3) as i64 - 1;
                c /= 3;
                d
            })
            .collect();
        let nonzero = delta.iter().filter(|&&d| d != 0).count();
        if nonzero >= 1 && nonzero <= n - k {
            out.push(delta);
        }
    }
    out
}

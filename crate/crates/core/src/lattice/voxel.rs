//! Voxel cover W(X) of a scene and an ordering in which every voxel meets
//! the closure of X on a face shared with an earlier voxel.

use std::collections::BTreeSet;

use super::discretize::box_points;
use super::LatticePoint;
use crate::error::{Error, Result};
use crate::geometry::{box_hit, Scene};
use crate::scalar::Scalar;

/// Closed unit cube `[a₁, a₁+1] × … × [aₙ, aₙ+1]` with anchor `a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Voxel {
    pub anchor: LatticePoint,
}

impl Voxel {
    pub fn new(anchor: Vec<i64>) -> Self {
        Voxel {
            anchor: LatticePoint(anchor),
        }
    }

    fn bounds<T: Scalar>(&self) -> (Vec<T>, Vec<T>) {
        (
            self.anchor.0.iter().map(|&a| T::from_i64(a)).collect(),
            self.anchor.0.iter().map(|&a| T::from_i64(a + 1)).collect(),
        )
    }

    /// The common face `self ∩ other`, if the two cubes touch.
    pub fn shared_face(&self, other: &Voxel) -> Option<(Vec<i64>, Vec<i64>)> {
        let a = &self.anchor.0;
        let b = &other.anchor.0;
        if a.iter().zip(b).any(|(x, y)| (x - y).abs() > 1) {
            return None;
        }
        Some((
            a.iter().zip(b).map(|(x, y)| *x.max(y)).collect(),
            a.iter().zip(b).map(|(x, y)| x.min(y) + 1).collect(),
        ))
    }
}

/// Does the closure of X meet the integer box `[lo, hi]`?
fn closure_meets<T: Scalar>(scene: &Scene<T>, lo: &[i64], hi: &[i64]) -> bool {
    let lo: Vec<T> = lo.iter().map(|&c| T::from_i64(c)).collect();
    let hi: Vec<T> = hi.iter().map(|&c| T::from_i64(c)).collect();
    scene.primitives().iter().any(|p| !box_hit(p, &lo, &hi).is_empty())
}

/// Voxels whose intersection with X is nonempty. A voxel touching the
/// primitives only in punctures is excluded.
pub fn voxel_cover<T: Scalar>(scene: &Scene<T>) -> BTreeSet<Voxel> {
    let (lo, hi) = scene.extent();
    let lo: Vec<i64> = lo.iter().map(|c| c.floor_i64() - 1).collect();
    let hi: Vec<i64> = hi.iter().map(Scalar::floor_i64).collect();
    box_points(&lo, &hi)
        .into_iter()
        .map(|anchor| Voxel { anchor })
        .filter(|v| {
            let (vlo, vhi) = v.bounds::<T>();
            let hits: Vec<_> = scene.primitives().iter().map(|p| box_hit(p, &vlo, &vhi)).collect();
            hits.iter().any(|h| h.meets_outside(scene.punctures()))
        })
        .collect()
}

/// Orders the voxel cover greedily: start at the smallest anchor, then keep
/// appending the smallest voxel whose shared face with some placed voxel
/// meets the closure of X.
pub fn order_voxels<T: Scalar>(scene: &Scene<T>) -> Result<Vec<Voxel>> {
    let mut remaining = voxel_cover(scene);
    let Some(first) = remaining.pop_first() else {
        return Ok(Vec::new());
    };
    let n = scene.dim();
    let steps = super::stencil(n, 0);
    let mut order = Vec::with_capacity(remaining.len() + 1);
    let mut ready: BTreeSet<Voxel> = BTreeSet::new();
    let mut next = Some(first);
    while let Some(v) = next.take() {
        for delta in &steps {
            let w = Voxel {
                anchor: v.anchor.offset(delta),
            };
            if ready.contains(&w) || !remaining.contains(&w) {
                continue;
            }
            let (lo, hi) = v.shared_face(&w).expect("stencil neighbors touch");
            if closure_meets(scene, &lo, &hi) {
                ready.insert(w);
            }
        }
        order.push(v);
        if let Some(w) = ready.pop_first() {
            remaining.remove(&w);
            next = Some(w);
        }
    }
    if let Some(stuck) = remaining.first() {
        return Err(Error::OrderStuck {
            placed: order.len(),
            remaining: remaining.len(),
            first: stuck.anchor.0.clone(),
        });
    }
    Ok(order)
}

/// Checks that each voxel after the first meets the closure of X on its
/// intersection with the union of its predecessors; returns the index of the
/// first violation.
pub fn check_voxel_order<T: Scalar>(scene: &Scene<T>, order: &[Voxel]) -> Result<(), usize> {
    for (k, v) in order.iter().enumerate().skip(1) {
        let ok = order[..k]
            .iter()
            .any(|u| v.shared_face(u).is_some_and(|(lo, hi)| closure_meets(scene, &lo, &hi)));
        if !ok {
            return Err(k);
        }
    }
    Ok(())
}

use rayon::prelude::*;

use super::{DiscreteSet, LatticePoint};
use crate::geometry::{Prepared, Scene};
use crate::scalar::{ceil_sqrt, Scalar};

/// Integer box `[lo, hi]` containing every lattice point within `√r2` of the
/// scene: its integer hull inflated by `⌈√r2⌉ + 1`.
pub fn enumeration_box<T: Scalar>(scene: &Scene<T>, r2: &T) -> (Vec<i64>, Vec<i64>) {
    let pad = ceil_sqrt(r2) + 1;
    let (lo, hi) = scene.extent();
    (
        lo.iter().map(|c| c.floor_i64() - pad).collect(),
        hi.iter().map(|c| c.ceil_i64() + pad).collect(),
    )
}

/// Every lattice point of the box `[lo, hi]`, in lexicographic order.
pub(crate) fn box_points(lo: &[i64], hi: &[i64]) -> Vec<LatticePoint> {
    let n = lo.len();
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return Vec::new();
    }
    let total: usize = lo.iter().zip(hi).map(|(l, h)| (h - l + 1) as usize).product();
    let mut out = Vec::with_capacity(total);
    let mut cur = lo.to_vec();
    loop {
        out.push(LatticePoint(cur.clone()));
        let mut axis = n;
        loop {
            if axis == 0 {
                return out;
            }
            axis -= 1;
            if cur[axis] < hi[axis] {
                cur[axis] += 1;
                break;
            }
            cur[axis] = lo[axis];
        }
    }
}

/// `Δ_r(X) = U(X, r) ∩ ℤⁿ` with `r2 = r²`.
pub fn offset_discretize<T: Scalar>(scene: &Scene<T>, r2: &T) -> DiscreteSet {
    let (lo, hi) = enumeration_box(scene, r2);
    let prepared = Prepared::new(scene);
    let ratio = r2.to_i128_ratio();
    let members: Vec<LatticePoint> = box_points(&lo, &hi)
        .into_par_iter()
        .filter(|z| prepared.member(&z.0, r2, ratio))
        .collect();
    DiscreteSet::from_points(scene.dim(), members).expect("box points share the scene dimension")
}

/// `X ∩ ℤⁿ`: lattice points on a primitive that are not punctures.
pub fn gauss_discretize<T: Scalar>(scene: &Scene<T>) -> DiscreteSet {
    offset_discretize(scene, &T::zero())
}

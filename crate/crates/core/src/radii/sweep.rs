use std::cmp::Ordering;

use rayon::prelude::*;

use super::gaps::{gap_matrix_for, rho_from_gaps, RhoConvention};
use crate::error::{Error, Result};
use crate::geometry::{closure_connected, closure_groups, Entry, ExactDistance, Prepared, Scene};
use crate::lattice::{enumeration_box, IncrementalComponents, LatticePoint};
use crate::scalar::{ceil_sqrt, Scalar};

/// The radius at which a lattice point joins Δ_r.
#[derive(Clone, Debug)]
pub struct Threshold<T> {
    pub dist: ExactDistance<T>,
    pub entry: Entry,
    pub point: LatticePoint,
}

/// Entry thresholds of every lattice point within the sweep bound, sorted by
/// distance, then closed before open, then by point.
#[derive(Clone, Debug)]
pub struct CriticalSweep<T> {
    pub thresholds: Vec<Threshold<T>>,
}

/// Minimal j-connectivity radius: the infimum of all `r` such that Δ_{r'} is
/// j-connected for every `r' >= r`, plus whether Δ at that radius already is.
#[derive(Clone, Debug)]
pub struct Alpha<T> {
    pub value: ExactDistance<T>,
    pub attained: bool,
}

impl<T: Scalar> PartialEq for Alpha<T> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.attained == other.attained
    }
}

impl<T: Scalar> Alpha<T> {
    /// Is `r2` above α (every radius with that square yields a connected Δ)?
    pub fn holds_at(&self, r2: &T) -> bool {
        match self.value.cmp_r2(r2) {
            Ordering::Less => true,
            Ordering::Equal => self.attained,
            Ordering::Greater => false,
        }
    }
}

pub fn critical_radii<T: Scalar>(scene: &Scene<T>, r2_max: &T) -> CriticalSweep<T> {
    let (lo, hi) = enumeration_box(scene, r2_max);
    let prepared = Prepared::new(scene);
    let mut thresholds: Vec<Threshold<T>> = crate::lattice::box_points(&lo, &hi)
        .into_par_iter()
        .filter_map(|point| {
            let (dist, entry) = prepared.entry(&point.0);
            (dist.cmp_r2(r2_max) != Ordering::Greater).then_some(Threshold { dist, entry, point })
        })
        .collect();
    thresholds.sort_by(|a, b| {
        a.dist
            .cmp_exact(&b.dist)
            .then(a.entry.cmp(&b.entry))
            .then_with(|| a.point.cmp(&b.point))
    });
    CriticalSweep { thresholds }
}

impl<T: Scalar> CriticalSweep<T> {
    /// Thresholds grouped by equal distance.
    pub fn levels(&self) -> Vec<&[Threshold<T>]> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.thresholds.len() {
            if i == self.thresholds.len()
                || self.thresholds[i].dist.cmp_exact(&self.thresholds[start].dist) != Ordering::Equal
            {
                out.push(&self.thresholds[start..i]);
                start = i;
            }
        }
        out
    }
}

/// Smallest integer `s >= 0` with `d <= s`.
fn ceil_distance<T: Scalar>(d: &ExactDistance<T>) -> i64 {
    let sq = |s: i64| T::from_i64(s * s);
    let mut s = d.to_f64().ceil().max(0.0) as i64;
    while s > 0 && d.cmp_r2(&sq(s - 1)) != Ordering::Greater {
        s -= 1;
    }
    while d.cmp_r2(&sq(s)) == Ordering::Greater {
        s += 1;
    }
    s
}

/// Integer squared radius `(⌈ρ⌉ + ⌈√n/2⌉ + 1)²`, at least `(ρ + √n/2 + 1)²`,
/// with ρ taken over the zero-gap closure groups.
pub fn default_sweep_bound<T: Scalar>(scene: &Scene<T>) -> T {
    let groups = closure_groups(scene);
    let rho = rho_from_gaps(&gap_matrix_for(scene, &groups), RhoConvention::Halved);
    let n = scene.dim() as i64;
    let s = ceil_distance(&rho) + ceil_sqrt(&T::from_ratio(n, 4)) + 1;
    T::from_i64(s * s)
}

/// α_j without the connected-closure precondition. Fails when Δ at the top
/// of the sweep is not j-connected.
pub fn alpha_sweep<T: Scalar>(scene: &Scene<T>, j: usize, r2_max: &T) -> Result<Alpha<T>> {
    let n = scene.dim();
    if j >= n {
        return Err(Error::AdjacencyOutOfRange { k: j, dim: n });
    }
    let sweep = critical_radii(scene, r2_max);
    let levels = sweep.levels();

    enum Bad {
        At(usize),
        Above(usize),
    }
    let mut last_bad = None;
    let mut inc = IncrementalComponents::new(n, j)?;
    for (i, level) in levels.iter().enumerate() {
        let (closed, open): (Vec<_>, Vec<_>) = level.iter().partition(|t| t.entry == Entry::Closed);
        for t in closed {
            inc.insert(t.point.clone());
        }
        if !inc.is_connected() {
            last_bad = Some(Bad::At(i));
        }
        for t in open {
            inc.insert(t.point.clone());
        }
        let at_top = i + 1 == levels.len() && level[0].dist.cmp_r2(r2_max) == Ordering::Equal;
        if !at_top && !inc.is_connected() {
            last_bad = Some(Bad::Above(i));
        }
    }
    let top_ok = match (&last_bad, levels.len()) {
        (Some(Bad::Above(i)), len) => i + 1 < len,
        (Some(Bad::At(i)), len) => i + 1 < len || levels[*i][0].dist.cmp_r2(r2_max) == Ordering::Less,
        (None, _) => true,
    };
    if !top_ok {
        return Err(Error::SweepBoundTooSmall {
            j,
            bound: r2_max.to_string(),
        });
    }
    Ok(match last_bad {
        None => Alpha {
            value: ExactDistance::zero(),
            attained: true,
        },
        Some(Bad::At(i)) => Alpha {
            value: levels[i][0].dist.clone(),
            attained: false,
        },
        Some(Bad::Above(i)) => Alpha {
            value: levels[i + 1][0].dist.clone(),
            attained: true,
        },
    })
}

/// α_j of a scene whose closure is connected. `r2_max` defaults to
/// [`default_sweep_bound`].
pub fn alpha<T: Scalar>(scene: &Scene<T>, j: usize, r2_max: Option<&T>) -> Result<Alpha<T>> {
    if !closure_connected(scene) {
        return Err(Error::ClosureDisconnected);
    }
    match r2_max {
        Some(b) => alpha_sweep(scene, j, b),
        None => alpha_sweep(scene, j, &default_sweep_bound(scene)),
    }
}

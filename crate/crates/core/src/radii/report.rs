use std::collections::BTreeMap;

use super::gaps::{delta_from_gaps, gap_matrix_for, rho_from_gaps, scene_components, RhoConvention};
use super::sweep::{alpha_sweep, default_sweep_bound, Alpha};
use crate::error::{Error, Result};
use crate::geometry::{closure_groups, min_enclosing_ball, EnclosingBall, ExactDistance, Primitive, Scene};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct RadiiReport<T> {
    pub dim: usize,
    pub components: usize,
    pub rho: ExactDistance<T>,
    /// The bottleneck tree gap itself, i.e. ρ under [`RhoConvention::MaxEdge`].
    pub rho_max_edge: ExactDistance<T>,
    pub delta: ExactDistance<T>,
    /// Minimal enclosing ball of the primitive vertices; `None` for scenes
    /// containing balls.
    pub omega: Option<EnclosingBall<T>>,
    pub alpha: BTreeMap<usize, Alpha<T>>,
    pub sweep_bound: T,
}

impl<T: Scalar> RadiiReport<T> {
    pub fn rho2(&self) -> Option<T> {
        self.rho.squared()
    }

    pub fn delta2(&self) -> Option<T> {
        self.delta.squared()
    }
}

pub fn radii_report<T: Scalar>(scene: &Scene<T>) -> Result<RadiiReport<T>> {
    let n = scene.dim();
    let parts = scene_components(scene);
    let g = gap_matrix_for(scene, &parts);
    let rho = rho_from_gaps(&g, RhoConvention::Halved);
    let rho_max_edge = rho_from_gaps(&g, RhoConvention::MaxEdge);
    let delta = delta_from_gaps(&g);

    let omega = scene
        .primitives()
        .iter()
        .map(Primitive::hull_vertices)
        .collect::<Option<Vec<_>>>()
        .map(|vs| min_enclosing_ball(&vs.concat()))
        .transpose()?;

    let sweep_bound = default_sweep_bound(scene);
    let mut alpha = BTreeMap::new();
    for j in [0, n - 1] {
        if let std::collections::btree_map::Entry::Vacant(e) = alpha.entry(j) {
            e.insert(alpha_sweep(scene, j, &sweep_bound)?);
        }
    }

    if n >= 2 {
        let closure_rho = if scene.explicit_components().is_some() {
            rho_from_gaps(&gap_matrix_for(scene, &closure_groups(scene)), RhoConvention::Halved)
        } else {
            rho.clone()
        };
        let n = n as i64;
        for (j, extra) in [(n as usize - 1, T::from_ratio(n, 4)), (0, T::from_ratio(n - 1, 4))] {
            let a = &alpha[&j];
            if !a.value.le_plus_sqrt(&closure_rho, &extra) {
                return Err(Error::BoundViolation(format!(
                    "alpha_{j} = {} exceeds rho + sqrt({extra})",
                    a.value.exact_text()
                )));
            }
        }
    }

    Ok(RadiiReport {
        dim: n,
        components: parts.len(),
        rho,
        rho_max_edge,
        delta,
        omega,
        alpha,
        sweep_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::from_ratio(n, d)
    }

    #[test]
    fn two_adjacent_lattice_points() {
        let s = Scene::from_points(vec![Point::<Q>::from_ints(&[0, 0]), Point::from_ints(&[1, 0])]).unwrap();
        let r = radii_report(&s).unwrap();
        assert_eq!(r.rho2(), Some(q(1, 4)));
        assert_eq!(r.delta2(), Some(q(1, 1)));
        assert_eq!(r.omega.as_ref().unwrap().r2, q(1, 4));
        for j in [0, 1] {
            assert_eq!(r.alpha[&j].value, ExactDistance::zero());
            assert!(r.alpha[&j].attained);
        }
    }

    #[test]
    fn triangle_chain() {
        let s = Scene::from_points(vec![
            Point::<Q>::from_ints(&[0, 0]),
            Point::from_ints(&[4, 0]),
            Point::from_ints(&[4, 3]),
        ])
        .unwrap();
        let r = radii_report(&s).unwrap();
        assert_eq!(r.rho2(), Some(q(4, 1)));
        assert_eq!(r.delta2(), Some(q(16, 1)));
        let omega = r.omega.unwrap();
        assert_eq!(omega.r2, q(25, 4));
        assert!(r.rho.cmp_r2(&omega.r2).is_le());
        assert!(r.delta.cmp_r2(&omega.r2).is_ge());
        assert_eq!(r.rho_max_edge, ExactDistance::Sq(q(16, 1)));
    }

    #[test]
    fn diagonal_report() {
        let p = |a: i64, b: i64| Point(vec![q(a, b), q(a, b)]);
        let s = Scene::new(2, vec![Primitive::Segment(p(-1, 2), p(3, 2))], vec![p(1, 2)], None).unwrap();
        let r = radii_report(&s).unwrap();
        assert_eq!(r.components, 1);
        assert!(r.rho.is_zero());
        assert_eq!(r.alpha[&1].value, ExactDistance::Sq(q(1, 2)));
        assert!(!r.alpha[&1].attained);
        assert!(r.alpha[&0].attained);
    }

    #[test]
    fn balls_have_no_omega() {
        let s = Scene::from_primitives(
            2,
            vec![
                Primitive::Ball {
                    center: Point::<Q>::from_ints(&[0, 0]),
                    radius: q(1, 1),
                },
                Primitive::Ball {
                    center: Point::from_ints(&[5, 0]),
                    radius: q(1, 1),
                },
            ],
        )
        .unwrap();
        let r = radii_report(&s).unwrap();
        assert!(r.omega.is_none());
        assert_eq!(r.rho.to_f64(), 1.5);
        assert_eq!(r.delta.to_f64(), 3.0);
    }
}

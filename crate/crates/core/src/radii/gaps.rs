use crate::error::{Error, Result};
use crate::geometry::{closure_groups, gap2, ExactDistance, Point, Primitive, Scene};
use crate::scalar::Scalar;
use crate::union_find::UnionFind;

/// Symmetric matrix of exact gaps between the components of a scene.
/// Only the strict upper triangle is stored.
#[derive(Clone, Debug)]
pub struct GapMatrix<T> {
    m: usize,
    upper: Entries<T>,
}

#[derive(Clone, Debug)]
enum Entries<T> {
    Exact(Vec<ExactDistance<T>>),
    /// Squared gaps `num / denom` of point sets with small rational coordinates.
    Scaled {
        denom: i128,
        num: Vec<i128>,
    },
}

const MAX_SCALE: i128 = 1 << 24;
const MAX_COORD: i128 = 1 << 48;

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Coordinates multiplied by their common denominator, when small enough.
fn scaled_coords<T: Scalar>(points: &[Point<T>]) -> Option<(i128, Vec<Vec<i128>>)> {
    let ratios: Vec<Vec<(i128, i128)>> = points
        .iter()
        .map(|p| p.coords().iter().map(Scalar::to_i128_ratio).collect())
        .collect::<Option<_>>()?;
    let mut scale = 1i128;
    for &(_, den) in ratios.iter().flatten() {
        scale = (scale / gcd(scale, den)).checked_mul(den)?;
        if scale > MAX_SCALE {
            return None;
        }
    }
    let coords = ratios
        .iter()
        .map(|r| {
            r.iter()
                .map(|&(num, den)| {
                    let v = num.checked_mul(scale / den)?;
                    (v.abs() <= MAX_COORD).then_some(v)
                })
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<_>>()?;
    Some((scale, coords))
}

fn scaled_dist2(u: &[i128], v: &[i128]) -> Option<i128> {
    u.iter().zip(v).try_fold(0i128, |acc, (x, y)| {
        let d = x - y;
        acc.checked_add(d.checked_mul(d)?)
    })
}

impl<T: Scalar> GapMatrix<T> {
    pub fn from_fn(m: usize, mut gap: impl FnMut(usize, usize) -> ExactDistance<T>) -> Self {
        let mut upper = Vec::with_capacity(m * m.saturating_sub(1) / 2);
        for i in 0..m {
            for j in i + 1..m {
                upper.push(gap(i, j));
            }
        }
        Self {
            m,
            upper: Entries::Exact(upper),
        }
    }

    /// Each point is its own component.
    pub fn from_points(points: &[Point<T>]) -> Self {
        let m = points.len();
        if let Some((scale, coords)) = scaled_coords(points) {
            let mut num = Vec::with_capacity(m * m.saturating_sub(1) / 2);
            let ok = (0..m).all(|i| {
                (i + 1..m).all(|j| match scaled_dist2(&coords[i], &coords[j]) {
                    Some(d) => {
                        num.push(d);
                        true
                    }
                    None => false,
                })
            });
            if ok {
                return Self {
                    m,
                    upper: Entries::Scaled {
                        denom: scale * scale,
                        num,
                    },
                };
            }
        }
        Self::from_fn(m, |i, j| ExactDistance::Sq(points[i].dist2(&points[j])))
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn get(&self, i: usize, j: usize) -> ExactDistance<T> {
        if i == j {
            return ExactDistance::zero();
        }
        let k = self.slot(i.min(j), i.max(j));
        match &self.upper {
            Entries::Exact(v) => v[k].clone(),
            Entries::Scaled { denom, num } => ExactDistance::Sq(T::from_i128_ratio(num[k], *denom)),
        }
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        // rows 0..i hold (m-1) + (m-2) + … + (m-i) entries
        i * (2 * self.m - i - 1) / 2 + (j - i - 1)
    }

    /// Runs `f` with a weight function ordered like the gaps.
    fn with_weights<R>(&self, f: impl WeightUser<R>) -> R {
        match &self.upper {
            Entries::Exact(v) => f.call(self.m, |i, j| {
                if i == j {
                    None
                } else {
                    Some(&v[self.slot(i.min(j), i.max(j))])
                }
            }),
            Entries::Scaled { num, .. } => f.call(
                self.m,
                |i, j| {
                    if i == j {
                        0
                    } else {
                        num[self.slot(i.min(j), i.max(j))]
                    }
                },
            ),
        }
    }
}

trait WeightUser<R> {
    fn call<W: PartialOrd + Clone>(self, m: usize, weight: impl Fn(usize, usize) -> W) -> R;
}

/// Endpoints of the largest minimum-spanning-tree edge.
struct Bottleneck;

impl WeightUser<Option<(usize, usize)>> for Bottleneck {
    fn call<W: PartialOrd + Clone>(self, m: usize, weight: impl Fn(usize, usize) -> W) -> Option<(usize, usize)> {
        prim_mst(m, &weight)
            .into_iter()
            .reduce(|a, b| if b.2 > a.2 { b } else { a })
            .map(|(i, j, _)| (i, j))
    }
}

/// Endpoints of `min_i max_{j≠i}`.
struct MinMax;

impl WeightUser<Option<(usize, usize)>> for MinMax {
    fn call<W: PartialOrd + Clone>(self, m: usize, weight: impl Fn(usize, usize) -> W) -> Option<(usize, usize)> {
        (0..m)
            .filter_map(|i| {
                (0..m)
                    .filter(|&j| j != i)
                    .map(|j| (weight(i, j), i, j))
                    .reduce(|a, b| if b.0 > a.0 { b } else { a })
            })
            .reduce(|a, b| if b.0 < a.0 { b } else { a })
            .map(|(_, i, j)| (i, j))
    }
}

/// Components used for gap computations: the explicit partition when the
/// scene carries one, otherwise the classes of the zero-gap closure graph.
pub fn scene_components<T: Scalar>(scene: &Scene<T>) -> Vec<Vec<usize>> {
    match scene.explicit_components() {
        Some(parts) => parts.to_vec(),
        None => closure_groups(scene),
    }
}

/// Gap matrix between the components of `scene` (see [`scene_components`]).
pub fn gap_matrix<T: Scalar>(scene: &Scene<T>) -> GapMatrix<T> {
    gap_matrix_for(scene, &scene_components(scene))
}

pub fn gap_matrix_for<T: Scalar>(scene: &Scene<T>, parts: &[Vec<usize>]) -> GapMatrix<T> {
    let prims = scene.primitives();
    let singles: Option<Vec<Point<T>>> = parts
        .iter()
        .map(|part| match (part.as_slice(), part.first().map(|&i| &prims[i])) {
            ([_], Some(Primitive::Point(p))) => Some(p.clone()),
            _ => None,
        })
        .collect();
    if let Some(points) = singles {
        return GapMatrix::from_points(&points);
    }
    GapMatrix::from_fn(parts.len(), |a, b| {
        let mut best: Option<ExactDistance<T>> = None;
        for &i in &parts[a] {
            for &j in &parts[b] {
                let g = gap2(&prims[i], &prims[j]).expect("scene dimensions agree");
                if best.as_ref().is_none_or(|m| g < *m) {
                    best = Some(g);
                }
            }
        }
        best.expect("components are nonempty")
    })
}

/// Dense Prim's algorithm on the complete graph over `0..m`; `O(m²)`
/// weight evaluations. Returns tree edges `(parent, child, weight)`.
pub fn prim_mst<W, F>(m: usize, weight: F) -> Vec<(usize, usize, W)>
where
    W: PartialOrd + Clone,
    F: Fn(usize, usize) -> W,
{
    let mut edges = Vec::with_capacity(m.saturating_sub(1));
    if m == 0 {
        return edges;
    }
    let mut in_tree = vec![false; m];
    let mut best: Vec<Option<(W, usize)>> = vec![None; m];
    let mut current = 0;
    in_tree[0] = true;
    for _ in 1..m {
        let mut next: Option<usize> = None;
        for v in 0..m {
            if in_tree[v] {
                continue;
            }
            let w = weight(current, v);
            if best[v].as_ref().is_none_or(|(b, _)| w < *b) {
                best[v] = Some((w, current));
            }
            let better = match next {
                None => true,
                Some(u) => best[v].as_ref().unwrap().0 < best[u].as_ref().unwrap().0,
            };
            if better {
                next = Some(v);
            }
        }
        let v = next.expect("an outside vertex remains");
        let (w, parent) = best[v].take().unwrap();
        edges.push((parent, v, w));
        in_tree[v] = true;
        current = v;
    }
    edges
}

/// Which value of the bottleneck tree edge is reported as ρ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RhoConvention {
    /// Half the largest tree gap: the smallest radius with a connected offset.
    #[default]
    Halved,
    /// The largest tree gap itself.
    MaxEdge,
}

/// ρ from the minimum spanning tree of the gap graph.
pub fn rho_from_gaps<T: Scalar>(g: &GapMatrix<T>, convention: RhoConvention) -> ExactDistance<T> {
    let bottleneck = g
        .with_weights(Bottleneck)
        .map_or_else(ExactDistance::zero, |(i, j)| g.get(i, j));
    match convention {
        RhoConvention::Halved => bottleneck.halved(),
        RhoConvention::MaxEdge => bottleneck,
    }
}

/// `min_i max_{j≠i} g_ij`; zero for a single component.
pub fn delta_from_gaps<T: Scalar>(g: &GapMatrix<T>) -> ExactDistance<T> {
    g.with_weights(MinMax)
        .map_or_else(ExactDistance::zero, |(i, j)| g.get(i, j))
}

/// ρ² of a point set by sorting pairwise distances and merging with a
/// union-find until the balls of radius d/2 form one connected cluster.
pub fn rho_oracle<T: Scalar>(points: &[Point<T>]) -> Result<T> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let m = points.len();
    let mut pairs = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            pairs.push((points[i].dist2(&points[j]), i, j));
        }
    }
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
    let mut uf = UnionFind::new(m);
    let mut reach = T::zero();
    for (d2, i, j) in pairs {
        if uf.sets() == 1 {
            break;
        }
        if uf.union(i, j) {
            reach = d2;
        }
    }
    Ok(reach / T::from_i64(4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Primitive;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::from_ratio(n, d)
    }

    fn ipt(c: &[i64]) -> Point<Q> {
        Point::from_ints(c)
    }

    fn triangle() -> Vec<Point<Q>> {
        vec![ipt(&[0, 0]), ipt(&[4, 0]), ipt(&[4, 3])]
    }

    #[test]
    fn triangle_gap_matrix() {
        let scene = Scene::from_points(triangle()).unwrap();
        let g = gap_matrix(&scene);
        assert_eq!(g.len(), 3);
        assert_eq!(g.get(0, 1), ExactDistance::Sq(q(16, 1)));
        assert_eq!(g.get(2, 0), ExactDistance::Sq(q(25, 1)));
        assert_eq!(g.get(1, 2), ExactDistance::Sq(q(9, 1)));
        assert!(g.get(1, 1).is_zero());
    }

    #[test]
    fn touching_segments_form_one_component() {
        let scene = Scene::from_primitives(
            2,
            vec![
                Primitive::Segment(ipt(&[0, 0]), ipt(&[1, 0])),
                Primitive::Segment(ipt(&[1, 0]), ipt(&[1, 1])),
            ],
        )
        .unwrap();
        let g = gap_matrix(&scene);
        assert_eq!(g.len(), 1);
        assert_eq!(rho_from_gaps(&g, RhoConvention::Halved), ExactDistance::zero());
        assert_eq!(delta_from_gaps(&g), ExactDistance::zero());
    }

    #[test]
    fn ball_gap_entry() {
        let scene = Scene::from_primitives(
            2,
            vec![
                Primitive::Ball {
                    center: ipt(&[0, 0]),
                    radius: q(1, 1),
                },
                Primitive::Ball {
                    center: ipt(&[5, 0]),
                    radius: q(1, 1),
                },
            ],
        )
        .unwrap();
        let g = gap_matrix(&scene);
        assert_eq!(g.get(0, 1).to_f64(), 3.0);
    }

    #[test]
    fn rho_two_points() {
        let pts = vec![ipt(&[0, 0]), ipt(&[3, 0])];
        let g = GapMatrix::from_points(&pts);
        assert_eq!(rho_from_gaps(&g, RhoConvention::Halved), ExactDistance::Sq(q(9, 4)));
        assert_eq!(rho_from_gaps(&g, RhoConvention::MaxEdge), ExactDistance::Sq(q(9, 1)));
        assert_eq!(rho_oracle(&pts).unwrap(), q(9, 4));
        assert_eq!(delta_from_gaps(&g), ExactDistance::Sq(q(9, 1)));
    }

    #[test]
    fn rho_and_delta_triangle() {
        let g = GapMatrix::from_points(&triangle());
        let edges = prim_mst(3, |i, j| g.get(i, j));
        let mut ws: Vec<_> = edges.iter().map(|e| e.2.squared().unwrap()).collect();
        ws.sort();
        assert_eq!(ws, vec![q(9, 1), q(16, 1)]);
        assert_eq!(rho_from_gaps(&g, RhoConvention::Halved), ExactDistance::Sq(q(4, 1)));
        assert_eq!(rho_oracle(&triangle()).unwrap(), q(4, 1));
        assert_eq!(delta_from_gaps(&g), ExactDistance::Sq(q(16, 1)));
    }

    #[test]
    fn single_component() {
        let pts = vec![ipt(&[2, 2])];
        let g = GapMatrix::from_points(&pts);
        assert_eq!(rho_from_gaps(&g, RhoConvention::Halved), ExactDistance::zero());
        assert_eq!(delta_from_gaps(&g), ExactDistance::zero());
        assert_eq!(rho_oracle(&pts).unwrap(), q(0, 1));
        assert_eq!(rho_oracle::<Q>(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn scaled_entries_match_exact() {
        let pts = vec![
            Point(vec![q(1, 3), q(-2, 7)]),
            Point(vec![q(5, 2), q(0, 1)]),
            Point(vec![q(-4, 1), q(9, 14)]),
            Point(vec![q(1, 3), q(1, 3)]),
        ];
        let fast = GapMatrix::from_points(&pts);
        assert!(matches!(fast.upper, Entries::Scaled { .. }));
        let slow = GapMatrix::from_fn(4, |i, j| ExactDistance::Sq(pts[i].dist2(&pts[j])));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(fast.get(i, j), slow.get(i, j));
            }
        }
        for c in [RhoConvention::Halved, RhoConvention::MaxEdge] {
            assert_eq!(rho_from_gaps(&fast, c), rho_from_gaps(&slow, c));
        }
        assert_eq!(delta_from_gaps(&fast), delta_from_gaps(&slow));
        let huge = vec![Point(vec![q(1, 1 << 30)]), Point(vec![q(0, 1)])];
        assert!(matches!(GapMatrix::from_points(&huge).upper, Entries::Exact(_)));
    }

    #[test]
    fn slot_layout_covers_upper_triangle() {
        let g = GapMatrix::from_fn(6, |i, j| ExactDistance::Sq(q((10 * i + j) as i64, 1)));
        for i in 0..6 {
            for j in 0..6 {
                if i != j {
                    let (a, b) = (i.min(j), i.max(j));
                    assert_eq!(g.get(i, j), ExactDistance::Sq(q((10 * a + b) as i64, 1)));
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn weights() -> impl Strategy<Value = (usize, Vec<u32>)> {
            (1usize..9).prop_flat_map(|m| (Just(m), prop::collection::vec(0u32..20, m * m)))
        }

        proptest! {
            #[test]
            fn bottleneck_invariant_under_relabeling((m, w) in weights(), shift in 0usize..8) {
                let g = GapMatrix::from_fn(m, |i, j| ExactDistance::Sq(Q::from_i64(w[i * m + j] as i64)));
                let perm: Vec<usize> = (0..m).map(|i| (i + shift) % m).collect();
                let h = GapMatrix::from_fn(m, |i, j| g.get(perm[i], perm[j]));
                prop_assert_eq!(
                    rho_from_gaps(&g, RhoConvention::Halved),
                    rho_from_gaps(&h, RhoConvention::Halved)
                );
            }

            #[test]
            fn bottleneck_at_most_delta((m, w) in weights()) {
                let g = GapMatrix::from_fn(m, |i, j| ExactDistance::Sq(Q::from_i64(w[i * m + j] as i64)));
                let edge = rho_from_gaps(&g, RhoConvention::MaxEdge);
                prop_assert!(edge <= delta_from_gaps(&g));
            }
        }
    }
}

use std::ops::RangeInclusive;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Point, Primitive, Scene};
use crate::{Rational, Scalar};

/// Parameters of a random punctured chain.
#[derive(Clone, Debug)]
pub struct SceneGenSpec {
    pub seed: u64,
    pub dim: usize,
    /// Number of chain edges.
    pub segments: RangeInclusive<usize>,
    pub punctures: RangeInclusive<usize>,
    /// Largest denominator used for coordinates and puncture parameters.
    pub denom: i64,
    /// Largest coordinate change along one edge.
    pub step: i64,
}

impl SceneGenSpec {
    pub fn new(seed: u64, dim: usize) -> Self {
        Self {
            seed,
            dim,
            segments: 1..=4,
            punctures: 1..=2,
            denom: 4,
            step: 2,
        }
    }
}

pub(crate) fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed of trial `trial` in a suite run with base seed `seed`.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    // splitmix64 finalizer
    let mut z = seed.wrapping_add((trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A rational `a/b` with `1 <= b <= denom` and `lo <= a/b <= hi`.
pub(crate) fn random_rational(rng: &mut impl Rng, lo: i64, hi: i64, denom: i64) -> Rational {
    let b = rng.gen_range(1..=denom.max(1));
    let a = rng.gen_range(lo * b..=hi * b);
    Rational::from_ratio(a, b)
}

pub(crate) fn random_point(rng: &mut impl Rng, dim: usize, lo: i64, hi: i64, denom: i64) -> Point<Rational> {
    Point((0..dim).map(|_| random_rational(rng, lo, hi, denom)).collect())
}

/// A chain of segments grown edge by edge from a random start, with
/// punctures at interior rational parameters of random edges. The closure is
/// connected by construction.
pub fn gen_scene(spec: &SceneGenSpec) -> Scene<Rational> {
    let mut rng = rng_for(spec.seed);
    let n = spec.dim;
    let edges = rng.gen_range(spec.segments.clone()).max(1);
    let mut vertices = vec![random_point(&mut rng, n, 0, 2, spec.denom)];
    while vertices.len() <= edges {
        let step = random_point(&mut rng, n, -spec.step, spec.step, spec.denom);
        if step.coords().iter().all(|c| c.is_zero()) {
            continue;
        }
        let last = vertices.last().unwrap();
        let next = Point(last.coords().iter().zip(step.coords()).map(|(a, b)| a + b).collect());
        vertices.push(next);
    }
    let segments: Vec<Primitive<Rational>> = vertices
        .windows(2)
        .map(|w| Primitive::Segment(w[0].clone(), w[1].clone()))
        .collect();

    let count = rng.gen_range(spec.punctures.clone());
    let mut punctures: Vec<Point<Rational>> = Vec::with_capacity(count);
    while punctures.len() < count {
        let e = rng.gen_range(0..edges);
        let b = rng.gen_range(2..=spec.denom.max(2));
        let t = Rational::from_ratio(rng.gen_range(1..b), b);
        let (a, z) = (&vertices[e], &vertices[e + 1]);
        let p = a.along(&z.sub(a), &t);
        if !punctures.contains(&p) && !vertices.contains(&p) {
            punctures.push(p);
        }
    }
    Scene::new(n, segments, punctures, None).expect("generated chain is a valid scene")
}

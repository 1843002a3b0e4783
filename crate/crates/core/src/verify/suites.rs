use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use super::gen::{gen_scene, random_point, random_rational, rng_for, trial_seed, SceneGenSpec};
use crate::error::{Error, Result};
use crate::geometry::{min_enclosing_ball, ExactDistance, Point, Primitive, Scene};
use crate::lattice::{components, is_k_connected, offset_discretize, stencil, DiscreteSet, LatticePoint};
use crate::radii::{alpha, delta_from_gaps, gap_matrix, rho_from_gaps, rho_oracle, GapMatrix, RhoConvention};
use crate::scene_file::scene_to_json;
use crate::{Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Fact1,
    Fact4,
    Theorem1a,
    Theorem1b,
    Corollary1,
    Corollary2,
    Prop31,
    RhoEquiv,
    Facts23,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Fact1,
        Suite::Fact4,
        Suite::Theorem1a,
        Suite::Theorem1b,
        Suite::Corollary1,
        Suite::Corollary2,
        Suite::Prop31,
        Suite::RhoEquiv,
        Suite::Facts23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fact1 => "fact1",
            Suite::Fact4 => "fact4",
            Suite::Theorem1a => "theorem1a",
            Suite::Theorem1b => "theorem1b",
            Suite::Corollary1 => "corollary1",
            Suite::Corollary2 => "corollary2",
            Suite::Prop31 => "prop31",
            Suite::RhoEquiv => "rho_equiv",
            Suite::Facts23 => "facts2-3",
        }
    }

    fn trial(self, seed: u64) -> Outcome {
        match self {
            Suite::Fact1 => fact1(seed),
            Suite::Fact4 => fact4(seed),
            Suite::Theorem1a => theorem(seed, Part::Full, true),
            Suite::Theorem1b => theorem(seed, Part::Zero, true),
            Suite::Corollary1 => corollary1(seed),
            Suite::Corollary2 => corollary2(seed),
            Suite::Prop31 => prop31(seed),
            Suite::RhoEquiv => rho_equiv(seed),
            Suite::Facts23 => facts23(seed),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// A failed trial with enough data to reproduce it.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub trial: usize,
    pub seed: u64,
    /// The offending scene as a scene document, when the trial used one.
    pub scene: Option<String>,
    pub witness: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Flaw {
    scene: Option<String>,
    witness: String,
}

type Outcome = std::result::Result<(), Flaw>;

fn flaw(scene: Option<&Scene<Rational>>, witness: String) -> Flaw {
    Flaw {
        scene: scene.map(scene_to_json),
        witness,
    }
}

/// Runs `trials` independent instances of the named property; trial `i`
/// draws its randomness from [`trial_seed`]`(seed, i)`.
pub fn run_suite(name: &str, trials: usize, seed: u64) -> Result<SuiteReport> {
    let suite: Suite = name.parse()?;
    Ok(run(suite, trials, seed))
}

pub fn run(suite: Suite, trials: usize, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let failures: Vec<Failure> = (0..trials)
        .into_par_iter()
        .filter_map(|trial| {
            let seed = trial_seed(seed, trial);
            suite.trial(seed).err().map(|f| Failure {
                trial,
                seed,
                scene: f.scene,
                witness: f.witness,
            })
        })
        .collect();
    SuiteReport {
        name: suite.name().to_string(),
        trials,
        failures,
        elapsed: start.elapsed(),
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn point_scene(center: Point<Rational>) -> Scene<Rational> {
    let n = center.dim();
    Scene::from_primitives(n, vec![Primitive::Point(center)]).expect("point scene is valid")
}

fn connected_at(scene: &Scene<Rational>, r2: &Rational, k: usize) -> Outcome {
    let set = offset_discretize(scene, r2);
    let labels = components(&set, k).expect("level below dimension");
    if labels.count <= 1 {
        Ok(())
    } else {
        Err(flaw(
            Some(scene),
            format!("r2={r2}: {} points in {} {k}-components", set.len(), labels.count),
        ))
    }
}

fn fact1(seed: u64) -> Outcome {
    let mut rng = rng_for(seed);
    for n in 2..=4usize {
        let scene = point_scene(random_point(&mut rng, n, 0, 1, 64));
        let r2 = q(n as i64, 4);
        if offset_discretize(&scene, &r2).is_empty() {
            return Err(flaw(Some(&scene), format!("n={n}: no lattice point within r2={r2}")));
        }
    }
    Ok(())
}

fn fact4(seed: u64) -> Outcome {
    let mut rng = rng_for(seed);
    for n in 2..=4usize {
        let scene = point_scene(random_point(&mut rng, n, 0, 1, 64));
        let r2 = random_rational(&mut rng, 0, n as i64, 16);
        let set = offset_discretize(&scene, &r2);
        if !set.is_empty() {
            connected_at(&scene, &r2, n - 1)?;
        }
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Part {
    /// (n−1)-connectivity above √n/2.
    Full,
    /// 0-connectivity above √(n−1)/2.
    Zero,
}

impl Part {
    fn level(self, n: usize) -> usize {
        match self {
            Part::Full => n - 1,
            Part::Zero => 0,
        }
    }

    fn threshold2(self, n: usize) -> Rational {
        match self {
            Part::Full => q(n as i64, 4),
            Part::Zero => q(n as i64 - 1, 4),
        }
    }
}

/// Connectivity at `t + 1/k²` for k ∈ {1, 2, 4}, plus α_j ≤ √t from the
/// exact sweep.
fn theorem(seed: u64, part: Part, punctured: bool) -> Outcome {
    for n in [2usize, 3] {
        let mut spec = SceneGenSpec::new(trial_seed(seed, n), n);
        if !punctured {
            spec.punctures = 0..=0;
        }
        let scene = gen_scene(&spec);
        let j = part.level(n);
        let t = part.threshold2(n);
        for k in [1i64, 2, 4] {
            connected_at(&scene, &(&t + q(1, k * k)), j)?;
        }
        let a = alpha(&scene, j, None).map_err(|e| flaw(Some(&scene), e.to_string()))?;
        if a.value.cmp_r2(&t).is_gt() {
            return Err(flaw(
                Some(&scene),
                format!("alpha_{j} = {} exceeds sqrt({t})", a.value.exact_text()),
            ));
        }
    }
    Ok(())
}

fn corollary1(seed: u64) -> Outcome {
    for part in [Part::Full, Part::Zero] {
        theorem(seed, part, false)?;
        for n in [2usize, 3] {
            let mut spec = SceneGenSpec::new(trial_seed(seed, n), n);
            spec.punctures = 0..=0;
            let scene = gen_scene(&spec);
            connected_at(&scene, &part.threshold2(n), part.level(n))?;
        }
    }
    Ok(())
}

fn distinct_points(rng: &mut impl Rng, n: usize, m: usize, hi: i64, denom: i64) -> Vec<Point<Rational>> {
    let mut pts: Vec<Point<Rational>> = Vec::with_capacity(m);
    while pts.len() < m {
        let p = random_point(rng, n, 0, hi, denom);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

/// Rational squares strictly above `(rho + √extra)²`, from coarse to fine.
fn radii_above(rho: &ExactDistance<Rational>, extra: &Rational) -> Vec<Rational> {
    let approx = (rho.to_f64() + extra.to_f64().sqrt()).powi(2);
    [1i64, 8, 64]
        .into_iter()
        .map(|d| {
            let mut r2 = q((approx * d as f64).ceil() as i64, d);
            while ExactDistance::Sq(r2.clone()).le_plus_sqrt(rho, extra) {
                r2 += q(1, d);
            }
            r2
        })
        .collect()
}

fn corollary2(seed: u64) -> Outcome {
    let mut rng = rng_for(seed);
    for n in [2usize, 3] {
        let m = rng.gen_range(2..=6);
        let scene = Scene::from_points(distinct_points(&mut rng, n, m, 6, 2)).expect("point scene is valid");
        let rho = rho_from_gaps(&gap_matrix(&scene), RhoConvention::Halved);
        for part in [Part::Full, Part::Zero] {
            for r2 in radii_above(&rho, &part.threshold2(n)) {
                connected_at(&scene, &r2, part.level(n))?;
            }
        }
    }
    Ok(())
}

fn prop31(seed: u64) -> Outcome {
    let mut rng = rng_for(seed);
    let n = rng.gen_range(2..=3);
    let m = rng.gen_range(2..=64);
    let pts = distinct_points(&mut rng, n, m, 10, 4);
    let g = GapMatrix::from_points(&pts);
    let rho = rho_from_gaps(&g, RhoConvention::Halved);
    let delta = delta_from_gaps(&g);
    let omega = min_enclosing_ball(&pts).expect("nonempty");
    if rho.cmp_r2(&omega.r2).is_gt() || delta.cmp_r2(&omega.r2).is_lt() {
        let scene = Scene::from_points(pts).expect("point scene is valid");
        return Err(flaw(
            Some(&scene),
            format!(
                "rho={} omega2={} delta={}",
                rho.exact_text(),
                omega.r2,
                delta.exact_text()
            ),
        ));
    }
    Ok(())
}

fn rho_equiv(seed: u64) -> Outcome {
    let mut rng = rng_for(seed);
    let n = rng.gen_range(2..=3);
    let m = rng.gen_range(1..=64);
    let pts: Vec<_> = (0..m).map(|_| random_point(&mut rng, n, 0, 10, 4)).collect();
    let mst = rho_from_gaps(&GapMatrix::from_points(&pts), RhoConvention::Halved);
    let oracle = rho_oracle(&pts).expect("nonempty");
    if mst != ExactDistance::Sq(oracle.clone()) {
        let scene = Scene::from_points(pts).expect("point scene is valid");
        return Err(flaw(
            Some(&scene),
            format!("prim rho={} oracle rho2={oracle}", mst.exact_text()),
        ));
    }
    Ok(())
}

/// A k-connected set grown by a random walk of k-adjacent steps.
fn random_walk(rng: &mut impl Rng, start: LatticePoint, k: usize, len: usize) -> DiscreteSet {
    let steps = stencil(start.dim(), k);
    let mut set = DiscreteSet::empty(start.dim());
    let mut at = start;
    set.insert(at.clone());
    for _ in 0..len {
        let from = set.iter().nth(rng.gen_range(0..set.len())).unwrap().clone();
        at = from.offset(steps.choose(rng).unwrap());
        set.insert(at.clone());
    }
    set
}

fn facts23(seed: u64) -> Outcome {
    let mut rng = rng_for(seed);
    let n = rng.gen_range(2..=4);
    let k = rng.gen_range(0..n);
    let origin = LatticePoint(vec![0; n]);
    let len = rng.gen_range(0..12);
    let a = random_walk(&mut rng, origin, k, len);
    let anchor = a.iter().nth(rng.gen_range(0..a.len())).unwrap().clone();
    let bridged = rng.gen_bool(0.5);
    let start = if bridged {
        anchor.offset(stencil(n, k).choose(&mut rng).unwrap())
    } else {
        anchor
    };
    let len = rng.gen_range(0..12);
    let b = random_walk(&mut rng, start, k, len);
    let describe = |what: &str| {
        flaw(
            None,
            format!(
                "n={n} k={k} {what}: A={:?} B={:?}",
                a.iter().map(|p| &p.0).collect::<Vec<_>>(),
                b.iter().map(|p| &p.0).collect::<Vec<_>>()
            ),
        )
    };
    let ok = |s: &DiscreteSet| is_k_connected(s, k).expect("level below dimension");
    if !ok(&a) || !ok(&b) {
        return Err(describe("generator produced a disconnected part"));
    }
    if !ok(&a.union(&b)) {
        return Err(describe(if bridged {
            "bridged union disconnected"
        } else {
            "overlapping union disconnected"
        }));
    }
    Ok(())
}

//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact; the only tolerances are the time
//! limits printed next to each criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use offdisc::geometry::Entry;
use offdisc::lattice::{components, is_k_connected, offset_discretize};
use offdisc::radii::{alpha, critical_radii, default_sweep_bound, rho_from_gaps, GapMatrix, RhoConvention};
use offdisc::verify::{run, Suite};
use offdisc::{ExactDist, ExactPoint, ExactScene, Point, Primitive, Rational, Scalar, Scene};
use rand::{Rng, SeedableRng};

const SEED: u64 = 7;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn pt(c: &[(i64, i64)]) -> ExactPoint {
    Point(c.iter().map(|&(n, d)| q(n, d)).collect())
}

fn diagonal(punctured: bool) -> ExactScene {
    let seg = Primitive::Segment(pt(&[(-1, 2), (-1, 2)]), pt(&[(3, 2), (3, 2)]));
    let holes = if punctured { vec![pt(&[(1, 2), (1, 2)])] } else { vec![] };
    Scene::new(2, vec![seg], holes, None).unwrap()
}

fn horizontal(punctured: bool) -> ExactScene {
    let seg = Primitive::Segment(pt(&[(-1, 2), (1, 2)]), pt(&[(5, 2), (1, 2)]));
    let holes = if punctured { vec![pt(&[(1, 1), (1, 2)])] } else { vec![] };
    Scene::new(2, vec![seg], holes, None).unwrap()
}

fn count(scene: &ExactScene, r2: &Rational, k: usize) -> usize {
    components(&offset_discretize(scene, r2), k).unwrap().count
}

/// Squared radii strictly above `floor`: every rational threshold of the
/// sweep, the midpoints between them, and a few points just above `floor`.
fn probes_above(scene: &ExactScene, floor: &Rational) -> Vec<Rational> {
    let bound = default_sweep_bound(scene);
    let mut radii: Vec<Rational> = critical_radii(scene, &bound)
        .thresholds
        .iter()
        .filter_map(|t| t.dist.squared())
        .filter(|r2| r2 > floor)
        .collect();
    radii.push(bound);
    radii.push(floor.clone());
    radii.sort();
    radii.dedup();
    let mut probes: Vec<Rational> = radii[1..].to_vec();
    for w in radii.windows(2) {
        probes.push((&w[0] + &w[1]) / q(2, 1));
    }
    for k in [10_000i64, 100, 10] {
        probes.push(floor + q(1, k));
    }
    probes
}

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, Box<dyn FnOnce() -> Check>);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion1() -> Check {
    let s = diagonal(true);
    let half = q(1, 2);
    let (k1, k0) = (count(&s, &half, 1), count(&s, &half, 0));
    ensure(
        k1 == 2 && k0 == 1,
        format!("r2=1/2 gives {k1} 1-components and {k0} 0-components"),
    )?;
    let above = &half + q(1, 100);
    ensure(count(&s, &above, 1) == 1, "not 1-connected at r2=51/100")?;
    Ok(format!("r2=1/2: k=1 -> {k1}, k=0 -> {k0}; r2=51/100 1-connected"))
}

fn criterion2() -> Check {
    let s = horizontal(true);
    let quarter = q(1, 4);
    let set = offset_discretize(&s, &quarter);
    let comps = components(&set, 0).unwrap().count;
    ensure(
        set.len() == 4 && comps == 2,
        format!("r2=1/4: {} points, {comps} 0-components", set.len()),
    )?;
    let probes = probes_above(&s, &quarter);
    for r2 in &probes {
        ensure(count(&s, r2, 0) == 1, format!("0-disconnected at r2={r2}"))?;
    }
    Ok(format!(
        "r2=1/4: 4 points in 2 0-components; 0-connected at {} radii above",
        probes.len()
    ))
}

fn suite(s: Suite, trials: usize) -> Check {
    let r = run(s, trials, SEED);
    match r.failures.first() {
        None => Ok(format!("{} x{} trials, 0 failures", r.name, r.trials)),
        Some(f) => Err(format!(
            "{}: {} failures, first trial {} seed {}: {}",
            r.name,
            r.failures.len(),
            f.trial,
            f.seed,
            f.witness
        )),
    }
}

fn suites(list: &[(Suite, usize)]) -> Check {
    let mut parts = Vec::new();
    for &(s, trials) in list {
        parts.push(suite(s, trials)?);
    }
    Ok(parts.join("; "))
}

fn criterion8() -> Check {
    let expect = |name: &str, a: offdisc::radii::Alpha<Rational>, value: Rational| {
        ensure(
            a.value == ExactDist::Sq(value.clone()) && !a.attained,
            format!(
                "{name}: got {} attained={}, want r2={value} not attained",
                a.value.exact_text(),
                a.attained
            ),
        )
    };
    expect(
        "left j=1",
        alpha(&diagonal(true), 1, None).map_err(|e| e.to_string())?,
        q(1, 2),
    )?;
    expect(
        "right j=0",
        alpha(&horizontal(true), 0, None).map_err(|e| e.to_string())?,
        q(1, 4),
    )?;
    let mut seen = Vec::new();
    for (name, s) in [("left", diagonal(false)), ("right", horizontal(false))] {
        for j in 0..2 {
            let a = alpha(&s, j, None).map_err(|e| e.to_string())?;
            ensure(
                a.value.is_zero() || a.attained,
                format!("unpunctured {name} j={j}: {} not attained", a.value.exact_text()),
            )?;
            seen.push(format!("{name}/{j}={}", a.value.exact_text()));
        }
    }
    // the boundary points of the punctured scenes are closed entries once the hole is filled
    let left = critical_radii(&diagonal(false), &q(1, 2));
    ensure(
        left.thresholds.iter().all(|t| t.entry == Entry::Closed),
        "unpunctured scene has an open entry",
    )?;
    Ok(format!(
        "left j=1 r2=1/2, right j=0 r2=1/4, both not attained; unpunctured {}",
        seen.join(" ")
    ))
}

fn timed(limit: Duration, f: impl FnOnce() -> Result<String, String>) -> (Result<String, String>, Duration) {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let out = match out {
        Ok(msg) if took > limit => Err(format!("{msg}; took {took:.2?} over {limit:?}")),
        other => other,
    };
    (out, took)
}

fn criterion9_prim() -> Check {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(SEED);
    let pts: Vec<ExactPoint> = (0..2000)
        .map(|_| Point(vec![q(rng.gen_range(0..200_000), 7), q(rng.gen_range(0..200_000), 3)]))
        .collect();
    let rho = rho_from_gaps(&GapMatrix::from_points(&pts), RhoConvention::Halved);
    ensure(!rho.is_zero(), "rho is zero")?;
    Ok(format!("m=2000 rho {}", rho.exact_text()))
}

fn criterion9_enum() -> Check {
    let s = Scene::from_primitives(3, vec![Primitive::Point(Point::from_ints(&[25, 25, 25]))]).unwrap();
    let r2 = q(24 * 24, 1);
    let (lo, hi) = offdisc::lattice::enumeration_box(&s, &r2);
    let sides: Vec<i64> = lo.iter().zip(&hi).map(|(l, h)| h - l + 1).collect();
    ensure(sides.iter().all(|&w| w >= 50), format!("box sides {sides:?}"))?;
    let set = offset_discretize(&s, &r2);
    ensure(is_k_connected(&set, 2).unwrap(), "ball discretization not 2-connected")?;
    Ok(format!("box {sides:?}, {} members", set.len()))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "1 diagonal segment tightness",
            Duration::from_secs(1),
            Box::new(criterion1),
        ),
        (
            "2 horizontal segment tightness",
            Duration::from_secs(1),
            Box::new(criterion2),
        ),
        (
            "3 theorem suites n=2,3",
            Duration::from_secs(300),
            Box::new(|| suites(&[(Suite::Theorem1a, 200), (Suite::Theorem1b, 200)])),
        ),
        (
            "4 fact1 and fact4, n=2,3,4",
            Duration::from_secs(120),
            Box::new(|| suites(&[(Suite::Fact1, 1000), (Suite::Fact4, 1000)])),
        ),
        (
            "5 proposition chain",
            Duration::from_secs(120),
            Box::new(|| suite(Suite::Prop31, 500)),
        ),
        (
            "6 rho oracle equivalence",
            Duration::from_secs(60),
            Box::new(|| suite(Suite::RhoEquiv, 500)),
        ),
        (
            "7 corollary2 suite",
            Duration::from_secs(180),
            Box::new(|| suite(Suite::Corollary2, 200)),
        ),
        ("8 alpha sweep exactness", Duration::from_secs(5), Box::new(criterion8)),
        ("9a prim mst m=2000", Duration::from_secs(5), Box::new(criterion9_prim)),
        (
            "9b 50^3 enumeration n=3",
            Duration::from_secs(10),
            Box::new(criterion9_enum),
        ),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let (result, took) = timed(limit, check);
        match result {
            Ok(msg) => println!("PASS criterion {name} [{took:.2?} < {limit:?}]: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} [{took:.2?}]: {msg}");
            }
        }
    }
    println!("acceptance: {} failed", failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

mod radius;
mod render;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use offdisc::lattice::{components, offset_discretize};
use offdisc::radii::{alpha, radii_report, Alpha};
use offdisc::scalar::format_sig;
use offdisc::scene_file::load_scene;
use offdisc::verify::{run, Suite, SuiteReport};
use offdisc::{ExactDist, ExactScene, LatticePoint, Rational, Scalar};

use radius::parse_radius;

#[derive(Parser)]
#[command(
    name = "offdisc",
    version,
    about = "Offset discretizations of punctured scenes on the integer lattice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the lattice points of the r-offset.
    Discretize {
        #[arg(long)]
        scene: PathBuf,
        /// `3/4`, `0.5`, `sqrt(2)/2` or `r2=1/2`.
        #[arg(long, value_parser = parse_radius)]
        radius: Rational,
    },
    /// k-components of the offset discretization.
    Components {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long, value_parser = parse_radius)]
        radius: Rational,
        #[arg(long)]
        k: usize,
    },
    /// ρ, δ, ω and the extreme α_j of a scene.
    Radii {
        #[arg(long)]
        scene: PathBuf,
    },
    /// Minimal j-connectivity radius of a scene with connected closure.
    Alpha {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        j: usize,
        /// Top of the sweep; defaults to a bound that always suffices.
        #[arg(long, value_parser = parse_radius)]
        bound: Option<Rational>,
    },
    /// Run a randomized property suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, env = "OFFDISC_SEED", default_value_t = 7)]
        seed: u64,
    },
    /// Draw a planar scene, its offset and Δ_r as SVG.
    Render {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long, value_parser = parse_radius)]
        radius: Rational,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Outcome {
    Pass(String),
    Fail(String),
}

fn coords(p: &LatticePoint) -> String {
    p.0.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn distance_line(name: &str, d: &ExactDist) -> String {
    format!("{name} {} {}", d.exact_text(), format_sig(d.to_f64(), 12))
}

fn alpha_line(j: usize, a: &Alpha<Rational>) -> String {
    format!(
        "{} attained={}",
        distance_line(&format!("alpha{j}"), &a.value),
        a.attained
    )
}

fn radius_header(out: &mut String, scene: &ExactScene, r2: &Rational) {
    let _ = writeln!(out, "dim {}", scene.dim());
    let _ = writeln!(out, "r2 {r2}");
    let _ = writeln!(out, "r {}", format_sig(r2.to_f64().sqrt(), 12));
}

fn discretize(scene: &ExactScene, r2: &Rational) -> String {
    let set = offset_discretize(scene, r2);
    let mut out = String::new();
    radius_header(&mut out, scene, r2);
    let _ = writeln!(out, "count {}", set.len());
    for p in set.iter() {
        let _ = writeln!(out, "point {}", coords(p));
    }
    out
}

fn components_report(scene: &ExactScene, r2: &Rational, k: usize) -> offdisc::Result<String> {
    let set = offset_discretize(scene, r2);
    let labels = components(&set, k)?;
    let mut out = String::new();
    radius_header(&mut out, scene, r2);
    let _ = writeln!(out, "k {k}");
    let _ = writeln!(out, "count {}", set.len());
    let _ = writeln!(out, "components {}", labels.count);
    for (i, members) in labels.members().iter().enumerate() {
        let pts: Vec<String> = members.iter().map(coords).collect();
        let _ = writeln!(out, "component {i} {} {}", members.len(), pts.join(" "));
    }
    Ok(out)
}

fn radii(scene: &ExactScene) -> offdisc::Result<String> {
    let r = radii_report(scene)?;
    let mut out = String::new();
    let _ = writeln!(out, "dim {}", r.dim);
    let _ = writeln!(out, "components {}", r.components);
    let _ = writeln!(out, "{}", distance_line("rho", &r.rho));
    let _ = writeln!(out, "{}", distance_line("rho_max_edge", &r.rho_max_edge));
    let _ = writeln!(out, "{}", distance_line("delta", &r.delta));
    match &r.omega {
        Some(ball) => {
            let center: Vec<String> = ball.center.coords().iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "omega r2={} {} center={}",
                ball.r2,
                format_sig(ball.radius_f64(), 12),
                center.join(",")
            );
        }
        None => {
            let _ = writeln!(out, "omega none");
        }
    }
    for (j, a) in &r.alpha {
        let _ = writeln!(out, "{}", alpha_line(*j, a));
    }
    let _ = writeln!(out, "sweep_bound r2={}", r.sweep_bound);
    Ok(out)
}

fn suite_lines(out: &mut String, r: &SuiteReport, seed: u64) {
    let _ = writeln!(out, "suite {}", r.name);
    let _ = writeln!(out, "trials {}", r.trials);
    let _ = writeln!(out, "seed {seed}");
    let _ = writeln!(out, "failures {}", r.failures.len());
    for f in &r.failures {
        let _ = writeln!(out, "failure trial={} seed={} {}", f.trial, f.seed, f.witness);
        if let Some(scene) = &f.scene {
            let compact: String = scene.split_whitespace().collect::<Vec<_>>().join(" ");
            let _ = writeln!(out, "failure_scene {compact}");
        }
    }
    let _ = writeln!(out, "status {}", if r.passed() { "pass" } else { "fail" });
}

fn verify(name: &str, trials: usize, seed: u64) -> Result<Outcome, String> {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![name.parse().map_err(|e: offdisc::Error| e.to_string())?]
    };
    let mut out = String::new();
    let mut passed = true;
    for suite in suites {
        let report = run(suite, trials, seed);
        eprintln!("{}: {:.2?}", report.name, report.elapsed);
        passed &= report.passed();
        suite_lines(&mut out, &report, seed);
    }
    Ok(if passed { Outcome::Pass(out) } else { Outcome::Fail(out) })
}

fn execute(command: Command) -> Result<Outcome, String> {
    let load = |path: &PathBuf| load_scene(path).map_err(|e| e.to_string());
    let input = |e: offdisc::Error| e.to_string();
    match command {
        Command::Discretize { scene, radius } => Ok(Outcome::Pass(discretize(&load(&scene)?, &radius))),
        Command::Components { scene, radius, k } => components_report(&load(&scene)?, &radius, k)
            .map(Outcome::Pass)
            .map_err(input),
        Command::Radii { scene } => radii(&load(&scene)?).map(Outcome::Pass).map_err(input),
        Command::Alpha { scene, j, bound } => {
            let a = alpha(&load(&scene)?, j, bound.as_ref()).map_err(input)?;
            Ok(Outcome::Pass(format!("{}\n", alpha_line(j, &a))))
        }
        Command::Verify { suite, trials, seed } => verify(&suite, trials, seed),
        Command::Render { scene, radius, out } => {
            let scene = load(&scene)?;
            if scene.dim() != 2 {
                return Err(format!("render needs a planar scene, got dimension {}", scene.dim()));
            }
            let svg = render::render_svg(&scene, &radius);
            match out {
                Some(path) => {
                    std::fs::write(&path, svg).map_err(|e| format!("{}: {e}", path.display()))?;
                    Ok(Outcome::Pass(format!("wrote {}\n", path.display())))
                }
                None => Ok(Outcome::Pass(svg)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(Outcome::Pass(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Fail(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

//! SVG picture of a planar scene, its r-offset and Δ_r.

use std::fmt::Write;

use offdisc::geometry::Entry;
use offdisc::lattice::offset_discretize;
use offdisc::radii::critical_radii;
use offdisc::{ExactPoint, ExactScene, Primitive, Rational, Scalar};

const UNIT: f64 = 60.0;
const REGION: &str = "#c9dcf2";
const INK: &str = "#1f2a44";
const PUNCTURE: &str = "#c0392b";

fn xy(p: &ExactPoint) -> (f64, f64) {
    (p.coords()[0].to_f64(), p.coords()[1].to_f64())
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Offset of the segment `[a, b]`: two tangent lines joined by half-circle
/// caps, or a disk when the segment is degenerate.
fn capsule(out: &mut String, a: (f64, f64), b: (f64, f64), r: f64) {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len = dx.hypot(dy);
    if len == 0.0 || r == 0.0 {
        disk(out, a, r);
        if r > 0.0 {
            disk(out, b, r);
        }
        return;
    }
    let (nx, ny) = (-dy / len * r, dx / len * r);
    let _ = writeln!(
        out,
        r#"<path class="offset" d="M {} {} L {} {} A {r} {r} 0 0 0 {} {} L {} {} A {r} {r} 0 0 0 {} {} Z"/>"#,
        num(a.0 + nx),
        num(a.1 + ny),
        num(b.0 + nx),
        num(b.1 + ny),
        num(b.0 - nx),
        num(b.1 - ny),
        num(a.0 - nx),
        num(a.1 - ny),
        num(a.0 + nx),
        num(a.1 + ny),
        r = num(r),
    );
}

fn disk(out: &mut String, c: (f64, f64), r: f64) {
    if r > 0.0 {
        let _ = writeln!(
            out,
            r#"<circle class="offset" cx="{}" cy="{}" r="{}"/>"#,
            num(c.0),
            num(c.1),
            num(r)
        );
    }
}

/// Renders the scene at squared radius `r2`. The scene must be planar.
pub fn render_svg(scene: &ExactScene, r2: &Rational) -> String {
    let r = r2.to_f64().sqrt();
    let (lo, hi) = scene.extent();
    let pad = r.ceil() + 1.0;
    let x0 = (lo[0].to_f64() - pad).floor();
    let y0 = (lo[1].to_f64() - pad).floor();
    let x1 = (hi[0].to_f64() + pad).ceil();
    let y1 = (hi[1].to_f64() + pad).ceil();
    let (w, h) = ((x1 - x0) * UNIT, (y1 - y0) * UNIT);

    let members = offset_discretize(scene, r2);
    let boundary: Vec<_> = critical_radii(scene, r2)
        .thresholds
        .into_iter()
        .filter(|t| t.entry == Entry::Open && t.dist.cmp_r2(r2).is_eq())
        .map(|t| t.point)
        .collect();

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(w),
        num(h),
        num(w),
        num(h)
    );
    let _ = writeln!(
        out,
        r#"<g transform="translate({} {}) scale({UNIT} -{UNIT})">"#,
        num(-x0 * UNIT),
        num(y1 * UNIT)
    );

    let _ = writeln!(out, r##"<g id="grid" stroke="#b8b8b8" stroke-width="0.01">"##);
    for x in (x0 as i64)..=(x1 as i64) {
        let _ = writeln!(out, r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#, num(y0), num(y1));
    }
    for y in (y0 as i64)..=(y1 as i64) {
        let _ = writeln!(out, r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}"/>"#, num(x0), num(x1));
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g id="offset" fill="{REGION}" stroke="none">"#);
    for prim in scene.primitives() {
        match prim {
            Primitive::Point(p) => disk(&mut out, xy(p), r),
            Primitive::Segment(a, b) => capsule(&mut out, xy(a), xy(b), r),
            Primitive::Polyline(ps) => {
                for w in ps.windows(2) {
                    capsule(&mut out, xy(&w[0]), xy(&w[1]), r);
                }
            }
            Primitive::Ball { center, radius } => disk(&mut out, xy(center), radius.to_f64() + r),
        }
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(
        out,
        r#"<g id="scene" fill="none" stroke="{INK}" stroke-width="0.03" stroke-linecap="round">"#
    );
    for prim in scene.primitives() {
        match prim {
            Primitive::Point(p) => {
                let (x, y) = xy(p);
                let _ = writeln!(
                    out,
                    r#"<circle class="primitive" cx="{}" cy="{}" r="0.04" fill="{INK}"/>"#,
                    num(x),
                    num(y)
                );
            }
            Primitive::Segment(a, b) => polyline(&mut out, &[xy(a), xy(b)]),
            Primitive::Polyline(ps) => polyline(&mut out, &ps.iter().map(xy).collect::<Vec<_>>()),
            Primitive::Ball { center, radius } => {
                let (x, y) = xy(center);
                let _ = writeln!(
                    out,
                    r#"<circle class="primitive" cx="{}" cy="{}" r="{}"/>"#,
                    num(x),
                    num(y),
                    num(radius.to_f64())
                );
            }
        }
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g id="lattice" stroke="{INK}" stroke-width="0.03">"#);
    for p in members.iter() {
        let _ = writeln!(
            out,
            r#"<circle class="member" cx="{}" cy="{}" r="0.1" fill="{INK}"/>"#,
            p.0[0], p.0[1]
        );
    }
    for p in &boundary {
        let _ = writeln!(
            out,
            r#"<circle class="boundary" cx="{}" cy="{}" r="0.1" fill="white"/>"#,
            p.0[0], p.0[1]
        );
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(
        out,
        r#"<g id="punctures" stroke="{PUNCTURE}" stroke-width="0.03" fill="white">"#
    );
    for p in scene.punctures() {
        let (x, y) = xy(p);
        let _ = writeln!(
            out,
            r#"<circle class="puncture" cx="{}" cy="{}" r="0.07"/>"#,
            num(x),
            num(y)
        );
    }
    let _ = writeln!(out, "</g>\n</g>\n</svg>");
    out
}

fn polyline(out: &mut String, pts: &[(f64, f64)]) {
    let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", num(x), num(y))).collect();
    let _ = writeln!(out, r#"<polyline class="primitive" points="{}"/>"#, coords.join(" "));
}

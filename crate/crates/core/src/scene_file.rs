//! JSON scene documents.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "primitives": [
//!     {"type": "segment", "a": ["-1/2", "-1/2"], "b": ["3/2", 1.5]},
//!     {"type": "point", "p": [4, 0]},
//!     {"type": "polyline", "points": [[0, 0], [1, 2], [3, 2]]},
//!     {"type": "ball", "center": [5, 5], "radius": "1/3"}
//!   ],
//!   "punctures": [["1/2", "1/2"]],
//!   "components": [[0], [1, 2], [3]]
//! }
//! ```
//!
//! Coordinates are integers, decimals (read exactly) or `"p/q"` strings.

use std::path::Path;

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::geometry::{Point, Primitive, Scene};
use crate::{parse_rational, Rational};

fn bad(msg: impl Into<String>) -> Error {
    Error::SceneFile(msg.into())
}

fn rational(v: &Value, what: &str) -> Result<Rational> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(bad(format!("{what}: expected a number or \"p/q\" string"))),
    };
    parse_rational(&text).ok_or_else(|| bad(format!("{what}: cannot read {text:?} as a rational")))
}

fn point(v: &Value, what: &str) -> Result<Point<Rational>> {
    let coords = v
        .as_array()
        .ok_or_else(|| bad(format!("{what}: expected a coordinate list")))?;
    coords
        .iter()
        .enumerate()
        .map(|(i, c)| rational(c, &format!("{what}[{i}]")))
        .collect::<Result<Vec<_>>>()
        .map(Point)
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| bad(format!("{what}: missing field \"{key}\"")))
}

fn primitive(v: &Value, index: usize) -> Result<Primitive<Rational>> {
    let what = format!("primitives[{index}]");
    let obj = v
        .as_object()
        .ok_or_else(|| bad(format!("{what}: expected an object")))?;
    let kind = field(obj, "type", &what)?
        .as_str()
        .ok_or_else(|| bad(format!("{what}: \"type\" must be a string")))?;
    match kind {
        "point" => Ok(Primitive::Point(point(field(obj, "p", &what)?, &what)?)),
        "segment" => Ok(Primitive::Segment(
            point(field(obj, "a", &what)?, &what)?,
            point(field(obj, "b", &what)?, &what)?,
        )),
        "polyline" => {
            let pts = field(obj, "points", &what)?
                .as_array()
                .ok_or_else(|| bad(format!("{what}: \"points\" must be a list")))?;
            Ok(Primitive::Polyline(
                pts.iter().map(|p| point(p, &what)).collect::<Result<_>>()?,
            ))
        }
        "ball" => Ok(Primitive::Ball {
            center: point(field(obj, "center", &what)?, &what)?,
            radius: rational(field(obj, "radius", &what)?, &what)?,
        }),
        other => Err(bad(format!("{what}: unknown primitive type {other:?}"))),
    }
}

fn components(v: &Value) -> Result<Vec<Vec<usize>>> {
    let parts = v
        .as_array()
        .ok_or_else(|| bad("components: expected a list of index lists"))?;
    parts
        .iter()
        .map(|part| {
            part.as_array()
                .ok_or_else(|| bad("components: expected a list of index lists"))?
                .iter()
                .map(|i| {
                    i.as_u64()
                        .map(|i| i as usize)
                        .ok_or_else(|| bad("components: indices must be nonnegative integers"))
                })
                .collect()
        })
        .collect()
}

/// Parses a scene document.
pub fn parse_scene(text: &str) -> Result<Scene<Rational>> {
    let doc: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| bad("expected a JSON object"))?;
    let dim = field(obj, "dim", "scene")?
        .as_u64()
        .ok_or_else(|| bad("dim must be a positive integer"))? as usize;
    let prims = field(obj, "primitives", "scene")?
        .as_array()
        .ok_or_else(|| bad("primitives must be a list"))?
        .iter()
        .enumerate()
        .map(|(i, p)| primitive(p, i))
        .collect::<Result<Vec<_>>>()?;
    let punctures = match obj.get("punctures") {
        None | Some(Value::Null) => Vec::new(),
        Some(Value::Array(ps)) => ps
            .iter()
            .enumerate()
            .map(|(i, p)| point(p, &format!("punctures[{i}]")))
            .collect::<Result<_>>()?,
        Some(_) => return Err(bad("punctures must be a list")),
    };
    let parts = match obj.get("components") {
        None | Some(Value::Null) => None,
        Some(v) => Some(components(v)?),
    };
    Scene::new(dim, prims, punctures, parts)
}

pub fn load_scene(path: impl AsRef<Path>) -> Result<Scene<Rational>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    parse_scene(&text)
}

fn rational_value(q: &Rational) -> Value {
    if q.is_integer() {
        if let Some(i) = q.to_integer().to_i64() {
            return json!(i);
        }
    }
    Value::String(q.to_string())
}

fn point_value(p: &Point<Rational>) -> Value {
    Value::Array(p.coords().iter().map(rational_value).collect())
}

pub fn scene_to_value(scene: &Scene<Rational>) -> Value {
    let prims: Vec<Value> = scene
        .primitives()
        .iter()
        .map(|p| match p {
            Primitive::Point(a) => json!({"type": "point", "p": point_value(a)}),
            Primitive::Segment(a, b) => {
                json!({"type": "segment", "a": point_value(a), "b": point_value(b)})
            }
            Primitive::Polyline(ps) => json!({
                "type": "polyline",
                "points": ps.iter().map(point_value).collect::<Vec<_>>(),
            }),
            Primitive::Ball { center, radius } => json!({
                "type": "ball",
                "center": point_value(center),
                "radius": rational_value(radius),
            }),
        })
        .collect();
    let mut doc = json!({
        "dim": scene.dim(),
        "primitives": prims,
        "punctures": scene.punctures().iter().map(point_value).collect::<Vec<_>>(),
    });
    if let Some(parts) = scene.explicit_components() {
        doc["components"] = json!(parts);
    }
    doc
}

/// Serializes a scene; integers are written as numbers, other rationals as
/// `"p/q"` strings.
pub fn scene_to_json(scene: &Scene<Rational>) -> String {
    serde_json::to_string_pretty(&scene_to_value(scene)).expect("JSON values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    const DIAGONAL: &str = r#"{
        "dim": 2,
        "primitives": [{"type": "segment", "a": ["-1/2", -0.5], "b": ["3/2", 1.5]}],
        "punctures": [["1/2", "1/2"]]
    }"#;

    #[test]
    fn parses_mixed_coordinates() {
        let s = parse_scene(DIAGONAL).unwrap();
        assert_eq!(s.dim(), 2);
        match &s.primitives()[0] {
            Primitive::Segment(a, b) => {
                assert_eq!(a.coords(), &[Rational::from_ratio(-1, 2), Rational::from_ratio(-1, 2)]);
                assert_eq!(b.coords(), &[Rational::from_ratio(3, 2), Rational::from_ratio(3, 2)]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(s.punctures().len(), 1);
    }

    #[test]
    fn decimal_is_exact() {
        let s = parse_scene(r#"{"dim": 1, "primitives": [{"type": "point", "p": [0.1]}]}"#).unwrap();
        match &s.primitives()[0] {
            Primitive::Point(p) => assert_eq!(p.coords()[0], Rational::from_ratio(1, 10)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        let text = r#"{
            "dim": 2,
            "primitives": [
                {"type": "point", "p": [4, 0]},
                {"type": "polyline", "points": [[0, 0], ["1/3", 2], [3, 2]]},
                {"type": "ball", "center": [9, 9], "radius": "1/3"}
            ],
            "punctures": [[3, 2]],
            "components": [[0], [1], [2]]
        }"#;
        let s = parse_scene(text).unwrap();
        let again = parse_scene(&scene_to_json(&s)).unwrap();
        assert_eq!(scene_to_json(&s), scene_to_json(&again));
        assert_eq!(s.primitives(), again.primitives());
        assert_eq!(s.punctures(), again.punctures());
        assert_eq!(s.explicit_components(), again.explicit_components());
    }

    #[test]
    fn errors_are_reported() {
        for text in [
            "not json",
            r#"{"primitives": []}"#,
            r#"{"dim": 2, "primitives": [{"type": "cone"}]}"#,
            r#"{"dim": 2, "primitives": [{"type": "point", "p": ["x", 0]}]}"#,
            r#"{"dim": 2, "primitives": [{"type": "point", "p": [true, 0]}]}"#,
        ] {
            assert!(matches!(parse_scene(text), Err(Error::SceneFile(_))), "{text}");
        }
        assert!(matches!(
            parse_scene(r#"{"dim": 2, "primitives": [{"type": "point", "p": [0, 0]}], "punctures": [[1, 1]]}"#),
            Err(Error::PunctureOffScene(_))
        ));
        assert!(matches!(
            parse_scene(r#"{"dim": 3, "primitives": [{"type": "point", "p": [0, 0]}]}"#),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}

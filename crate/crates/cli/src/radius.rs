//! Radius arguments, always normalized to an exact squared radius.

use offdisc::{parse_rational, Rational};

/// Accepts `r2=<q>` (squared radius given directly), `sqrt(<q>)` or
/// `sqrt(<q>)/<d>`, and plain rationals such as `3/4` or `0.5`.
pub fn parse_radius(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let bad = || format!("cannot read radius {text:?}");
    let negative = || format!("radius {text:?} is negative");
    if let Some(rest) = text.strip_prefix("r2=") {
        let r2 = parse_rational(rest).ok_or_else(bad)?;
        return if r2 < Rational::from_integer(0.into()) {
            Err(negative())
        } else {
            Ok(r2)
        };
    }
    if let Some(rest) = text.strip_prefix("sqrt(") {
        let (inner, tail) = rest.split_once(')').ok_or_else(bad)?;
        let k = parse_rational(inner).ok_or_else(bad)?;
        if k < Rational::from_integer(0.into()) {
            return Err(negative());
        }
        let tail = tail.trim();
        if tail.is_empty() {
            return Ok(k);
        }
        let d = tail
            .strip_prefix('/')
            .and_then(parse_rational)
            .filter(|d| *d > Rational::from_integer(0.into()))
            .ok_or_else(bad)?;
        return Ok(k / (&d * &d));
    }
    let r = parse_rational(text).ok_or_else(bad)?;
    if r < Rational::from_integer(0.into()) {
        return Err(negative());
    }
    Ok(&r * &r)
}

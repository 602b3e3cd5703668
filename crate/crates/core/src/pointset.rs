//! Plain-text point sets: one `x,y` pair per line, `\n` endings, no header.
//!
//! Coordinates are written in the shortest form that parses back to the
//! same `f64`, which never needs more than 17 significant digits.

use std::fmt::Write as _;

use crate::geometry::Point;
use crate::{Error, Result};

pub fn format_points(points: &[Point]) -> String {
    let mut out = String::with_capacity(points.len() * 40);
    for p in points {
        // `{:?}` switches to exponent form for tiny and huge magnitudes.
        let _ = writeln!(out, "{:?},{:?}", p.x, p.y);
    }
    out
}

/// Parses the point-set format. Blank lines are skipped; a trailing `\r`
/// is tolerated.
pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    let mut points = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: k + 1,
            message,
        };
        let (x, y) = line
            .split_once(',')
            .ok_or_else(|| parse_err(format!("expected 'x,y', got '{line}'")))?;
        let coord = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| parse_err(format!("bad coordinate '{s}': {e}")))
        };
        let p = Point::new(coord(x)?, coord(y)?);
        if !p.is_finite() {
            return Err(parse_err("non-finite coordinate".into()));
        }
        points.push(p);
    }
    Ok(points)
}

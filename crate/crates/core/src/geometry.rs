//! Points, the Euclidean metric and the result type shared by every algorithm.

use std::cmp::Ordering;

use crate::{Error, Result};

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Total lexicographic order on `(x, y)`.
    pub fn cmp_xy(&self, other: &Point) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

#[inline]
pub fn euclidean_distance(p: Point, q: Point) -> f64 {
    squared_distance(p, q).sqrt()
}

/// Squared Euclidean distance. Not used by the algorithms themselves, which
/// always compare true distances.
#[inline]
pub fn squared_distance(p: Point, q: Point) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    dx * dx + dy * dy
}

/// Tight axis-aligned bounding box of a point set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl BoundingBox {
    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    pub fn origin(&self) -> Point {
        Point::new(self.min_x, self.min_y)
    }
}

pub fn bounding_box(points: &[Point]) -> Result<BoundingBox> {
    let (first, rest) = points.split_first().ok_or(Error::EmptyPointSet)?;
    let init = BoundingBox {
        min_x: first.x,
        min_y: first.y,
        max_x: first.x,
        max_y: first.y,
    };
    Ok(rest.iter().fold(init, |b, p| BoundingBox {
        min_x: b.min_x.min(p.x),
        min_y: b.min_y.min(p.y),
        max_x: b.max_x.max(p.x),
        max_y: b.max_y.max(p.y),
    }))
}

/// The closest pair found by an algorithm, with the positions of both points
/// in the caller's input slice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosestPair {
    pub first: Point,
    pub second: Point,
    pub first_index: usize,
    pub second_index: usize,
    pub delta: f64,
}

impl ClosestPair {
    /// Builds the pair for input positions `i` and `j`, recomputing the
    /// distance so that `delta == euclidean_distance(first, second)`.
    pub fn from_indices(points: &[Point], i: usize, j: usize) -> Self {
        let (first, second) = (points[i], points[j]);
        ClosestPair {
            first,
            second,
            first_index: i,
            second_index: j,
            delta: euclidean_distance(first, second),
        }
    }
}

/// Checks the preconditions shared by all closest-pair algorithms.
pub(crate) fn validate(points: &[Point]) -> Result<()> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints { n: points.len() });
    }
    if let Some(index) = points.iter().position(|p| !p.is_finite()) {
        return Err(Error::NonFinitePoint { index });
    }
    Ok(())
}

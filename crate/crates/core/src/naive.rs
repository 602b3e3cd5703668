//! Nested-loop scans: the all-pairs baseline and its x-sorted early-exit
//! variant.

use crate::geometry::{validate, Point};
use crate::solution::{Incumbent, OpCounters, Solution};
use crate::{sorted_by_x, Result};

/// Compares all `n(n-1)/2` pairs.
pub fn cpp_ap(points: &[Point]) -> Result<Solution> {
    validate(points)?;
    let n = points.len();
    let mut counters = OpCounters::default();
    let mut best = Incumbent::unbounded();
    for i in 0..n - 1 {
        counters.outer_iterations += 1;
        let p = points[i];
        for (j, &q) in points.iter().enumerate().skip(i + 1) {
            best.offer(p, q, (i, j), &mut counters);
        }
    }
    Ok(best
        .into_solution(points, counters)
        .expect("at least one pair was compared"))
}

/// All-pairs scan over the x-sorted order that stops the inner loop at the
/// first partner whose x-offset exceeds the current minimum.
///
/// The inner-loop bound is inclusive (`dx <= delta`) and always uses the
/// current, shrinking `delta`. The failing bound test is not counted as an
/// inner iteration.
pub fn cpp_aps(points: &[Point]) -> Result<Solution> {
    validate(points)?;
    let sorted = sorted_by_x(points);
    let n = sorted.len();
    let mut counters = OpCounters::default();
    let mut best = Incumbent::unbounded();
    for i in 0..n - 1 {
        counters.outer_iterations += 1;
        let a = sorted[i];
        for b in &sorted[i + 1..] {
            if b.point.x - a.point.x > best.delta {
                break;
            }
            best.offer(a.point, b.point, (a.index, b.index), &mut counters);
        }
    }
    Ok(best
        .into_solution(points, counters)
        .expect("the first inner iteration always runs"))
}

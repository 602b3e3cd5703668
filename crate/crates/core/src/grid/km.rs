use rand::Rng;

use super::sparse::{CellKey, SparseGrid};
use crate::geometry::{euclidean_distance, validate, ClosestPair, Point};
use crate::solution::{Incumbent, OpCounters, Solution};
use crate::Result;

fn neighbourhood(key: CellKey) -> impl Iterator<Item = CellKey> {
    (-1..=1i64).flat_map(move |di| (-1..=1i64).filter_map(move |dj| key.offset(di, dj)))
}

/// Randomized sieve algorithm.
///
/// Each round draws a random surviving point, takes its nearest-neighbour
/// distance `d` among the survivors, and drops every survivor that is alone
/// in its 3x3 block of a grid with side `d / 3`. When no survivor is left,
/// all points are bucketed into a grid of side `d` (the last round's value)
/// and each point is compared with its full 3x3 block.
pub fn cpp_km<R: Rng + ?Sized>(points: &[Point], rng: &mut R) -> Result<Solution> {
    validate(points)?;
    let n = points.len();
    let mut counters = OpCounters::default();

    let mut survivors: Vec<usize> = (0..n).collect();
    let mut estimate = (f64::INFINITY, (0, 1));
    while survivors.len() >= 2 {
        let (d, pair) = nearest_to_random(points, &survivors, rng, &mut counters);
        estimate = (d, pair);
        if d == 0.0 {
            return Ok(Solution {
                pair: ClosestPair::from_indices(points, pair.0, pair.1),
                counters,
            });
        }
        let grid = SparseGrid::build(points, survivors.iter().copied(), d / 3.0)?;
        survivors.retain(|&k| {
            let key = grid.key_of(points[k]);
            neighbourhood(key).map(|c| grid.count(c)).sum::<usize>() > 1
        });
        debug_assert!(survivors.len() != 1, "isolation is symmetric");
    }

    let (d, (i, j)) = estimate;
    let grid = SparseGrid::build(points, 0..n, d)?;
    let mut best = Incumbent::seeded(d, i, j);
    for (a, &p) in points.iter().enumerate() {
        counters.outer_iterations += 1;
        for cell in neighbourhood(grid.key_of(p)).filter_map(|c| grid.find(c)) {
            for b in grid.members(cell).filter(|&b| b != a) {
                best.offer(p, points[b], (a, b), &mut counters);
            }
        }
    }
    Ok(best
        .into_solution(points, counters)
        .expect("seeded with the last estimate"))
}

/// Distance from a random survivor to its nearest other survivor.
fn nearest_to_random<R: Rng + ?Sized>(
    points: &[Point],
    survivors: &[usize],
    rng: &mut R,
    counters: &mut OpCounters,
) -> (f64, (usize, usize)) {
    let x = survivors[rng.gen_range(0..survivors.len())];
    let mut best = (f64::INFINITY, (x, x));
    counters.outer_iterations += 1;
    for &k in survivors.iter().filter(|&&k| k != x) {
        counters.inner_iterations += 1;
        counters.distance_evaluations += 1;
        let d = euclidean_distance(points[x], points[k]);
        if d < best.0 {
            best = (d, (x, k));
        }
    }
    best
}

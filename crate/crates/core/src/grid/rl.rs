use rand::seq::index;
use rand::Rng;

use super::sparse::SparseGrid;
use super::FORWARD_NEIGHBOURS;
use crate::geometry::{euclidean_distance, validate, ClosestPair, Point};
use crate::solution::{Incumbent, OpCounters, Solution};
use crate::Result;

/// How the randomized grid algorithm estimates its cell side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SamplingMode {
    /// Brute force over `max(2, floor(sqrt(n)))` sampled points.
    Points,
    /// Minimum over `n` uniformly drawn pairs of distinct points.
    #[default]
    Distances,
}

/// Randomized grid algorithm: estimate a distance `d` that some pair
/// realises, bucket all points into a hashed grid of side `d`, then scan
/// each occupied cell once against itself and its forward neighbours.
pub fn cpp_rl<R: Rng + ?Sized>(
    points: &[Point],
    rng: &mut R,
    mode: SamplingMode,
) -> Result<Solution> {
    validate(points)?;
    let n = points.len();
    let mut counters = OpCounters::default();

    let estimate = match mode {
        SamplingMode::Points => sample_points(points, rng, &mut counters),
        SamplingMode::Distances => sample_distances(points, rng, &mut counters),
    };
    let (d, (i, j)) = (
        estimate.delta,
        estimate.pair.expect("at least one pair sampled"),
    );
    if d == 0.0 {
        return Ok(Solution {
            pair: ClosestPair::from_indices(points, i, j),
            counters,
        });
    }

    let mut grid = SparseGrid::build(points, 0..n, d)?;
    let mut best = Incumbent::seeded(d, i, j);

    for k in 0..n {
        let cell = grid.cell_of_member(k).expect("all points are bucketed");
        if !grid.visit(cell) {
            continue;
        }
        let key = grid.key(cell);
        let neighbours: Vec<_> = FORWARD_NEIGHBOURS
            .iter()
            .filter_map(|&(di, dj)| key.offset(di, dj))
            .filter_map(|key| grid.find(key))
            .collect();
        for a in grid.members(cell) {
            counters.outer_iterations += 1;
            let p = points[a];
            for b in grid.members_after(a) {
                best.offer(p, points[b], (a, b), &mut counters);
            }
            for &other in &neighbours {
                for b in grid.members(other) {
                    best.offer(p, points[b], (a, b), &mut counters);
                }
            }
        }
    }

    Ok(best
        .into_solution(points, counters)
        .expect("seeded with the sampled pair"))
}

fn sample_points<R: Rng + ?Sized>(
    points: &[Point],
    rng: &mut R,
    counters: &mut OpCounters,
) -> Incumbent {
    let n = points.len();
    let size = ((n as f64).sqrt().floor() as usize).clamp(2, n);
    let sample = index::sample(rng, n, size).into_vec();
    let mut best = Incumbent::unbounded();
    for (k, &a) in sample[..size - 1].iter().enumerate() {
        counters.outer_iterations += 1;
        for &b in &sample[k + 1..] {
            best.offer(points[a], points[b], (a, b), counters);
        }
    }
    best
}

fn sample_distances<R: Rng + ?Sized>(
    points: &[Point],
    rng: &mut R,
    counters: &mut OpCounters,
) -> Incumbent {
    let n = points.len();
    let mut best = Incumbent::unbounded();
    counters.outer_iterations += 1;
    for _ in 0..n {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        counters.inner_iterations += 1;
        counters.distance_evaluations += 1;
        let d = euclidean_distance(points[a], points[b]);
        if d < best.delta {
            best.delta = d;
            best.pair = Some((a, b));
        }
    }
    best
}

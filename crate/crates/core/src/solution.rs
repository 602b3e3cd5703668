use crate::geometry::{euclidean_distance, ClosestPair, Point};

/// Loop counters recorded by every algorithm.
///
/// `inner_iterations` counts executed bodies of the candidate loop, so every
/// distance evaluation is also an inner iteration. The mean work per outer
/// iteration, [`OpCounters::inner_per_outer`], is the quantity whose doubling
/// ratio separates the quadratic scan from the sorted early-exit scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OpCounters {
    pub outer_iterations: u64,
    pub inner_iterations: u64,
    pub distance_evaluations: u64,
}

impl OpCounters {
    /// Mean number of inner-loop bodies per outer iteration.
    pub fn inner_per_outer(&self) -> f64 {
        if self.outer_iterations == 0 {
            0.0
        } else {
            self.inner_iterations as f64 / self.outer_iterations as f64
        }
    }

    pub(crate) fn absorb(&mut self, other: OpCounters) {
        self.outer_iterations += other.outer_iterations;
        self.inner_iterations += other.inner_iterations;
        self.distance_evaluations += other.distance_evaluations;
    }
}

/// Result of one closest-pair computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Solution {
    pub pair: ClosestPair,
    pub counters: OpCounters,
}

impl Solution {
    pub fn delta(&self) -> f64 {
        self.pair.delta
    }
}

/// Best pair seen so far, in input positions.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Incumbent {
    pub delta: f64,
    pub pair: Option<(usize, usize)>,
}

impl Incumbent {
    pub fn unbounded() -> Self {
        Incumbent {
            delta: f64::INFINITY,
            pair: None,
        }
    }

    pub fn with_bound(delta: f64) -> Self {
        Incumbent { delta, pair: None }
    }

    pub fn seeded(delta: f64, i: usize, j: usize) -> Self {
        Incumbent {
            delta,
            pair: Some((i, j)),
        }
    }

    /// Evaluates one candidate pair; replaces the incumbent on a strict
    /// improvement. Counts one inner iteration and one distance evaluation.
    #[inline]
    pub fn offer(&mut self, p: Point, q: Point, ids: (usize, usize), counters: &mut OpCounters) {
        counters.inner_iterations += 1;
        counters.distance_evaluations += 1;
        let d = euclidean_distance(p, q);
        if d < self.delta {
            self.delta = d;
            self.pair = Some(ids);
        }
    }

    pub fn into_solution(self, points: &[Point], counters: OpCounters) -> Option<Solution> {
        self.pair.map(|(i, j)| Solution {
            pair: ClosestPair::from_indices(points, i, j),
            counters,
        })
    }
}

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::geometry::{euclidean_distance, validate, Point};
use crate::solution::{Incumbent, OpCounters, Solution};
use crate::{sorted_by_x, Indexed, Result};

/// Key of the y-table. Ordered by `(y, x, index)` so equal y-coordinates
/// never collide.
#[derive(Debug, Clone, Copy)]
struct YKey {
    y: f64,
    x: f64,
    index: usize,
}

impl YKey {
    fn of(s: &Indexed) -> Self {
        YKey {
            y: s.point.y,
            x: s.point.x,
            index: s.index,
        }
    }

    fn lowest_at(y: f64) -> Self {
        YKey {
            y,
            x: f64::NEG_INFINITY,
            index: 0,
        }
    }
}

impl Ord for YKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.y
            .total_cmp(&other.y)
            .then(self.x.total_cmp(&other.x))
            .then(self.index.cmp(&other.index))
    }
}

impl PartialOrd for YKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for YKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for YKey {}

/// Sweep-line state: the x-ordered queue, the active window keyed by y, and
/// the tail pointer of the oldest point still in the window.
struct SweepState {
    queue: Vec<Indexed>,
    window: BTreeSet<YKey>,
    tail: usize,
}

impl SweepState {
    /// Drops window points with `x <= current.x - delta`. Only points before
    /// `current` are ever in the window.
    fn evict(&mut self, current: usize, delta: f64) {
        let cutoff = self.queue[current].point.x - delta;
        while self.tail < current && self.queue[self.tail].point.x <= cutoff {
            let removed = self.window.remove(&YKey::of(&self.queue[self.tail]));
            debug_assert!(removed);
            self.tail += 1;
        }
        debug_assert!(self.tail == current || self.queue[self.tail].point.x > cutoff);
    }
}

/// Plane sweep from left to right over the x-order.
pub fn cpp_ps(points: &[Point]) -> Result<Solution> {
    validate(points)?;
    let mut state = SweepState {
        queue: sorted_by_x(points),
        window: BTreeSet::new(),
        tail: 0,
    };
    let n = state.queue.len();
    let mut counters = OpCounters::default();

    let (q1, q2) = (state.queue[0], state.queue[1]);
    counters.inner_iterations += 1;
    counters.distance_evaluations += 1;
    let mut best = Incumbent::seeded(euclidean_distance(q1.point, q2.point), q1.index, q2.index);
    state.window.insert(YKey::of(&q1));
    state.window.insert(YKey::of(&q2));

    for i in 2..n {
        counters.outer_iterations += 1;
        state.evict(i, best.delta);
        let current = state.queue[i];
        let p = current.point;

        let lower = YKey::lowest_at(p.y - best.delta);
        for key in state.window.range(lower..) {
            let dy = key.y - p.y;
            if dy >= best.delta {
                break;
            }
            if dy.abs() < best.delta {
                best.offer(
                    p,
                    Point::new(key.x, key.y),
                    (current.index, key.index),
                    &mut counters,
                );
            }
        }
        state.window.insert(YKey::of(&current));
    }

    Ok(best
        .into_solution(points, counters)
        .expect("seeded with the first two points"))
}

use crate::geometry::{validate, Point};
use crate::solution::{Incumbent, OpCounters, Solution};
use crate::{sorted_by_x, Indexed, Result};

/// Frames at or below this size are solved by brute force.
const BASE_CASE: usize = 3;

/// Divide and conquer over the x-order with a y-ordered merge of the
/// `2 delta` stripe around the split.
pub fn cpp_dc(points: &[Point]) -> Result<Solution> {
    cpp_dc_observed(points, &mut |_, _| {})
}

/// As [`cpp_dc`], reporting every frame's x-sorted slice and the distance it
/// returned.
pub(crate) fn cpp_dc_observed<F>(points: &[Point], observe: &mut F) -> Result<Solution>
where
    F: FnMut(&[Indexed], f64),
{
    validate(points)?;
    let by_x = sorted_by_x(points);

    // The y-order is kept as ranks into `by_x`. Splitting by rank instead of
    // by `x <= mid.x` keeps each half's y-view equal to its x-slice even when
    // x-coordinates repeat across the split.
    let mut by_y: Vec<usize> = (0..by_x.len()).collect();
    by_y.sort_unstable_by(|&a, &b| {
        let (pa, pb) = (by_x[a].point, by_x[b].point);
        pa.y.total_cmp(&pb.y)
            .then(pa.x.total_cmp(&pb.x))
            .then(a.cmp(&b))
    });

    let mut counters = OpCounters::default();
    let frame = Frame {
        by_x: &by_x,
        first: 0,
        len: by_x.len(),
    };
    let best = frame.solve(&by_y, &mut counters, observe);
    Ok(best
        .into_solution(points, counters)
        .expect("every frame has at least two points"))
}

/// A contiguous run of the x-order.
#[derive(Clone, Copy)]
struct Frame<'a> {
    by_x: &'a [Indexed],
    first: usize,
    len: usize,
}

impl<'a> Frame<'a> {
    fn slice(&self) -> &'a [Indexed] {
        &self.by_x[self.first..self.first + self.len]
    }

    /// `y_view` holds this frame's ranks in y-order.
    fn solve<F>(self, y_view: &[usize], counters: &mut OpCounters, observe: &mut F) -> Incumbent
    where
        F: FnMut(&[Indexed], f64),
    {
        debug_assert_eq!(y_view.len(), self.len);
        let best = if self.len <= BASE_CASE {
            self.brute_force(counters)
        } else {
            self.split_and_merge(y_view, counters, observe)
        };
        observe(self.slice(), best.delta);
        best
    }

    fn brute_force(&self, counters: &mut OpCounters) -> Incumbent {
        let slice = self.slice();
        let mut best = Incumbent::unbounded();
        for (k, a) in slice[..slice.len() - 1].iter().enumerate() {
            counters.outer_iterations += 1;
            for b in &slice[k + 1..] {
                best.offer(a.point, b.point, (a.index, b.index), counters);
            }
        }
        best
    }

    fn split_and_merge<F>(
        self,
        y_view: &[usize],
        counters: &mut OpCounters,
        observe: &mut F,
    ) -> Incumbent
    where
        F: FnMut(&[Indexed], f64),
    {
        let last_left = self.first + (self.len - 1) / 2;
        let mid = self.by_x[last_left].point;

        let (y_left, y_right): (Vec<usize>, Vec<usize>) =
            y_view.iter().partition(|&&rank| rank <= last_left);

        let left = Frame {
            by_x: self.by_x,
            first: self.first,
            len: last_left + 1 - self.first,
        };
        let right = Frame {
            by_x: self.by_x,
            first: last_left + 1,
            len: self.len - left.len,
        };
        let from_left = left.solve(&y_left, counters, observe);
        let from_right = right.solve(&y_right, counters, observe);
        let mut best = if from_left.delta < from_right.delta {
            from_left
        } else {
            from_right
        };

        // Left half of the stripe, in x-order.
        let left_slice = left.slice();
        let start = left_slice.partition_point(|s| s.point.x < mid.x - best.delta);
        let stripe_left = &left_slice[start..];

        // Right half of the stripe, in y-order.
        let stripe_right: Vec<Indexed> = y_right
            .iter()
            .map(|&rank| self.by_x[rank])
            .filter(|s| s.point.x <= mid.x + best.delta)
            .collect();
        if stripe_right.is_empty() {
            return best;
        }

        for a in stripe_left {
            counters.outer_iterations += 1;
            let p = a.point;
            let lo = stripe_right.partition_point(|s| s.point.y < p.y - best.delta);
            for b in &stripe_right[lo..] {
                if b.point.y - p.y > best.delta {
                    break;
                }
                best.offer(p, b.point, (a.index, b.index), counters);
            }
        }
        best
    }
}

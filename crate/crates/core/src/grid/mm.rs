use super::dense::DenseGrid;
use super::FORWARD_NEIGHBOURS;
use crate::geometry::{bounding_box, validate, Point};
use crate::naive::cpp_aps;
use crate::packing::delta_bar;
use crate::solution::{Incumbent, OpCounters, Solution};
use crate::Result;

/// Upper limit on grid cells relative to `n`. Only very elongated clouds
/// reach it; the cell side is then doubled until the grid fits.
fn max_cells(n: usize) -> usize {
    4 * n + 16
}

/// The dense grid used by [`cpp_mm`]: cell side equal to the packing bound
/// for `n` scaled to the bounding box, `ceil(w / side) x ceil(h / side)` cells
/// anchored at the box's lower-left corner.
///
/// `None` when the bounding box has zero area.
pub fn mm_grid(points: &[Point]) -> Result<Option<DenseGrid>> {
    validate(points)?;
    let bbox = bounding_box(points)?;
    let (w, h) = (bbox.width(), bbox.height());
    let area = w * h;
    if !(area > 0.0 && area.is_finite()) {
        return Ok(None);
    }

    let mut side = delta_bar(points.len())?.delta_bar * area.sqrt();
    let cells_along = |extent: f64, side: f64| ((extent / side).ceil() as usize).max(1);
    let limit = max_cells(points.len());
    while cells_along(w, side).saturating_mul(cells_along(h, side)) > limit {
        side *= 2.0;
    }
    DenseGrid::build(
        points,
        bbox.origin(),
        side,
        cells_along(w, side),
        cells_along(h, side),
    )
    .map(Some)
}

/// Deterministic grid scan with the cell side fixed in advance by the
/// packing bound.
///
/// The incumbent starts at the cell side, so only pairs closer than one cell
/// are ever accepted. If the cloud admits no such pair (possible for
/// elongated bounding boxes, where the scaled bound no longer holds) or has
/// zero area, the result comes from the sorted all-pairs scan instead.
pub fn cpp_mm(points: &[Point]) -> Result<Solution> {
    let Some(grid) = mm_grid(points)? else {
        return cpp_aps(points);
    };
    let mut counters = OpCounters::default();
    let mut best = Incumbent::with_bound(grid.cell_size());

    for i in 1..=grid.cols() {
        for j in 1..=grid.rows() {
            let bucket = grid.bucket(i, j);
            for (k, &a) in bucket.iter().enumerate() {
                counters.outer_iterations += 1;
                let p = points[a];
                for &b in &bucket[k + 1..] {
                    best.offer(p, points[b], (a, b), &mut counters);
                }
                for (di, dj) in FORWARD_NEIGHBOURS {
                    let (ni, nj) = (i as i64 + di, j as i64 + dj);
                    if ni < 1 || nj < 1 {
                        continue;
                    }
                    for &b in grid.bucket(ni as usize, nj as usize) {
                        best.offer(p, points[b], (a, b), &mut counters);
                    }
                }
            }
        }
    }

    match best.into_solution(points, counters) {
        Some(solution) => Ok(solution),
        None => {
            let mut fallback = cpp_aps(points)?;
            counters.absorb(fallback.counters);
            fallback.counters = counters;
            Ok(fallback)
        }
    }
}

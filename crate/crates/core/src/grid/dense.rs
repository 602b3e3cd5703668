use crate::geometry::Point;
use crate::{Error, Result};

/// Cell of `p` in a grid anchored at `origin`, 1-based and clamped to
/// `[1, cols] x [1, rows]`.
///
/// Points on the far boundary land in the last cell instead of a cell past
/// the end of the grid.
pub fn cell_index(
    p: Point,
    cell_size: f64,
    origin: Point,
    cols: usize,
    rows: usize,
) -> Result<(usize, usize)> {
    if !(cell_size > 0.0 && cell_size.is_finite()) {
        return Err(Error::DegenerateCellSize(cell_size));
    }
    Ok((
        axis_index(p.x - origin.x, cell_size, cols),
        axis_index(p.y - origin.y, cell_size, rows),
    ))
}

#[inline]
fn axis_index(offset: f64, cell_size: f64, cells: usize) -> usize {
    // `as` saturates: negative offsets go to 0, huge ones to usize::MAX.
    let k = (offset / cell_size).floor() as usize;
    k.saturating_add(1).clamp(1, cells.max(1))
}

/// A `cols x rows` array of buckets over a rectangle, stored as one
/// contiguous member list with per-cell offsets.
///
/// Cells are addressed 1-based as `(i, j)`, `i` along x and `j` along y.
/// Addresses outside the grid are valid and name an empty bucket.
#[derive(Debug, Clone)]
pub struct DenseGrid {
    cell_size: f64,
    origin: Point,
    cols: usize,
    rows: usize,
    /// `starts[c]..starts[c + 1]` is cell `c`'s range in `members`.
    starts: Vec<usize>,
    members: Vec<usize>,
}

impl DenseGrid {
    /// Buckets every point of `points`, in input order within each cell.
    pub fn build(
        points: &[Point],
        origin: Point,
        cell_size: f64,
        cols: usize,
        rows: usize,
    ) -> Result<Self> {
        if !(cell_size > 0.0 && cell_size.is_finite()) {
            return Err(Error::DegenerateCellSize(cell_size));
        }
        let (cols, rows) = (cols.max(1), rows.max(1));
        let cells = cols * rows;

        let flat: Vec<usize> = points
            .iter()
            .map(|&p| {
                let i = axis_index(p.x - origin.x, cell_size, cols);
                let j = axis_index(p.y - origin.y, cell_size, rows);
                (i - 1) * rows + (j - 1)
            })
            .collect();

        // Counting sort by cell.
        let mut starts = vec![0usize; cells + 1];
        for &c in &flat {
            starts[c + 1] += 1;
        }
        for c in 0..cells {
            starts[c + 1] += starts[c];
        }
        let mut cursor = starts.clone();
        let mut members = vec![0usize; points.len()];
        for (k, &c) in flat.iter().enumerate() {
            members[cursor[c]] = k;
            cursor[c] += 1;
        }

        Ok(DenseGrid {
            cell_size,
            origin,
            cols,
            rows,
            starts,
            members,
        })
    }

    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }

    pub fn origin(&self) -> Point {
        self.origin
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Total number of bucketed points.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn cell_of(&self, p: Point) -> (usize, usize) {
        (
            axis_index(p.x - self.origin.x, self.cell_size, self.cols),
            axis_index(p.y - self.origin.y, self.cell_size, self.rows),
        )
    }

    /// Input positions of the points in cell `(i, j)`.
    pub fn bucket(&self, i: usize, j: usize) -> &[usize] {
        if i == 0 || j == 0 || i > self.cols || j > self.rows {
            return &[];
        }
        let c = (i - 1) * self.rows + (j - 1);
        &self.members[self.starts[c]..self.starts[c + 1]]
    }

    /// Index of the most populated cell and its population.
    pub fn fullest_cell(&self) -> ((usize, usize), usize) {
        let (c, len) = self
            .starts
            .windows(2)
            .map(|w| w[1] - w[0])
            .enumerate()
            .max_by_key(|&(c, len)| (len, std::cmp::Reverse(c)))
            .expect("grid has at least one cell");
        ((c / self.rows + 1, c % self.rows + 1), len)
    }
}

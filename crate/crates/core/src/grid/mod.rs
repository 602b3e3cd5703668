//! Bucket-grid algorithms and the grids behind them.
//!
//! A pair closer than the cell side lies in one cell or in two 8-adjacent
//! cells. Visiting each cell together with four of its neighbours
//! (`(i, j+1)`, `(i+1, j-1)`, `(i+1, j)`, `(i+1, j+1)`) therefore reaches
//! every such pair exactly once.

mod dense;
mod km;
mod mm;
mod rl;
mod sparse;

pub use dense::{cell_index, DenseGrid};
pub use km::cpp_km;
pub use mm::{cpp_mm, mm_grid};
pub use rl::{cpp_rl, SamplingMode};
pub use sparse::{CellId, CellKey, Members, SparseGrid};

/// Forward half of the 8-neighbourhood, as `(di, dj)` offsets.
pub(crate) const FORWARD_NEIGHBOURS: [(i64, i64); 4] = [(0, 1), (1, -1), (1, 0), (1, 1)];

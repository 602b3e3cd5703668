use crate::geometry::Point;
use crate::{Error, Result};

const NONE: u32 = u32::MAX;

/// Integer cell coordinates of an unbounded grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellKey {
    pub i: i64,
    pub j: i64,
}

impl CellKey {
    /// The cell shifted by `(di, dj)`, or `None` if that leaves the `i64` range.
    pub fn offset(self, di: i64, dj: i64) -> Option<CellKey> {
        Some(CellKey {
            i: self.i.checked_add(di)?,
            j: self.j.checked_add(dj)?,
        })
    }

    fn hash(self) -> u64 {
        let mut h = (self.i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
            ^ (self.j as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F);
        // splitmix64 finaliser
        h ^= h >> 30;
        h = h.wrapping_mul(0xBF58_476D_1CE4_E5B9);
        h ^= h >> 27;
        h = h.wrapping_mul(0x94D0_49BB_1331_11EB);
        h ^ (h >> 31)
    }
}

#[derive(Debug, Clone)]
struct Cell {
    key: CellKey,
    chain_next: u32,
    first_member: u32,
    len: u32,
    visited: bool,
}

/// Handle to an occupied cell of a [`SparseGrid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellId(u32);

/// Grid of square cells over the whole plane, storing only occupied cells
/// in a hash table with external chaining.
///
/// The table has `2^ceil(log2(3n))` slots for `n` bucketed points. Lookups
/// of unoccupied cells return an empty bucket.
#[derive(Debug, Clone)]
pub struct SparseGrid {
    cell_size: f64,
    slots: Vec<u32>,
    cells: Vec<Cell>,
    /// Per input position: next member of the same cell.
    member_next: Vec<u32>,
    /// Per input position: owning cell, `NONE` if not bucketed.
    member_cell: Vec<u32>,
}

impl SparseGrid {
    /// Buckets `points[k]` for every `k` in `members`.
    pub fn build<I>(points: &[Point], members: I, cell_size: f64) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
        I::IntoIter: ExactSizeIterator,
    {
        if !(cell_size > 0.0 && cell_size.is_finite()) {
            return Err(Error::DegenerateCellSize(cell_size));
        }
        let members = members.into_iter();
        let capacity = (3 * members.len()).max(1).next_power_of_two();
        let mut grid = SparseGrid {
            cell_size,
            slots: vec![NONE; capacity],
            cells: Vec::new(),
            member_next: vec![NONE; points.len()],
            member_cell: vec![NONE; points.len()],
        };
        for k in members {
            let key = grid.key_of(points[k]);
            let cell = grid.find_or_insert(key);
            let c = &mut grid.cells[cell as usize];
            grid.member_next[k] = c.first_member;
            c.first_member = k as u32;
            c.len += 1;
            grid.member_cell[k] = cell;
        }
        Ok(grid)
    }

    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }

    /// Number of hash slots.
    pub fn capacity(&self) -> usize {
        self.slots.len()
    }

    /// Number of occupied cells.
    pub fn occupied(&self) -> usize {
        self.cells.len()
    }

    pub fn key_of(&self, p: Point) -> CellKey {
        CellKey {
            i: (p.x / self.cell_size).floor() as i64,
            j: (p.y / self.cell_size).floor() as i64,
        }
    }

    pub fn key(&self, id: CellId) -> CellKey {
        self.cells[id.0 as usize].key
    }

    pub fn find(&self, key: CellKey) -> Option<CellId> {
        let mut c = self.slots[self.slot(key)];
        while c != NONE {
            let cell = &self.cells[c as usize];
            if cell.key == key {
                return Some(CellId(c));
            }
            c = cell.chain_next;
        }
        None
    }

    /// Cell holding input position `k`, if it was bucketed.
    pub fn cell_of_member(&self, k: usize) -> Option<CellId> {
        match self.member_cell[k] {
            NONE => None,
            c => Some(CellId(c)),
        }
    }

    pub fn bucket_len(&self, id: CellId) -> usize {
        self.cells[id.0 as usize].len as usize
    }

    /// Population of cell `key`; zero when unoccupied.
    pub fn count(&self, key: CellKey) -> usize {
        self.find(key).map_or(0, |id| self.bucket_len(id))
    }

    pub fn members(&self, id: CellId) -> Members<'_> {
        Members {
            next: &self.member_next,
            cursor: self.cells[id.0 as usize].first_member,
        }
    }

    /// Members of the cell that follow `k` in its bucket.
    pub fn members_after(&self, k: usize) -> Members<'_> {
        Members {
            next: &self.member_next,
            cursor: self.member_next[k],
        }
    }

    /// Marks the cell visited; returns `true` on the first call for a cell.
    pub fn visit(&mut self, id: CellId) -> bool {
        let cell = &mut self.cells[id.0 as usize];
        !std::mem::replace(&mut cell.visited, true)
    }

    /// Mean chain length over non-empty slots.
    pub fn mean_chain_length(&self) -> f64 {
        let used = self.slots.iter().filter(|&&s| s != NONE).count();
        if used == 0 {
            0.0
        } else {
            self.cells.len() as f64 / used as f64
        }
    }

    fn slot(&self, key: CellKey) -> usize {
        (key.hash() as usize) & (self.slots.len() - 1)
    }

    fn find_or_insert(&mut self, key: CellKey) -> u32 {
        if let Some(CellId(c)) = self.find(key) {
            return c;
        }
        let slot = self.slot(key);
        let id = self.cells.len() as u32;
        self.cells.push(Cell {
            key,
            chain_next: self.slots[slot],
            first_member: NONE,
            len: 0,
            visited: false,
        });
        self.slots[slot] = id;
        id
    }
}

/// Iterator over the input positions stored in one cell.
#[derive(Debug, Clone)]
pub struct Members<'a> {
    next: &'a [u32],
    cursor: u32,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.cursor == NONE {
            return None;
        }
        let k = self.cursor as usize;
        self.cursor = self.next[k];
        Some(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scattered(n: usize) -> Vec<Point> {
        (0..n)
            .map(|k| {
                Point::new(
                    (k as f64 * 0.754_877_666) % 1.0,
                    (k as f64 * 0.569_840_291) % 1.0,
                )
            })
            .collect()
    }

    #[test]
    fn capacity_is_next_power_of_two_of_3n() {
        let points = scattered(1000);
        let grid = SparseGrid::build(&points, 0..points.len(), 0.05).unwrap();
        assert_eq!(grid.capacity(), 4096);
        let grid = SparseGrid::build(&points, 0..10, 0.05).unwrap();
        assert_eq!(grid.capacity(), 32);
    }

    #[test]
    fn every_member_is_in_its_keyed_cell() {
        let points = scattered(500);
        let grid = SparseGrid::build(&points, 0..points.len(), 0.07).unwrap();
        let mut total = 0;
        for (k, &p) in points.iter().enumerate() {
            let id = grid.cell_of_member(k).unwrap();
            assert_eq!(grid.key(id), grid.key_of(p));
            assert_eq!(grid.find(grid.key_of(p)), Some(id));
            assert!(grid.members(id).any(|m| m == k));
        }
        let mut seen = std::collections::HashSet::new();
        for k in 0..points.len() {
            let id = grid.cell_of_member(k).unwrap();
            if seen.insert(id.0) {
                total += grid.members(id).count();
                assert_eq!(grid.members(id).count(), grid.bucket_len(id));
            }
        }
        assert_eq!(total, points.len());
        assert!(grid.occupied() <= points.len());
    }

    #[test]
    fn absent_cells_are_empty() {
        let points = [Point::new(0.1, 0.1)];
        let grid = SparseGrid::build(&points, 0..1, 0.5).unwrap();
        assert_eq!(grid.count(CellKey { i: 0, j: 0 }), 1);
        assert_eq!(grid.count(CellKey { i: 7, j: -3 }), 0);
        assert!(grid.find(CellKey { i: 1, j: 0 }).is_none());
    }

    #[test]
    fn subset_build_leaves_others_unbucketed() {
        let points = scattered(10);
        let grid = SparseGrid::build(&points, [1usize, 4, 7], 0.2).unwrap();
        assert!(grid.cell_of_member(0).is_none());
        assert!(grid.cell_of_member(4).is_some());
    }

    #[test]
    fn visit_only_once() {
        let points = scattered(3);
        let mut grid = SparseGrid::build(&points, 0..3, 10.0).unwrap();
        let id = grid.cell_of_member(0).unwrap();
        assert!(grid.visit(id));
        assert!(!grid.visit(id));
    }

    #[test]
    fn chains_stay_short() {
        let points = scattered(20_000);
        let grid = SparseGrid::build(&points, 0..points.len(), 0.004).unwrap();
        assert!(
            grid.mean_chain_length() < 1.5,
            "{}",
            grid.mean_chain_length()
        );
    }

    #[test]
    fn offset_saturation_is_refused() {
        let k = CellKey { i: i64::MAX, j: 0 };
        assert!(k.offset(1, 0).is_none());
        assert_eq!(k.offset(0, -1), Some(CellKey { i: i64::MAX, j: -1 }));
    }
}

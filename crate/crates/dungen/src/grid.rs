//! Occupancy grid representation.
//!
//! Cells are OCCUPIED (numeric 1) or FREE (numeric 0). The origin `(0, 0)`
//! is the upper-left corner; rows grow downward and columns grow rightward.

use std::fmt;

use crate::error::{Error, Result};

/// Cap on `rows * cols`. Keeps every distance representable in 32 bits and
/// rejects overflow-scale allocations up front.
pub const MAX_CELLS: usize = 1 << 30;

/// State of a single grid cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum CellState {
    Free = 0,
    Occupied = 1,
}

/// A `(row, col)` grid coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// Manhattan distance to `other`.
    pub fn manhattan(self, other: Cell) -> usize {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// Rectangular occupancy grid, stored row-major with one byte per cell.
#[derive(Clone, PartialEq, Eq)]
pub struct GridMap {
    rows: usize,
    cols: usize,
    cells: Vec<u8>,
}

impl GridMap {
    /// Creates a grid with every cell OCCUPIED, the starting state of map
    /// generation. Rejects empty or overflow-scale dimensions.
    pub fn new_occupied(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter(format!(
                "grid dimensions must be at least 1x1, got {rows}x{cols}"
            )));
        }
        let count = rows
            .checked_mul(cols)
            .filter(|&n| n <= MAX_CELLS)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "grid {rows}x{cols} exceeds the {MAX_CELLS}-cell limit"
                ))
            })?;
        Ok(Self {
            rows,
            cols,
            cells: vec![CellState::Occupied as u8; count],
        })
    }

    /// Builds a grid from row-major cell states. Used by decoders.
    pub(crate) fn from_raw(rows: usize, cols: usize, cells: Vec<u8>) -> Result<Self> {
        let mut grid = Self::new_occupied(rows, cols)?;
        debug_assert_eq!(cells.len(), rows * cols);
        debug_assert!(cells.iter().all(|&c| c <= 1));
        grid.cells = cells;
        Ok(grid)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row < self.rows && cell.col < self.cols
    }

    #[inline]
    pub(crate) fn idx(&self, cell: Cell) -> usize {
        debug_assert!(self.contains(cell));
        cell.row * self.cols + cell.col
    }

    #[inline]
    pub(crate) fn cell_at(&self, idx: usize) -> Cell {
        Cell::new(idx / self.cols, idx % self.cols)
    }

    pub fn state(&self, cell: Cell) -> CellState {
        if self.cells[self.idx(cell)] == 0 {
            CellState::Free
        } else {
            CellState::Occupied
        }
    }

    #[inline]
    pub fn is_free(&self, cell: Cell) -> bool {
        self.cells[self.idx(cell)] == 0
    }

    #[inline]
    pub(crate) fn is_free_idx(&self, idx: usize) -> bool {
        self.cells[idx] == 0
    }

    pub fn set_free(&mut self, cell: Cell) {
        let idx = self.idx(cell);
        self.cells[idx] = CellState::Free as u8;
    }

    pub fn set_occupied(&mut self, cell: Cell) {
        let idx = self.idx(cell);
        self.cells[idx] = CellState::Occupied as u8;
    }

    /// Raw row-major bytes, OCCUPIED = 1, FREE = 0.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn free_cells(&self) -> usize {
        self.cells.iter().filter(|&&c| c == 0).count()
    }

    pub fn free_fraction(&self) -> f64 {
        self.free_cells() as f64 / self.cell_count() as f64
    }
}

impl fmt::Debug for GridMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GridMap({}x{}, {} free)", self.rows, self.cols, self.free_cells())
    }
}

/// ASCII rendering: `.` for free, `#` for occupied.
impl fmt::Display for GridMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let ch = if self.is_free(Cell::new(r, c)) { '.' } else { '#' };
                f.write_fmt(format_args!("{ch}"))?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_grid_starts_occupied() {
        let grid = GridMap::new_occupied(1, 1).unwrap();
        assert_eq!(grid.cell_count(), 1);
        assert_eq!(grid.state(Cell::new(0, 0)), CellState::Occupied);
    }

    #[test]
    fn standard_grid_is_fully_occupied() {
        let grid = GridMap::new_occupied(64, 64).unwrap();
        assert_eq!(grid.cell_count(), 4096);
        assert_eq!(grid.free_cells(), 0);
        assert!(grid.cells().iter().all(|&c| c == 1));
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(matches!(
            GridMap::new_occupied(0, 5),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            GridMap::new_occupied(5, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn overflow_scale_rejected() {
        assert!(GridMap::new_occupied(usize::MAX, 2).is_err());
        assert!(GridMap::new_occupied(1 << 20, 1 << 20).is_err());
    }

    #[test]
    fn free_and_occupied_round_trip() {
        let mut grid = GridMap::new_occupied(3, 4).unwrap();
        let cell = Cell::new(2, 3);
        assert!(!grid.is_free(cell));
        grid.set_free(cell);
        assert!(grid.is_free(cell));
        assert_eq!(grid.free_cells(), 1);
        grid.set_occupied(cell);
        assert_eq!(grid.free_cells(), 0);
    }

    #[test]
    fn manhattan_distance() {
        assert_eq!(Cell::new(0, 0).manhattan(Cell::new(4, 4)), 8);
        assert_eq!(Cell::new(5, 1).manhattan(Cell::new(1, 7)), 10);
        assert_eq!(Cell::new(3, 3).manhattan(Cell::new(3, 3)), 0);
    }
}

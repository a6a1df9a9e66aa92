//! Room-to-room connection matrices.

use crate::error::{Error, Result};
use crate::grid::{Cell, GridMap};
use crate::search::{shortest_path, Algorithm};

/// `n x n` matrix of seed-to-seed distances in moves. `-1` marks "no
/// connection"; `0` appears for a seed paired with itself (or another seed
/// on the same cell).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl ConnectionMatrix {
    pub fn from_entries(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "connection matrix for {n} seeds needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(Self { n, entries })
    }

    fn zeroed(n: usize) -> Self {
        Self {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.n + j] = value;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn diagonal_is_zero(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 0)
    }

    /// Triangle inequality over triples where all three entries are
    /// reachable (non-negative).
    pub fn triangle_inequality_holds(&self) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    let (ij, jk, ik) = (self.get(i, j), self.get(j, k), self.get(i, k));
                    if ij >= 0 && jk >= 0 && ik >= 0 && ik > ij + jk {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All-pairs seed distances computed with the selected algorithm. Each
/// unordered pair is queried once and mirrored; the diagonal is zero by
/// definition.
pub fn connection_matrix(
    grid: &GridMap,
    seeds: &[Cell],
    algorithm: Algorithm,
) -> Result<ConnectionMatrix> {
    for &seed in seeds {
        if !grid.contains(seed) {
            return Err(Error::InvalidQuery(format!("seed {seed} out of bounds")));
        }
        if !grid.is_free(seed) {
            return Err(Error::InvalidQuery(format!("seed {seed} is occupied")));
        }
    }
    let mut matrix = ConnectionMatrix::zeroed(seeds.len());
    for i in 0..seeds.len() {
        for j in (i + 1)..seeds.len() {
            let outcome = shortest_path(grid, seeds[i], seeds[j], algorithm)?;
            let distance = outcome.moves().map_or(-1, |moves| moves as i64);
            matrix.set(i, j, distance);
            matrix.set(j, i, distance);
        }
    }
    Ok(matrix)
}

//! Shortest-path search over free cells.
//!
//! Both searches move through 4-neighbors (up, down, left, right, generated
//! in that fixed order), cost one per move, and stop when the goal is popped
//! from the frontier, so the goal itself counts as an expansion. All tie
//! breaking is pinned, which makes expansion counts and paths reproducible.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::error::{Error, Result};
use crate::grid::{Cell, GridMap};

/// Search algorithm selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Bfs,
    Astar,
}

/// Algorithm choice for interfaces that can also take both at once.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgoChoice {
    Bfs,
    Astar,
    Both,
}

impl AlgoChoice {
    pub fn includes(self, algorithm: Algorithm) -> bool {
        match self {
            AlgoChoice::Bfs => algorithm == Algorithm::Bfs,
            AlgoChoice::Astar => algorithm == Algorithm::Astar,
            AlgoChoice::Both => true,
        }
    }
}

/// Result of one start-to-goal query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Cells from start to goal inclusive; `None` when unreachable.
    pub path: Option<Vec<Cell>>,
    /// Nodes popped from the frontier before termination.
    pub expansions: u64,
}

impl SearchOutcome {
    /// Path length in moves (cells minus one), if a path was found.
    pub fn moves(&self) -> Option<usize> {
        self.path.as_ref().map(|p| p.len() - 1)
    }
}

fn check_query(grid: &GridMap, start: Cell, goal: Cell) -> Result<()> {
    for (name, cell) in [("start", start), ("goal", goal)] {
        if !grid.contains(cell) {
            return Err(Error::InvalidQuery(format!(
                "{name} {cell} outside {}x{} grid",
                grid.rows(),
                grid.cols()
            )));
        }
        if !grid.is_free(cell) {
            return Err(Error::InvalidQuery(format!("{name} {cell} is occupied")));
        }
    }
    Ok(())
}

const NO_PARENT: u32 = u32::MAX;

/// Neighbor indices in the fixed order up, down, left, right.
#[inline]
fn for_each_neighbor(grid: &GridMap, idx: usize, mut visit: impl FnMut(usize)) {
    let cols = grid.cols();
    let (r, c) = (idx / cols, idx % cols);
    if r > 0 {
        visit(idx - cols);
    }
    if r + 1 < grid.rows() {
        visit(idx + cols);
    }
    if c > 0 {
        visit(idx - 1);
    }
    if c + 1 < cols {
        visit(idx + 1);
    }
}

fn reconstruct(grid: &GridMap, parent: &[u32], start: usize, goal: usize) -> Vec<Cell> {
    let mut cells = vec![grid.cell_at(goal)];
    let mut idx = goal;
    while idx != start {
        idx = parent[idx] as usize;
        cells.push(grid.cell_at(idx));
    }
    cells.reverse();
    cells
}

/// Breadth-first search. Returns a minimal-move path, or `None` with the
/// start component fully expanded when the goal is unreachable.
pub fn bfs_shortest_path(grid: &GridMap, start: Cell, goal: Cell) -> Result<SearchOutcome> {
    check_query(grid, start, goal)?;
    let start_idx = grid.idx(start);
    let goal_idx = grid.idx(goal);

    let mut parent = vec![NO_PARENT; grid.cell_count()];
    parent[start_idx] = start_idx as u32;
    let mut queue = VecDeque::new();
    queue.push_back(start_idx as u32);

    let mut expansions = 0u64;
    while let Some(idx) = queue.pop_front() {
        let idx = idx as usize;
        expansions += 1;
        if idx == goal_idx {
            return Ok(SearchOutcome {
                path: Some(reconstruct(grid, &parent, start_idx, goal_idx)),
                expansions,
            });
        }
        for_each_neighbor(grid, idx, |n| {
            if grid.is_free_idx(n) && parent[n] == NO_PARENT {
                parent[n] = idx as u32;
                queue.push_back(n as u32);
            }
        });
    }
    Ok(SearchOutcome {
        path: None,
        expansions,
    })
}

/// A* with the Manhattan heuristic and unit move cost. Frontier ties on f
/// are broken by lower h, then by insertion order; entries that were already
/// expanded are skipped without counting. Paths are always minimal-move, the
/// same length BFS returns.
pub fn astar_shortest_path(grid: &GridMap, start: Cell, goal: Cell) -> Result<SearchOutcome> {
    check_query(grid, start, goal)?;
    let start_idx = grid.idx(start);
    let goal_idx = grid.idx(goal);
    let h = |idx: usize| grid.cell_at(idx).manhattan(goal) as u32;

    let mut g = vec![u32::MAX; grid.cell_count()];
    let mut parent = vec![NO_PARENT; grid.cell_count()];
    let mut closed = vec![false; grid.cell_count()];
    let mut heap: BinaryHeap<Reverse<(u32, u32, u64, u32)>> = BinaryHeap::new();

    g[start_idx] = 0;
    parent[start_idx] = start_idx as u32;
    let mut seq = 0u64;
    heap.push(Reverse((h(start_idx), h(start_idx), seq, start_idx as u32)));

    let mut expansions = 0u64;
    while let Some(Reverse((_, _, _, idx))) = heap.pop() {
        let idx = idx as usize;
        if closed[idx] {
            continue; // stale duplicate
        }
        closed[idx] = true;
        expansions += 1;
        if idx == goal_idx {
            return Ok(SearchOutcome {
                path: Some(reconstruct(grid, &parent, start_idx, goal_idx)),
                expansions,
            });
        }
        let tentative = g[idx] + 1;
        for_each_neighbor(grid, idx, |n| {
            if grid.is_free_idx(n) && !closed[n] && tentative < g[n] {
                g[n] = tentative;
                parent[n] = idx as u32;
                seq += 1;
                heap.push(Reverse((tentative + h(n), h(n), seq, n as u32)));
            }
        });
    }
    Ok(SearchOutcome {
        path: None,
        expansions,
    })
}

/// Dispatches to the selected algorithm.
pub fn shortest_path(
    grid: &GridMap,
    start: Cell,
    goal: Cell,
    algorithm: Algorithm,
) -> Result<SearchOutcome> {
    match algorithm {
        Algorithm::Bfs => bfs_shortest_path(grid, start, goal),
        Algorithm::Astar => astar_shortest_path(grid, start, goal),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn open_grid(rows: usize, cols: usize) -> GridMap {
        let mut grid = GridMap::new_occupied(rows, cols).unwrap();
        for r in 0..rows {
            for c in 0..cols {
                grid.set_free(Cell::new(r, c));
            }
        }
        grid
    }

    #[test]
    fn bfs_unique_shortest_path() {
        let grid = open_grid(3, 3);
        let out = bfs_shortest_path(&grid, Cell::new(0, 0), Cell::new(0, 2)).unwrap();
        assert_eq!(
            out.path.as_deref(),
            Some(&[Cell::new(0, 0), Cell::new(0, 1), Cell::new(0, 2)][..])
        );
        assert_eq!(out.moves(), Some(2));
    }

    #[test]
    fn identity_query_is_one_expansion() {
        let grid = open_grid(4, 4);
        let cell = Cell::new(2, 1);
        for algorithm in [Algorithm::Bfs, Algorithm::Astar] {
            let out = shortest_path(&grid, cell, cell, algorithm).unwrap();
            assert_eq!(out.path.as_deref(), Some(&[cell][..]));
            assert_eq!(out.moves(), Some(0));
            assert_eq!(out.expansions, 1);
        }
    }

    #[test]
    fn bfs_exhausts_component_on_failure() {
        // Occupied middle column splits the grid; the start component is
        // exactly {(0,0), (1,0), (2,0)}.
        let mut grid = open_grid(3, 3);
        for r in 0..3 {
            grid.set_occupied(Cell::new(r, 1));
        }
        let out = bfs_shortest_path(&grid, Cell::new(0, 0), Cell::new(0, 2)).unwrap();
        assert_eq!(out.path, None);
        assert_eq!(out.expansions, 3);
    }

    #[test]
    fn astar_exhausts_component_on_failure() {
        let mut grid = open_grid(3, 3);
        for r in 0..3 {
            grid.set_occupied(Cell::new(r, 1));
        }
        let out = astar_shortest_path(&grid, Cell::new(0, 0), Cell::new(0, 2)).unwrap();
        assert_eq!(out.path, None);
        assert_eq!(out.expansions, 3);
    }

    #[test]
    fn astar_reaches_manhattan_bound_in_open_grid() {
        let grid = open_grid(3, 3);
        let out = astar_shortest_path(&grid, Cell::new(0, 0), Cell::new(2, 2)).unwrap();
        assert_eq!(out.moves(), Some(4));
    }

    #[test]
    fn occupied_endpoint_rejected() {
        let mut grid = open_grid(3, 3);
        grid.set_occupied(Cell::new(1, 1));
        let err = bfs_shortest_path(&grid, Cell::new(0, 0), Cell::new(1, 1));
        assert!(matches!(err, Err(Error::InvalidQuery(_))));
        let err = astar_shortest_path(&grid, Cell::new(1, 1), Cell::new(0, 0));
        assert!(matches!(err, Err(Error::InvalidQuery(_))));
    }

    #[test]
    fn out_of_bounds_endpoint_rejected() {
        let grid = open_grid(3, 3);
        let err = bfs_shortest_path(&grid, Cell::new(0, 0), Cell::new(3, 0));
        assert!(matches!(err, Err(Error::InvalidQuery(_))));
    }

    #[test]
    fn paths_are_valid_and_equal_length() {
        let mut grid = open_grid(8, 8);
        // A few walls to force detours.
        for r in 1..7 {
            grid.set_occupied(Cell::new(r, 3));
        }
        for c in 4..8 {
            grid.set_occupied(Cell::new(5, c));
        }
        let start = Cell::new(7, 0);
        let goal = Cell::new(0, 7);
        let bfs = bfs_shortest_path(&grid, start, goal).unwrap();
        let astar = astar_shortest_path(&grid, start, goal).unwrap();
        assert_eq!(bfs.moves(), astar.moves());
        for out in [&bfs, &astar] {
            let path = out.path.as_ref().unwrap();
            assert_eq!(path.first(), Some(&start));
            assert_eq!(path.last(), Some(&goal));
            for pair in path.windows(2) {
                assert_eq!(pair[0].manhattan(pair[1]), 1);
                assert!(grid.is_free(pair[1]));
            }
            let mut seen = path.clone();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), path.len(), "path revisits a cell");
            assert!(out.expansions >= path.len() as u64);
        }
    }

    #[test]
    fn manhattan_heuristic_is_consistent() {
        // |h(u) - h(v)| <= 1 for every adjacent free pair.
        let grid = open_grid(6, 6);
        let goal = Cell::new(4, 2);
        for r in 0..6 {
            for c in 0..6 {
                let u = Cell::new(r, c);
                let hu = u.manhattan(goal) as i64;
                for (dr, dc) in [(-1i64, 0i64), (1, 0), (0, -1), (0, 1)] {
                    let (nr, nc) = (r as i64 + dr, c as i64 + dc);
                    if nr < 0 || nc < 0 || nr >= 6 || nc >= 6 {
                        continue;
                    }
                    let hv = Cell::new(nr as usize, nc as usize).manhattan(goal) as i64;
                    assert!((hu - hv).abs() <= 1);
                }
            }
        }
    }
}

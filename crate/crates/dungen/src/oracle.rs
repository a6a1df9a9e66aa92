//! Brute-force all-pairs distance oracle.
//!
//! Textbook Dijkstra over the free-cell graph, run to exhaustion with no
//! early exit, no heuristic, and no code shared with the search module. It
//! exists to cross-check `connection_matrix` in tests and validation on
//! small grids; it is deliberately slower than the searches it checks.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::grid::{Cell, GridMap};
use crate::matrix::ConnectionMatrix;

/// All-pairs seed distances by exhaustive Dijkstra from every seed.
/// Panics if a seed is occupied or out of bounds; meant for grids of
/// moderate size (64x64 or less).
pub fn oracle_all_pairs(grid: &GridMap, seeds: &[Cell]) -> ConnectionMatrix {
    for &seed in seeds {
        assert!(
            grid.contains(seed) && grid.is_free(seed),
            "oracle seed {seed} must be a free in-bounds cell"
        );
    }
    let n = seeds.len();
    let mut entries = vec![0i64; n * n];
    for (i, &source) in seeds.iter().enumerate() {
        let dist = dijkstra_full(grid, source);
        for (j, &target) in seeds.iter().enumerate() {
            let d = dist[grid.idx(target)];
            entries[i * n + j] = if d == u64::MAX { -1 } else { d as i64 };
        }
    }
    ConnectionMatrix::from_entries(n, entries).expect("square by construction")
}

/// Distances from `source` to every cell, `u64::MAX` where unreachable.
fn dijkstra_full(grid: &GridMap, source: Cell) -> Vec<u64> {
    let cols = grid.cols() as i64;
    let rows = grid.rows() as i64;
    let mut dist = vec![u64::MAX; grid.cell_count()];
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = BinaryHeap::new();
    dist[grid.idx(source)] = 0;
    heap.push(Reverse((0, grid.idx(source))));

    while let Some(Reverse((d, idx))) = heap.pop() {
        if d > dist[idx] {
            continue;
        }
        let (r, c) = ((idx as i64) / cols, (idx as i64) % cols);
        for (dr, dc) in [(-1i64, 0i64), (1, 0), (0, -1), (0, 1)] {
            let (nr, nc) = (r + dr, c + dc);
            if nr < 0 || nc < 0 || nr >= rows || nc >= cols {
                continue;
            }
            let nidx = (nr * cols + nc) as usize;
            if !grid.is_free_idx(nidx) {
                continue;
            }
            let nd = d + 1;
            if nd < dist[nidx] {
                dist[nidx] = nd;
                heap.push(Reverse((nd, nidx)));
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate_map;
    use crate::matrix::connection_matrix;
    use crate::params::GenParams;
    use crate::rng::SplitMix64;
    use crate::search::Algorithm;

    #[test]
    fn single_free_cell() {
        let mut grid = GridMap::new_occupied(1, 1).unwrap();
        grid.set_free(Cell::new(0, 0));
        let matrix = oracle_all_pairs(&grid, &[Cell::new(0, 0)]);
        assert_eq!(matrix.entries(), &[0]);
    }

    #[test]
    fn agrees_with_both_search_algorithms() {
        let params = GenParams {
            rows: 32,
            cols: 32,
            ..GenParams::default()
        };
        for seed in 0..20 {
            let (grid, layout) = generate_map(&params, &mut SplitMix64::new(seed)).unwrap();
            let seeds = layout.seeds();
            let expected = oracle_all_pairs(&grid, &seeds);
            let bfs = connection_matrix(&grid, &seeds, Algorithm::Bfs).unwrap();
            let astar = connection_matrix(&grid, &seeds, Algorithm::Astar).unwrap();
            assert_eq!(bfs, expected, "BFS matrix diverges on seed {seed}");
            assert_eq!(astar, expected, "A* matrix diverges on seed {seed}");
        }
    }
}

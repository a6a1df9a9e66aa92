//! Map carving: rooms, L-corridors, and the full generation procedure.

use crate::error::Result;
use crate::grid::{Cell, GridMap};
use crate::layout::{sample_map_layout, Direction, MapLayout, Room};
use crate::params::GenParams;
use crate::rng::UniformRng;

/// Frees the floor-centered rectangle around the room seed, clipped to the
/// grid. The extent starts at `seed - floor(size / 2)` on each axis and runs
/// for `size` cells, so the seed cell itself is always inside the carved
/// region, clipping or not.
pub fn carve_room(grid: &mut GridMap, room: &Room) {
    debug_assert!(grid.contains(room.seed()));
    let top = room.seed_row as i64 - (room.size_rows / 2) as i64;
    let left = room.seed_col as i64 - (room.size_cols / 2) as i64;
    carve_rect(
        grid,
        top,
        top + room.size_rows as i64,
        left,
        left + room.size_cols as i64,
    );
}

/// Carves the two overlapping bands of an L-corridor joining cells `a` and
/// `b`. Each band spans both endpoints inclusively along its long axis and
/// is `width` cells across, centered with the same floor rule as rooms.
/// The bands share the elbow cell, so the carved set is 4-connected and
/// contains both `a` and `b` regardless of clipping.
pub fn carve_corridor(grid: &mut GridMap, a: Cell, b: Cell, width: usize, direction: Direction) {
    debug_assert!(grid.contains(a) && grid.contains(b) && width >= 1);
    match direction {
        Direction::VerticalFirst => {
            carve_row_band(grid, a.row.min(b.row), a.row.max(b.row), a.col, width);
            carve_col_band(grid, a.col.min(b.col), a.col.max(b.col), b.row, width);
        }
        Direction::HorizontalFirst => {
            carve_col_band(grid, a.col.min(b.col), a.col.max(b.col), a.row, width);
            carve_row_band(grid, a.row.min(b.row), a.row.max(b.row), b.col, width);
        }
    }
}

/// Vertical band: rows `row_lo..=row_hi`, `width` columns centered on `col`.
fn carve_row_band(grid: &mut GridMap, row_lo: usize, row_hi: usize, col: usize, width: usize) {
    let left = col as i64 - (width / 2) as i64;
    carve_rect(
        grid,
        row_lo as i64,
        row_hi as i64 + 1,
        left,
        left + width as i64,
    );
}

/// Horizontal band: cols `col_lo..=col_hi`, `width` rows centered on `row`.
fn carve_col_band(grid: &mut GridMap, col_lo: usize, col_hi: usize, row: usize, width: usize) {
    let top = row as i64 - (width / 2) as i64;
    carve_rect(
        grid,
        top,
        top + width as i64,
        col_lo as i64,
        col_hi as i64 + 1,
    );
}

/// Frees the half-open rectangle `[top, bottom) x [left, right)` clipped to
/// the grid.
fn carve_rect(grid: &mut GridMap, top: i64, bottom: i64, left: i64, right: i64) {
    let r0 = top.max(0) as usize;
    let r1 = bottom.clamp(0, grid.rows() as i64) as usize;
    let c0 = left.max(0) as usize;
    let c1 = right.clamp(0, grid.cols() as i64) as usize;
    for r in r0..r1 {
        for c in c0..c1 {
            grid.set_free(Cell::new(r, c));
        }
    }
}

/// Runs the full generation procedure: start from an all-occupied grid,
/// carve every room in layout order, then carve a corridor between each
/// consecutive connected pair of room seeds.
pub fn generate_map(params: &GenParams, rng: &mut impl UniformRng) -> Result<(GridMap, MapLayout)> {
    params.validate()?;
    let layout = sample_map_layout(params, rng);
    let mut grid = GridMap::new_occupied(params.rows, params.cols)?;
    for room in &layout.rooms {
        carve_room(&mut grid, room);
    }
    for (pair, direction) in layout.rooms.windows(2).zip(&layout.directions) {
        if let Some(direction) = *direction {
            carve_corridor(
                &mut grid,
                pair[0].seed(),
                pair[1].seed(),
                layout.tunnel_width,
                direction,
            );
        }
    }
    Ok((grid, layout))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::IntRange;
    use crate::rng::SplitMix64;

    fn free_set(grid: &GridMap) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..grid.rows() {
            for c in 0..grid.cols() {
                if grid.is_free(Cell::new(r, c)) {
                    out.push((r, c));
                }
            }
        }
        out
    }

    #[test]
    fn room_centered_on_seed() {
        let mut grid = GridMap::new_occupied(8, 8).unwrap();
        carve_room(
            &mut grid,
            &Room {
                seed_row: 4,
                seed_col: 4,
                size_rows: 2,
                size_cols: 2,
            },
        );
        assert_eq!(free_set(&grid), vec![(3, 3), (3, 4), (4, 3), (4, 4)]);
    }

    #[test]
    fn room_clipped_at_origin() {
        let mut grid = GridMap::new_occupied(8, 8).unwrap();
        carve_room(
            &mut grid,
            &Room {
                seed_row: 0,
                seed_col: 0,
                size_rows: 4,
                size_cols: 4,
            },
        );
        assert_eq!(free_set(&grid), vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn unit_room_frees_only_seed() {
        let mut grid = GridMap::new_occupied(8, 8).unwrap();
        carve_room(
            &mut grid,
            &Room {
                seed_row: 2,
                seed_col: 5,
                size_rows: 1,
                size_cols: 1,
            },
        );
        assert_eq!(free_set(&grid), vec![(2, 5)]);
    }

    #[test]
    fn corridor_vertical_first() {
        let mut grid = GridMap::new_occupied(8, 8).unwrap();
        let a = Cell::new(1, 1);
        let b = Cell::new(5, 7);
        carve_corridor(&mut grid, a, b, 1, Direction::VerticalFirst);
        let mut expected: Vec<(usize, usize)> = (1..=5).map(|r| (r, 1)).collect();
        expected.extend((1..=7).map(|c| (5, c)));
        expected.sort_unstable();
        expected.dedup();
        assert_eq!(free_set(&grid), expected);
        assert!(grid.is_free(a) && grid.is_free(b));
    }

    #[test]
    fn corridor_horizontal_first() {
        let mut grid = GridMap::new_occupied(8, 8).unwrap();
        let a = Cell::new(1, 1);
        let b = Cell::new(5, 7);
        carve_corridor(&mut grid, a, b, 1, Direction::HorizontalFirst);
        let mut expected: Vec<(usize, usize)> = (1..=7).map(|c| (1, c)).collect();
        expected.extend((1..=5).map(|r| (r, 7)));
        expected.sort_unstable();
        expected.dedup();
        assert_eq!(free_set(&grid), expected);
        assert!(grid.is_free(a) && grid.is_free(b));
    }

    #[test]
    fn degenerate_corridor_is_a_cross() {
        let mut grid = GridMap::new_occupied(8, 8).unwrap();
        let p = Cell::new(3, 3);
        carve_corridor(&mut grid, p, p, 3, Direction::VerticalFirst);
        assert_eq!(
            free_set(&grid),
            vec![(2, 3), (3, 2), (3, 3), (3, 4), (4, 3)]
        );
    }

    #[test]
    fn generated_seeds_are_free() {
        for seed in 0..100 {
            let mut rng = SplitMix64::new(seed);
            let (grid, layout) = generate_map(&GenParams::default(), &mut rng).unwrap();
            for room in &layout.rooms {
                assert!(grid.is_free(room.seed()), "seed {} occupied", room.seed());
            }
        }
    }

    #[test]
    fn carving_is_monotone() {
        // Re-running the carve sequence over a copy never re-occupies
        // anything: free count only grows along the procedure.
        let params = GenParams::default();
        let mut rng = SplitMix64::new(11);
        let (_, layout) = generate_map(&params, &mut rng).unwrap();

        let mut grid = GridMap::new_occupied(params.rows, params.cols).unwrap();
        let mut last_free = 0;
        for room in &layout.rooms {
            carve_room(&mut grid, room);
            let free = grid.free_cells();
            assert!(free >= last_free);
            last_free = free;
        }
        for (pair, direction) in layout.rooms.windows(2).zip(&layout.directions) {
            if let Some(direction) = *direction {
                carve_corridor(
                    &mut grid,
                    pair[0].seed(),
                    pair[1].seed(),
                    layout.tunnel_width,
                    direction,
                );
                let free = grid.free_cells();
                assert!(free >= last_free);
                last_free = free;
            }
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let params = GenParams::default();
        let (grid_a, layout_a) = generate_map(&params, &mut SplitMix64::new(42)).unwrap();
        let (grid_b, layout_b) = generate_map(&params, &mut SplitMix64::new(42)).unwrap();
        assert_eq!(layout_a, layout_b);
        assert!(grid_a == grid_b);
    }

    #[test]
    fn invalid_params_propagate() {
        let params = GenParams {
            tunnel: IntRange::new(5, 3),
            ..GenParams::default()
        };
        assert!(generate_map(&params, &mut SplitMix64::new(0)).is_err());
    }

    #[test]
    fn free_fraction_in_open_interval() {
        let params = GenParams::default();
        for seed in 0..50 {
            let (grid, _) = generate_map(&params, &mut SplitMix64::new(seed)).unwrap();
            let f = grid.free_fraction();
            assert!(f > 0.0 && f < 1.0, "free fraction {f} out of (0,1)");
        }
    }
}

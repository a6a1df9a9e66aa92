//! Random map layouts: the realized draws behind one generated map.

use crate::grid::Cell;
use crate::params::GenParams;
use crate::rng::UniformRng;

/// One rectangular room: the seed cell plus the extent carved around it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Room {
    pub seed_row: usize,
    pub seed_col: usize,
    pub size_rows: usize,
    pub size_cols: usize,
}

impl Room {
    pub fn seed(&self) -> Cell {
        Cell::new(self.seed_row, self.seed_col)
    }
}

/// Which leg of an L-corridor is carved first, starting from room A.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Horizontal band at A's row first, vertical band at B's column second.
    HorizontalFirst = 0,
    /// Vertical band at A's column first, horizontal band at B's row second.
    VerticalFirst = 1,
}

impl Direction {
    pub(crate) fn from_token(token: u64) -> Self {
        if token == 1 {
            Direction::VerticalFirst
        } else {
            Direction::HorizontalFirst
        }
    }

    pub fn as_int(self) -> i64 {
        self as i64
    }
}

/// The realized random draws for one map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapLayout {
    /// Corridor width shared by every corridor of the map.
    pub tunnel_width: usize,
    pub rooms: Vec<Room>,
    /// Per consecutive room pair: whether a corridor was carved.
    pub connected: Vec<bool>,
    /// Corridor orientation per pair; `None` exactly where `connected` is false.
    pub directions: Vec<Option<Direction>>,
}

impl MapLayout {
    pub fn n_rooms(&self) -> usize {
        self.rooms.len()
    }

    /// Room seed cells in room order.
    pub fn seeds(&self) -> Vec<Cell> {
        self.rooms.iter().map(Room::seed).collect()
    }
}

/// Samples a layout with the fixed draw order:
///
/// 1. room count, 2. tunnel width, 3. per room: seed row, seed col,
/// row extent, col extent, 4. per consecutive pair: a connect token uniform
/// over `{0..9}`, then one direction bit only when the pair connects.
///
/// At the default skip probability of 1/10 a pair is skipped exactly when
/// its token is 1. Other settings widen that window in tenths, wrapping to
/// cover all ten tokens at `round(10 * p) == 10`.
///
/// Callers must pass validated params; `generate_map` does.
pub fn sample_map_layout(params: &GenParams, rng: &mut impl UniformRng) -> MapLayout {
    debug_assert!(params.validate().is_ok());

    let n_rooms = rng.uniform_range(params.room_count.min as u64, params.room_count.max as u64);
    let tunnel_width =
        rng.uniform_range(params.tunnel.min as u64, params.tunnel.max as u64) as usize;

    let rooms = (0..n_rooms)
        .map(|_| Room {
            seed_row: rng.uniform(params.rows as u64) as usize,
            seed_col: rng.uniform(params.cols as u64) as usize,
            size_rows: rng.uniform_range(params.room_rows.min as u64, params.room_rows.max as u64)
                as usize,
            size_cols: rng.uniform_range(params.room_cols.min as u64, params.room_cols.max as u64)
                as usize,
        })
        .collect::<Vec<_>>();

    let skip_window = params.skip_tenths();
    let mut connected = Vec::with_capacity(rooms.len() - 1);
    let mut directions = Vec::with_capacity(rooms.len() - 1);
    for _ in 0..rooms.len() - 1 {
        let token = rng.uniform(10);
        // Skip window {1..k}, wrapping to include token 0 at k == 10.
        let skip = (token + 9) % 10 < skip_window;
        connected.push(!skip);
        directions.push(if skip {
            None
        } else {
            Some(Direction::from_token(rng.uniform(2)))
        });
    }

    MapLayout {
        tunnel_width,
        rooms,
        connected,
        directions,
    }
}

//! Multi-waypoint routing through room seeds.

use crate::error::{Error, Result};
use crate::grid::{Cell, GridMap};
use crate::search::{shortest_path, Algorithm};

/// Concatenated search result over an ordered waypoint list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathResult {
    pub path_rows: Vec<usize>,
    pub path_cols: Vec<usize>,
    /// Expansions summed over every attempted segment, failed ones included.
    pub total_expansions: u64,
    /// Per consecutive waypoint pair: did the segment search succeed?
    pub segment_ok: Vec<bool>,
}

impl PathResult {
    /// Number of cells on the concatenated path.
    pub fn len(&self) -> usize {
        self.path_rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path_rows.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.path_rows
            .iter()
            .zip(&self.path_cols)
            .map(|(&r, &c)| Cell::new(r, c))
    }
}

/// Runs the selected search independently for every consecutive waypoint
/// pair. Successful segments are concatenated with the shared junction cell
/// deduplicated between consecutive successes; failed segments contribute no
/// cells but their expansions still count.
pub fn chain_path(grid: &GridMap, waypoints: &[Cell], algorithm: Algorithm) -> Result<PathResult> {
    if waypoints.len() < 2 {
        return Err(Error::InvalidQuery(format!(
            "chained search needs at least 2 waypoints, got {}",
            waypoints.len()
        )));
    }
    for &w in waypoints {
        if !grid.contains(w) {
            return Err(Error::InvalidQuery(format!("waypoint {w} out of bounds")));
        }
        if !grid.is_free(w) {
            return Err(Error::InvalidQuery(format!("waypoint {w} is occupied")));
        }
    }

    let mut result = PathResult::default();
    let mut previous_ok = false;
    for pair in waypoints.windows(2) {
        let outcome = shortest_path(grid, pair[0], pair[1], algorithm)?;
        result.total_expansions += outcome.expansions;
        match outcome.path {
            Some(path) => {
                let skip = usize::from(previous_ok);
                for cell in &path[skip..] {
                    result.path_rows.push(cell.row);
                    result.path_cols.push(cell.col);
                }
                result.segment_ok.push(true);
                previous_ok = true;
            }
            None => {
                result.segment_ok.push(false);
                previous_ok = false;
            }
        }
    }
    Ok(result)
}

//! Per-map dataset records: generation draws plus search characterization.

use crate::chain::chain_path;
use crate::error::Result;
use crate::grid::{Cell, GridMap};
use crate::layout::MapLayout;
use crate::matrix::connection_matrix;
use crate::search::Algorithm;

/// One row of the dataset CSV. Field order here is the column order of the
/// file. List fields hold plain integers so records survive a write/parse
/// round trip exactly; semantic checks live in the dataset validator.
#[derive(Clone, Debug, PartialEq)]
pub struct MapRecord {
    /// 0-based map index within the dataset.
    pub item: u64,
    /// `map_######`, the zero-padded item; also the PNG file stem.
    pub label: String,
    /// Meters per pixel.
    pub resolution: f64,
    /// Tunnel width drawn for this map.
    pub passage_size: i64,
    pub n_rooms: usize,
    pub seed_rows: Vec<i64>,
    pub seed_cols: Vec<i64>,
    pub size_rows: Vec<i64>,
    pub size_cols: Vec<i64>,
    /// Corridor direction per consecutive pair, -1 where not connected.
    pub directions: Vec<i64>,
    /// 1 where the consecutive pair is connected, else 0.
    pub connected: Vec<i64>,
    pub bfs_path_rows: Vec<i64>,
    pub bfs_path_cols: Vec<i64>,
    pub astar_path_rows: Vec<i64>,
    pub astar_path_cols: Vec<i64>,
    pub bfs_iterations: u64,
    pub astar_iterations: u64,
    /// Row-major n x n distance matrix from the BFS characterization.
    pub bfs_conn: Vec<i64>,
    /// Row-major n x n distance matrix from the A* characterization.
    pub astar_conn: Vec<i64>,
}

impl MapRecord {
    pub fn label_for(item: u64) -> String {
        format!("map_{item:06}")
    }

    pub fn png_name(&self) -> String {
        format!("{}.png", self.label)
    }

    /// Room seed cells, if every coordinate is a valid non-negative index.
    pub fn seeds(&self) -> Option<Vec<Cell>> {
        self.seed_rows
            .iter()
            .zip(&self.seed_cols)
            .map(|(&r, &c)| {
                if r >= 0 && c >= 0 {
                    Some(Cell::new(r as usize, c as usize))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Length rules every row must satisfy, used by the CSV parser.
    pub(crate) fn structural_check(&self) -> std::result::Result<(), String> {
        let n = self.n_rooms;
        if n < 1 {
            return Err("n_rooms must be at least 1".into());
        }
        let pairs = n - 1;
        let checks = [
            ("seed_rows", self.seed_rows.len(), n),
            ("seed_cols", self.seed_cols.len(), n),
            ("size_rows", self.size_rows.len(), n),
            ("size_cols", self.size_cols.len(), n),
            ("directions", self.directions.len(), pairs),
            ("connected", self.connected.len(), pairs),
            ("bfs_conn", self.bfs_conn.len(), n * n),
            ("astar_conn", self.astar_conn.len(), n * n),
        ];
        for (name, got, want) in checks {
            if got != want {
                return Err(format!("{name} has {got} entries, expected {want}"));
            }
        }
        if self.bfs_path_rows.len() != self.bfs_path_cols.len() {
            return Err("bfs path row/col lists differ in length".into());
        }
        if self.astar_path_rows.len() != self.astar_path_cols.len() {
            return Err("astar path row/col lists differ in length".into());
        }
        if let Some(bad) = self.connected.iter().find(|&&v| v != 0 && v != 1) {
            return Err(format!("connected flag {bad} is not 0 or 1"));
        }
        if let Some(bad) = self.directions.iter().find(|&&v| !(-1..=1).contains(&v)) {
            return Err(format!("direction {bad} is not -1, 0 or 1"));
        }
        Ok(())
    }
}

/// Characterizes a generated map: chained BFS and A* paths through the room
/// seeds in order, expansion totals, and both connection matrices.
pub fn characterize_map(
    grid: &GridMap,
    layout: &MapLayout,
    item: u64,
    resolution: f64,
) -> Result<MapRecord> {
    let seeds = layout.seeds();
    let bfs = chain_path(grid, &seeds, Algorithm::Bfs)?;
    let astar = chain_path(grid, &seeds, Algorithm::Astar)?;
    let bfs_conn = connection_matrix(grid, &seeds, Algorithm::Bfs)?;
    let astar_conn = connection_matrix(grid, &seeds, Algorithm::Astar)?;

    let as_i64 = |v: &[usize]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    Ok(MapRecord {
        item,
        label: MapRecord::label_for(item),
        resolution,
        passage_size: layout.tunnel_width as i64,
        n_rooms: layout.n_rooms(),
        seed_rows: layout.rooms.iter().map(|r| r.seed_row as i64).collect(),
        seed_cols: layout.rooms.iter().map(|r| r.seed_col as i64).collect(),
        size_rows: layout.rooms.iter().map(|r| r.size_rows as i64).collect(),
        size_cols: layout.rooms.iter().map(|r| r.size_cols as i64).collect(),
        directions: layout
            .directions
            .iter()
            .map(|d| d.map_or(-1, |dir| dir.as_int()))
            .collect(),
        connected: layout.connected.iter().map(|&c| i64::from(c)).collect(),
        bfs_path_rows: as_i64(&bfs.path_rows),
        bfs_path_cols: as_i64(&bfs.path_cols),
        astar_path_rows: as_i64(&astar.path_rows),
        astar_path_cols: as_i64(&astar.path_cols),
        bfs_iterations: bfs.total_expansions,
        astar_iterations: astar.total_expansions,
        bfs_conn: bfs_conn.entries().to_vec(),
        astar_conn: astar_conn.entries().to_vec(),
    })
}

//! Dataset validation.
//!
//! Re-checks everything a pristine dataset guarantees: files present, PNGs
//! decodable and the right size, record fields inside their configured
//! ranges, recorded paths replayable on the decoded grids, characterization
//! reproducible from the images, matrix properties, the content digest, and
//! (for dataset-scale corpora) the connection-rate and room-count
//! statistics. All violations are collected; validation never stops at the
//! first problem.

use std::fs;
use std::path::Path;

use crate::chain::chain_path;
use crate::dataset::{compute_content_digest, DatasetManifest, CSV_FILE, MANIFEST_FILE};
use crate::csvio::parse_dataset_csv;
use crate::grid::{Cell, GridMap};
use crate::matrix::{connection_matrix, ConnectionMatrix};
use crate::png::decode_png;
use crate::record::MapRecord;
use crate::search::Algorithm;

/// One rule violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationError {
    /// Map label, or `-` for dataset-level problems.
    pub label: String,
    pub rule: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub maps_checked: u64,
    pub errors: Vec<ValidationError>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.errors.is_empty()
    }

    fn push(&mut self, label: impl Into<String>, rule: &'static str, detail: impl Into<String>) {
        self.errors.push(ValidationError {
            label: label.into(),
            rule,
            detail: detail.into(),
        });
    }
}

/// Validates the dataset stored in `dir` against every rule it is supposed
/// to satisfy. Missing or malformed files become report entries.
pub fn validate_dataset(dir: &Path) -> ValidationReport {
    let mut report = ValidationReport::default();

    let manifest = match DatasetManifest::read(&dir.join(MANIFEST_FILE)) {
        Ok(manifest) => Some(manifest),
        Err(e) => {
            report.push("-", "manifest", format!("cannot load manifest: {e}"));
            None
        }
    };

    let csv_name = manifest
        .as_ref()
        .map(|m| m.csv_path.clone())
        .unwrap_or_else(|| CSV_FILE.to_string());
    let records = match parse_dataset_csv(&dir.join(&csv_name)) {
        Ok(records) => records,
        Err(e) => {
            report.push("-", "csv", format!("cannot load {csv_name}: {e}"));
            return report;
        }
    };

    if let Some(m) = &manifest {
        if m.count != records.len() as u64 {
            report.push(
                "-",
                "count",
                format!("manifest says {} maps, CSV has {}", m.count, records.len()),
            );
        }
    }

    let mut seen_labels = std::collections::HashSet::new();
    for (index, record) in records.iter().enumerate() {
        report.maps_checked += 1;
        check_identity(&mut report, record, index as u64, &mut seen_labels);
        let params = manifest.as_ref().map(|m| &m.params);
        check_record(&mut report, dir, record, params);
    }

    if let Some(m) = &manifest {
        match compute_content_digest(dir, m) {
            Ok(digest) if digest == m.content_digest => {}
            Ok(digest) => report.push(
                "-",
                "digest",
                format!("content digest {digest} does not match manifest {}", m.content_digest),
            ),
            Err(e) => report.push("-", "digest", format!("cannot recompute digest: {e}")),
        }
        check_statistics(&mut report, m, &records);
    }

    report
}

fn check_identity(
    report: &mut ValidationReport,
    record: &MapRecord,
    index: u64,
    seen: &mut std::collections::HashSet<String>,
) {
    if record.item != index {
        report.push(
            record.label.clone(),
            "item-order",
            format!("item {} at row position {index}", record.item),
        );
    }
    if record.label != MapRecord::label_for(record.item) {
        report.push(
            record.label.clone(),
            "label-format",
            format!("label does not encode item {}", record.item),
        );
    }
    if !seen.insert(record.label.clone()) {
        report.push(record.label.clone(), "label-unique", "duplicate label");
    }
}

fn check_record(
    report: &mut ValidationReport,
    dir: &Path,
    record: &MapRecord,
    params: Option<&crate::params::GenParams>,
) {
    let label = record.label.clone();
    let n = record.n_rooms;

    // Cross-field rules that need no grid.
    if record.bfs_conn != record.astar_conn {
        report.push(label.clone(), "conn-agreement", "BFS and A* matrices differ");
    }
    for q in 0..n.saturating_sub(1) {
        if record.connected[q] == 1 && record.bfs_conn[q * n + q + 1] < 0 {
            report.push(
                label.clone(),
                "connected-consistency",
                format!("pair {q} is connected but has no path"),
            );
        }
        if (record.connected[q] == 1) != (record.directions[q] >= 0) {
            report.push(
                label.clone(),
                "direction-consistency",
                format!("pair {q}: direction sentinel disagrees with connected flag"),
            );
        }
    }
    for (name, entries) in [("bfs_conn", &record.bfs_conn), ("astar_conn", &record.astar_conn)] {
        match ConnectionMatrix::from_entries(n, entries.clone()) {
            Ok(matrix) => {
                if !matrix.is_symmetric() {
                    report.push(label.clone(), "matrix-symmetry", format!("{name} is asymmetric"));
                }
                if !matrix.diagonal_is_zero() {
                    report.push(label.clone(), "matrix-diagonal", format!("{name} has nonzero diagonal"));
                }
                if !matrix.triangle_inequality_holds() {
                    report.push(
                        label.clone(),
                        "matrix-triangle",
                        format!("{name} violates the triangle inequality"),
                    );
                }
            }
            Err(e) => report.push(label.clone(), "matrix-shape", e.to_string()),
        }
    }

    // Grid-backed rules.
    let png_path = dir.join(record.png_name());
    let bytes = match fs::read(&png_path) {
        Ok(bytes) => bytes,
        Err(e) => {
            report.push(label, "png-missing", format!("{}: {e}", png_path.display()));
            return;
        }
    };
    let grid = match decode_png(&bytes) {
        Ok(grid) => grid,
        Err(e) => {
            report.push(label, "png-decode", e.to_string());
            return;
        }
    };

    if let Some(params) = params {
        if grid.rows() != params.rows || grid.cols() != params.cols {
            report.push(
                label.clone(),
                "grid-size",
                format!(
                    "decoded {}x{}, expected {}x{}",
                    grid.rows(),
                    grid.cols(),
                    params.rows,
                    params.cols
                ),
            );
        }
        check_ranges(report, record, params, &grid);
    }

    let seeds = match record.seeds() {
        Some(seeds)
            if seeds.iter().all(|&s| grid.contains(s) && grid.is_free(s)) && seeds.len() >= 2 =>
        {
            seeds
        }
        _ => {
            report.push(
                label,
                "seed-validity",
                "seed list has out-of-range, occupied, or too few entries",
            );
            return;
        }
    };

    for (algo_name, rows, cols, conn) in [
        ("bfs", &record.bfs_path_rows, &record.bfs_path_cols, &record.bfs_conn),
        ("astar", &record.astar_path_rows, &record.astar_path_cols, &record.astar_conn),
    ] {
        replay_path(report, &label, algo_name, rows, cols, conn, &seeds, &grid);
    }

    recompute_characterization(report, &label, record, &seeds, &grid);
}

fn check_ranges(
    report: &mut ValidationReport,
    record: &MapRecord,
    params: &crate::params::GenParams,
    grid: &GridMap,
) {
    let label = record.label.clone();
    let mut bad = |what: String| report.push(label.clone(), "range-compliance", what);

    if record.resolution != params.resolution {
        bad(format!(
            "resolution {} differs from configured {}",
            record.resolution, params.resolution
        ));
    }
    if record.passage_size < 0 || !params.tunnel.contains(record.passage_size as usize) {
        bad(format!("passage size {} outside {}", record.passage_size, params.tunnel));
    }
    if !params.room_count.contains(record.n_rooms) {
        bad(format!("{} rooms outside {}", record.n_rooms, params.room_count));
    }
    let in_range = |values: &[i64], range: &crate::params::IntRange| {
        values.iter().all(|&v| v >= 0 && range.contains(v as usize))
    };
    if !in_range(&record.size_rows, &params.room_rows) {
        bad("room row extent outside configured range".into());
    }
    if !in_range(&record.size_cols, &params.room_cols) {
        bad("room col extent outside configured range".into());
    }
    let seeds_ok = record
        .seed_rows
        .iter()
        .zip(&record.seed_cols)
        .all(|(&r, &c)| {
            r >= 0 && c >= 0 && (r as usize) < grid.rows() && (c as usize) < grid.cols()
        });
    if !seeds_ok {
        bad("seed outside the grid".into());
    }
}

#[allow(clippy::too_many_arguments)]
fn replay_path(
    report: &mut ValidationReport,
    label: &str,
    algo_name: &str,
    rows: &[i64],
    cols: &[i64],
    conn: &[i64],
    seeds: &[Cell],
    grid: &GridMap,
) {
    let mut cells = Vec::with_capacity(rows.len());
    for (&r, &c) in rows.iter().zip(cols) {
        if r < 0 || c < 0 {
            report.push(label, "path-validity", format!("{algo_name} path has negative coordinate"));
            return;
        }
        let cell = Cell::new(r as usize, c as usize);
        if !grid.contains(cell) {
            report.push(label, "path-validity", format!("{algo_name} path leaves the grid at {cell}"));
            return;
        }
        if !grid.is_free(cell) {
            report.push(
                label,
                "path-validity",
                format!("{algo_name} path crosses an occupied cell at {cell}"),
            );
            return;
        }
        cells.push(cell);
    }

    // Junction-deduplicated concatenation: steps within a segment are
    // 4-adjacent; a failed middle segment may introduce one jump, so only
    // flag non-adjacent steps when every consecutive pair is reachable.
    let n = seeds.len();
    let all_reachable = (0..n - 1).all(|q| conn[q * n + q + 1] >= 0);
    if all_reachable {
        for pair in cells.windows(2) {
            if pair[0].manhattan(pair[1]) != 1 {
                report.push(
                    label,
                    "path-validity",
                    format!("{algo_name} path jumps from {} to {}", pair[0], pair[1]),
                );
                return;
            }
        }
        if cells.first() != seeds.first() || cells.last() != seeds.last() {
            report.push(
                label,
                "path-validity",
                format!("{algo_name} path endpoints do not match the first and last seeds"),
            );
        }
    }
}

fn recompute_characterization(
    report: &mut ValidationReport,
    label: &str,
    record: &MapRecord,
    seeds: &[Cell],
    grid: &GridMap,
) {
    let as_i64 = |v: &[usize]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    for (algorithm, name, rows, cols, iterations, conn) in [
        (
            Algorithm::Bfs,
            "bfs",
            &record.bfs_path_rows,
            &record.bfs_path_cols,
            record.bfs_iterations,
            &record.bfs_conn,
        ),
        (
            Algorithm::Astar,
            "astar",
            &record.astar_path_rows,
            &record.astar_path_cols,
            record.astar_iterations,
            &record.astar_conn,
        ),
    ] {
        match chain_path(grid, seeds, algorithm) {
            Ok(result) => {
                if &as_i64(&result.path_rows) != rows || &as_i64(&result.path_cols) != cols {
                    report.push(label, "recompute-path", format!("{name} path differs from the stored grid"));
                }
                if result.total_expansions != iterations {
                    report.push(
                        label,
                        "recompute-iterations",
                        format!(
                            "{name} iterations {} recomputed as {}",
                            iterations, result.total_expansions
                        ),
                    );
                }
            }
            Err(e) => report.push(label, "recompute-failed", format!("{name} chain: {e}")),
        }
        match connection_matrix(grid, seeds, algorithm) {
            Ok(matrix) => {
                if matrix.entries() != conn.as_slice() {
                    report.push(label, "recompute-conn", format!("{name} matrix differs from the stored grid"));
                }
            }
            Err(e) => report.push(label, "recompute-failed", format!("{name} matrix: {e}")),
        }
    }
}

fn check_statistics(
    report: &mut ValidationReport,
    manifest: &DatasetManifest,
    records: &[MapRecord],
) {
    let count = records.len() as f64;
    if records.len() < 10_000 {
        return;
    }

    if (manifest.params.skip_probability - 0.1).abs() < 1e-9 {
        let flags: u64 = records.iter().map(|r| r.connected.len() as u64).sum();
        let set: u64 = records
            .iter()
            .map(|r| r.connected.iter().filter(|&&v| v == 1).count() as u64)
            .sum();
        let fraction = set as f64 / flags as f64;
        if !(0.89..=0.91).contains(&fraction) {
            report.push(
                "-",
                "stat-connected",
                format!("connected fraction {fraction:.4} outside [0.89, 0.91]"),
            );
        }
    }

    let range = manifest.params.room_count;
    let span = range.span() as f64;
    let p = 1.0 / span;
    let expected = count * p;
    let sigma = (count * p * (1.0 - p)).sqrt();
    for value in range.min..=range.max {
        let observed = records.iter().filter(|r| r.n_rooms == value).count() as f64;
        if (observed - expected).abs() > 5.0 * sigma {
            report.push(
                "-",
                "stat-rooms",
                format!(
                    "{value} rooms observed {observed} times, expected {expected:.0} (5 sigma = {:.0})",
                    5.0 * sigma
                ),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::generate_dataset;
    use crate::params::GenParams;

    fn params() -> GenParams {
        GenParams {
            rows: 24,
            cols: 24,
            ..GenParams::default()
        }
    }

    #[test]
    fn pristine_dataset_is_clean() {
        let dir = tempfile::tempdir().unwrap();
        generate_dataset(dir.path(), &params(), 12, 3).unwrap();
        let report = validate_dataset(dir.path());
        assert_eq!(report.maps_checked, 12);
        assert!(report.is_clean(), "unexpected errors: {:?}", report.errors);
    }

    #[test]
    fn missing_manifest_is_reported() {
        let dir = tempfile::tempdir().unwrap();
        generate_dataset(dir.path(), &params(), 2, 3).unwrap();
        fs::remove_file(dir.path().join(MANIFEST_FILE)).unwrap();
        let report = validate_dataset(dir.path());
        assert!(report.errors.iter().any(|e| e.rule == "manifest"));
    }

    #[test]
    fn missing_png_is_reported() {
        let dir = tempfile::tempdir().unwrap();
        generate_dataset(dir.path(), &params(), 3, 3).unwrap();
        fs::remove_file(dir.path().join("map_000001.png")).unwrap();
        let report = validate_dataset(dir.path());
        assert!(report
            .errors
            .iter()
            .any(|e| e.rule == "png-missing" && e.label == "map_000001"));
    }

    #[test]
    fn inconsistent_connected_flag_is_flagged() {
        let dir = tempfile::tempdir().unwrap();
        generate_dataset(dir.path(), &params(), 3, 3).unwrap();
        // Claim pair 0 of map 1 is connected but unreachable.
        let csv_path = dir.path().join(CSV_FILE);
        let mut records = parse_dataset_csv(&csv_path).unwrap();
        let n = records[1].n_rooms;
        records[1].connected[0] = 1;
        records[1].directions[0] = 0;
        records[1].bfs_conn[1] = -1;
        records[1].bfs_conn[n] = -1;
        records[1].astar_conn[1] = -1;
        records[1].astar_conn[n] = -1;
        crate::csvio::write_dataset_csv(&records, &csv_path).unwrap();
        let report = validate_dataset(dir.path());
        assert!(report
            .errors
            .iter()
            .any(|e| e.rule == "connected-consistency" && e.label == "map_000001"));
    }

    #[test]
    fn tampered_path_pixel_is_flagged() {
        let dir = tempfile::tempdir().unwrap();
        let no_skip = GenParams {
            skip_probability: 0.0,
            ..params()
        };
        generate_dataset(dir.path(), &no_skip, 2, 11).unwrap();
        let records = parse_dataset_csv(&dir.path().join(CSV_FILE)).unwrap();
        let record = &records[1];

        // Flip one recorded BFS path cell to occupied, preferring a
        // non-seed cell.
        let seeds = record.seeds().unwrap();
        let png_path = dir.path().join(record.png_name());
        let mut grid = decode_png(&fs::read(&png_path).unwrap()).unwrap();
        let target = record
            .bfs_path_rows
            .iter()
            .zip(&record.bfs_path_cols)
            .map(|(&r, &c)| Cell::new(r as usize, c as usize))
            .find(|cell| !seeds.contains(cell))
            .expect("path longer than the seed list");
        grid.set_occupied(target);
        fs::write(&png_path, crate::png::encode_png(&grid)).unwrap();

        let report = validate_dataset(dir.path());
        assert!(report
            .errors
            .iter()
            .any(|e| e.label == record.label && e.rule == "path-validity"));
        assert!(report.errors.iter().any(|e| e.rule == "digest"));
    }
}

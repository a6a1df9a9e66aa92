//! Dataset CSV format.
//!
//! One standard comma-delimited UTF-8 file with a fixed header. Scalar
//! columns are written bare; list and matrix columns are space-separated
//! integers inside one double-quoted cell, matrices row-major. The file
//! ends with a trailing newline. `parse` is the exact inverse of `write`.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::record::MapRecord;

pub const CSV_HEADER: &str = "item,label,resolution,passage_size,n_rooms,seed_rows,seed_cols,\
size_rows,size_cols,directions,connected,bfs_path_rows,bfs_path_cols,astar_path_rows,\
astar_path_cols,bfs_iterations,astar_iterations,bfs_conn,astar_conn";

const COLUMNS: usize = 19;

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Serializes records to the CSV text, header first, one line per record.
pub fn records_to_csv(records: &[MapRecord]) -> String {
    let mut out = String::with_capacity(64 + records.len() * 256);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},\"{}\",\"{}\",\"{}\",\"{}\",\"{}\",\"{}\",\"{}\",\"{}\",\"{}\",\"{}\",{},{},\"{}\",\"{}\"\n",
            r.item,
            r.label,
            r.resolution,
            r.passage_size,
            r.n_rooms,
            join(&r.seed_rows),
            join(&r.seed_cols),
            join(&r.size_rows),
            join(&r.size_cols),
            join(&r.directions),
            join(&r.connected),
            join(&r.bfs_path_rows),
            join(&r.bfs_path_cols),
            join(&r.astar_path_rows),
            join(&r.astar_path_cols),
            r.bfs_iterations,
            r.astar_iterations,
            join(&r.bfs_conn),
            join(&r.astar_conn),
        ));
    }
    out
}

pub fn write_dataset_csv(records: &[MapRecord], path: &Path) -> Result<()> {
    fs::write(path, records_to_csv(records))?;
    Ok(())
}

pub fn parse_dataset_csv(path: &Path) -> Result<Vec<MapRecord>> {
    let text = fs::read_to_string(path)?;
    parse_csv_text(&text)
}

/// Parses CSV text produced by [`records_to_csv`] (or equivalent), re-checking
/// the structural rules of every row. Errors name the offending line and
/// column.
pub fn parse_csv_text(text: &str) -> Result<Vec<MapRecord>> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::schema(1, "header", "file is empty"))?;
    if header != CSV_HEADER {
        return Err(Error::schema(1, "header", "header does not match the dataset schema"));
    }

    let mut records = Vec::new();
    for (index, line) in lines {
        let line_no = index + 1;
        if line.is_empty() {
            continue; // tolerate a blank trailing line
        }
        records.push(parse_row(line, line_no)?);
    }
    Ok(records)
}

/// Splits one CSV line into cells, honoring double quotes. A doubled quote
/// inside a quoted cell reads as a literal quote.
fn split_line(line: &str, line_no: usize) -> Result<Vec<String>> {
    let mut cells = Vec::new();
    let mut current = String::new();
    let mut chars = line.chars().peekable();
    let mut quoted = false;
    while let Some(ch) = chars.next() {
        match ch {
            '"' if quoted => {
                if chars.peek() == Some(&'"') {
                    chars.next();
                    current.push('"');
                } else {
                    quoted = false;
                }
            }
            '"' => quoted = true,
            ',' if !quoted => {
                cells.push(std::mem::take(&mut current));
            }
            _ => current.push(ch),
        }
    }
    if quoted {
        return Err(Error::schema(line_no, "-", "unterminated quoted cell"));
    }
    cells.push(current);
    Ok(cells)
}

struct RowReader<'a> {
    cells: Vec<String>,
    next: usize,
    line_no: usize,
    names: &'a [&'a str],
}

impl RowReader<'_> {
    fn take(&mut self) -> (&str, String) {
        let name = self.names[self.next];
        let cell = self.cells[self.next].clone();
        self.next += 1;
        (name, cell)
    }

    fn scalar<T: std::str::FromStr>(&mut self) -> Result<T> {
        let line_no = self.line_no;
        let (name, cell) = self.take();
        cell.parse::<T>()
            .map_err(|_| Error::schema(line_no, name, format!("cannot parse `{cell}`")))
    }

    fn string(&mut self) -> String {
        self.take().1
    }

    fn int_list(&mut self) -> Result<Vec<i64>> {
        let line_no = self.line_no;
        let (name, cell) = self.take();
        cell.split_whitespace()
            .map(|token| {
                token.parse::<i64>().map_err(|_| {
                    Error::schema(line_no, name, format!("non-integer token `{token}`"))
                })
            })
            .collect()
    }
}

fn parse_row(line: &str, line_no: usize) -> Result<MapRecord> {
    const NAMES: [&str; COLUMNS] = [
        "item",
        "label",
        "resolution",
        "passage_size",
        "n_rooms",
        "seed_rows",
        "seed_cols",
        "size_rows",
        "size_cols",
        "directions",
        "connected",
        "bfs_path_rows",
        "bfs_path_cols",
        "astar_path_rows",
        "astar_path_cols",
        "bfs_iterations",
        "astar_iterations",
        "bfs_conn",
        "astar_conn",
    ];
    let cells = split_line(line, line_no)?;
    if cells.len() != COLUMNS {
        return Err(Error::schema(
            line_no,
            "-",
            format!("expected {COLUMNS} columns, found {}", cells.len()),
        ));
    }
    let mut row = RowReader {
        cells,
        next: 0,
        line_no,
        names: &NAMES,
    };

    let record = MapRecord {
        item: row.scalar()?,
        label: row.string(),
        resolution: row.scalar()?,
        passage_size: row.scalar()?,
        n_rooms: row.scalar()?,
        seed_rows: row.int_list()?,
        seed_cols: row.int_list()?,
        size_rows: row.int_list()?,
        size_cols: row.int_list()?,
        directions: row.int_list()?,
        connected: row.int_list()?,
        bfs_path_rows: row.int_list()?,
        bfs_path_cols: row.int_list()?,
        astar_path_rows: row.int_list()?,
        astar_path_cols: row.int_list()?,
        bfs_iterations: row.scalar()?,
        astar_iterations: row.scalar()?,
        bfs_conn: row.int_list()?,
        astar_conn: row.int_list()?,
    };
    record
        .structural_check()
        .map_err(|detail| Error::schema(line_no, "-", detail))?;
    Ok(record)
}

//! Batch dataset production: one PNG per map, one CSV of records, and a
//! reproducibility manifest.
//!
//! Per-map RNG states are derived from the master seed and the item index,
//! so generation order (or parallelism) never changes the output bytes.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::csvio::records_to_csv;
use crate::error::{Error, Result};
use crate::generate::generate_map;
use crate::params::{GenParams, IntRange};
use crate::png::encode_png;
use crate::record::{characterize_map, MapRecord};
use crate::rng::SplitMix64;

pub const CSV_FILE: &str = "maps.csv";
pub const MANIFEST_FILE: &str = "manifest.txt";

/// Reproducibility envelope for one generated dataset: everything needed to
/// regenerate it bit-exactly, plus the digest to check that it happened.
#[derive(Clone, Debug, PartialEq)]
pub struct DatasetManifest {
    pub master_seed: u64,
    pub params: GenParams,
    pub count: u64,
    /// CSV file name, relative to the dataset directory.
    pub csv_path: String,
    /// PNG file names in item order, relative to the dataset directory.
    pub map_files: Vec<String>,
    /// Hex SHA-256 over every PNG's bytes in item order, then the CSV bytes.
    pub content_digest: String,
}

impl DatasetManifest {
    pub fn to_text(&self) -> String {
        format!(
            "master_seed={}\ncount={}\nrows={}\ncols={}\nroom_count={}\nroom_rows={}\n\
             room_cols={}\ntunnel={}\nskip_probability={}\nresolution={}\ncsv={}\n\
             content_digest={}\n",
            self.master_seed,
            self.count,
            self.params.rows,
            self.params.cols,
            self.params.room_count,
            self.params.room_rows,
            self.params.room_cols,
            self.params.tunnel,
            self.params.skip_probability,
            self.params.resolution,
            self.csv_path,
            self.content_digest,
        )
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut get = |key: &str| -> Result<String> {
            text.lines()
                .find_map(|line| line.strip_prefix(&format!("{key}=")))
                .map(str::to_owned)
                .ok_or_else(|| Error::Format(format!("manifest is missing `{key}`")))
        };
        let scalar = |v: String, key: &str| -> Result<u64> {
            v.parse()
                .map_err(|_| Error::Format(format!("manifest `{key}` is not an integer: {v}")))
        };
        let float = |v: String, key: &str| -> Result<f64> {
            v.parse()
                .map_err(|_| Error::Format(format!("manifest `{key}` is not a number: {v}")))
        };
        let range = |v: String, key: &str| -> Result<IntRange> {
            v.parse()
                .map_err(|_| Error::Format(format!("manifest `{key}` is not MIN:MAX: {v}")))
        };

        let master_seed = scalar(get("master_seed")?, "master_seed")?;
        let count = scalar(get("count")?, "count")?;
        let params = GenParams {
            rows: scalar(get("rows")?, "rows")? as usize,
            cols: scalar(get("cols")?, "cols")? as usize,
            room_count: range(get("room_count")?, "room_count")?,
            room_rows: range(get("room_rows")?, "room_rows")?,
            room_cols: range(get("room_cols")?, "room_cols")?,
            tunnel: range(get("tunnel")?, "tunnel")?,
            skip_probability: float(get("skip_probability")?, "skip_probability")?,
            resolution: float(get("resolution")?, "resolution")?,
        };
        Ok(Self {
            master_seed,
            params,
            count,
            csv_path: get("csv")?,
            map_files: (0..count)
                .map(|i| format!("{}.png", MapRecord::label_for(i)))
                .collect(),
            content_digest: get("content_digest")?,
        })
    }
}

/// Generates one dataset item: map, characterization, and encoded PNG.
fn build_item(params: &GenParams, master_seed: u64, item: u64) -> Result<(Vec<u8>, MapRecord)> {
    let mut rng = SplitMix64::for_item(master_seed, item);
    let (grid, layout) = generate_map(params, &mut rng)?;
    let record = characterize_map(&grid, &layout, item, params.resolution)?;
    Ok((encode_png(&grid), record))
}

/// Generates a full dataset under `out_dir` using all cores.
pub fn generate_dataset(
    out_dir: &Path,
    params: &GenParams,
    count: u64,
    master_seed: u64,
) -> Result<DatasetManifest> {
    generate_dataset_with(out_dir, params, count, master_seed, true)
}

/// Generates a full dataset, serially when `parallel` is false. The output
/// bytes are identical either way.
pub fn generate_dataset_with(
    out_dir: &Path,
    params: &GenParams,
    count: u64,
    master_seed: u64,
    parallel: bool,
) -> Result<DatasetManifest> {
    params.validate()?;
    fs::create_dir_all(out_dir)?;

    let items: Vec<(Vec<u8>, MapRecord)> = if parallel {
        (0..count)
            .into_par_iter()
            .map(|item| build_item(params, master_seed, item))
            .collect::<Result<_>>()?
    } else {
        (0..count)
            .map(|item| build_item(params, master_seed, item))
            .collect::<Result<_>>()?
    };

    let mut emitted: Vec<PathBuf> = Vec::new();
    let result = write_outputs(out_dir, params, count, master_seed, &items, &mut emitted);
    if result.is_err() {
        for path in &emitted {
            let _ = fs::remove_file(path);
        }
    }
    result
}

fn write_outputs(
    out_dir: &Path,
    params: &GenParams,
    count: u64,
    master_seed: u64,
    items: &[(Vec<u8>, MapRecord)],
    emitted: &mut Vec<PathBuf>,
) -> Result<DatasetManifest> {
    let mut hasher = Sha256::new();
    let mut map_files = Vec::with_capacity(items.len());

    for (png, record) in items {
        let name = record.png_name();
        let path = out_dir.join(&name);
        fs::write(&path, png)?;
        emitted.push(path);
        hasher.update(png);
        map_files.push(name);
    }

    let records: Vec<MapRecord> = items.iter().map(|(_, r)| r.clone()).collect();
    let csv = records_to_csv(&records);
    let csv_path = out_dir.join(CSV_FILE);
    fs::write(&csv_path, &csv)?;
    emitted.push(csv_path);
    hasher.update(csv.as_bytes());

    let manifest = DatasetManifest {
        master_seed,
        params: params.clone(),
        count,
        csv_path: CSV_FILE.to_string(),
        map_files,
        content_digest: to_hex(&hasher.finalize()),
    };
    let manifest_path = out_dir.join(MANIFEST_FILE);
    manifest.write(&manifest_path)?;
    emitted.push(manifest_path);
    Ok(manifest)
}

/// Recomputes the content digest of a dataset directory from its files.
pub fn compute_content_digest(dir: &Path, manifest: &DatasetManifest) -> Result<String> {
    let mut hasher = Sha256::new();
    for name in &manifest.map_files {
        hasher.update(fs::read(dir.join(name))?);
    }
    hasher.update(fs::read(dir.join(&manifest.csv_path))?);
    Ok(to_hex(&hasher.finalize()))
}

fn to_hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

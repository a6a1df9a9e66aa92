//! Generation parameters and their validation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid::MAX_CELLS;

/// Inclusive integer interval, the shape of every ranged parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub min: usize,
    pub max: usize,
}

impl IntRange {
    pub const fn new(min: usize, max: usize) -> Self {
        Self { min, max }
    }

    /// Degenerate range holding a single value.
    pub const fn single(value: usize) -> Self {
        Self { min: value, max: value }
    }

    pub fn contains(&self, value: usize) -> bool {
        (self.min..=self.max).contains(&value)
    }

    /// Number of values in the range.
    pub fn span(&self) -> usize {
        self.max - self.min + 1
    }

    fn check(&self, name: &str, floor: usize) -> Result<()> {
        if self.min > self.max {
            return Err(Error::InvalidParameter(format!(
                "{name} range {self} is inverted"
            )));
        }
        if self.min < floor {
            return Err(Error::InvalidParameter(format!(
                "{name} range {self} must start at {floor} or above"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.min, self.max)
    }
}

/// Parses `min:max`, or a single value as shorthand for a degenerate range.
impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |part: &str| {
            part.trim().parse::<usize>().map_err(|_| {
                Error::InvalidParameter(format!("range `{s}` is not MIN:MAX or a single integer"))
            })
        };
        match s.split_once(':') {
            Some((lo, hi)) => Ok(Self::new(parse(lo)?, parse(hi)?)),
            None => Ok(Self::single(parse(s)?)),
        }
    }
}

/// Full parameter set for map generation.
///
/// `Default` is the published dataset configuration: 64x64 maps, 2 to 9
/// rooms of 14 to 33 pixels per side, tunnels 7 to 15 pixels wide, one in
/// ten connections skipped, 0.1 m per pixel.
#[derive(Clone, Debug, PartialEq)]
pub struct GenParams {
    pub rows: usize,
    pub cols: usize,
    pub room_count: IntRange,
    pub room_rows: IntRange,
    pub room_cols: IntRange,
    pub tunnel: IntRange,
    /// Probability that a consecutive room pair is left unconnected.
    /// Rounded to tenths: the connect token is uniform over {0..9} and a
    /// window of `round(10 * skip_probability)` token values skips.
    pub skip_probability: f64,
    /// Meters per pixel. Metadata only; never affects generation.
    pub resolution: f64,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            rows: 64,
            cols: 64,
            room_count: IntRange::new(2, 9),
            room_rows: IntRange::new(14, 33),
            room_cols: IntRange::new(14, 33),
            tunnel: IntRange::new(7, 15),
            skip_probability: 0.1,
            resolution: 0.1,
        }
    }
}

impl GenParams {
    pub fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::InvalidParameter(format!(
                "map size must be at least 1x1, got {}x{}",
                self.rows, self.cols
            )));
        }
        if self
            .rows
            .checked_mul(self.cols)
            .filter(|&n| n <= MAX_CELLS)
            .is_none()
        {
            return Err(Error::InvalidParameter(format!(
                "map {}x{} exceeds the {MAX_CELLS}-cell limit",
                self.rows, self.cols
            )));
        }
        self.room_count.check("room count", 2)?;
        self.room_rows.check("room rows", 1)?;
        self.room_cols.check("room cols", 1)?;
        self.tunnel.check("tunnel width", 1)?;
        if !self.skip_probability.is_finite()
            || self.skip_probability < 0.0
            || self.skip_probability >= 1.0
        {
            return Err(Error::InvalidParameter(format!(
                "skip probability {} must lie in [0, 1)",
                self.skip_probability
            )));
        }
        if !self.resolution.is_finite() || self.resolution <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "resolution {} must be positive",
                self.resolution
            )));
        }
        Ok(())
    }

    /// Skip window width in tenths: how many of the ten connect tokens mark
    /// a pair as unconnected.
    pub(crate) fn skip_tenths(&self) -> u64 {
        (self.skip_probability * 10.0).round() as u64
    }
}

//! PNG persistence for grids.
//!
//! 8-bit grayscale, one pixel per cell: FREE maps to 0 (black), OCCUPIED to
//! 255 (white). Image row 0 is grid row 0, keeping the origin in the upper
//! left.

use std::io::Cursor;

use image::{DynamicImage, GrayImage, ImageFormat};

use crate::error::{Error, Result};
use crate::grid::GridMap;

const FREE_PIXEL: u8 = 0;
const OCCUPIED_PIXEL: u8 = 255;

/// Encodes a grid as an 8-bit grayscale PNG.
pub fn encode_png(grid: &GridMap) -> Vec<u8> {
    let pixels: Vec<u8> = grid
        .cells()
        .iter()
        .map(|&c| if c == 0 { FREE_PIXEL } else { OCCUPIED_PIXEL })
        .collect();
    let image = GrayImage::from_raw(grid.cols() as u32, grid.rows() as u32, pixels)
        .expect("pixel buffer matches grid dimensions");
    let mut bytes = Vec::new();
    image
        .write_to(&mut Cursor::new(&mut bytes), ImageFormat::Png)
        .expect("in-memory PNG encoding cannot fail");
    bytes
}

/// Decodes an 8-bit grayscale PNG back into a grid. Pixel values of 128 and
/// above read as OCCUPIED, so re-encoded images survive the round trip.
pub fn decode_png(bytes: &[u8]) -> Result<GridMap> {
    let decoded = image::load_from_memory_with_format(bytes, ImageFormat::Png)
        .map_err(|e| Error::Format(format!("PNG decode failed: {e}")))?;
    let gray = match decoded {
        DynamicImage::ImageLuma8(img) => img,
        other => {
            return Err(Error::Format(format!(
                "expected 8-bit grayscale PNG, got {other:?}",
                other = other.color()
            )))
        }
    };
    let (cols, rows) = (gray.width() as usize, gray.height() as usize);
    let cells: Vec<u8> = gray.into_raw().iter().map(|&p| u8::from(p >= 128)).collect();
    GridMap::from_raw(rows, cols, cells)
}

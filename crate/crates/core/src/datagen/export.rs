use std::io::Write;

use super::{LabeledDataset, IMAGE_SIDE};
use crate::error::Result;

/// `label,angle,sigma` per item; unknown angle/sigma are left empty.
pub fn write_manifest<W: Write>(data: &LabeledDataset, mut out: W) -> Result<()> {
    writeln!(out, "label,angle,sigma")?;
    let opt = |v: Option<f64>| v.map(|v| v.to_string()).unwrap_or_default();
    for item in &data.items {
        writeln!(out, "{},{},{}", item.label, opt(item.angle), opt(item.sigma))?;
    }
    Ok(())
}

/// Packed little-endian `f64` rows, 784 values per image, in manifest order.
pub fn write_raw<W: Write>(data: &LabeledDataset, mut out: W) -> Result<()> {
    for img in data.images() {
        for p in img.pixels() {
            out.write_all(&p.to_le_bytes())?;
        }
    }
    Ok(())
}

/// Binary PGM (P5) tiling the images `columns` per row, for eyeballing.
pub fn write_pgm_grid<W: Write>(data: &LabeledDataset, columns: usize, mut out: W) -> Result<()> {
    let columns = columns.max(1);
    let rows = data.len().div_ceil(columns).max(1);
    let (w, h) = (columns * IMAGE_SIDE, rows * IMAGE_SIDE);
    let mut raster = vec![0u8; w * h];
    for (n, img) in data.images().enumerate() {
        let (tr, tc) = (n / columns, n % columns);
        for r in 0..IMAGE_SIDE {
            for c in 0..IMAGE_SIDE {
                let v = (img.get(r, c) * 255.0).round() as u8;
                raster[(tr * IMAGE_SIDE + r) * w + tc * IMAGE_SIDE + c] = v;
            }
        }
    }
    write!(out, "P5\n{w} {h}\n255\n")?;
    out.write_all(&raster)?;
    Ok(())
}

use super::TransformError;
use crate::{CoeffPlane, Image};

/// One-tap raster prediction residuals.
///
/// The first sample is kept verbatim, the first pixel of every other row is
/// predicted from the pixel above, and all remaining pixels from their left
/// neighbour.
pub fn predict_raster(img: &Image) -> CoeffPlane {
    let w = img.width();
    let s = img.samples();
    let coeffs = s
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let v = v as i32;
            match (i % w, i / w) {
                (0, 0) => v,
                (0, _) => v - s[i - w] as i32,
                _ => v - s[i - 1] as i32,
            }
        })
        .collect();
    CoeffPlane::new(w, img.height(), coeffs).expect("geometry is copied from the image")
}

/// Inverse of [`predict_raster`].
pub fn unpredict_raster(plane: &CoeffPlane, bit_depth: u32) -> Result<Image, TransformError> {
    let w = plane.width();
    let max = crate::image::max_sample(bit_depth) as i64;
    let mut out: Vec<i32> = Vec::with_capacity(plane.len());
    for (i, &r) in plane.coeffs().iter().enumerate() {
        let pred = match (i % w, i / w) {
            (0, 0) => 0,
            (0, _) => out[i - w] as i64,
            _ => out[i - 1] as i64,
        };
        let v = pred + r as i64;
        if !(0..=max).contains(&v) {
            return Err(TransformError::Corrupt(format!(
                "residual at index {i} reconstructs to {v}, outside 0..={max}"
            )));
        }
        out.push(v as i32);
    }
    Ok(Image::from_i32(w, plane.height(), bit_depth, &out)?)
}

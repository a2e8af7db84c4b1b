//! Integer-reversible decorrelating transforms: one-tap raster prediction,
//! the Haar S-transform and LeGall 5/3 lifting, in 1D and as a separable,
//! multilevel 2D decomposition.
//!
//! The predictor is one-dimensional along each row. The first pixel of a row
//! has no left neighbour, so it is predicted from the pixel above instead.

mod dwt2d;
pub mod lifting;
mod predict;
mod ranges;

use thiserror::Error;

use crate::image::ImageError;

pub use dwt2d::{
    band_geometry, check_levels, dwt2d, idwt2d, max_levels, BandGeometry, BandId, BandKind,
    SubbandLayout,
};
pub use predict::{predict_raster, unpredict_raster};
pub use ranges::{high_band_range, low_band_range, plane_ranges, SymbolRange};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("corrupt stream: {0}")]
    Corrupt(String),
    #[error("subband layout mismatch: {0}")]
    Layout(String),
    #[error(transparent)]
    Image(#[from] ImageError),
}

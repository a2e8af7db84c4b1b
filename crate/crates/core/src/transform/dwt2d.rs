use std::fmt;

use rayon::prelude::*;

use super::lifting;
use super::TransformError;
use crate::{CoeffPlane, Image, Wavelet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BandKind {
    /// Low horizontally and vertically (only at the deepest level).
    LL,
    /// High horizontally, low vertically.
    HL,
    /// Low horizontally, high vertically.
    LH,
    /// High horizontally and vertically.
    HH,
}

/// A subband: its orientation and decomposition level (1 = finest).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BandId {
    pub kind: BandKind,
    pub level: u32,
}

impl fmt::Display for BandId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.level)
    }
}

/// Position and size of a band inside the in-place (Mallat) coefficient grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandGeometry {
    pub id: BandId,
    pub x: usize,
    pub y: usize,
    pub width: usize,
    pub height: usize,
}

/// Multilevel subbands of one image.
///
/// Bands are ordered deepest LL first, then HL, LH, HH for each level from
/// the deepest to the finest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubbandLayout {
    width: usize,
    height: usize,
    levels: u32,
    wavelet: Wavelet,
    bands: Vec<(BandId, CoeffPlane)>,
}

impl SubbandLayout {
    /// Reassembles a layout from planes in canonical band order.
    pub fn from_planes(
        width: usize,
        height: usize,
        levels: u32,
        wavelet: Wavelet,
        planes: Vec<CoeffPlane>,
    ) -> Result<Self, TransformError> {
        let geometry = band_geometry(width, height, levels)?;
        if planes.len() != geometry.len() {
            return Err(TransformError::Layout(format!(
                "expected {} bands, got {}",
                geometry.len(),
                planes.len()
            )));
        }
        let bands = geometry
            .iter()
            .zip(planes)
            .map(|(g, p)| {
                if (p.width(), p.height()) == (g.width, g.height) {
                    Ok((g.id, p))
                } else {
                    Err(TransformError::Layout(format!(
                        "band {} is {}x{}, expected {}x{}",
                        g.id,
                        p.width(),
                        p.height(),
                        g.width,
                        g.height
                    )))
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(Self {
            width,
            height,
            levels,
            wavelet,
            bands,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    pub fn wavelet(&self) -> Wavelet {
        self.wavelet
    }

    pub fn bands(&self) -> &[(BandId, CoeffPlane)] {
        &self.bands
    }

    pub fn band(&self, id: BandId) -> Option<&CoeffPlane> {
        self.bands.iter().find(|(b, _)| *b == id).map(|(_, p)| p)
    }

    pub fn into_planes(self) -> Vec<CoeffPlane> {
        self.bands.into_iter().map(|(_, p)| p).collect()
    }
}

/// Deepest level allowed for a geometry: `⌊log₂ min(width, height)⌋`.
pub fn max_levels(width: usize, height: usize) -> u32 {
    width.min(height).max(1).ilog2()
}

pub fn check_levels(width: usize, height: usize, levels: u32) -> Result<(), TransformError> {
    let max = max_levels(width, height);
    if levels == 0 || levels > max {
        return Err(TransformError::Config(format!(
            "{levels} decomposition levels requested, {width}x{height} allows 1..={max}"
        )));
    }
    Ok(())
}

/// Band rectangles in canonical order.
pub fn band_geometry(
    width: usize,
    height: usize,
    levels: u32,
) -> Result<Vec<BandGeometry>, TransformError> {
    check_levels(width, height, levels)?;
    let mut per_level = Vec::with_capacity(levels as usize);
    let (mut w, mut h) = (width, height);
    for level in 1..=levels {
        let (lw, lh) = (w.div_ceil(2), h.div_ceil(2));
        let (hw, hh) = (w / 2, h / 2);
        per_level.push([
            BandGeometry {
                id: BandId {
                    kind: BandKind::HL,
                    level,
                },
                x: lw,
                y: 0,
                width: hw,
                height: lh,
            },
            BandGeometry {
                id: BandId {
                    kind: BandKind::LH,
                    level,
                },
                x: 0,
                y: lh,
                width: lw,
                height: hh,
            },
            BandGeometry {
                id: BandId {
                    kind: BandKind::HH,
                    level,
                },
                x: lw,
                y: lh,
                width: hw,
                height: hh,
            },
        ]);
        w = lw;
        h = lh;
    }
    let mut out = vec![BandGeometry {
        id: BandId {
            kind: BandKind::LL,
            level: levels,
        },
        x: 0,
        y: 0,
        width: w,
        height: h,
    }];
    out.extend(per_level.into_iter().rev().flatten());
    Ok(out)
}

/// Separable multilevel decomposition: rows then columns at each level,
/// recursing on the LL quadrant.
pub fn dwt2d(img: &Image, wavelet: Wavelet, levels: u32) -> Result<SubbandLayout, TransformError> {
    let (width, height) = (img.width(), img.height());
    let geometry = band_geometry(width, height, levels)?;
    let mut grid = img.to_i32();
    let (mut w, mut h) = (width, height);
    for _ in 0..levels {
        rows_forward(&mut grid, width, w, h, wavelet);
        columns_forward(&mut grid, width, w, h, wavelet);
        w = w.div_ceil(2);
        h = h.div_ceil(2);
    }
    let bands = geometry
        .iter()
        .map(|g| (g.id, extract(&grid, width, g)))
        .collect();
    Ok(SubbandLayout {
        width,
        height,
        levels,
        wavelet,
        bands,
    })
}

/// Exact inverse of [`dwt2d`].
pub fn idwt2d(layout: &SubbandLayout, bit_depth: u32) -> Result<Image, TransformError> {
    let (width, height) = (layout.width, layout.height);
    let geometry = band_geometry(width, height, layout.levels)?;
    let mut grid = vec![0i32; width * height];
    for (g, (id, plane)) in geometry.iter().zip(&layout.bands) {
        debug_assert_eq!(g.id, *id);
        insert(&mut grid, width, g, plane);
    }
    let mut dims = Vec::with_capacity(layout.levels as usize);
    let (mut w, mut h) = (width, height);
    for _ in 0..layout.levels {
        dims.push((w, h));
        w = w.div_ceil(2);
        h = h.div_ceil(2);
    }
    for &(w, h) in dims.iter().rev() {
        columns_inverse(&mut grid, width, w, h, layout.wavelet);
        rows_inverse(&mut grid, width, w, h, layout.wavelet);
    }
    let max = crate::image::max_sample(bit_depth) as i32;
    if let Some(i) = grid.iter().position(|v| !(0..=max).contains(v)) {
        return Err(TransformError::Corrupt(format!(
            "reconstructed sample {} at index {i} outside 0..={max}",
            grid[i]
        )));
    }
    Ok(Image::from_i32(width, height, bit_depth, &grid)?)
}

fn rows_forward(grid: &mut [i32], stride: usize, w: usize, h: usize, wavelet: Wavelet) {
    grid.par_chunks_mut(stride).take(h).for_each(|row| {
        let (lp, hp) = lifting::forward(wavelet, &row[..w]);
        row[..lp.len()].copy_from_slice(&lp);
        row[lp.len()..w].copy_from_slice(&hp);
    });
}

fn rows_inverse(grid: &mut [i32], stride: usize, w: usize, h: usize, wavelet: Wavelet) {
    let split = w.div_ceil(2);
    grid.par_chunks_mut(stride).take(h).for_each(|row| {
        let x = lifting::inverse(wavelet, &row[..split], &row[split..w]);
        row[..w].copy_from_slice(&x);
    });
}

fn columns_forward(grid: &mut [i32], stride: usize, w: usize, h: usize, wavelet: Wavelet) {
    let mut cols = transpose(grid, stride, w, h);
    cols.par_chunks_mut(h).for_each(|col| {
        let (lp, hp) = lifting::forward(wavelet, col);
        col[..lp.len()].copy_from_slice(&lp);
        col[lp.len()..].copy_from_slice(&hp);
    });
    untranspose(&cols, grid, stride, w, h);
}

fn columns_inverse(grid: &mut [i32], stride: usize, w: usize, h: usize, wavelet: Wavelet) {
    let split = h.div_ceil(2);
    let mut cols = transpose(grid, stride, w, h);
    cols.par_chunks_mut(h).for_each(|col| {
        let x = lifting::inverse(wavelet, &col[..split], &col[split..]);
        col.copy_from_slice(&x);
    });
    untranspose(&cols, grid, stride, w, h);
}

/// Copies the top-left `w × h` region into column-major order.
fn transpose(grid: &[i32], stride: usize, w: usize, h: usize) -> Vec<i32> {
    let mut out = vec![0; w * h];
    for y in 0..h {
        for x in 0..w {
            out[x * h + y] = grid[y * stride + x];
        }
    }
    out
}

fn untranspose(cols: &[i32], grid: &mut [i32], stride: usize, w: usize, h: usize) {
    for y in 0..h {
        for x in 0..w {
            grid[y * stride + x] = cols[x * h + y];
        }
    }
}

fn extract(grid: &[i32], stride: usize, g: &BandGeometry) -> CoeffPlane {
    let mut coeffs = Vec::with_capacity(g.width * g.height);
    for y in g.y..g.y + g.height {
        coeffs.extend_from_slice(&grid[y * stride + g.x..y * stride + g.x + g.width]);
    }
    CoeffPlane::new(g.width, g.height, coeffs).expect("band size matches its geometry")
}

fn insert(grid: &mut [i32], stride: usize, g: &BandGeometry, plane: &CoeffPlane) {
    for (row, src) in (g.y..g.y + g.height).zip(plane.coeffs().chunks(g.width.max(1))) {
        grid[row * stride + g.x..row * stride + g.x + g.width].copy_from_slice(src);
    }
}

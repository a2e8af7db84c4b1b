//! Worst-case coefficient ranges, used to size coder alphabets without
//! storing per-plane bounds in the stream.

use super::dwt2d::{band_geometry, BandKind};
use super::TransformError;
use crate::{Method, Wavelet};

/// Closed integer interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolRange {
    pub lo: i64,
    pub hi: i64,
}

impl SymbolRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        Self { lo, hi }
    }

    pub fn size(&self) -> u64 {
        (self.hi - self.lo + 1) as u64
    }

    pub fn contains(&self, v: i64) -> bool {
        (self.lo..=self.hi).contains(&v)
    }

    fn width(&self) -> i64 {
        self.hi - self.lo
    }
}

/// Range of the detail band for inputs in `input`: `x − pred` with
/// `pred ∈ input` for both wavelets.
pub fn high_band_range(input: SymbolRange) -> SymbolRange {
    SymbolRange::new(-input.width(), input.width())
}

/// Range of the approximation band for inputs in `input`.
///
/// Haar keeps the input range. The LeGall update has taps
/// `(−1, 2, 6, 2, −1) / 8`, so it overshoots by a quarter of the input width
/// on each side, plus at most ¾ (down) or ¼ (up) from the two floors.
pub fn low_band_range(wavelet: Wavelet, input: SymbolRange) -> SymbolRange {
    match wavelet {
        Wavelet::Haar => input,
        Wavelet::LeGall => {
            let r = input.width();
            SymbolRange::new(input.lo - (r + 3) / 4, input.hi + (r + 1) / 4)
        }
    }
}

/// Alphabet of every plane a method produces, in coding order.
pub fn plane_ranges(
    method: Method,
    bit_depth: u32,
    width: usize,
    height: usize,
    levels: u32,
) -> Result<Vec<SymbolRange>, TransformError> {
    let max = crate::image::max_sample(bit_depth) as i64;
    let samples = SymbolRange::new(0, max);
    let Some(wavelet) = method.wavelet() else {
        return Ok(vec![match method {
            Method::Predictive => SymbolRange::new(-max, max),
            _ => samples,
        }]);
    };

    // (LL input range, per-level [HL, LH, HH])
    let mut input = samples;
    let mut per_level = Vec::with_capacity(levels as usize);
    for _ in 0..levels {
        let l = low_band_range(wavelet, input);
        let h = high_band_range(input);
        per_level.push([
            low_band_range(wavelet, h),
            high_band_range(l),
            high_band_range(h),
        ]);
        input = low_band_range(wavelet, l);
    }

    let geometry = band_geometry(width, height, levels)?;
    Ok(geometry
        .iter()
        .map(|g| {
            let level = &per_level[g.id.level as usize - 1];
            match g.id.kind {
                BandKind::LL => input,
                BandKind::HL => level[0],
                BandKind::LH => level[1],
                BandKind::HH => level[2],
            }
        })
        .collect())
}

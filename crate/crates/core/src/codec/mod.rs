//! Lossless container for coefficient planes, coded with an adaptive
//! order-0 range coder.
//!
//! Each plane gets its own [`AdaptiveModel`] whose alphabet is the
//! worst-case range of that plane (see [`plane_ranges`]), so the header
//! needs no per-plane bounds. Planes are coded independently and in
//! parallel, then concatenated in canonical order.

mod bitstream;
mod model;
mod range_coder;

use rayon::prelude::*;
use thiserror::Error;

use crate::transform::{
    band_geometry, check_levels, dwt2d, idwt2d, plane_ranges, predict_raster, unpredict_raster,
    SubbandLayout, SymbolRange, TransformError,
};
use crate::{CoeffPlane, Image, Method};

pub use bitstream::{Bitstream, Header, HEADER_LEN, MAGIC, VERSION};
pub use model::{
    increment_for, AdaptiveModel, MAX_ALPHABET, MAX_INCREMENT, MIN_INCREMENT, RESCALE_LIMIT,
};
pub use range_coder::{RangeDecoder, RangeEncoder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("bad magic {0:02x?}, expected \"CNL1\"")]
    BadMagic([u8; 4]),
    #[error("unsupported stream version {0}")]
    Version(u32),
    #[error("truncated stream: need {expected} bytes, have {actual}")]
    Truncated { expected: usize, actual: usize },
    #[error("invalid header: {0}")]
    Header(String),
    #[error("alphabet of {0} symbols exceeds the model limit")]
    AlphabetTooLarge(u64),
    #[error("plane {plane}: value {value} outside alphabet {lo}..={hi}")]
    SymbolOutOfRange {
        plane: usize,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("plane layout mismatch: {0}")]
    Layout(String),
    #[error("corrupt payload: {0}")]
    Corrupt(String),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// Range-codes `values` with a fresh model over `range`.
pub fn encode_symbols(values: &[i32], range: SymbolRange) -> Result<Vec<u8>, CodecError> {
    encode_plane(0, values, range)
}

/// Inverse of [`encode_symbols`] for a known symbol count.
pub fn decode_symbols(
    bytes: &[u8],
    range: SymbolRange,
    count: usize,
) -> Result<Vec<i32>, CodecError> {
    let mut model = AdaptiveModel::new(range)?;
    let mut dec = RangeDecoder::new(bytes);
    let out = (0..count)
        .map(|_| dec.decode_symbol(&mut model) as i32)
        .collect();
    Ok(out)
}

fn encode_plane(plane: usize, values: &[i32], range: SymbolRange) -> Result<Vec<u8>, CodecError> {
    let mut model = AdaptiveModel::new(range)?;
    let mut enc = RangeEncoder::new();
    for &v in values {
        let v = v as i64;
        if !range.contains(v) {
            return Err(CodecError::SymbolOutOfRange {
                plane,
                value: v,
                lo: range.lo,
                hi: range.hi,
            });
        }
        enc.encode_symbol(&mut model, v);
    }
    Ok(enc.finish())
}

type PlaneSpec = ((usize, usize), SymbolRange);

/// Plane shapes and alphabets implied by a header, in coding order.
fn plane_specs(h: &Header) -> Result<Vec<PlaneSpec>, CodecError> {
    let (w, h_, levels) = (h.width as usize, h.height as usize, h.levels);
    let shapes: Vec<(usize, usize)> = if h.method.wavelet().is_some() {
        check_levels(w, h_, levels)?;
        band_geometry(w, h_, levels)?
            .iter()
            .map(|g| (g.width, g.height))
            .collect()
    } else {
        vec![(w, h_)]
    };
    let ranges = plane_ranges(h.method, h.bit_depth, w, h_, levels)?;
    Ok(shapes.into_iter().zip(ranges).collect())
}

/// Codes `planes` (in canonical order for `header`) into a bitstream.
pub fn encode(planes: &[CoeffPlane], header: Header) -> Result<Bitstream, CodecError> {
    let specs = plane_specs(&header)?;
    if planes.len() != specs.len() {
        return Err(CodecError::Layout(format!(
            "{} planes for a header expecting {}",
            planes.len(),
            specs.len()
        )));
    }
    for (i, (p, &((w, h), _))) in planes.iter().zip(&specs).enumerate() {
        if (p.width(), p.height()) != (w, h) {
            return Err(CodecError::Layout(format!(
                "plane {i} is {}x{}, expected {w}x{h}",
                p.width(),
                p.height()
            )));
        }
    }
    let streams = planes
        .par_iter()
        .zip(&specs)
        .enumerate()
        .map(|(i, (p, &(_, range)))| encode_plane(i, p.coeffs(), range))
        .collect::<Result<Vec<_>, _>>()?;

    let mut payload = Vec::with_capacity(streams.iter().map(|s| s.len() + 4).sum());
    for s in &streams {
        payload.extend_from_slice(&(s.len() as u32).to_le_bytes());
        payload.extend_from_slice(s);
    }
    if u32::try_from(payload.len()).is_err() {
        return Err(CodecError::Layout(format!(
            "payload of {} bytes does not fit the header",
            payload.len()
        )));
    }
    Ok(Bitstream { header, payload })
}

/// Recovers the planes of a bitstream.
pub fn decode(bs: &Bitstream) -> Result<Vec<CoeffPlane>, CodecError> {
    let specs = plane_specs(&bs.header)?;
    let mut segments = Vec::with_capacity(specs.len());
    let mut rest = bs.payload.as_slice();
    let mut consumed = 0;
    for _ in &specs {
        let truncated = |need: usize| CodecError::Truncated {
            expected: HEADER_LEN + consumed + need,
            actual: HEADER_LEN + bs.payload.len(),
        };
        let Some((len, tail)) = rest.split_first_chunk::<4>() else {
            return Err(truncated(4));
        };
        let len = u32::from_le_bytes(*len) as usize;
        if tail.len() < len {
            return Err(truncated(4 + len));
        }
        segments.push(&tail[..len]);
        rest = &tail[len..];
        consumed += 4 + len;
    }
    if !rest.is_empty() {
        return Err(CodecError::Corrupt(format!(
            "{} bytes after the last plane",
            rest.len()
        )));
    }
    specs
        .par_iter()
        .zip(segments)
        .map(|(&((w, h), range), bytes)| {
            let coeffs = decode_symbols(bytes, range, w * h)?;
            Ok(CoeffPlane::new(w, h, coeffs).map_err(TransformError::from)?)
        })
        .collect()
}

/// The planes `method` codes for `img`, in canonical order.
///
/// `levels` is ignored by methods without a wavelet.
pub fn transform_planes(
    img: &Image,
    method: Method,
    levels: u32,
) -> Result<Vec<CoeffPlane>, CodecError> {
    Ok(match method.wavelet() {
        None if method == Method::Predictive => vec![predict_raster(img)],
        None => vec![CoeffPlane::new(img.width(), img.height(), img.to_i32())
            .map_err(TransformError::from)?],
        Some(w) => dwt2d(img, w, levels)?.into_planes(),
    })
}

/// Transforms `img` with `method` and codes the result.
///
/// `levels` is ignored by methods without a wavelet.
pub fn compress_image(img: &Image, method: Method, levels: u32) -> Result<Bitstream, CodecError> {
    let header = Header::new(img.width(), img.height(), img.bit_depth(), method, levels)?;
    encode(&transform_planes(img, method, levels)?, header)
}

/// Decodes a bitstream and inverts its transform.
pub fn decompress(bs: &Bitstream) -> Result<Image, CodecError> {
    let h = &bs.header;
    let mut planes = decode(bs)?;
    let img = match h.method.wavelet() {
        None if h.method == Method::Predictive => unpredict_raster(&planes[0], h.bit_depth)?,
        None => {
            let p = planes.pop().expect("one plane");
            Image::from_i32(p.width(), p.height(), h.bit_depth, p.coeffs())
                .map_err(TransformError::from)?
        }
        Some(w) => {
            let layout = SubbandLayout::from_planes(
                h.width as usize,
                h.height as usize,
                h.levels,
                w,
                planes,
            )?;
            idwt2d(&layout, h.bit_depth)?
        }
    };
    Ok(img)
}

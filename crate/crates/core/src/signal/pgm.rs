//! Binary greyscale PNM ("P5"). Samples wider than 8 bits are two bytes,
//! most significant first.

use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::image::ImageError;
use crate::Image;

#[derive(Debug, Error)]
pub enum PgmError {
    #[error("not a binary PGM file (magic {0:?})")]
    BadMagic(String),
    #[error("maxval {0} outside 1..=65535")]
    MaxvalOverflow(u64),
    #[error("short pixel data: need {expected} bytes, have {actual}")]
    ShortData { expected: usize, actual: usize },
    #[error("malformed header: {0}")]
    Header(String),
    #[error("sample {value} at index {index} exceeds maxval {maxval}")]
    Sample {
        index: usize,
        value: u16,
        maxval: u16,
    },
    #[error(transparent)]
    Image(#[from] ImageError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn read_pgm(path: impl AsRef<Path>) -> Result<Image, PgmError> {
    parse_pgm(&fs::read(path)?)
}

pub fn write_pgm(img: &Image, path: impl AsRef<Path>) -> Result<(), PgmError> {
    fs::write(path, to_pgm_bytes(img))?;
    Ok(())
}

/// Encodes with `maxval = 2^b − 1`.
pub fn to_pgm_bytes(img: &Image) -> Vec<u8> {
    let maxval = img.max_code();
    let mut out = format!("P5\n{} {}\n{}\n", img.width(), img.height(), maxval).into_bytes();
    if maxval < 256 {
        out.extend(img.samples().iter().map(|&s| s as u8));
    } else {
        out.extend(img.samples().iter().flat_map(|s| s.to_be_bytes()));
    }
    out
}

/// Decodes the first image of a P5 stream. The bit depth is the smallest
/// that holds `maxval`.
pub fn parse_pgm(bytes: &[u8]) -> Result<Image, PgmError> {
    if bytes.len() < 2 || &bytes[..2] != b"P5" {
        let shown = String::from_utf8_lossy(&bytes[..bytes.len().min(2)]).into_owned();
        return Err(PgmError::BadMagic(shown));
    }
    let mut header = Header { bytes, pos: 2 };
    let width = header.field("width")?;
    let height = header.field("height")?;
    let maxval = header.field("maxval")?;
    if width == 0 || height == 0 {
        return Err(PgmError::Header(format!("empty geometry {width}x{height}")));
    }
    if !(1..=65535).contains(&maxval) {
        return Err(PgmError::MaxvalOverflow(maxval));
    }
    // exactly one whitespace byte separates the header from the raster
    match bytes.get(header.pos) {
        Some(b) if b.is_ascii_whitespace() => header.pos += 1,
        _ => return Err(PgmError::Header("missing whitespace after maxval".into())),
    }

    let n = usize::try_from(width * height)
        .map_err(|_| PgmError::Header(format!("geometry {width}x{height} too large")))?;
    let wide = maxval > 255;
    let expected = n * if wide { 2 } else { 1 };
    let raster = &bytes[header.pos..];
    if raster.len() < expected {
        return Err(PgmError::ShortData {
            expected,
            actual: raster.len(),
        });
    }
    let samples: Vec<u16> = if wide {
        raster[..expected]
            .chunks_exact(2)
            .map(|c| u16::from_be_bytes([c[0], c[1]]))
            .collect()
    } else {
        raster[..expected].iter().map(|&b| b as u16).collect()
    };
    let maxval = maxval as u16;
    if let Some((index, &value)) = samples.iter().enumerate().find(|(_, &s)| s > maxval) {
        return Err(PgmError::Sample {
            index,
            value,
            maxval,
        });
    }
    let bit_depth = 16 - maxval.leading_zeros();
    Ok(Image::new(
        width as usize,
        height as usize,
        bit_depth,
        samples,
    )?)
}

struct Header<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Header<'_> {
    /// Next decimal field, skipping whitespace and `#` comments.
    fn field(&mut self, name: &str) -> Result<u64, PgmError> {
        loop {
            match self.bytes.get(self.pos) {
                Some(b) if b.is_ascii_whitespace() => self.pos += 1,
                Some(b'#') => {
                    while !matches!(self.bytes.get(self.pos), None | Some(b'\n' | b'\r')) {
                        self.pos += 1;
                    }
                }
                _ => break,
            }
        }
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(PgmError::Header(format!("expected {name}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| PgmError::Header(format!("{name} out of range")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn minimal_file() {
        let img = parse_pgm(b"P5 2 2 255\n\x00\x01\xfe\xff").unwrap();
        assert_eq!((img.width(), img.height(), img.bit_depth()), (2, 2, 8));
        assert_eq!(img.samples(), &[0, 1, 254, 255]);
    }

    #[test]
    fn comments_are_skipped() {
        let img =
            parse_pgm(b"P5\n# made by hand\n3 # width\n1\n#maxval next\n15\n\x01\x02\x0f").unwrap();
        assert_eq!((img.width(), img.height(), img.bit_depth()), (3, 1, 4));
        assert_eq!(img.samples(), &[1, 2, 15]);
    }

    #[test]
    fn sixteen_bit_is_big_endian() {
        let img = parse_pgm(b"P5 2 1 65535\n\x01\x02\xff\x00").unwrap();
        assert_eq!(img.bit_depth(), 16);
        assert_eq!(img.samples(), &[0x0102, 0xff00]);
    }

    #[test]
    fn distinct_errors() {
        assert!(matches!(
            parse_pgm(b"P2 2 2 255\n...."),
            Err(PgmError::BadMagic(_))
        ));
        assert!(matches!(parse_pgm(b""), Err(PgmError::BadMagic(_))));
        assert!(matches!(
            parse_pgm(b"P5 2 2 70000\n"),
            Err(PgmError::MaxvalOverflow(70000))
        ));
        assert!(matches!(
            parse_pgm(b"P5 2 2 255\n\x00\x01\x02"),
            Err(PgmError::ShortData {
                expected: 4,
                actual: 3
            })
        ));
        assert!(matches!(
            parse_pgm(b"P5 2 x 255\n"),
            Err(PgmError::Header(_))
        ));
        assert!(matches!(
            parse_pgm(b"P5 1 1 9\n\x0a"),
            Err(PgmError::Sample { value: 10, .. })
        ));
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.pgm");
        let img = Image::new(3, 2, 12, vec![0, 4095, 7, 1000, 2048, 1]).unwrap();
        write_pgm(&img, &path).unwrap();
        assert_eq!(read_pgm(&path).unwrap(), img);
        assert!(matches!(
            read_pgm(dir.path().join("missing.pgm")),
            Err(PgmError::Io(_))
        ));
    }

    proptest! {
        #[test]
        fn bytes_round_trip(
            (w, h, bd, s) in (1usize..20, 1usize..20, 1u32..=16).prop_flat_map(|(w, h, bd)| {
                let max = ((1u32 << bd) - 1) as u16;
                (Just(w), Just(h), Just(bd), prop::collection::vec(0..=max, w * h))
            })
        ) {
            let img = Image::new(w, h, bd, s).unwrap();
            prop_assert_eq!(parse_pgm(&to_pgm_bytes(&img)).unwrap(), img);
        }
    }
}

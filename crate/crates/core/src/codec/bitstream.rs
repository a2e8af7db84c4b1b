//! On-disk container: a fixed 64-byte little-endian header followed by the
//! payload.
//!
//! ```text
//! offset  size  field
//!      0     4  magic "CNL1"
//!      4     4  version (1)
//!      8     4  width
//!     12     4  height
//!     16     4  bit depth
//!     20     1  method   (0 direct, 1 predictive, 2 haar, 3 legall)
//!     21     1  wavelet  (0 none, 1 haar, 2 legall)
//!     22     2  reserved, zero
//!     24     4  decomposition levels (0 without a wavelet)
//!     28     4  payload length in bytes
//!     32    32  reserved, zero
//! ```
//!
//! The payload is one range-coded stream per plane, in canonical plane
//! order, each prefixed by its byte length as a little-endian `u32`.

use super::CodecError;
use crate::Method;

pub const MAGIC: [u8; 4] = *b"CNL1";
pub const VERSION: u32 = 1;
pub const HEADER_LEN: usize = 64;

/// Largest sample count a header may declare.
const MAX_SAMPLES: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Header {
    pub width: u32,
    pub height: u32,
    pub bit_depth: u32,
    pub method: Method,
    /// Decomposition levels; 0 for methods without a wavelet.
    pub levels: u32,
}

impl Header {
    pub fn new(
        width: usize,
        height: usize,
        bit_depth: u32,
        method: Method,
        levels: u32,
    ) -> Result<Self, CodecError> {
        let dim = |v: usize, what: &str| {
            u32::try_from(v).map_err(|_| CodecError::Header(format!("{what} {v} too large")))
        };
        let header = Self {
            width: dim(width, "width")?,
            height: dim(height, "height")?,
            bit_depth,
            method,
            levels: if method.wavelet().is_some() {
                levels
            } else {
                0
            },
        };
        header.validate()?;
        Ok(header)
    }

    pub fn samples(&self) -> usize {
        self.width as usize * self.height as usize
    }

    fn validate(&self) -> Result<(), CodecError> {
        if self.width == 0 || self.height == 0 {
            return Err(CodecError::Header(format!(
                "empty geometry {}x{}",
                self.width, self.height
            )));
        }
        if self.width as u64 * self.height as u64 > MAX_SAMPLES {
            return Err(CodecError::Header(format!(
                "geometry {}x{} too large",
                self.width, self.height
            )));
        }
        if !(1..=16).contains(&self.bit_depth) {
            return Err(CodecError::Header(format!(
                "bit depth {} outside 1..=16",
                self.bit_depth
            )));
        }
        Ok(())
    }
}

/// A header plus its coded payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bitstream {
    pub header: Header,
    pub payload: Vec<u8>,
}

impl Bitstream {
    /// Total size on disk, header included.
    pub fn len(&self) -> usize {
        HEADER_LEN + self.payload.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let h = &self.header;
        let mut out = Vec::with_capacity(self.len());
        out.extend_from_slice(&MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&h.width.to_le_bytes());
        out.extend_from_slice(&h.height.to_le_bytes());
        out.extend_from_slice(&h.bit_depth.to_le_bytes());
        out.push(h.method.to_byte());
        out.push(h.method.wavelet().map_or(0, |w| w.to_byte()));
        out.extend_from_slice(&[0, 0]);
        out.extend_from_slice(&h.levels.to_le_bytes());
        out.extend_from_slice(&(self.payload.len() as u32).to_le_bytes());
        out.resize(HEADER_LEN, 0);
        out.extend_from_slice(&self.payload);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CodecError> {
        if bytes.len() < 4 || bytes[..4] != MAGIC {
            let mut found = [0u8; 4];
            let n = bytes.len().min(4);
            found[..n].copy_from_slice(&bytes[..n]);
            return Err(CodecError::BadMagic(found));
        }
        if bytes.len() < HEADER_LEN {
            return Err(CodecError::Truncated {
                expected: HEADER_LEN,
                actual: bytes.len(),
            });
        }
        let u32_at = |o: usize| u32::from_le_bytes(bytes[o..o + 4].try_into().unwrap());
        let version = u32_at(4);
        if version != VERSION {
            return Err(CodecError::Version(version));
        }
        let method = Method::from_byte(bytes[20])
            .ok_or_else(|| CodecError::Header(format!("unknown method id {}", bytes[20])))?;
        let wavelet = method.wavelet().map_or(0, |w| w.to_byte());
        if bytes[21] != wavelet {
            return Err(CodecError::Header(format!(
                "wavelet id {} does not match method {method}",
                bytes[21]
            )));
        }
        let header = Header {
            width: u32_at(8),
            height: u32_at(12),
            bit_depth: u32_at(16),
            method,
            levels: u32_at(24),
        };
        header.validate()?;
        if method.wavelet().is_none() && header.levels != 0 {
            return Err(CodecError::Header(format!(
                "{method} stream declares {} levels",
                header.levels
            )));
        }
        let payload_len = u32_at(28) as usize;
        let expected = HEADER_LEN + payload_len;
        if bytes.len() < expected {
            return Err(CodecError::Truncated {
                expected,
                actual: bytes.len(),
            });
        }
        if bytes.len() > expected {
            return Err(CodecError::Header(format!(
                "{} trailing bytes after payload",
                bytes.len() - expected
            )));
        }
        Ok(Self {
            header,
            payload: bytes[HEADER_LEN..].to_vec(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Bitstream {
        Bitstream {
            header: Header::new(640, 480, 12, Method::LeGall, 3).unwrap(),
            payload: vec![1, 2, 3, 250],
        }
    }

    #[test]
    fn header_layout() {
        let bytes = sample().to_bytes();
        assert_eq!(bytes.len(), 68);
        assert_eq!(&bytes[..4], b"CNL1");
        assert_eq!(&bytes[4..8], &[1, 0, 0, 0]);
        assert_eq!(&bytes[8..12], &640u32.to_le_bytes());
        assert_eq!(&bytes[12..16], &480u32.to_le_bytes());
        assert_eq!(bytes[16], 12);
        assert_eq!((bytes[20], bytes[21]), (3, 2));
        assert_eq!(bytes[24], 3);
        assert_eq!(bytes[28], 4);
        assert!(bytes[32..64].iter().all(|&b| b == 0));
    }

    #[test]
    fn round_trip_all_methods() {
        for m in Method::ALL {
            let bs = Bitstream {
                header: Header::new(3, 7, 8, m, 1).unwrap(),
                payload: vec![9; 17],
            };
            assert_eq!(Bitstream::from_bytes(&bs.to_bytes()).unwrap(), bs);
        }
    }

    #[test]
    fn levels_zeroed_without_wavelet() {
        let h = Header::new(8, 8, 8, Method::Predictive, 4).unwrap();
        assert_eq!(h.levels, 0);
    }

    #[test]
    fn distinct_parse_errors() {
        let good = sample().to_bytes();

        let mut bad = good.clone();
        bad[2] ^= 0x40;
        assert!(matches!(
            Bitstream::from_bytes(&bad),
            Err(CodecError::BadMagic(_))
        ));
        assert!(matches!(
            Bitstream::from_bytes(b"CN"),
            Err(CodecError::BadMagic(_))
        ));

        let mut bad = good.clone();
        bad[4] = 2;
        assert!(matches!(
            Bitstream::from_bytes(&bad),
            Err(CodecError::Version(2))
        ));

        assert!(matches!(
            Bitstream::from_bytes(&good[..good.len() - 1]),
            Err(CodecError::Truncated {
                expected: 68,
                actual: 67
            })
        ));
        assert!(matches!(
            Bitstream::from_bytes(&good[..40]),
            Err(CodecError::Truncated { .. })
        ));

        let mut bad = good.clone();
        bad[20] = 9;
        assert!(matches!(
            Bitstream::from_bytes(&bad),
            Err(CodecError::Header(_))
        ));
        let mut bad = good;
        bad[21] = 1;
        assert!(matches!(
            Bitstream::from_bytes(&bad),
            Err(CodecError::Header(_))
        ));
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImageError {
    #[error("invalid geometry {width}x{height}")]
    Geometry { width: usize, height: usize },
    #[error("bit depth {0} outside 1..=16")]
    BitDepth(u32),
    #[error("expected {expected} samples, got {actual}")]
    SampleCount { expected: usize, actual: usize },
    #[error("sample {value} at index {index} exceeds the {bit_depth}-bit co-domain")]
    SampleRange {
        index: usize,
        value: i64,
        bit_depth: u32,
    },
}

/// A single-channel image with samples in `[0, 2^bit_depth − 1]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    width: usize,
    height: usize,
    bit_depth: u32,
    samples: Vec<u16>,
}

impl Image {
    pub fn new(
        width: usize,
        height: usize,
        bit_depth: u32,
        samples: Vec<u16>,
    ) -> Result<Self, ImageError> {
        check_geometry(width, height)?;
        if !(1..=16).contains(&bit_depth) {
            return Err(ImageError::BitDepth(bit_depth));
        }
        if samples.len() != width * height {
            return Err(ImageError::SampleCount {
                expected: width * height,
                actual: samples.len(),
            });
        }
        let max = max_sample(bit_depth);
        if let Some((index, &value)) = samples.iter().enumerate().find(|(_, &v)| v as u32 > max) {
            return Err(ImageError::SampleRange {
                index,
                value: value as i64,
                bit_depth,
            });
        }
        Ok(Self {
            width,
            height,
            bit_depth,
            samples,
        })
    }

    /// Converts signed values, rejecting anything outside the co-domain.
    pub fn from_i32(
        width: usize,
        height: usize,
        bit_depth: u32,
        values: &[i32],
    ) -> Result<Self, ImageError> {
        if !(1..=16).contains(&bit_depth) {
            return Err(ImageError::BitDepth(bit_depth));
        }
        let max = max_sample(bit_depth) as i32;
        let samples = values
            .iter()
            .enumerate()
            .map(|(index, &v)| {
                if (0..=max).contains(&v) {
                    Ok(v as u16)
                } else {
                    Err(ImageError::SampleRange {
                        index,
                        value: v as i64,
                        bit_depth,
                    })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(width, height, bit_depth, samples)
    }

    pub fn constant(
        width: usize,
        height: usize,
        bit_depth: u32,
        value: u16,
    ) -> Result<Self, ImageError> {
        check_geometry(width, height)?;
        Self::new(width, height, bit_depth, vec![value; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn bit_depth(&self) -> u32 {
        self.bit_depth
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn max_code(&self) -> u32 {
        max_sample(self.bit_depth)
    }

    pub fn samples(&self) -> &[u16] {
        &self.samples
    }

    pub fn get(&self, x: usize, y: usize) -> u16 {
        self.samples[y * self.width + x]
    }

    pub fn row(&self, y: usize) -> &[u16] {
        &self.samples[y * self.width..(y + 1) * self.width]
    }

    pub fn to_i32(&self) -> Vec<i32> {
        self.samples.iter().map(|&v| v as i32).collect()
    }

    pub fn into_samples(self) -> Vec<u16> {
        self.samples
    }
}

/// A rectangular plane of signed residuals or wavelet coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffPlane {
    width: usize,
    height: usize,
    coeffs: Vec<i32>,
}

impl CoeffPlane {
    /// Planes may be empty (a zero-width band of a narrow image).
    pub fn new(width: usize, height: usize, coeffs: Vec<i32>) -> Result<Self, ImageError> {
        if coeffs.len() != width * height {
            return Err(ImageError::SampleCount {
                expected: width * height,
                actual: coeffs.len(),
            });
        }
        Ok(Self {
            width,
            height,
            coeffs,
        })
    }

    pub fn zeros(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            coeffs: vec![0; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i32> {
        self.coeffs
    }
}

fn check_geometry(width: usize, height: usize) -> Result<(), ImageError> {
    if width == 0 || height == 0 || width.checked_mul(height).is_none() {
        Err(ImageError::Geometry { width, height })
    } else {
        Ok(())
    }
}

pub(crate) fn max_sample(bit_depth: u32) -> u32 {
    (1u32 << bit_depth) - 1
}

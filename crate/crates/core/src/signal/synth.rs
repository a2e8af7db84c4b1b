use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::image::{max_sample, ImageError};
use crate::prob::NoiseSpec;
use crate::Image;

/// A constant `mu` image of the given geometry plus seeded Gaussian noise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthesisSpec {
    pub width: usize,
    pub height: usize,
    pub noise: NoiseSpec,
    pub seed: u64,
}

impl SynthesisSpec {
    pub fn new(
        width: usize,
        height: usize,
        noise: NoiseSpec,
        seed: u64,
    ) -> Result<Self, ImageError> {
        if width == 0 || height == 0 {
            return Err(ImageError::Geometry { width, height });
        }
        Ok(Self {
            width,
            height,
            noise,
            seed,
        })
    }
}

pub fn synthesize(spec: &SynthesisSpec) -> Image {
    let n = &spec.noise;
    let base = Image::constant(spec.width, spec.height, n.bit_depth(), n.mu() as u16)
        .expect("spec was validated");
    add_noise_to(&base, n.sigma(), spec.seed)
}

/// Adds `N(0, σ²)` noise to every sample, rounds half away from zero and
/// clips to the image's co-domain.
///
/// Row `y` draws from ChaCha8 seeded with `seed` on stream `y`, and each
/// normal deviate comes from `rand_distr::StandardNormal` scaled by `sigma`.
/// Rows are independent streams, so the output does not depend on how rows
/// are scheduled across threads.
///
/// Panics if `sigma` is negative or not finite.
pub fn add_noise_to(img: &Image, sigma: f64, seed: u64) -> Image {
    assert!(
        sigma >= 0.0 && sigma.is_finite(),
        "sigma must be finite and non-negative, got {sigma}"
    );
    if sigma == 0.0 {
        return img.clone();
    }
    let (w, h) = (img.width(), img.height());
    let max = max_sample(img.bit_depth()) as f64;
    let mut out = img.samples().to_vec();
    out.par_chunks_mut(w).enumerate().for_each(|(y, row)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(y as u64);
        for s in row {
            let g: f64 = StandardNormal.sample(&mut rng);
            *s = (*s as f64 + sigma * g).round().clamp(0.0, max) as u16;
        }
    });
    Image::new(w, h, img.bit_depth(), out).expect("clipped into the co-domain")
}

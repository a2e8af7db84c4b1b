//! Exact discrete probability machinery for quantized, clipped Gaussian noise.
//!
//! A constant level `mu` plus `N(0, σ²)` noise is rounded to the nearest code
//! value and saturated to `[0, 2^b − 1]`. The resulting pmf is pushed through
//! the integer arithmetic of each coding method (including every floor) to get
//! exact residual and subband distributions, whose zero-order entropies form
//! the theoretical rate curves.

mod bands;
mod normal;
mod pmf;
mod theory;

use thiserror::Error;

pub use bands::{clipped_gaussian_pmf, haar_band_pmfs, legall_band_pmfs, predictive_residual_pmf};
pub use normal::{gaussian_cdf, gaussian_entropy_approx, gaussian_sf};
pub use pmf::{
    pmf_difference, pmf_entropy, pmf_floor_halfsum, DiscretePmf, MASS_TOLERANCE, TRIM_THRESHOLD,
};
pub use theory::{method_entropy, method_entropy_of_source, theory_sweep, TheoryPoint};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid pmf: {0}")]
    InvalidPmf(String),
    #[error("invalid noise spec: {0}")]
    InvalidSpec(String),
    #[error("invalid sigma grid: {0}")]
    InvalidGrid(String),
}

/// Noise standard deviation, constant structural level and co-domain bit depth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    sigma: f64,
    mu: i64,
    bit_depth: u32,
}

impl NoiseSpec {
    pub fn new(sigma: f64, mu: i64, bit_depth: u32) -> Result<Self, ModelError> {
        if !(1..=16).contains(&bit_depth) {
            return Err(ModelError::InvalidSpec(format!(
                "bit depth {bit_depth} outside 1..=16"
            )));
        }
        if !(sigma >= 0.0 && sigma.is_finite()) {
            return Err(ModelError::InvalidSpec(format!(
                "sigma must be finite and non-negative, got {sigma}"
            )));
        }
        let max = max_code(bit_depth);
        if !(0..=max).contains(&mu) {
            return Err(ModelError::InvalidSpec(format!(
                "mu {mu} outside the co-domain 0..={max}"
            )));
        }
        Ok(Self {
            sigma,
            mu,
            bit_depth,
        })
    }

    /// Level at the center of the co-domain, `⌈(2^b − 1) / 2⌉`.
    pub fn centered(sigma: f64, bit_depth: u32) -> Result<Self, ModelError> {
        let mu = if (1..=16).contains(&bit_depth) {
            center_code(bit_depth)
        } else {
            0
        };
        Self::new(sigma, mu, bit_depth)
    }

    /// Same level and depth with a different noise level.
    pub fn with_sigma(&self, sigma: f64) -> Result<Self, ModelError> {
        Self::new(sigma, self.mu, self.bit_depth)
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn bit_depth(&self) -> u32 {
        self.bit_depth
    }

    /// Largest code value, `2^b − 1`.
    pub fn max_code(&self) -> i64 {
        max_code(self.bit_depth)
    }
}

pub(crate) fn max_code(bit_depth: u32) -> i64 {
    (1i64 << bit_depth) - 1
}

/// `⌈(2^b − 1) / 2⌉`
pub fn center_code(bit_depth: u32) -> i64 {
    (max_code(bit_depth) + 1) / 2
}

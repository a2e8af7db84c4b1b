use std::f64::consts::{E, PI, SQRT_2};

use super::ModelError;

/// `P(N(0, σ²) ≤ x)`.
pub fn gaussian_cdf(x: f64, sigma: f64) -> Result<f64, ModelError> {
    check_sigma(sigma)?;
    if x.is_nan() {
        return Err(ModelError::Domain(format!(
            "cdf argument {x} is not a number"
        )));
    }
    Ok(standard_cdf(x / sigma))
}

/// `P(N(0, σ²) > x)`, accurate in the upper tail where `1 − cdf` would cancel.
pub fn gaussian_sf(x: f64, sigma: f64) -> Result<f64, ModelError> {
    check_sigma(sigma)?;
    Ok(standard_cdf(-x / sigma))
}

/// Differential-entropy approximation `log₂(σ √(2πe))` of a unit-binned Gaussian.
pub fn gaussian_entropy_approx(sigma: f64) -> Result<f64, ModelError> {
    check_sigma(sigma)?;
    Ok((sigma * (2.0 * PI * E).sqrt()).log2())
}

/// `Φ(z)` via `erfc`, which keeps full relative precision in the lower tail.
pub(crate) fn standard_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z / SQRT_2)
}

/// Mass of the standard normal on `(a, b]`, computed on whichever tail avoids
/// cancellation.
pub(crate) fn standard_interval(a: f64, b: f64) -> f64 {
    if a >= 0.0 {
        standard_cdf(-a) - standard_cdf(-b)
    } else {
        standard_cdf(b) - standard_cdf(a)
    }
}

fn check_sigma(sigma: f64) -> Result<(), ModelError> {
    if sigma > 0.0 && sigma.is_finite() {
        Ok(())
    } else {
        Err(ModelError::Domain(format!(
            "standard deviation must be positive and finite, got {sigma}"
        )))
    }
}

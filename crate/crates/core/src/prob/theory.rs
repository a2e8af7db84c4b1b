use rayon::prelude::*;

use super::bands::{
    clipped_gaussian_pmf, haar_band_pmfs, legall_band_pmfs, predictive_residual_pmf,
};
use super::pmf::DiscretePmf;
use super::{ModelError, NoiseSpec};
use crate::Method;

/// One point of a theoretical rate curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoryPoint {
    pub sigma: f64,
    pub method: Method,
    pub entropy_bits_per_sample: f64,
}

/// Zero-order entropy per sample after one stage of `method`.
///
/// Wavelet methods average the two band entropies, since each band holds half
/// the samples.
pub fn method_entropy(method: Method, spec: &NoiseSpec) -> f64 {
    method_entropy_of_source(method, &clipped_gaussian_pmf(spec))
}

pub fn method_entropy_of_source(method: Method, src: &DiscretePmf) -> f64 {
    match method {
        Method::Direct => src.entropy(),
        Method::Predictive => predictive_residual_pmf(src).entropy(),
        Method::Haar => {
            let (lp, hp) = haar_band_pmfs(src);
            0.5 * (lp.entropy() + hp.entropy())
        }
        Method::LeGall => {
            let (lp, hp) = legall_band_pmfs(src);
            0.5 * (lp.entropy() + hp.entropy())
        }
    }
}

/// Entropy of all four methods at every `σ`, ordered by `σ` then method.
pub fn theory_sweep(sigmas: &[f64], template: &NoiseSpec) -> Result<Vec<TheoryPoint>, ModelError> {
    if let Some(w) = sigmas.windows(2).find(|w| w[0] >= w[1]) {
        return Err(ModelError::InvalidGrid(format!(
            "sigmas must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    let specs = sigmas
        .iter()
        .map(|&s| template.with_sigma(s))
        .collect::<Result<Vec<_>, _>>()?;

    let rows: Vec<Vec<TheoryPoint>> = specs
        .par_iter()
        .map(|spec| {
            let src = clipped_gaussian_pmf(spec);
            Method::ALL
                .iter()
                .map(|&method| TheoryPoint {
                    sigma: spec.sigma(),
                    method,
                    entropy_bits_per_sample: method_entropy_of_source(method, &src),
                })
                .collect()
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

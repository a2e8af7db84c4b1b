use rayon::prelude::*;

use super::normal::{standard_cdf, standard_interval};
use super::pmf::{pmf_difference, pmf_floor_halfsum, DiscretePmf};
use super::NoiseSpec;

/// Pmf of `clip(round(mu + n), 0, 2^b − 1)` with `n ~ N(0, σ²)`.
///
/// Bin `i` collects the noise mass on `(i − mu − ½, i − mu + ½]`; the two
/// border bins also absorb everything beyond them.
pub fn clipped_gaussian_pmf(spec: &NoiseSpec) -> DiscretePmf {
    if spec.sigma() == 0.0 {
        return DiscretePmf::point(spec.mu());
    }
    let sigma = spec.sigma();
    let mu = spec.mu() as f64;
    let top = spec.max_code();
    let edge = |i: i64, side: f64| (i as f64 - mu + side) / sigma;
    let probs = (0..=top)
        .map(|i| {
            if i == 0 {
                standard_cdf(edge(0, 0.5))
            } else if i == top {
                standard_cdf(-edge(top, -0.5))
            } else {
                standard_interval(edge(i, -0.5), edge(i, 0.5))
            }
        })
        .collect();
    DiscretePmf::from_weights(0, probs)
}

/// Pmf of the one-tap prediction residual `f[k] − f[k−1]`.
pub fn predictive_residual_pmf(src: &DiscretePmf) -> DiscretePmf {
    pmf_difference(src, src)
}

/// `(lp, hp)` marginals of one integer Haar stage:
/// `hp = b − a`, `lp = ⌊(a + b) / 2⌋`.
pub fn haar_band_pmfs(src: &DiscretePmf) -> (DiscretePmf, DiscretePmf) {
    (pmf_floor_halfsum(src, src), pmf_difference(src, src))
}

/// `(lp, hp)` marginals of one LeGall 5/3 lifting stage.
///
/// `hp = x − ⌊(l + r) / 2⌋` over three samples. The low band
/// `lp = c + ⌊(hp₋ + hp₊) / 4⌋` involves five samples, and both detail terms
/// share the centre sample `c`. Conditioned on `c` they are independent, so
/// the marginal is a mixture over `c` of shifted, floored self-convolutions.
pub fn legall_band_pmfs(src: &DiscretePmf) -> (DiscretePmf, DiscretePmf) {
    let hp = pmf_difference(src, &pmf_floor_halfsum(src, src));

    let parts: Vec<(f64, DiscretePmf)> = src
        .iter()
        .filter(|&(_, p)| p > 0.0)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(c, weight)| {
            // hp given the shared sample: x − ⌊(c + y) / 2⌋
            let detail = pmf_difference(src, &src.shifted(c).floor_div(2));
            let update = detail.convolve(&detail).floor_div(4).shifted(c);
            (weight, update)
        })
        .collect();

    let lo = parts
        .iter()
        .map(|(_, q)| q.min())
        .min()
        .expect("non-empty source");
    let hi = parts
        .iter()
        .map(|(_, q)| q.max())
        .max()
        .expect("non-empty source");
    let mut acc = vec![0.0; (hi - lo + 1) as usize];
    for (weight, q) in &parts {
        let start = (q.min() - lo) as usize;
        for (a, &p) in acc[start..].iter_mut().zip(q.probs()) {
            *a += weight * p;
        }
    }
    (DiscretePmf::from_weights(lo, acc), hp)
}

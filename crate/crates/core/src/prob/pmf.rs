//! Finite probability mass functions over contiguous integer supports.
//!
//! Every constructor trims near-zero edge bins and renormalizes, so the first
//! and last stored probabilities are always strictly positive.

use super::ModelError;

/// Edge bins below this probability are dropped before renormalizing.
pub const TRIM_THRESHOLD: f64 = 1e-15;

/// Allowed deviation of the total mass from one.
pub const MASS_TOLERANCE: f64 = 1e-9;

/// A probability mass function over the integers `offset ..= offset + len - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretePmf {
    offset: i64,
    probs: Vec<f64>,
}

impl DiscretePmf {
    /// Validates raw probabilities, trims the support and renormalizes.
    pub fn new(offset: i64, probs: Vec<f64>) -> Result<Self, ModelError> {
        if let Some(bad) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(ModelError::InvalidPmf(format!(
                "probability {bad} is negative or not finite"
            )));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > MASS_TOLERANCE {
            return Err(ModelError::InvalidPmf(format!(
                "probabilities sum to {total}, expected 1"
            )));
        }
        Ok(Self::from_weights(offset, probs))
    }

    /// Point mass at `value`.
    pub fn point(value: i64) -> Self {
        Self {
            offset: value,
            probs: vec![1.0],
        }
    }

    /// Uniform distribution over `lo ..= hi`.
    pub fn uniform(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty uniform support {lo}..={hi}");
        let n = (hi - lo + 1) as usize;
        Self {
            offset: lo,
            probs: vec![1.0 / n as f64; n],
        }
    }

    /// Builds a pmf from non-negative weights of positive total, trimming
    /// edge bins below [`TRIM_THRESHOLD`] and renormalizing.
    pub(crate) fn from_weights(offset: i64, mut probs: Vec<f64>) -> Self {
        let total: f64 = probs.iter().sum();
        assert!(total > 0.0, "pmf weights have no mass");
        let first = probs
            .iter()
            .position(|&p| p / total >= TRIM_THRESHOLD)
            .expect("some bin carries the mass");
        let last = probs
            .iter()
            .rposition(|&p| p / total >= TRIM_THRESHOLD)
            .expect("some bin carries the mass");
        probs.truncate(last + 1);
        probs.drain(..first);
        let kept: f64 = probs.iter().sum();
        for p in &mut probs {
            *p /= kept;
        }
        Self {
            offset: offset + first as i64,
            probs,
        }
    }

    /// Smallest value with nonzero probability.
    pub fn min(&self) -> i64 {
        self.offset
    }

    /// Largest value with nonzero probability.
    pub fn max(&self) -> i64 {
        self.offset + self.probs.len() as i64 - 1
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Number of bins in the support.
    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Probability of `value`; zero outside the support.
    pub fn prob(&self, value: i64) -> f64 {
        let idx = value - self.offset;
        if idx < 0 {
            return 0.0;
        }
        self.probs.get(idx as usize).copied().unwrap_or(0.0)
    }

    /// `(value, probability)` pairs in increasing value order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.probs
            .iter()
            .enumerate()
            .map(move |(i, &p)| (self.offset + i as i64, p))
    }

    pub fn total_mass(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.iter().map(|(v, p)| v as f64 * p).sum()
    }

    pub fn variance(&self) -> f64 {
        let mean = self.mean();
        self.iter()
            .map(|(v, p)| {
                let d = v as f64 - mean;
                d * d * p
            })
            .sum()
    }

    /// Zero-order entropy in bits.
    pub fn entropy(&self) -> f64 {
        pmf_entropy(self)
    }

    /// Distribution of `X + shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            offset: self.offset + shift,
            probs: self.probs.clone(),
        }
    }

    /// Distribution of `⌊X / divisor⌋` (floor toward negative infinity).
    pub fn floor_div(&self, divisor: i64) -> Self {
        assert!(divisor > 0, "divisor must be positive");
        let lo = self.min().div_euclid(divisor);
        let hi = self.max().div_euclid(divisor);
        let mut out = vec![0.0; (hi - lo + 1) as usize];
        for (v, p) in self.iter() {
            out[(v.div_euclid(divisor) - lo) as usize] += p;
        }
        Self::from_weights(lo, out)
    }

    /// Distribution of `X + Y` for independent `X ~ self`, `Y ~ other`.
    pub fn convolve(&self, other: &Self) -> Self {
        Self::from_weights(
            self.offset + other.offset,
            convolve_raw(&self.probs, &other.probs),
        )
    }

    /// Total variation distance `½ Σ |p − q|` over the union of supports.
    pub fn total_variation(&self, other: &Self) -> f64 {
        let lo = self.min().min(other.min());
        let hi = self.max().max(other.max());
        0.5 * (lo..=hi)
            .map(|v| (self.prob(v) - other.prob(v)).abs())
            .sum::<f64>()
    }
}

/// Linear convolution of two weight vectors.
pub(crate) fn convolve_raw(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &pa) in a.iter().enumerate() {
        if pa == 0.0 {
            continue;
        }
        for (o, &pb) in out[i..].iter_mut().zip(b) {
            *o += pa * pb;
        }
    }
    out
}

/// `−Σ pᵢ log₂ pᵢ` with `0 · log 0 = 0`.
pub fn pmf_entropy(p: &DiscretePmf) -> f64 {
    let h: f64 = p
        .probs
        .iter()
        .filter(|&&q| q > 0.0)
        .map(|&q| -q * q.log2())
        .sum();
    h.max(0.0)
}

/// Distribution of `X − Y` for independent `X ~ a`, `Y ~ b`.
pub fn pmf_difference(a: &DiscretePmf, b: &DiscretePmf) -> DiscretePmf {
    let reversed: Vec<f64> = b.probs.iter().rev().copied().collect();
    DiscretePmf::from_weights(a.min() - b.max(), convolve_raw(&a.probs, &reversed))
}

/// Distribution of `⌊(X + Y) / 2⌋` for independent `X ~ a`, `Y ~ b`.
pub fn pmf_floor_halfsum(a: &DiscretePmf, b: &DiscretePmf) -> DiscretePmf {
    a.convolve(b).floor_div(2)
}

//! Test signals and measurements: noisy constant images, zero-order
//! statistics and binary PGM files.

mod pgm;
mod synth;

pub use pgm::{parse_pgm, read_pgm, to_pgm_bytes, write_pgm, PgmError};
pub use synth::{add_noise_to, synthesize, SynthesisSpec};

use crate::Image;

/// Exact counts per code value `0..2^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    counts: Vec<u64>,
}

impl Histogram {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, code: usize) -> u64 {
        self.counts.get(code).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Zero-order entropy of the counts in bits per sample.
    pub fn entropy(&self) -> f64 {
        entropy_of_counts(self.counts.iter().copied(), self.total())
    }
}

pub fn histogram(img: &Image) -> Histogram {
    let mut counts = vec![0u64; img.max_code() as usize + 1];
    for &s in img.samples() {
        counts[s as usize] += 1;
    }
    Histogram { counts }
}

/// `−Σ (cᵢ/N)·log₂(cᵢ/N)` over the distinct values of `values`.
///
/// Returns 0 for an empty slice.
pub fn empirical_entropy<T: Copy + Into<i64>>(values: &[T]) -> f64 {
    let mut sorted: Vec<i64> = values.iter().map(|&v| v.into()).collect();
    sorted.sort_unstable();
    let runs = sorted.chunk_by(|a, b| a == b).map(|run| run.len() as u64);
    entropy_of_counts(runs, sorted.len() as u64)
}

/// Summed in ascending value order so histogram and direct measurements agree
/// bit for bit.
fn entropy_of_counts(counts: impl Iterator<Item = u64>, n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let n = n as f64;
    let h: f64 = counts
        .filter(|&c| c > 0)
        .map(|c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum();
    h.max(0.0)
}

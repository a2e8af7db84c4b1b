use std::io::Write;
use std::path::PathBuf;

use clipnoise::codec::{compress_image, decompress, transform_planes, HEADER_LEN};
use clipnoise::prob::{center_code, method_entropy, NoiseSpec};
use clipnoise::signal::{add_noise_to, empirical_entropy, read_pgm, synthesize, SynthesisSpec};
use clipnoise::transform::max_levels;
use clipnoise::{Image, Method};
use rayon::prelude::*;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Exact model entropies only.
    Theory,
    /// Synthesize noisy images and compress them.
    Simulate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub mode: Mode,
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub points: usize,
    /// Constant level; `None` selects the center code.
    pub mu: Option<i64>,
    pub bit_depth: u32,
    pub width: usize,
    pub height: usize,
    /// Decomposition levels for the wavelet methods (simulate mode only).
    pub levels: u32,
    pub methods: Vec<Method>,
    pub seed: u64,
    /// Noise is added to this image instead of a synthetic constant one.
    pub input: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Theory,
            sigma_min: 0.01,
            sigma_max: 10f64.powf(3.66),
            points: 60,
            mu: None,
            bit_depth: 8,
            width: 512,
            height: 512,
            levels: 4,
            methods: Method::ALL.to_vec(),
            seed: 0,
            input: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub sigma: f64,
    pub method: Method,
    pub entropy_bits: f64,
    /// `⌈N·H/8⌉` plus the container header.
    pub predicted_bytes: u64,
    /// Size of the real bitstream (simulate mode only).
    pub actual_bytes: Option<u64>,
}

/// `points` values spaced evenly in `log σ`, both ends included exactly.
pub fn sigma_grid(min: f64, max: f64, points: usize) -> Vec<f64> {
    let (a, b) = (min.ln(), max.ln());
    (0..points)
        .map(|i| match i {
            0 => min,
            _ if i == points - 1 => max,
            _ => (a + (b - a) * i as f64 / (points - 1) as f64).exp(),
        })
        .collect()
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        if !(self.sigma_min > 0.0 && self.sigma_min < self.sigma_max && self.sigma_max.is_finite())
        {
            return usage(format!(
                "need 0 < sigma-min < sigma-max, got {} and {}",
                self.sigma_min, self.sigma_max
            ));
        }
        if self.points < 2 {
            return usage(format!("need at least 2 points, got {}", self.points));
        }
        if self.methods.is_empty() {
            return usage("no methods selected".into());
        }
        if self.input.is_some() && self.mode == Mode::Theory {
            return usage("--input only applies to simulate mode".into());
        }
        if self.input.is_none() {
            if self.width == 0 || self.height == 0 {
                return usage(format!("empty geometry {}x{}", self.width, self.height));
            }
            // validates bit depth and mu
            NoiseSpec::new(0.0, self.mu(), self.bit_depth)
                .map_err(|e| CliError::Usage(e.to_string()))?;
        }
        Ok(())
    }

    fn mu(&self) -> i64 {
        self.mu.unwrap_or_else(|| {
            if (1..=16).contains(&self.bit_depth) {
                center_code(self.bit_depth)
            } else {
                0
            }
        })
    }

    fn methods(&self) -> Vec<Method> {
        let mut m = self.methods.clone();
        m.sort();
        m.dedup();
        m
    }
}

/// Runs the sweep; records come sorted by `(sigma, method)`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>, CliError> {
    cfg.validate()?;
    let grid = sigma_grid(cfg.sigma_min, cfg.sigma_max, cfg.points);
    let methods = cfg.methods();
    let per_sigma: Vec<Vec<SweepRecord>> = match cfg.mode {
        Mode::Theory => {
            let n = (cfg.width * cfg.height) as u64;
            grid.par_iter()
                .map(|&sigma| {
                    let spec = NoiseSpec::new(sigma, cfg.mu(), cfg.bit_depth)?;
                    Ok(methods
                        .iter()
                        .map(|&m| record(sigma, m, method_entropy(m, &spec), n, None))
                        .collect())
                })
                .collect::<Result<_, CliError>>()?
        }
        Mode::Simulate => simulate(cfg, &grid, &methods)?,
    };
    Ok(per_sigma.into_iter().flatten().collect())
}

fn record(sigma: f64, method: Method, h: f64, n: u64, actual: Option<u64>) -> SweepRecord {
    SweepRecord {
        sigma,
        method,
        entropy_bits: h,
        predicted_bytes: (n as f64 * h / 8.0).ceil() as u64 + HEADER_LEN as u64,
        actual_bytes: actual,
    }
}

/// With an input image there is no closed-form source model, so the entropy
/// column holds the sample-weighted empirical entropy of the coded planes.
fn simulate(
    cfg: &SweepConfig,
    grid: &[f64],
    methods: &[Method],
) -> Result<Vec<Vec<SweepRecord>>, CliError> {
    let input = cfg.input.as_ref().map(read_pgm).transpose()?;
    let (w, h) = match &input {
        Some(img) => (img.width(), img.height()),
        None => (cfg.width, cfg.height),
    };
    if methods.iter().any(|m| m.wavelet().is_some())
        && !(1..=max_levels(w, h)).contains(&cfg.levels)
    {
        return Err(CliError::Usage(format!(
            "levels must be in 1..={} for a {w}x{h} image, got {}",
            max_levels(w, h),
            cfg.levels
        )));
    }
    // decode and compare a handful of grid points, ends included
    let stride = (grid.len() / 4).max(1);
    let checked = |i: usize| i.is_multiple_of(stride) || i == grid.len() - 1;

    grid.par_iter()
        .enumerate()
        .map(|(i, &sigma)| {
            let (img, model) = match &input {
                Some(base) => (add_noise_to(base, sigma, cfg.seed), None),
                None => {
                    let spec = NoiseSpec::new(sigma, cfg.mu(), cfg.bit_depth)?;
                    let synth = SynthesisSpec::new(w, h, spec, cfg.seed)
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                    (synthesize(&synth), Some(spec))
                }
            };
            methods
                .iter()
                .map(|&m| {
                    let bs = compress_image(&img, m, cfg.levels)?;
                    if checked(i) && decompress(&bs)? != img {
                        return Err(CliError::Mismatch { sigma, method: m });
                    }
                    let entropy = match &model {
                        Some(spec) => method_entropy(m, spec),
                        None => plane_entropy(&img, m, cfg.levels)?,
                    };
                    Ok(record(
                        sigma,
                        m,
                        entropy,
                        img.len() as u64,
                        Some(bs.len() as u64),
                    ))
                })
                .collect()
        })
        .collect()
}

fn plane_entropy(img: &Image, method: Method, levels: u32) -> Result<f64, CliError> {
    let planes = transform_planes(img, method, levels)?;
    let bits: f64 = planes
        .iter()
        .map(|p| empirical_entropy(p.coeffs()) * p.len() as f64)
        .sum();
    Ok(bits / img.len() as f64)
}

/// Writes the header `sigma,method,entropy_bits,predicted_bytes,actual_bytes`
/// and one row per record; `actual_bytes` is empty in theory mode.
pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record([
        "sigma",
        "method",
        "entropy_bits",
        "predicted_bytes",
        "actual_bytes",
    ])?;
    for r in records {
        w.write_record([
            r.sigma.to_string(),
            r.method.name().to_string(),
            r.entropy_bits.to_string(),
            r.predicted_bytes.to_string(),
            r.actual_bytes.map(|b| b.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

//! Sweeps over the noise level and single-file compression, shared by the
//! `clipnoise` binary and its tests.

pub mod files;
pub mod sweep;

use std::io;

use clipnoise::codec::CodecError;
use clipnoise::prob::ModelError;
use clipnoise::signal::PgmError;
use thiserror::Error;

pub use sweep::{run_sweep, sigma_grid, write_csv, Mode, SweepConfig, SweepRecord};

#[derive(Debug, Error)]
pub enum CliError {
    /// A flag value or combination that can never work.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    Pgm(#[from] PgmError),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("decoded image differs from the input at sigma {sigma} ({method})")]
    Mismatch {
        sigma: f64,
        method: clipnoise::Method,
    },
}

impl CliError {
    /// Exit status: 2 for usage errors, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

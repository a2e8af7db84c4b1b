use std::fs;
use std::path::Path;

use clipnoise::codec::{compress_image, decompress, Bitstream};
use clipnoise::signal::{parse_pgm, to_pgm_bytes};
use clipnoise::Method;

use crate::CliError;

/// Byte counts of one file conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sizes {
    pub input: u64,
    pub output: u64,
}

/// PGM in, bitstream out.
pub fn compress_file(
    input: &Path,
    output: &Path,
    method: Method,
    levels: u32,
) -> Result<Sizes, CliError> {
    let bytes = fs::read(input)?;
    let img = parse_pgm(&bytes)?;
    let stream = compress_image(&img, method, levels)?.to_bytes();
    fs::write(output, &stream)?;
    Ok(Sizes {
        input: bytes.len() as u64,
        output: stream.len() as u64,
    })
}

/// Bitstream in, PGM out.
pub fn decompress_file(input: &Path, output: &Path) -> Result<Sizes, CliError> {
    let bytes = fs::read(input)?;
    let img = decompress(&Bitstream::from_bytes(&bytes)?)?;
    let pgm = to_pgm_bytes(&img);
    fs::write(output, &pgm)?;
    Ok(Sizes {
        input: bytes.len() as u64,
        output: pgm.len() as u64,
    })
}

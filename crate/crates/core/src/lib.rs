//! Modeling and measuring how quantizer clipping of additive Gaussian noise
//! affects lossless image coding.
//!
//! - [`prob`]: exact pmfs of clipped, quantized noise pushed through direct,
//!   predictive, Haar and LeGall 5/3 coding, and their entropies.
//! - [`transform`]: the matching integer-reversible transforms on images.
//! - [`codec`]: an adaptive range coder and container that turns those
//!   transforms into real lossless bitstreams.
//! - [`signal`]: noisy test images, zero-order statistics and PGM I/O.

pub mod codec;
pub mod image;
mod method;
pub mod prob;
pub mod signal;
pub mod transform;

pub use image::{CoeffPlane, Image, ImageError};
pub use method::{Method, UnknownMethod, Wavelet};

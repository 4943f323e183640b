//! Shared numerical machinery: complex matrices, reproducible random
//! streams, and adaptive quadrature.

mod matrix;
mod quadrature;
mod random;

pub use matrix::{dot, hermitian_dot, Complex, ComplexMatrix};
pub use quadrature::{integrate, integrate_segments, QuadratureError};
pub use random::{derive_stream, sample_complex_gaussian, RandomStream};

use thiserror::Error;

/// Errors raised by the numerics layer.
#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("variance must be positive, got {0}")]
    NonPositiveVariance(f64),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

//! Opportunistic beamforming with more transmit beams than antennas.
//!
//! A base station with `N_t` antennas can serve up to `N_t^2` single-antenna
//! users at once by transmitting on `N_t < N <= N_t^2` deliberately
//! low-correlation beams and scheduling, per beam, the user whose fading
//! channel happens to align best. This crate provides:
//!
//! - [`frames`]: Fourier, Grassmannian, and mutually-unbiased-bases
//!   constructions of the beamforming matrix, plus correlation analysis.
//! - [`channel`]: Monte Carlo simulation of the SINR-feedback scheduling
//!   loop over Rayleigh fading.
//! - [`evt`]: extreme-value analysis of the maximum per-beam SINR and the
//!   resulting throughput bounds.
//! - [`numerics`]: the shared complex arithmetic, reproducible random
//!   streams, and adaptive quadrature underneath.

pub mod channel;
pub mod evt;
pub mod frames;
pub mod numerics;

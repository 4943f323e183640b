//! Equiangular Grassmannian frames: the explicit 2x4 packing and the
//! harmonic (difference-set) family that attains the Welch bound with the
//! largest possible number of beams.

use super::{BeamformingMatrix, Construction, DifferenceSet, FrameError};
use crate::numerics::Complex;

/// The fixed 2x4 optimal Grassmannian frame, entries quoted to four
/// decimals. Its columns are unit-norm and equiangular to that precision
/// and attain the Welch bound for (2, 4).
pub fn grassmannian_2x4() -> BeamformingMatrix {
    let c = Complex::new;
    let columns = vec![
        vec![c(-0.1612, -0.7348), c(-0.5135, -0.4128)],
        vec![c(-0.0787, -0.3192), c(-0.2506, 0.9106)],
        vec![c(-0.2399, 0.5985), c(-0.7641, -0.0212)],
        vec![c(-0.9541, 0.0), c(0.2996, 0.0)],
    ];
    BeamformingMatrix::from_columns(2, columns, Construction::GrassmannianExplicit)
        .expect("the quoted matrix is unit-norm within its 1e-3 tolerance")
}

/// Exhaustive search for the first perfect difference set mod
/// `N = n_t^2 - n_t + 1`, with `d_1 = 0` fixed and candidates enumerated as
/// increasing tuples in lexicographic order.
pub fn difference_set_search(n_t: usize) -> Result<DifferenceSet, FrameError> {
    if !(n_t == 3 || n_t == 4) {
        return Err(FrameError::UnsupportedAntennaCount {
            n_t,
            reason: "perfect difference sets are searched for 3 or 4 antennas \
                     (one more than a prime power)"
                .into(),
        });
    }
    let modulus = (n_t * n_t - n_t + 1) as u64;
    let k = n_t;
    // elements[0] = 0 fixed; remaining k-1 elements range over 1..modulus.
    let mut tail: Vec<u64> = (1..k as u64).collect();
    loop {
        let mut elements = vec![0u64];
        elements.extend_from_slice(&tail);
        if let Ok(ds) = DifferenceSet::new(modulus, elements) {
            return Ok(ds);
        }
        // Next increasing tuple.
        let mut i = k - 1;
        loop {
            if i == 0 {
                return Err(FrameError::InvalidDifferenceSet(format!(
                    "no perfect difference set exists mod {modulus}"
                )));
            }
            i -= 1;
            if tail[i] != (modulus - (k - 1 - i) as u64) {
                break;
            }
        }
        tail[i] += 1;
        for j in (i + 1)..(k - 1) {
            tail[j] = tail[j - 1] + 1;
        }
    }
}

/// Harmonic frame over a perfect difference set: column `n` (1-based,
/// `n = 1..N`) has entries `exp(j*2*pi*n*d_i/N)/sqrt(n_t)`. Every pair of
/// distinct columns has correlation `sqrt(n_t - 1)/n_t`.
pub fn harmonic_frame(n_t: usize, ds: &DifferenceSet) -> Result<BeamformingMatrix, FrameError> {
    let expected_modulus = (n_t * n_t - n_t + 1) as u64;
    if ds.modulus() != expected_modulus || ds.elements().len() != n_t {
        return Err(FrameError::InvalidDifferenceSet(format!(
            "difference set has modulus {} with {} elements; {n_t} antennas need modulus \
             {expected_modulus} with {n_t} elements",
            ds.modulus(),
            ds.elements().len()
        )));
    }
    let n_beams = expected_modulus as usize;
    let scale = 1.0 / (n_t as f64).sqrt();
    let base = std::f64::consts::TAU / n_beams as f64;
    let columns = (1..=n_beams)
        .map(|n| {
            ds.elements()
                .iter()
                .map(|&d| Complex::from_polar(scale, base * (n as u64 * d) as f64))
                .collect()
        })
        .collect();
    BeamformingMatrix::from_columns(
        n_t,
        columns,
        Construction::Harmonic {
            modulus: ds.modulus(),
            difference_set: ds.elements().to_vec(),
        },
    )
}

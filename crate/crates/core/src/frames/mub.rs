//! Mutually unbiased bases. A single unitary generator `D` with
//! `D^{n_t+1} = I` yields `n_t + 1` pairwise mutually unbiased bases as its
//! powers; concatenating `D, D^2, ..., D^{n_t}` gives an `n_t x n_t^2` frame
//! whose beams are orthogonal within a basis and have correlation
//! `1/sqrt(n_t)` across bases. Generators of this form exist for antenna
//! counts that are powers of two, so 2 and 4 are supported and 3 is not.

use super::{BeamformingMatrix, Construction, FrameError};
use crate::numerics::{Complex, ComplexMatrix};

/// The unitary generator `D` for `n_t` antennas.
pub fn mub_generator(n_t: usize) -> Result<ComplexMatrix, FrameError> {
    let c = Complex::new;
    match n_t {
        2 => {
            // ((1+j)/2) * [[-1, j], [1, j]]
            let s = c(0.5, 0.5);
            Ok(ComplexMatrix::from_rows(
                2,
                2,
                &[
                    s * c(-1.0, 0.0),
                    s * c(0.0, 1.0),
                    s * c(1.0, 0.0),
                    s * c(0.0, 1.0),
                ],
            ))
        }
        4 => {
            let j = c(0.0, 1.0);
            let o = c(1.0, 0.0);
            let rows = [
                [-j, -j, -j, -j],
                [o, -o, o, -o],
                [-j, -j, j, j],
                [-o, o, o, -o],
            ];
            let entries: Vec<Complex> = rows
                .iter()
                .flat_map(|r| r.iter().map(|&z| z * 0.5))
                .collect();
            Ok(ComplexMatrix::from_rows(4, 4, &entries))
        }
        other => Err(FrameError::UnsupportedAntennaCount {
            n_t: other,
            reason: "mutually unbiased generators of this form exist only for \
                     power-of-two antenna counts (2 or 4); there is none for 3"
                .into(),
        }),
    }
}

/// Frame `[D, D^2, ..., D^{n_t}]` with `N = n_t^2` beams. The power
/// `D^{n_t+1} = I` (plain antenna selection) is deliberately left out.
pub fn mub_frame(n_t: usize) -> Result<BeamformingMatrix, FrameError> {
    let d = mub_generator(n_t)?;
    let mut columns = Vec::with_capacity(n_t * n_t);
    let mut power = d.clone();
    for p in 1..=n_t {
        if p > 1 {
            power = power.matmul(&d);
        }
        for jcol in 0..n_t {
            columns.push(power.column(jcol));
        }
    }
    BeamformingMatrix::from_columns(n_t, columns, Construction::Mub)
}

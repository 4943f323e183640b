//! Fourier-based constructions: row selections of a discrete Fourier matrix
//! and the exhaustive search for the selection with the smallest maximum
//! cross-correlation.

use super::{BeamformingMatrix, Construction, FrameError};
use crate::numerics::Complex;

/// Frame formed by `n_t` selected rows (1-based) of the `n_beams`-point
/// Fourier matrix, columns scaled to unit norm.
pub fn fourier_frame_sized(
    n_t: usize,
    n_beams: usize,
    selected_rows: &[usize],
) -> Result<BeamformingMatrix, FrameError> {
    if selected_rows.len() != n_t {
        return Err(FrameError::InvalidRowSelection(format!(
            "need exactly {n_t} rows, got {}",
            selected_rows.len()
        )));
    }
    for (i, &r) in selected_rows.iter().enumerate() {
        if r < 1 || r > n_beams {
            return Err(FrameError::InvalidRowSelection(format!(
                "row {r} outside [1, {n_beams}]"
            )));
        }
        if selected_rows[..i].contains(&r) {
            return Err(FrameError::InvalidRowSelection(format!("row {r} repeated")));
        }
    }
    let scale = 1.0 / (n_t as f64).sqrt();
    let base = -std::f64::consts::TAU / n_beams as f64;
    let columns = (0..n_beams)
        .map(|n| {
            selected_rows
                .iter()
                .map(|&r| {
                    let exponent = ((r - 1) * n) as f64;
                    Complex::from_polar(scale, base * exponent)
                })
                .collect()
        })
        .collect();
    BeamformingMatrix::from_columns(
        n_t,
        columns,
        Construction::Fourier {
            selected_rows: selected_rows.to_vec(),
        },
    )
}

/// Frame formed by `n_t` selected rows (1-based) of the `n_t^2`-point Fourier
/// matrix; `N = n_t^2` beams.
pub fn fourier_frame(n_t: usize, selected_rows: &[usize]) -> Result<BeamformingMatrix, FrameError> {
    fourier_frame_sized(n_t, n_t * n_t, selected_rows)
}

/// Closed-form correlation at the given column lag for the frame built from
/// the FIRST `n_t` rows of the `n_t^2`-point Fourier matrix.
pub fn fourier_correlation_closed_form(n_t: usize, lag: i64) -> f64 {
    let n = (n_t * n_t) as i64;
    let lag = lag.rem_euclid(n);
    if lag == 0 {
        return 1.0;
    }
    // The numerator is sin of an integer multiple of pi whenever n_t
    // divides the lag; that must be exactly zero, not rounding noise.
    if lag % n_t as i64 == 0 {
        return 0.0;
    }
    let num = (std::f64::consts::PI * lag as f64 / n_t as f64).sin();
    let den = (std::f64::consts::PI * lag as f64 / n as f64).sin();
    (num / den).abs() / n_t as f64
}

/// Correlation magnitude at column lag `lag` for a row-selected Fourier
/// frame. Row-selected Fourier frames are circulant: the correlation depends
/// only on `(l - n) mod N`.
fn lag_correlation(n_t: usize, n_beams: usize, rows0: &[usize], lag: usize) -> f64 {
    let base = -std::f64::consts::TAU / n_beams as f64;
    let sum: Complex = rows0
        .iter()
        .map(|&r| Complex::from_polar(1.0, base * (r * lag) as f64))
        .sum();
    sum.norm() / n_t as f64
}

fn subset_delta_max(n_t: usize, n_beams: usize, rows0: &[usize]) -> f64 {
    (1..n_beams)
        .map(|lag| lag_correlation(n_t, n_beams, rows0, lag))
        .fold(0.0, f64::max)
}

/// Exhaustively scan all `C(n_beams, n_t)` row subsets of the
/// `n_beams`-point Fourier matrix and return the 1-based subset with the
/// lowest maximum cross-correlation (ties: lexicographically smallest).
pub fn optimal_row_search_sized(
    n_t: usize,
    n_beams: usize,
) -> Result<(Vec<usize>, f64), FrameError> {
    if !(2..=4).contains(&n_t) {
        return Err(FrameError::UnsupportedAntennaCount {
            n_t,
            reason: "row search is defined for 2..=4 antennas".into(),
        });
    }
    if n_beams < n_t {
        return Err(FrameError::InvalidRowSelection(format!(
            "beam count {n_beams} below antenna count {n_t}"
        )));
    }
    let mut best_rows: Option<Vec<usize>> = None;
    let mut best_delta = f64::INFINITY;
    let mut rows0: Vec<usize> = (0..n_t).collect();
    loop {
        let delta = subset_delta_max(n_t, n_beams, &rows0);
        // Strict improvement keeps the first (lexicographically smallest)
        // subset on ties.
        if delta < best_delta - 1e-12 {
            best_delta = delta;
            best_rows = Some(rows0.clone());
        }
        // Advance to the next combination in lexicographic order.
        let mut i = n_t;
        loop {
            if i == 0 {
                let rows = best_rows
                    .expect("at least one subset was scanned")
                    .iter()
                    .map(|r| r + 1)
                    .collect();
                return Ok((rows, best_delta));
            }
            i -= 1;
            if rows0[i] != i + n_beams - n_t {
                break;
            }
        }
        rows0[i] += 1;
        for j in (i + 1)..n_t {
            rows0[j] = rows0[j - 1] + 1;
        }
    }
}

/// Row search over the full `n_t^2`-point Fourier matrix.
pub fn optimal_row_search(n_t: usize) -> Result<(Vec<usize>, f64), FrameError> {
    optimal_row_search_sized(n_t, n_t * n_t)
}

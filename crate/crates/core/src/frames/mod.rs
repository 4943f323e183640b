//! Beamforming frame constructions and their correlation analysis.
//!
//! A beamforming matrix is a set of `N` unit-norm beam vectors in `C^{N_t}`
//! with `N_t <= N <= N_t^2`. Once `N > N_t` the beams cannot all be
//! orthogonal, so each construction here tries to keep the maximum pairwise
//! correlation as small as possible: Fourier row selections, equiangular
//! Grassmannian packings (explicit and harmonic/difference-set based), and
//! mutually unbiased bases.

mod fourier;
mod grassmannian;
mod io;
mod mub;
mod registry;

pub use fourier::{
    fourier_correlation_closed_form, fourier_frame, fourier_frame_sized, optimal_row_search,
    optimal_row_search_sized,
};
pub use grassmannian::{difference_set_search, grassmannian_2x4, harmonic_frame};
pub use io::{frame_from_json, frame_to_json};
pub use mub::{mub_frame, mub_generator};
pub use registry::ConstructionSpec;

use crate::numerics::{hermitian_dot, Complex, ComplexMatrix, RandomStream};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Tolerance under which per-column interference sums are considered uniform.
pub const UNIFORMITY_TOL: f64 = 1e-9;

/// Errors from frame construction and validation.
#[derive(Debug, Error)]
pub enum FrameError {
    #[error("invalid row selection: {0}")]
    InvalidRowSelection(String),
    #[error("unsupported antenna count {n_t}: {reason}")]
    UnsupportedAntennaCount { n_t: usize, reason: String },
    #[error("invalid difference set: {0}")]
    InvalidDifferenceSet(String),
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("frame JSON: {0}")]
    Json(String),
}

/// Provenance of a beamforming matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    /// Rows (1-based) selected from the `N`-point Fourier matrix.
    Fourier { selected_rows: Vec<usize> },
    /// The fixed 2x4 equiangular frame with entries quoted to four decimals.
    GrassmannianExplicit,
    /// Harmonic frame: exponential characters indexed by a difference set.
    Harmonic { modulus: u64, difference_set: Vec<u64> },
    /// Concatenated powers of a mutually-unbiased-bases generator.
    Mub,
    /// Isotropically random orthonormal columns (the `N = N_t` baseline).
    OrthonormalRandom,
}

impl Construction {
    /// Column-norm tolerance appropriate to the construction. Computed
    /// constructions are exact to rounding; the explicit 2x4 matrix is quoted
    /// to four decimals, so its columns are only unit within ~1e-3.
    pub fn norm_tolerance(&self) -> f64 {
        match self {
            Construction::GrassmannianExplicit => 1e-3,
            _ => 1e-12,
        }
    }
}

/// A set of `N` unit-norm transmit beams over `N_t` antennas.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamformingMatrix {
    n_t: usize,
    n_beams: usize,
    columns: Vec<Vec<Complex>>,
    construction: Construction,
}

impl BeamformingMatrix {
    /// Build from explicit columns, validating shape and normalization.
    pub fn from_columns(
        n_t: usize,
        columns: Vec<Vec<Complex>>,
        construction: Construction,
    ) -> Result<Self, FrameError> {
        if !(1..=4).contains(&n_t) {
            return Err(FrameError::InvalidFrame(format!(
                "antenna count must be in 1..=4, got {n_t}"
            )));
        }
        let n_beams = columns.len();
        if n_beams < n_t || n_beams > n_t * n_t {
            return Err(FrameError::InvalidFrame(format!(
                "beam count {n_beams} outside [{n_t}, {}]",
                n_t * n_t
            )));
        }
        let tol = construction.norm_tolerance();
        for (j, col) in columns.iter().enumerate() {
            if col.len() != n_t {
                return Err(FrameError::InvalidFrame(format!(
                    "column {} has length {}, want {n_t}",
                    j + 1,
                    col.len()
                )));
            }
            let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if (norm - 1.0).abs() > tol {
                return Err(FrameError::InvalidFrame(format!(
                    "column {} has norm {norm}, want 1 within {tol:e}",
                    j + 1
                )));
            }
        }
        Ok(Self {
            n_t,
            n_beams,
            columns,
            construction,
        })
    }

    pub fn n_t(&self) -> usize {
        self.n_t
    }

    pub fn n_beams(&self) -> usize {
        self.n_beams
    }

    /// Beam vector at 0-based column index `j`.
    pub fn column(&self, j: usize) -> &[Complex] {
        &self.columns[j]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[Complex]> {
        self.columns.iter().map(|c| c.as_slice())
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    /// The `N_t x N` matrix form.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.n_t, self.n_beams);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, &z) in col.iter().enumerate() {
                m[(i, j)] = z;
            }
        }
        m
    }
}

/// Pairwise beam correlations of a frame.
#[derive(Debug, Clone)]
pub struct CorrelationProfile {
    pairwise: Vec<Vec<f64>>,
    delta_max: f64,
    per_column_delta_sq: Vec<f64>,
    delta_hat_sq: Option<f64>,
}

impl CorrelationProfile {
    /// `|b_l^H b_n|` magnitudes, unit diagonal.
    pub fn pairwise(&self) -> &[Vec<f64>] {
        &self.pairwise
    }

    /// Largest off-diagonal correlation.
    pub fn delta_max(&self) -> f64 {
        self.delta_max
    }

    /// Per column `n`: sum over `l != n` of `|b_l^H b_n|^2`.
    pub fn per_column_delta_sq(&self) -> &[f64] {
        &self.per_column_delta_sq
    }

    /// The common per-column interference constant, set only when the
    /// per-column sums agree within [`UNIFORMITY_TOL`].
    pub fn delta_hat_sq(&self) -> Option<f64> {
        self.delta_hat_sq
    }

    /// Like [`delta_hat_sq`](Self::delta_hat_sq) but with a caller-chosen
    /// uniformity tolerance; used to accept frames whose entries are quoted
    /// to a few decimals.
    pub fn uniform_delta_sq(&self, tol: f64) -> Option<f64> {
        let (lo, hi) = self
            .per_column_delta_sq
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            });
        if hi - lo <= tol {
            let mean =
                self.per_column_delta_sq.iter().sum::<f64>() / self.per_column_delta_sq.len() as f64;
            Some(mean)
        } else {
            None
        }
    }

    /// Standard deviation of the off-diagonal correlations (zero for an
    /// equiangular frame).
    pub fn offdiagonal_stddev(&self) -> f64 {
        let n = self.pairwise.len();
        let mut vals = Vec::with_capacity(n * (n - 1));
        for l in 0..n {
            for c in 0..n {
                if l != c {
                    vals.push(self.pairwise[l][c]);
                }
            }
        }
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        (vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / vals.len() as f64).sqrt()
    }
}

/// Compute the pairwise correlation structure of `frame`.
pub fn correlation_profile(frame: &BeamformingMatrix) -> CorrelationProfile {
    let n = frame.n_beams();
    let mut pairwise = vec![vec![0.0; n]; n];
    for l in 0..n {
        pairwise[l][l] = 1.0;
        for c in (l + 1)..n {
            let mag = hermitian_dot(frame.column(l), frame.column(c)).norm();
            pairwise[l][c] = mag;
            pairwise[c][l] = mag;
        }
    }
    let mut delta_max = 0.0_f64;
    let mut per_column = vec![0.0; n];
    for l in 0..n {
        for c in 0..n {
            if l != c {
                delta_max = delta_max.max(pairwise[l][c]);
                per_column[c] += pairwise[l][c] * pairwise[l][c];
            }
        }
    }
    let mut profile = CorrelationProfile {
        pairwise,
        delta_max,
        per_column_delta_sq: per_column,
        delta_hat_sq: None,
    };
    profile.delta_hat_sq = profile.uniform_delta_sq(UNIFORMITY_TOL);
    profile
}

/// Lower bound on the maximum correlation of any `N`-element unit-norm frame
/// in `C^{N_t}`.
pub fn welch_lower_bound(n_t: usize, n_beams: usize) -> f64 {
    assert!(n_beams >= n_t && n_t >= 1, "need n_beams >= n_t >= 1");
    if n_beams == n_t {
        return 0.0;
    }
    (((n_beams - n_t) as f64) / ((n_t * (n_beams - 1)) as f64)).sqrt()
}

/// Rotate column `n` by `exp(j*phases[n])`. Pure phase rotations leave every
/// pairwise correlation magnitude unchanged.
pub fn apply_phases(
    frame: &BeamformingMatrix,
    phases: &[f64],
) -> Result<BeamformingMatrix, FrameError> {
    if phases.len() != frame.n_beams() {
        return Err(FrameError::InvalidFrame(format!(
            "got {} phases for {} beams",
            phases.len(),
            frame.n_beams()
        )));
    }
    let columns = frame
        .columns
        .iter()
        .zip(phases)
        .map(|(col, &th)| {
            let rot = Complex::from_polar(1.0, th);
            col.iter().map(|&z| z * rot).collect()
        })
        .collect();
    Ok(BeamformingMatrix {
        n_t: frame.n_t,
        n_beams: frame.n_beams,
        columns,
        construction: frame.construction.clone(),
    })
}

/// Per-slot randomization: draw one uniform phase per column (in column
/// order) and rotate. Consumes exactly `n_beams` uniform draws.
pub fn randomize_phases(frame: &BeamformingMatrix, stream: &mut RandomStream) -> BeamformingMatrix {
    let phases: Vec<f64> = (0..frame.n_beams()).map(|_| stream.phase()).collect();
    apply_phases(frame, &phases).expect("phase count matches beam count")
}

/// Isotropically distributed orthonormal `N_t x N_t` beamforming matrix, the
/// conventional orthogonal baseline. Consumes `2*n_t^2` normal draws
/// (row-major complex entries), then orthonormalizes.
pub fn random_orthonormal(n_t: usize, stream: &mut RandomStream) -> BeamformingMatrix {
    assert!((1..=4).contains(&n_t), "antenna count must be in 1..=4");
    // Row-major i.i.d. complex Gaussian draw.
    let mut entries = vec![vec![Complex::new(0.0, 0.0); n_t]; n_t];
    for row in entries.iter_mut() {
        for z in row.iter_mut() {
            let re = stream.standard_normal();
            let im = stream.standard_normal();
            *z = Complex::new(re, im);
        }
    }
    let mut cols: Vec<Vec<Complex>> = (0..n_t)
        .map(|j| (0..n_t).map(|i| entries[i][j]).collect())
        .collect();
    // Modified Gram-Schmidt with a second sweep to push the Gram matrix to
    // rounding accuracy.
    for j in 0..n_t {
        for _ in 0..2 {
            for i in 0..j {
                let proj = hermitian_dot(&cols[i], &cols[j]);
                let qi = cols[i].clone();
                for (cj, qi) in cols[j].iter_mut().zip(qi) {
                    *cj -= proj * qi;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    BeamformingMatrix {
        n_t,
        n_beams: n_t,
        columns: cols,
        construction: Construction::OrthonormalRandom,
    }
}

/// Ordered residues whose pairwise differences cover every nonzero residue
/// mod `modulus` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceSet {
    modulus: u64,
    elements: Vec<u64>,
}

impl DifferenceSet {
    /// Validate by direct enumeration of all pairwise differences.
    pub fn new(modulus: u64, elements: Vec<u64>) -> Result<Self, FrameError> {
        let k = elements.len() as u64;
        if modulus < 2 || k < 2 {
            return Err(FrameError::InvalidDifferenceSet(format!(
                "need modulus >= 2 and at least 2 elements, got modulus {modulus}, {k} elements"
            )));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) || *elements.last().unwrap() >= modulus {
            return Err(FrameError::InvalidDifferenceSet(
                "elements must be strictly increasing and less than the modulus".into(),
            ));
        }
        if k * (k - 1) != modulus - 1 {
            return Err(FrameError::InvalidDifferenceSet(format!(
                "{k} elements produce {} differences; a perfect set mod {modulus} needs {}",
                k * (k - 1),
                modulus - 1
            )));
        }
        let mut seen = vec![false; modulus as usize];
        for &a in &elements {
            for &b in &elements {
                if a != b {
                    let d = ((a + modulus) - b) % modulus;
                    if seen[d as usize] {
                        return Err(FrameError::InvalidDifferenceSet(format!(
                            "difference {d} occurs more than once"
                        )));
                    }
                    seen[d as usize] = true;
                }
            }
        }
        // Count check above guarantees full coverage once uniqueness holds.
        Ok(Self { modulus, elements })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }
}

//! Named construction registry. Maps a construction label plus an antenna
//! count onto a concrete frame, validating availability (e.g. there is no
//! MUB generator for three antennas).

use super::{
    difference_set_search, fourier_frame_sized, grassmannian_2x4, harmonic_frame, mub_frame,
    optimal_row_search_sized, BeamformingMatrix, FrameError,
};
use serde::{Deserialize, Serialize};

/// Which beamforming construction a simulation uses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum ConstructionSpec {
    /// Row-selected Fourier frame; `None` means the first `n_t` rows.
    Fourier { selected_rows: Option<Vec<usize>> },
    /// Fourier frame over the exhaustively searched optimal row subset.
    FourierOpt,
    /// Best equiangular packing for the antenna count: the explicit 2x4
    /// frame, or the harmonic frame with the maximal beam count.
    Grassmannian,
    /// Harmonic (difference-set) frame.
    Harmonic,
    /// Mutually-unbiased-bases frame.
    Mub,
    /// Random orthonormal columns, drawn fresh every slot (`N = N_t`).
    Orthonormal,
}

impl ConstructionSpec {
    /// Registry key, as used on the command line.
    pub fn label(&self) -> &'static str {
        match self {
            ConstructionSpec::Fourier { .. } => "fourier",
            ConstructionSpec::FourierOpt => "fourier-opt",
            ConstructionSpec::Grassmannian => "grassmannian",
            ConstructionSpec::Harmonic => "harmonic",
            ConstructionSpec::Mub => "mub",
            ConstructionSpec::Orthonormal => "orthonormal",
        }
    }

    /// Beam count the construction naturally produces for `n_t` antennas.
    pub fn default_n_beams(&self, n_t: usize) -> usize {
        match self {
            ConstructionSpec::Fourier { .. }
            | ConstructionSpec::FourierOpt
            | ConstructionSpec::Mub => n_t * n_t,
            ConstructionSpec::Grassmannian => {
                if n_t == 2 {
                    4
                } else {
                    n_t * n_t - n_t + 1
                }
            }
            ConstructionSpec::Harmonic => n_t * n_t - n_t + 1,
            ConstructionSpec::Orthonormal => n_t,
        }
    }

    /// Build the fixed base frame, or `None` for the per-slot random
    /// orthonormal baseline.
    pub fn build(&self, n_t: usize, n_beams: usize) -> Result<Option<BeamformingMatrix>, FrameError> {
        if !(1..=4).contains(&n_t) {
            return Err(FrameError::UnsupportedAntennaCount {
                n_t,
                reason: "antenna count must be in 1..=4".into(),
            });
        }
        match self {
            ConstructionSpec::Fourier { selected_rows } => {
                let rows: Vec<usize> = match selected_rows {
                    Some(r) => r.clone(),
                    None => (1..=n_t).collect(),
                };
                fourier_frame_sized(n_t, n_beams, &rows).map(Some)
            }
            ConstructionSpec::FourierOpt => {
                let (rows, _) = optimal_row_search_sized(n_t, n_beams)?;
                fourier_frame_sized(n_t, n_beams, &rows).map(Some)
            }
            ConstructionSpec::Grassmannian => {
                let expected = self.default_n_beams(n_t);
                if n_beams != expected {
                    return Err(FrameError::InvalidFrame(format!(
                        "grassmannian construction for {n_t} antennas has {expected} beams, \
                         got {n_beams}"
                    )));
                }
                if n_t == 2 {
                    Ok(Some(grassmannian_2x4()))
                } else {
                    let ds = difference_set_search(n_t)?;
                    harmonic_frame(n_t, &ds).map(Some)
                }
            }
            ConstructionSpec::Harmonic => {
                let expected = n_t * n_t - n_t + 1;
                if n_beams != expected {
                    return Err(FrameError::InvalidFrame(format!(
                        "harmonic construction for {n_t} antennas has {expected} beams, \
                         got {n_beams}"
                    )));
                }
                let ds = difference_set_search(n_t)?;
                harmonic_frame(n_t, &ds).map(Some)
            }
            ConstructionSpec::Mub => {
                if n_beams != n_t * n_t {
                    return Err(FrameError::InvalidFrame(format!(
                        "mub construction for {n_t} antennas has {} beams, got {n_beams}",
                        n_t * n_t
                    )));
                }
                mub_frame(n_t).map(Some)
            }
            ConstructionSpec::Orthonormal => {
                if n_beams != n_t {
                    return Err(FrameError::InvalidFrame(format!(
                        "orthonormal baseline has n_beams = n_t = {n_t}, got {n_beams}"
                    )));
                }
                Ok(None)
            }
        }
    }
}

//! JSON interchange for frames: `{n_t, n, construction, entries}` with
//! entries as `[re, im]` pairs in row-major order. serde_json emits the
//! shortest decimal that round-trips each f64, so export/import is lossless.

use super::{BeamformingMatrix, Construction, FrameError};
use crate::numerics::Complex;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct FrameJson {
    n_t: usize,
    n: usize,
    construction: Construction,
    entries: Vec<[f64; 2]>,
}

/// Serialize a frame to its JSON interchange form.
pub fn frame_to_json(frame: &BeamformingMatrix) -> String {
    let mut entries = Vec::with_capacity(frame.n_t() * frame.n_beams());
    for i in 0..frame.n_t() {
        for j in 0..frame.n_beams() {
            let z = frame.column(j)[i];
            entries.push([z.re, z.im]);
        }
    }
    let doc = FrameJson {
        n_t: frame.n_t(),
        n: frame.n_beams(),
        construction: frame.construction().clone(),
        entries,
    };
    serde_json::to_string_pretty(&doc).expect("frame serialization cannot fail")
}

/// Parse and validate a frame from its JSON interchange form.
pub fn frame_from_json(text: &str) -> Result<BeamformingMatrix, FrameError> {
    let doc: FrameJson = serde_json::from_str(text).map_err(|e| FrameError::Json(e.to_string()))?;
    if doc.entries.len() != doc.n_t * doc.n {
        return Err(FrameError::Json(format!(
            "expected {} entries for a {}x{} frame, got {}",
            doc.n_t * doc.n,
            doc.n_t,
            doc.n,
            doc.entries.len()
        )));
    }
    let columns = (0..doc.n)
        .map(|j| {
            (0..doc.n_t)
                .map(|i| {
                    let [re, im] = doc.entries[i * doc.n + j];
                    Complex::new(re, im)
                })
                .collect()
        })
        .collect();
    BeamformingMatrix::from_columns(doc.n_t, columns, doc.construction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{
        correlation_profile, fourier_frame, grassmannian_2x4, harmonic_frame, mub_frame,
        difference_set_search,
    };

    #[test]
    fn round_trip_is_bit_exact() {
        let frames = vec![
            fourier_frame(3, &[3, 7, 9]).unwrap(),
            grassmannian_2x4(),
            harmonic_frame(3, &difference_set_search(3).unwrap()).unwrap(),
            mub_frame(4).unwrap(),
        ];
        for frame in frames {
            let text = frame_to_json(&frame);
            let back = frame_from_json(&text).unwrap();
            assert_eq!(frame.n_t(), back.n_t());
            assert_eq!(frame.n_beams(), back.n_beams());
            assert_eq!(frame.construction(), back.construction());
            for j in 0..frame.n_beams() {
                for i in 0..frame.n_t() {
                    // Bit-exact, not approximate.
                    assert_eq!(frame.column(j)[i], back.column(j)[i]);
                }
            }
        }
    }

    #[test]
    fn imported_frame_profiles_match() {
        let frame = mub_frame(2).unwrap();
        let back = frame_from_json(&frame_to_json(&frame)).unwrap();
        assert_eq!(
            correlation_profile(&frame).delta_max(),
            correlation_profile(&back).delta_max()
        );
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(frame_from_json("{}").is_err());
        let mut text = frame_to_json(&mub_frame(2).unwrap());
        text = text.replace("\"n\": 4", "\"n\": 3");
        assert!(frame_from_json(&text).is_err());
    }
}

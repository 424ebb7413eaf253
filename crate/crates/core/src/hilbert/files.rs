//! JSON file formats for states and projectors.
//!
//! ```json
//! {"dim": 2, "amplitudes": [[0.7071067811865476, 0.0], [0.0, 0.7071067811865476]]}
//! {"dim": 2, "matrix": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]}
//! ```
//!
//! Complex numbers are `[re, im]` pairs; matrices are row-major.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{HilbertError, Projector, StateVector, C64};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dim: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectorFile {
    pub dim: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

fn json_error(e: serde_json::Error) -> HilbertError {
    HilbertError::Format(format!("invalid JSON: {e}"))
}

impl StateFile {
    pub fn parse(text: &str) -> Result<Self, HilbertError> {
        serde_json::from_str(text).map_err(json_error)
    }

    /// Validates the file: `amplitudes` must have `dim` entries and unit norm
    /// within `tol`.
    pub fn to_state(&self, tol: f64) -> Result<StateVector, HilbertError> {
        if self.dim == 0 {
            return Err(HilbertError::EmptySpace);
        }
        if self.amplitudes.len() != self.dim {
            return Err(HilbertError::DimensionMismatch { expected: self.dim, found: self.amplitudes.len() });
        }
        let amps = self.amplitudes.iter().map(|[re, im]| C64::new(*re, *im)).collect();
        StateVector::from_normalized(amps, tol)
    }
}

impl From<&StateVector> for StateFile {
    fn from(s: &StateVector) -> Self {
        StateFile {
            dim: s.dim(),
            amplitudes: s.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl ProjectorFile {
    pub fn parse(text: &str) -> Result<Self, HilbertError> {
        serde_json::from_str(text).map_err(json_error)
    }

    /// Validates shape and the projector invariants at tolerance `tol`.
    pub fn to_projector(&self, tol: f64) -> Result<Projector, HilbertError> {
        let n = self.dim;
        if n == 0 {
            return Err(HilbertError::EmptySpace);
        }
        if self.matrix.len() != n {
            return Err(HilbertError::DimensionMismatch { expected: n, found: self.matrix.len() });
        }
        if let Some(row) = self.matrix.iter().find(|r| r.len() != n) {
            return Err(HilbertError::DimensionMismatch { expected: n, found: row.len() });
        }
        let m = DMatrix::from_fn(n, n, |r, c| {
            let [re, im] = self.matrix[r][c];
            C64::new(re, im)
        });
        Projector::from_matrix(m, tol)
    }
}

impl From<&Projector> for ProjectorFile {
    fn from(p: &Projector) -> Self {
        let n = p.dim();
        let m = p.matrix();
        ProjectorFile {
            dim: n,
            matrix: (0..n)
                .map(|r| (0..n).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn state_file_validation() {
        let f = StateFile::parse(r#"{"dim": 2, "amplitudes": [[0.6, 0.0], [0.0, 0.8]]}"#).unwrap();
        let s = f.to_state(1e-9).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(StateFile::from(&s).amplitudes, vec![[0.6, 0.0], [0.0, 0.8]]);

        let short = StateFile::parse(r#"{"dim": 3, "amplitudes": [[1.0, 0.0]]}"#).unwrap();
        assert!(matches!(short.to_state(1e-9), Err(HilbertError::DimensionMismatch { .. })));
        let unnormalized = StateFile::parse(r#"{"dim": 1, "amplitudes": [[2.0, 0.0]]}"#).unwrap();
        assert!(matches!(unnormalized.to_state(1e-9), Err(HilbertError::NotNormalized(_))));
        assert!(StateFile::parse(r#"{"dim": 1, "amps": []}"#).is_err());
    }

    #[test]
    fn projector_file_validation() {
        let text = r#"{"dim": 2, "matrix": [[[0.5, 0.0], [0.5, 0.0]], [[0.5, 0.0], [0.5, 0.0]]]}"#;
        let p = ProjectorFile::parse(text).unwrap().to_projector(1e-9).unwrap();
        assert_eq!(p.rank(), 1);
        let back = ProjectorFile::from(&p).to_projector(1e-9).unwrap();
        assert_eq!(back, p);

        let ragged = r#"{"dim": 2, "matrix": [[[1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]}"#;
        assert!(ProjectorFile::parse(ragged).unwrap().to_projector(1e-9).is_err());
        let not_herm = r#"{"dim": 2, "matrix": [[[1.0, 0.0], [0.0, 1.0]], [[0.0, 1.0], [0.0, 0.0]]]}"#;
        assert!(matches!(
            ProjectorFile::parse(not_herm).unwrap().to_projector(1e-9),
            Err(HilbertError::NotHermitian(_))
        ));
    }
}

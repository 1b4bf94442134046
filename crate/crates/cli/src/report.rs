//! Wire formats for matrix input and spectrum reports.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use symcalc::funcalc::JetSpectrum;
use symcalc::linalg::CMat;

/// Input matrix: `{"n": int, "entries": [[re, im], ...]}` row-major.
#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<CMat, String> {
        if self.entries.len() != self.n * self.n {
            return Err(format!(
                "expected {} entries for n = {}, found {}",
                self.n * self.n,
                self.n,
                self.entries.len()
            ));
        }
        if self
            .entries
            .iter()
            .any(|e| !e[0].is_finite() || !e[1].is_finite())
        {
            return Err("entries must be finite".into());
        }
        Ok(CMat::from_fn(self.n, self.n, |i, j| {
            let e = self.entries[i * self.n + j];
            Complex64::new(e[0], e[1])
        }))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairReport {
    pub re: f64,
    pub im: f64,
    pub k: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OracleInfo {
    pub eigensolver: String,
    pub block_structure: String,
}

/// Output spectrum: `{"tol": float, "pairs": [{"re", "im", "k"}, ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub tol: f64,
    pub pairs: Vec<PairReport>,
    pub oracle: OracleInfo,
}

impl SpectrumReport {
    pub fn from_spectrum(spec: &JetSpectrum, tol: f64) -> Self {
        SpectrumReport {
            tol,
            pairs: spec
                .pairs
                .iter()
                .map(|(lambda, k)| PairReport {
                    re: lambda.re,
                    im: lambda.im,
                    k: *k,
                })
                .collect(),
            oracle: OracleInfo {
                eigensolver: "complex Schur".into(),
                block_structure: "rank staircase with centroid clustering".into(),
            },
        }
    }
}

/// Report of the mapping comparison: the input spectrum, the image under
/// the literal degree formula, the image under the Jordan oracle, and how
/// far they agree.
#[derive(Debug, Serialize, Deserialize)]
pub struct SpecmapReport {
    pub tol: f64,
    pub input: Vec<PairReport>,
    pub literal: Vec<PairReport>,
    pub oracle: Vec<PairReport>,
    /// "multiset" | "set_level" | "disagreement"
    pub agreement: String,
}

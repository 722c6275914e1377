//! JSON algebra files.
//!
//! ```json
//! {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": [[3, "1/1"]]}]}
//! ```
//!
//! Indices are 1-based (`X_1..X_n`). Entries normally list `i < j`; an entry
//! with `i > j` is accepted and must agree with its partner by antisymmetry.
//! Unlisted pairs are zero. Coefficients are `"num/den"` strings.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{AlgebraLabel, LieAlgebra, LieError};
use crate::linalg::{parse_rational, to_fraction_string, Rational};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational {0:?}")]
    Rational(String),
    #[error("index {index} out of range 1..={dim}")]
    Index { index: usize, dim: usize },
    #[error("pair ({i},{j}) listed more than once")]
    Duplicate { i: usize, j: usize },
    #[error("bracket of X_{0} with itself must vanish")]
    Diagonal(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<(usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
}

/// Raw structure tensor read from a file, before any Lie-algebra validation.
#[derive(Debug, Clone)]
pub struct RawTensor {
    pub dim: usize,
    pub structure: Vec<Rational>,
}

impl AlgebraFile {
    pub fn from_json(s: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn read(path: &Path) -> Result<Self, FileError> {
        let s = std::fs::read_to_string(path).map_err(|source| FileError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Serializes the `i < j` nonzero brackets of an algebra.
    pub fn from_algebra(alg: &LieAlgebra) -> Self {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let coeffs: Vec<(usize, String)> = (0..n)
                    .filter(|&k| !alg.c(i, j, k).is_zero())
                    .map(|k| (k + 1, to_fraction_string(alg.c(i, j, k))))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry {
                        i: i + 1,
                        j: j + 1,
                        coeffs,
                    });
                }
            }
        }
        Self { dim: n, brackets }
    }

    /// Fills the tensor from the listed entries. A pair listed in only one
    /// order gets its antisymmetric partner; pairs listed in both orders are
    /// kept verbatim so antisymmetry can be checked afterwards.
    pub fn to_tensor(&self) -> Result<RawTensor, FileError> {
        let n = self.dim;
        let mut listed: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        for b in &self.brackets {
            for &idx in &[b.i, b.j] {
                if idx == 0 || idx > n {
                    return Err(FileError::Index { index: idx, dim: n });
                }
            }
            let mut v = vec![Rational::zero(); n];
            for (k, c) in &b.coeffs {
                if *k == 0 || *k > n {
                    return Err(FileError::Index { index: *k, dim: n });
                }
                v[k - 1] += parse_rational(c).ok_or_else(|| FileError::Rational(c.clone()))?;
            }
            if b.i == b.j {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(FileError::Diagonal(b.i));
                }
                continue;
            }
            if listed.insert((b.i - 1, b.j - 1), v).is_some() {
                return Err(FileError::Duplicate { i: b.i, j: b.j });
            }
        }
        let mut structure = vec![Rational::zero(); n * n * n];
        for (&(i, j), v) in &listed {
            for (k, c) in v.iter().enumerate() {
                structure[(i * n + j) * n + k] = c.clone();
                if !listed.contains_key(&(j, i)) {
                    structure[(j * n + i) * n + k] = -c.clone();
                }
            }
        }
        Ok(RawTensor { dim: n, structure })
    }

    /// Full load: antisymmetry and Jacobi are both enforced.
    pub fn to_algebra(
        &self,
        label: AlgebraLabel,
    ) -> Result<Result<LieAlgebra, LieError>, FileError> {
        let raw = self.to_tensor()?;
        Ok(LieAlgebra::from_tensor(label, raw.dim, raw.structure).and_then(LieAlgebra::validated))
    }
}

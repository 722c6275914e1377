//! Finite-dimensional Lie algebras given by exact structure constants.
//!
//! Basis vectors are `X_1..X_n` in the text and indices `0..n` in code.
//! `[X_i, X_j] = Σ_k c[i][j][k] X_k`; both orderings of every pair are stored.

mod file;

pub use file::{AlgebraFile, BracketEntry, FileError, RawTensor};

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{self, kernel, LinalgError, Matrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("vector has length {found}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("structure tensor has {found} entries, expected {expected}")]
    TensorSize { expected: usize, found: usize },
    #[error("structure constants not antisymmetric at ({}, {}, {})", .i + 1, .j + 1, .k + 1)]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails at {count} basis triples, first ({}, {}, {})", .first.0 + 1, .first.1 + 1, .first.2 + 1)]
    Jacobi {
        count: usize,
        first: (usize, usize, usize),
    },
    #[error("heisenberg(p) needs p >= 1")]
    ZeroRank,
    #[error("algebra label must be nonempty")]
    EmptyLabel,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `(i, j, [(k, c_ij^k)])` with 0-based indices.
pub type Bracket = (usize, usize, Vec<(usize, Rational)>);

/// Name tag such as `heisenberg(p=2)`, `l5` or `file:<path>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraLabel(String);

impl AlgebraLabel {
    pub fn new(name: impl Into<String>) -> Result<Self, LieError> {
        let name = name.into();
        if name.is_empty() {
            return Err(LieError::EmptyLabel);
        }
        Ok(Self(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for AlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    label: AlgebraLabel,
    dim: usize,
    structure: Vec<Rational>,
}

impl LieAlgebra {
    /// Takes the full tensor `c[i][j][k]` flattened as `(i*n + j)*n + k`.
    /// Antisymmetry is validated; the Jacobi identity is not (see [`check_jacobi`](Self::check_jacobi)).
    pub fn from_tensor(
        label: AlgebraLabel,
        dim: usize,
        structure: Vec<Rational>,
    ) -> Result<Self, LieError> {
        if structure.len() != dim * dim * dim {
            return Err(LieError::TensorSize {
                expected: dim * dim * dim,
                found: structure.len(),
            });
        }
        let alg = Self {
            label,
            dim,
            structure,
        };
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    if alg.c(i, j, k) != &-alg.c(j, i, k) {
                        return Err(LieError::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Builds from `i < j` brackets `[X_i, X_j] = Σ coeff·X_k`; the `(j, i)`
    /// entries are filled in by antisymmetry.
    pub fn from_brackets(
        label: AlgebraLabel,
        dim: usize,
        brackets: &[Bracket],
    ) -> Result<Self, LieError> {
        let mut t = vec![Rational::zero(); dim * dim * dim];
        for (i, j, coeffs) in brackets {
            for (k, c) in coeffs {
                for &idx in &[*i, *j, *k] {
                    if idx >= dim {
                        return Err(LieError::DimensionMismatch {
                            expected: dim,
                            found: idx + 1,
                        });
                    }
                }
                t[(i * dim + j) * dim + k] += c;
                t[(j * dim + i) * dim + k] -= c;
            }
        }
        Self::from_tensor(label, dim, t)
    }

    /// Rejects algebras violating the Jacobi identity.
    pub fn validated(self) -> Result<Self, LieError> {
        let v = self.check_jacobi();
        match v.first() {
            None => Ok(self),
            Some(&first) => Err(LieError::Jacobi {
                count: v.len(),
                first,
            }),
        }
    }

    pub fn relabel(mut self, name: &str) -> Self {
        if let Ok(l) = AlgebraLabel::new(name) {
            self.label = l;
        }
        self
    }

    pub fn label(&self) -> &AlgebraLabel {
        &self.label
    }

    /// Flattened `c[i][j][k]` at `(i·n + j)·n + k`.
    pub fn structure_tensor(&self) -> &[Rational] {
        &self.structure
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Structure constant `c[i][j][k]`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// `[X_i, X_j]` as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let start = (i * self.dim + j) * self.dim;
        self.structure[start..start + self.dim].to_vec()
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), LieError> {
        if v.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Basis triples (0-based) where the cyclic Jacobi sum is nonzero.
    pub fn check_jacobi(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let e = |i| linalg::unit_vector(n, i);
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let t1 = self.bracket(&self.basis_bracket(i, j), &e(k)).unwrap();
                    let t2 = self.bracket(&self.basis_bracket(j, k), &e(i)).unwrap();
                    let t3 = self.bracket(&self.basis_bracket(k, i), &e(j)).unwrap();
                    let sum = linalg::add_vec(&linalg::add_vec(&t1, &t2), &t3);
                    if !linalg::is_zero_vec(&sum) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix, LieError> {
        self.check_len(x)?;
        let n = self.dim;
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| self.bracket(x, &linalg::unit_vector(n, j)))
            .collect::<Result<_, _>>()?;
        Ok(Matrix::from_columns(n, &cols))
    }

    /// `{x : ad(x) = 0}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // ad(x)·e_j = Σ_i x_i c[i][j][·]; one equation per (j, k).
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.c(i, j, k).clone()).collect());
            }
        }
        if n == 0 {
            return Subspace::zero(0);
        }
        kernel(&Matrix::from_rows(rows).expect("square system"))
    }

    /// Span of all basis brackets `[X_i, X_j]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim;
        let mut vs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                vs.push(self.basis_bracket(i, j));
            }
        }
        Subspace::span(n, &vs).expect("ambient vectors")
    }

    /// True iff `m` is invertible and preserves brackets of all basis pairs.
    pub fn is_automorphism(&self, m: &Matrix) -> bool {
        let n = self.dim;
        if m.rows() != n || m.cols() != n || !m.is_invertible() {
            return false;
        }
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| m.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = m.mul_vec(&self.basis_bracket(i, j)).unwrap();
                let rhs = self.bracket(&cols[i], &cols[j]).unwrap();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(Zero::is_zero)
    }
}

/// `h_{2p+1}`: `[X_{2s-1}, X_{2s}] = X_{2p+1}` for `s = 1..p`, centre last.
pub fn heisenberg(p: usize) -> Result<LieAlgebra, LieError> {
    if p == 0 {
        return Err(LieError::ZeroRank);
    }
    let n = 2 * p + 1;
    let one = linalg::one();
    let brackets: Vec<_> = (0..p)
        .map(|s| (2 * s, 2 * s + 1, vec![(n - 1, one.clone())]))
        .collect();
    let label = AlgebraLabel::new(format!("heisenberg(p={p})"))?;
    let alg = LieAlgebra::from_brackets(label, n, &brackets)?;
    debug_assert!(alg.check_jacobi().is_empty());
    Ok(alg)
}

/// Five-dimensional filiform algebra: `[X_1, X_i] = X_{i+1}` for `i = 2, 3, 4`.
pub fn filiform_l5() -> LieAlgebra {
    let one = linalg::one();
    let brackets: Vec<_> = (1..4).map(|i| (0, i, vec![(i + 1, one.clone())])).collect();
    let alg = LieAlgebra::from_brackets(AlgebraLabel::new("l5").unwrap(), 5, &brackets)
        .expect("well-formed brackets");
    debug_assert!(alg.check_jacobi().is_empty());
    alg
}

/// Zero bracket on `ℚ^n`.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::from_tensor(
        AlgebraLabel::new(format!("abelian({n})")).unwrap(),
        n,
        vec![Rational::zero(); n * n * n],
    )
    .expect("zero tensor is antisymmetric")
}

//! Exact linear algebra over the rationals.
//!
//! Everything here is exact: elimination never rounds, subspaces are kept in
//! reduced row-echelon form so equality is structural, and signatures come from
//! congruence diagonalization instead of eigenvalues.

mod congruence;
mod matrix;
mod rational;
mod subspace;

pub use congruence::{congruence_diagonalize, signature, Signature};
pub use matrix::Matrix;
pub use rational::{
    fmt_q, fmt_vec, int, one, parse_rational, rat, sqrt_exact, to_fraction_string, zero, Rational,
};
pub use subspace::Subspace;

use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
}

/// Reduced row-echelon form together with the pivot column of each nonzero row.
pub(crate) fn rref_with_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if !a[(r, j)].is_zero() {
                    let d = &f * &a[(r, j)];
                    a[(i, j)] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Reduced row-echelon form; the row space is preserved.
pub fn rref(m: &Matrix) -> Matrix {
    rref_with_pivots(m).0
}

/// Null space `{v : m·v = 0}` as a subspace of `ℚ^cols`.
pub fn kernel(m: &Matrix) -> Subspace {
    let cols = m.cols();
    let (r, pivots) = rref_with_pivots(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<Vec<Rational>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            v
        })
        .collect();
    Subspace::span(cols, &basis).expect("kernel vectors have ambient length")
}

/// Solution set of `a·x = b`: one particular solution plus the kernel of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Rational>,
    pub homogeneous: Subspace,
}

impl AffineSolution {
    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.particular.len() {
            return false;
        }
        let d: Vec<Rational> = x.iter().zip(&self.particular).map(|(a, b)| a - b).collect();
        self.homogeneous.contains(&d)
    }
}

/// Solves `a·x = b` exactly. `Ok(None)` means the system is inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Rational]) -> Result<Option<AffineSolution>, LinalgError> {
    if a.rows() != b.len() {
        return Err(LinalgError::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let (r, pivots) = rref_with_pivots(&aug);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = vec![Rational::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = r[(row, n)].clone();
    }
    Ok(Some(AffineSolution {
        particular,
        homogeneous: kernel(a),
    }))
}

/// Stacks vectors as the rows of a matrix with `cols` columns.
pub(crate) fn rows_matrix(cols: usize, rows: &[Vec<Rational>]) -> Result<Matrix, LinalgError> {
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(LinalgError::DimensionMismatch {
            expected: cols,
            found: bad.len(),
        });
    }
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, cols));
    }
    Matrix::from_rows(rows.to_vec())
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(s: &Rational, v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| s * x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rref_examples() {
        assert_eq!(rref(&q(&[&[2, 4], &[1, 2]])), q(&[&[1, 2], &[0, 0]]));
        assert_eq!(rref(&Matrix::identity(3)), Matrix::identity(3));
        assert_eq!(rref(&q(&[&[0, 1], &[1, 0]])), Matrix::identity(2));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::zeros(2, 2)), Subspace::full(2));
        assert_eq!(kernel(&Matrix::identity(3)), Subspace::zero(3));
        let k = kernel(&q(&[&[1, 2, 3]]));
        let expected = Subspace::span(
            3,
            &[vec![int(-2), int(1), int(0)], vec![int(-3), int(0), int(1)]],
        )
        .unwrap();
        assert_eq!(k, expected);
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn solve_affine_examples() {
        let s = solve_affine(&Matrix::identity(2), &[int(3), int(4)])
            .unwrap()
            .unwrap();
        assert_eq!(s.particular, vec![int(3), int(4)]);
        assert_eq!(s.homogeneous.dim(), 0);

        let s = solve_affine(&q(&[&[1, 1]]), &[int(0)]).unwrap().unwrap();
        assert_eq!(s.particular, vec![int(0), int(0)]);
        assert_eq!(
            s.homogeneous,
            Subspace::span(2, &[vec![int(-1), int(1)]]).unwrap()
        );

        assert!(solve_affine(&q(&[&[0, 0]]), &[int(1)]).unwrap().is_none());
        assert!(solve_affine(&q(&[&[0, 0]]), &[int(1), int(2)]).is_err());
    }

    #[test]
    fn rank_plus_nullity() {
        let m = q(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        assert_eq!(m.rank() + kernel(&m).dim(), 4);
    }
}

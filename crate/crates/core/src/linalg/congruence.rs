use std::fmt;

use num_traits::{Signed, Zero};

use super::{LinalgError, Matrix, Rational};

/// Inertia counts of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, null: usize) -> Self {
        Self {
            positive,
            negative,
            null,
        }
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.null
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.null == 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.negative == 0 && self.null == 0
    }

    pub fn is_lorentzian(&self) -> bool {
        self.negative == 1 && self.null == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.null)
    }
}

fn swap_both(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
        let t = p[(r, i)].clone();
        p[(r, i)] = p[(r, j)].clone();
        p[(r, j)] = t;
    }
}

/// `target += f·source` applied to row, column and the transform's column.
fn add_multiple(a: &mut Matrix, p: &mut Matrix, target: usize, source: usize, f: &Rational) {
    let n = a.rows();
    for c in 0..n {
        let d = f * &a[(source, c)];
        a[(target, c)] += d;
    }
    for r in 0..n {
        let d = f * &a[(r, source)];
        a[(r, target)] += d;
        let d = f * &p[(r, source)];
        p[(r, target)] += d;
    }
}

/// Returns `(d, p)` with `d = pᵀ·s·p` diagonal and `p` invertible.
///
/// Symmetric pivoting; when every remaining diagonal entry vanishes, row and
/// column `j` are added to `k` so the pivot becomes `2·s[k][j]`.
pub fn congruence_diagonalize(s: &Matrix) -> Result<(Matrix, Matrix), LinalgError> {
    if !s.is_square() {
        return Err(LinalgError::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    if !s.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = s.rows();
    let mut a = s.clone();
    let mut p = Matrix::identity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_both(&mut a, &mut p, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                add_multiple(&mut a, &mut p, k, j, &Rational::from_integer(1.into()));
            } else {
                continue;
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -(&a[(i, k)] / &pivot);
            add_multiple(&mut a, &mut p, i, k, &f);
        }
    }
    debug_assert!(a.is_diagonal());
    Ok((a, p))
}

/// Sylvester inertia of a symmetric matrix.
pub fn signature(s: &Matrix) -> Result<Signature, LinalgError> {
    let (d, _) = congruence_diagonalize(s)?;
    let mut sig = Signature::new(0, 0, 0);
    for x in d.diagonal_entries() {
        if x.is_positive() {
            sig.positive += 1;
        } else if x.is_negative() {
            sig.negative += 1;
        } else {
            sig.null += 1;
        }
    }
    Ok(sig)
}

use std::fmt;

use super::rational::fmt_vec;
use super::{kernel, rows_matrix, rref_with_pivots, LinalgError, Matrix, Rational};

/// A subspace of `ℚ^n` stored by its reduced row-echelon basis.
///
/// The echelon basis is canonical, so derived equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let m = rows_matrix(ambient_dim, vectors)?;
        Ok(Self::from_row_space(&m))
    }

    /// Row space of `m`.
    pub fn from_row_space(m: &Matrix) -> Self {
        let (r, pivots) = rref_with_pivots(m);
        let keep: Vec<usize> = (0..pivots.len()).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        Self {
            ambient_dim: m.cols(),
            basis: r.select(&keep, &cols),
        }
    }

    /// Span of the standard basis vectors with the given (0-based) indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<Rational>> = indices
            .iter()
            .map(|&i| super::unit_vector(ambient_dim, i))
            .collect();
        Self::span(ambient_dim, &vs).expect("unit vectors")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Echelon basis; rows are the basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vectors()
    }

    fn check_ambient(&self, n: usize) -> Result<(), LinalgError> {
        if n != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        if super::is_zero_vec(v) {
            return true;
        }
        let mut rows = self.basis_vectors();
        rows.push(v.to_vec());
        let m = rows_matrix(self.ambient_dim, &rows).expect("same ambient");
        m.rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    /// Vectors orthogonal to `self` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim);
        }
        kernel(&self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other.ambient_dim)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.ambient_dim, &rows)
    }

    /// `self ∩ other`, as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other.ambient_dim)?;
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    /// Image `{m·v : v ∈ self}`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        self.check_ambient(m.cols())?;
        let imgs = self
            .basis_vectors()
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::span(m.rows(), &imgs)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace({})", self)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.basis_vectors().iter().map(|v| fmt_vec(v)).collect();
        write!(f, "span{{{}}}", vs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersect_examples() {
        let e12 = Subspace::coordinate(3, &[0, 1]);
        let e23 = Subspace::coordinate(3, &[1, 2]);
        assert_eq!(e12.intersect(&e23).unwrap(), Subspace::coordinate(3, &[1]));
        assert_eq!(e12.intersect(&e12).unwrap(), e12);
        let e1 = Subspace::coordinate(2, &[0]);
        let e2 = Subspace::coordinate(2, &[1]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert!(e1.intersect(&e12).is_err());
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(2, &[vec![super::super::int(2), super::super::int(4)]]).unwrap();
        let b = Subspace::span(2, &[vec![super::super::int(-1), super::super::int(-2)]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_and_full() {
        assert!(Subspace::zero(3).contains(&[
            super::super::zero(),
            super::super::zero(),
            super::super::zero()
        ]));
        assert_eq!(Subspace::zero(3).annihilator(), Subspace::full(3));
        assert_eq!(Subspace::full(3).annihilator(), Subspace::zero(3));
    }
}

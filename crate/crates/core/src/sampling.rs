//! Seeded generation of small-height rational data.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Matrix, Rational, Subspace};

pub const DEFAULT_SEED: u64 = 20_240_611;

/// Height bound used when none is given.
pub const DEFAULT_HEIGHT: i64 = 7;

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    height: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_height(seed, DEFAULT_HEIGHT)
    }

    pub fn with_height(seed: u64, height: i64) -> Self {
        assert!(height >= 1, "height must be positive");
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            height,
        }
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn integer(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// `n/d` with `|n| ≤ height` and `1 ≤ d ≤ height`.
    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-self.height..=self.height);
        let d = self.rng.gen_range(1..=self.height);
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let q = self.rational();
            if !q.is_zero() {
                return q;
            }
        }
    }

    pub fn positive_rational(&mut self) -> Rational {
        let n = self.rng.gen_range(1..=self.height);
        let d = self.rng.gen_range(1..=self.height);
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    /// A positive rational square `(n/d)²`.
    pub fn positive_square(&mut self) -> Rational {
        let r = self.positive_rational();
        &r * &r
    }

    pub fn rationals<const N: usize>(&mut self) -> [Rational; N] {
        std::array::from_fn(|_| self.rational())
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_rows((0..rows).map(|_| self.vector(cols)).collect()).expect("uniform rows")
    }

    pub fn symmetric_matrix(&mut self, n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let q = self.rational();
                m[(i, j)] = q.clone();
                m[(j, i)] = q;
            }
        }
        m
    }

    pub fn invertible_matrix(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.matrix(n, n);
            if m.is_invertible() {
                return m;
            }
        }
    }

    /// Span of up to `max_gens` random vectors in `ℚ^n`.
    pub fn subspace(&mut self, n: usize, max_gens: usize) -> Subspace {
        let k = self.rng.gen_range(0..=max_gens);
        let vs: Vec<Vec<Rational>> = (0..k).map(|_| self.vector(n)).collect();
        Subspace::span(n, &vs).expect("ambient dimension")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn reproducible() {
        let mut a = Sampler::new(5);
        let mut b = Sampler::new(5);
        assert_eq!(a.vector(20), b.vector(20));
        assert_ne!(Sampler::new(6).vector(20), Sampler::new(5).vector(20));
    }

    #[test]
    fn height_respected() {
        let mut s = Sampler::with_height(1, 3);
        for _ in 0..200 {
            let q = s.rational();
            assert!(q.numer().abs() <= BigInt::from(3));
            assert!(*q.denom() <= BigInt::from(3));
            assert!(s.positive_rational().is_positive());
            assert!(!s.nonzero_rational().is_zero());
        }
    }

    #[test]
    fn shapes() {
        let mut s = Sampler::new(9);
        assert!(s.symmetric_matrix(4).is_symmetric());
        assert!(s.invertible_matrix(3).is_invertible());
        assert!(s.subspace(4, 3).dim() <= 3);
    }
}

//! The five-dimensional filiform example: `h = span{X3, X5}`,
//! `m = span{X1, X2, X4}` and a six-parameter family of connection maps.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::{
    curvature, equivariance_check, isotropy_rep, torsion, ConnectionMap, IsotropyConvention,
};
use crate::gradings::{Grading, GroupLabel};
use crate::lie::filiform_l5;
use crate::linalg::{int, rat, Matrix, Rational, Subspace};
use crate::metrics::{reductive_split, ReductiveSplit};

/// How the third printed matrix is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum L5Reading {
    /// The third matrix is `Λ(X4)`.
    ThirdIsX4,
    /// The third matrix is attached to `X3 ∈ h` and `Λ(X4) = 0`.
    X4Zero,
}

impl fmt::Display for L5Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ThirdIsX4 => write!(f, "third matrix is L(X4)"),
            Self::X4Zero => write!(f, "L(X4) = 0"),
        }
    }
}

pub fn l5_split() -> Arc<ReductiveSplit> {
    let g = Grading::from_components(
        Arc::new(filiform_l5()),
        1,
        vec![
            (GroupLabel::new(1, 0), Subspace::coordinate(5, &[2, 4])),
            (GroupLabel::new(1, 1), Subspace::coordinate(5, &[0, 1, 3])),
        ],
    )
    .expect("two components");
    Arc::new(reductive_split(&g).expect("grading of l5"))
}

/// The printed `λ(X3)`: `X1 ↦ X4`.
pub fn l5_printed_isotropy() -> Matrix {
    Matrix::from_i64(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]])
}

/// The printed maps for parameters `(a, b, c, d, e, f)`.
pub fn l5_printed_connection(params: &[Rational; 6], reading: L5Reading) -> ConnectionMap {
    let [a, b, c, d, e, f] = params;
    let half = a * rat(1, 2);
    let z = || Rational::zero();
    let l1 = Matrix::from_rows(vec![
        vec![a.clone(), z(), z()],
        vec![b.clone(), z(), z()],
        vec![c.clone(), d.clone(), half.clone()],
    ])
    .expect("3x3");
    let l2 = Matrix::from_rows(vec![
        vec![z(), z(), z()],
        vec![z(), e.clone(), z()],
        vec![d.clone(), f.clone(), half.clone()],
    ])
    .expect("3x3");
    let l4 = match reading {
        L5Reading::ThirdIsX4 => Matrix::from_rows(vec![
            vec![z(), z(), z()],
            vec![z(), z(), z()],
            vec![-half, z(), z()],
        ])
        .expect("3x3"),
        L5Reading::X4Zero => Matrix::zeros(3, 3),
    };
    ConnectionMap::new(l5_split(), vec![l1, l2, l4]).expect("three 3x3 maps")
}

/// Outcome for one reading and isotropy sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L5Evaluation {
    pub reading: L5Reading,
    pub convention: IsotropyConvention,
    pub torsion_zero: bool,
    pub equivariant: bool,
    /// `(i, j, row, col, value)` of the first nonzero `R(Y_i, Y_j)` entry.
    pub curvature_entry: Option<(usize, usize, usize, usize, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L5Sample {
    pub params: [Rational; 6],
    pub evaluations: Vec<L5Evaluation>,
}

impl L5Sample {
    pub fn get(&self, reading: L5Reading, convention: IsotropyConvention) -> &L5Evaluation {
        self.evaluations
            .iter()
            .find(|e| e.reading == reading && e.convention == convention)
            .expect("all combinations evaluated")
    }
}

pub fn l5_evaluate(params: &[Rational; 6]) -> L5Sample {
    let mut evaluations = Vec::with_capacity(4);
    for reading in [L5Reading::ThirdIsX4, L5Reading::X4Zero] {
        for convention in [IsotropyConvention::Standard, IsotropyConvention::Opposite] {
            let c = l5_printed_connection(params, reading).with_isotropy(convention);
            evaluations.push(L5Evaluation {
                reading,
                convention,
                torsion_zero: torsion(&c).is_zero(),
                equivariant: equivariance_check(&c).is_empty(),
                curvature_entry: curvature(&c).first_nonzero(),
            });
        }
    }
    L5Sample {
        params: params.clone(),
        evaluations,
    }
}

/// The convention whose `λ(X3)` equals the printed matrix.
pub fn l5_printed_convention() -> Option<IsotropyConvention> {
    let split = l5_split();
    let x3 = crate::linalg::unit_vector(5, 2);
    [IsotropyConvention::Standard, IsotropyConvention::Opposite]
        .into_iter()
        .find(|&c| isotropy_rep(&split, &x3, c).ok() == Some(l5_printed_isotropy()))
}

/// A parameter tuple in `{−1, 0, 1}^6` whose printed connection is torsion-free
/// and equivariant yet flat, found by exhaustive search.
pub fn l5_vanishing_point(convention: IsotropyConvention) -> Option<[Rational; 6]> {
    let vals = [int(-1), int(0), int(1)];
    let mut idx = [0usize; 6];
    loop {
        let params: [Rational; 6] = std::array::from_fn(|i| vals[idx[i]].clone());
        let c = l5_printed_connection(&params, L5Reading::ThirdIsX4).with_isotropy(convention);
        if torsion(&c).is_zero() && equivariance_check(&c).is_empty() && curvature(&c).is_zero() {
            return Some(params);
        }
        let mut pos = 0;
        loop {
            if pos == 6 {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < 3 {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(v: [i64; 6]) -> [Rational; 6] {
        v.map(int)
    }

    #[test]
    fn split_shape() {
        let s = l5_split();
        assert_eq!(s.dim_m(), 3);
        assert_eq!(s.h().dim(), 2);
    }

    #[test]
    fn printed_isotropy_is_opposite_sign() {
        assert_eq!(l5_printed_convention(), Some(IsotropyConvention::Opposite));
        let s = l5_split();
        let x5 = crate::linalg::unit_vector(5, 4);
        assert!(isotropy_rep(&s, &x5, IsotropyConvention::Standard)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn torsion_needs_a_zero() {
        let s = l5_evaluate(&params([2, 0, 0, 0, 0, 0]));
        assert!(s.evaluations.iter().all(|e| !e.torsion_zero));
        let s = l5_evaluate(&params([0, 3, -1, 2, 5, 7]));
        assert!(s.evaluations.iter().all(|e| e.torsion_zero));
    }

    #[test]
    fn zero_parameters_still_curved() {
        let s = l5_evaluate(&params([0; 6]));
        assert!(s.evaluations.iter().all(|e| e.curvature_entry.is_some()));
        let zero = ConnectionMap::zero(l5_split());
        let r = curvature(&zero);
        let iso = isotropy_rep(
            &l5_split(),
            &crate::linalg::unit_vector(5, 2),
            IsotropyConvention::Standard,
        )
        .unwrap();
        assert_eq!(*r.get(0, 1), iso.scale(&int(-1)));
    }

    #[test]
    fn equivariance_on_slice() {
        let s = l5_evaluate(&params([0, 3, -1, 2, 5, 7]));
        assert!(
            s.get(L5Reading::ThirdIsX4, IsotropyConvention::Opposite)
                .equivariant
        );
        let mut perturbed =
            l5_printed_connection(&params([0, 3, -1, 2, 5, 7]), L5Reading::ThirdIsX4)
                .with_isotropy(IsotropyConvention::Opposite);
        let v = perturbed.entry(1, 0, 0) + int(1);
        perturbed.set_entry(1, 0, 0, v);
        assert!(!equivariance_check(&perturbed).is_empty());
    }

    #[test]
    fn flat_points_exist_on_torsion_free_slice() {
        for conv in [IsotropyConvention::Standard, IsotropyConvention::Opposite] {
            let p = l5_vanishing_point(conv).expect("flat point");
            assert!(p[0].is_zero());
            let c = l5_printed_connection(&p, L5Reading::X4Zero).with_isotropy(conv);
            assert!(curvature(&c).is_zero());
        }
    }
}

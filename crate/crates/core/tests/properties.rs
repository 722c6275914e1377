use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use zsym_core::aut_h3::{classify_involution, gamma7, tau, InvolutionTag};
use zsym_core::connections::{
    curvature, heisenberg_flat_family, heisenberg_klein_split, torsion, ConnectionMap,
};
use zsym_core::gradings::{check_grading, grading_from_involutions, support};
use zsym_core::lie::{heisenberg, AlgebraFile, AlgebraLabel};
use zsym_core::linalg::{kernel, signature, Matrix, Rational, Subspace};

fn q() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn nonzero_q() -> impl Strategy<Value = Rational> {
    q().prop_filter("nonzero", |x| *x != Rational::from_integer(0.into()))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(q(), cols), rows)
        .prop_map(|r| Matrix::from_rows(r).unwrap())
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| matrix(n, n))
}

fn subspace_pair(max: usize) -> impl Strategy<Value = (Subspace, Subspace)> {
    (1..=max).prop_flat_map(|n| {
        let gens = |n| prop::collection::vec(prop::collection::vec(q(), n), 0..=n);
        (gens(n), gens(n)).prop_map(move |(a, b)| {
            (
                Subspace::span(n, &a).unwrap(),
                Subspace::span(n, &b).unwrap(),
            )
        })
    })
}

fn tag() -> impl Strategy<Value = InvolutionTag> {
    prop_oneof![
        Just(InvolutionTag::Identity),
        (q(), q()).prop_map(|(a3, a6)| InvolutionTag::Tau1 { a3, a6 }),
        (q(), q()).prop_map(|(a3, a5)| InvolutionTag::Tau2 { a3, a5 }),
        (q(), nonzero_q(), q()).prop_map(|(a1, a2, a6)| InvolutionTag::Tau3 { a1, a2, a6 }),
        (q(), q()).prop_map(|(a5, a6)| InvolutionTag::Tau4 { a5, a6 }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involutions_square_to_identity(t in tag()) {
        let m = tau(&t).unwrap();
        prop_assert!(m.mul(&m).unwrap().is_identity());
        prop_assert_eq!(classify_involution(&m).unwrap(), t);
    }

    #[test]
    fn klein_groups_give_valid_gradings(a3 in q(), a5 in q(), a6 in q()) {
        let g = gamma7(&a3, &a5, &a6).unwrap();
        prop_assert!(g.is_klein_four());
        let gens: Vec<Matrix> = g.elements().iter().filter(|m| !m.is_identity()).take(2).cloned().collect();
        let gr = grading_from_involutions(Arc::new(heisenberg(1).unwrap()), &gens).unwrap();
        prop_assert!(check_grading(&gr).is_empty());
        prop_assert_eq!(support(&gr).len(), 3);
    }

    #[test]
    fn signature_is_congruence_invariant(
        (s, p) in (1usize..=5).prop_flat_map(|n| (matrix(n, n), matrix(n, n)))
    ) {
        prop_assume!(p.is_invertible());
        let s = s.add(&s.transpose()).unwrap();
        let c = p.transpose().mul(&s).unwrap().mul(&p).unwrap();
        prop_assert_eq!(signature(&s).unwrap(), signature(&c).unwrap());
        prop_assert_eq!(signature(&s).unwrap().dim(), s.rows());
    }

    #[test]
    fn rank_nullity(m in (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(m.rank() + kernel(&m).dim(), m.cols());
        for v in kernel(&m).basis_vectors() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(|x| *x == Rational::from_integer(0.into())));
        }
    }

    #[test]
    fn inverse_roundtrip(m in square(4)) {
        prop_assume!(m.is_invertible());
        prop_assert!(m.mul(&m.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn subspace_lattice((u, w) in subspace_pair(5)) {
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&w));
        prop_assert!(u.is_subspace_of(&sum) && w.is_subspace_of(&sum));
        prop_assert_eq!(u.intersect(&sum).unwrap(), u.clone());
        prop_assert_eq!(u.sum(&meet).unwrap(), u.clone());
        prop_assert_eq!(u.annihilator().annihilator(), u);
    }

    #[test]
    fn torsion_and_curvature_antisymmetric(ls in prop::collection::vec(matrix(3, 3), 3)) {
        let c = ConnectionMap::new(heisenberg_klein_split(1).unwrap(), ls).unwrap();
        prop_assert!(torsion(&c).is_antisymmetric());
        prop_assert!(curvature(&c).is_antisymmetric());
    }

    #[test]
    fn flat_family_is_flat(grid in prop::collection::vec(prop::collection::vec(q(), 2), 2)) {
        let c = heisenberg_flat_family(2, &grid).unwrap();
        prop_assert!(torsion(&c).is_zero());
        prop_assert!(curvature(&c).is_zero());
    }

    #[test]
    fn algebra_file_roundtrip(p in 1usize..=3) {
        let alg = heisenberg(p).unwrap();
        let json = AlgebraFile::from_algebra(&alg).to_json();
        let back = AlgebraFile::from_json(&json).unwrap()
            .to_algebra(AlgebraLabel::new("copy").unwrap()).unwrap().unwrap();
        prop_assert_eq!(back.structure_tensor(), alg.structure_tensor());
    }
}

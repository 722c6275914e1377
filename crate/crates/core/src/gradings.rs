//! ℤ₂ᵏ-gradings of Lie algebras.
//!
//! A label is a sign vector in `{±1}^k`, stored as a bitmask: bit `i` set means
//! sign `−1` for the `i`-th involution. The label product is XOR and the
//! identity `ε` is mask 0.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::aut_h3::search_h3_automorphism;
use crate::lie::{heisenberg, LieAlgebra, LieError};
use crate::linalg::{int, kernel, LinalgError, Matrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("involution {0} is not an automorphism")]
    NotAutomorphism(usize),
    #[error("involution {0} does not square to the identity")]
    NotInvolutive(usize),
    #[error("involutions {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("label {label} does not belong to Z2^{k}")]
    LabelWidth { label: String, k: usize },
    #[error("label {0} given twice")]
    DuplicateLabel(String),
    #[error("component lives in dimension {found}, algebra has {expected}")]
    Ambient { expected: usize, found: usize },
    #[error("gradings are over different algebras or groups")]
    Mismatch,
    #[error("omega is not an automorphism of Z2^k")]
    BadOmega,
    #[error("pi is not an automorphism of the algebra")]
    PiNotAutomorphism,
    #[error("invalid grading parameters: {0}")]
    InvalidName(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An element of ℤ₂ᵏ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupLabel {
    k: usize,
    mask: u32,
}

impl GroupLabel {
    pub fn new(k: usize, mask: u32) -> Self {
        assert!(k < 32 && mask >> k == 0, "mask {mask} outside Z2^{k}");
        Self { k, mask }
    }

    pub fn epsilon(k: usize) -> Self {
        Self::new(k, 0)
    }

    /// From signs `±1`, one per generator.
    pub fn from_signs(signs: &[i8]) -> Self {
        let mask = signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s < 0)
            .fold(0u32, |m, (i, _)| m | 1 << i);
        Self::new(signs.len(), mask)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn is_epsilon(&self) -> bool {
        self.mask == 0
    }

    pub fn sign(&self, i: usize) -> i8 {
        if self.mask >> i & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.k).map(|i| self.sign(i)).collect()
    }

    pub fn product(&self, other: &GroupLabel) -> GroupLabel {
        assert_eq!(self.k, other.k);
        Self::new(self.k, self.mask ^ other.mask)
    }

    /// All `2^k` labels in mask order.
    pub fn all(k: usize) -> Vec<GroupLabel> {
        (0..1u32 << k).map(|m| Self::new(k, m)).collect()
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self
            .signs()
            .iter()
            .map(|&s| if s > 0 { "+" } else { "-" })
            .collect();
        write!(f, "({})", s.join(","))
    }
}

/// A bracket or direct-sum failure found by [`check_grading`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradingViolation {
    DimensionCount {
        total: usize,
        n: usize,
    },
    NotSpanning {
        span_dim: usize,
        n: usize,
    },
    Bracket {
        left: GroupLabel,
        right: GroupLabel,
        bracket: Vec<Rational>,
    },
}

impl fmt::Display for GradingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DimensionCount { total, n } => {
                write!(f, "component dimensions add to {total}, algebra has {n}")
            }
            Self::NotSpanning { span_dim, n } => {
                write!(f, "components span {span_dim} of {n} dimensions")
            }
            Self::Bracket {
                left,
                right,
                bracket,
            } => write!(
                f,
                "[g{left}, g{right}] contains {} outside g{}",
                crate::linalg::fmt_vec(bracket),
                left.product(right)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    algebra: Arc<LieAlgebra>,
    k: usize,
    components: BTreeMap<GroupLabel, Subspace>,
}

impl Grading {
    /// Assigns subspaces to labels; unlisted labels get the zero subspace.
    pub fn from_components(
        algebra: Arc<LieAlgebra>,
        k: usize,
        parts: Vec<(GroupLabel, Subspace)>,
    ) -> Result<Self, GradingError> {
        let n = algebra.dim();
        let mut components: BTreeMap<GroupLabel, Subspace> = GroupLabel::all(k)
            .into_iter()
            .map(|l| (l, Subspace::zero(n)))
            .collect();
        let mut seen = Vec::new();
        for (label, space) in parts {
            if label.k() != k {
                return Err(GradingError::LabelWidth {
                    label: label.to_string(),
                    k,
                });
            }
            if space.ambient_dim() != n {
                return Err(GradingError::Ambient {
                    expected: n,
                    found: space.ambient_dim(),
                });
            }
            if seen.contains(&label) {
                return Err(GradingError::DuplicateLabel(label.to_string()));
            }
            seen.push(label);
            components.insert(label, space);
        }
        Ok(Self {
            algebra,
            k,
            components,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn component(&self, label: &GroupLabel) -> &Subspace {
        &self.components[label]
    }

    pub fn epsilon_component(&self) -> &Subspace {
        self.component(&GroupLabel::epsilon(self.k))
    }

    /// All `2^k` components, in label order.
    pub fn components(&self) -> impl Iterator<Item = (&GroupLabel, &Subspace)> {
        self.components.iter()
    }

    /// Label of the component containing `v`, if any.
    pub fn label_of(&self, v: &[Rational]) -> Option<GroupLabel> {
        self.components
            .iter()
            .find(|(_, s)| !s.is_zero() && s.contains(v))
            .map(|(l, _)| *l)
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(l, s)| format!("g{l} = {s}"))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Simultaneous `±1`-eigenspace decomposition of commuting involutive
/// automorphisms. Component `s` is `⋂ ker(τ_i − s_i·I)`.
pub fn grading_from_involutions(
    algebra: Arc<LieAlgebra>,
    taus: &[Matrix],
) -> Result<Grading, GradingError> {
    let n = algebra.dim();
    for (i, t) in taus.iter().enumerate() {
        if !algebra.is_automorphism(t) {
            return Err(GradingError::NotAutomorphism(i));
        }
        if !t.mul(t)?.is_identity() {
            return Err(GradingError::NotInvolutive(i));
        }
    }
    for i in 0..taus.len() {
        for j in i + 1..taus.len() {
            if !taus[i].commutator(&taus[j])?.is_zero() {
                return Err(GradingError::NotCommuting(i, j));
            }
        }
    }
    let k = taus.len();
    let id = Matrix::identity(n);
    let mut parts = Vec::new();
    for label in GroupLabel::all(k) {
        let mut space = Subspace::full(n);
        for (i, t) in taus.iter().enumerate() {
            let shifted = t.sub(&id.scale(&int(label.sign(i) as i64)))?;
            space = space.intersect(&kernel(&shifted))?;
        }
        parts.push((label, space));
    }
    Grading::from_components(algebra, k, parts)
}

/// Direct-sum and bracket-compatibility violations; empty means valid.
pub fn check_grading(g: &Grading) -> Vec<GradingViolation> {
    let n = g.dim();
    let mut out = Vec::new();
    let total: usize = g.components().map(|(_, s)| s.dim()).sum();
    if total != n {
        out.push(GradingViolation::DimensionCount { total, n });
    }
    let span = g
        .components()
        .try_fold(Subspace::zero(n), |acc, (_, s)| acc.sum(s))
        .expect("same ambient");
    if span.dim() != n {
        out.push(GradingViolation::NotSpanning {
            span_dim: span.dim(),
            n,
        });
    }
    for (l1, s1) in g.components() {
        for (l2, s2) in g.components() {
            let target = g.component(&l1.product(l2));
            for x in s1.basis_vectors() {
                for y in s2.basis_vectors() {
                    let b = g.algebra().bracket(&x, &y).expect("same dimension");
                    if !target.contains(&b) {
                        out.push(GradingViolation::Bracket {
                            left: *l1,
                            right: *l2,
                            bracket: b,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Labels with a nonzero component.
pub fn support(g: &Grading) -> Vec<GroupLabel> {
    g.components()
        .filter(|(_, s)| !s.is_zero())
        .map(|(l, _)| *l)
        .collect()
}

/// Rank over GF(2) of a set of masks.
fn gf2_rank(masks: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for &m in masks {
        let mut v = m;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// True iff the support generates all of ℤ₂ᵏ.
pub fn is_irreducible(g: &Grading) -> bool {
    let masks: Vec<u32> = support(g).iter().map(GroupLabel::mask).collect();
    gf2_rank(&masks) == g.k()
}

/// A map ℤ₂ᵏ → ℤ₂ᵏ given by its values on every mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap {
    k: usize,
    images: Vec<u32>,
}

impl LabelMap {
    pub fn identity(k: usize) -> Self {
        Self {
            k,
            images: (0..1u32 << k).collect(),
        }
    }

    /// Linear map determined by the images of the generators `e_i`.
    pub fn from_generator_images(k: usize, images: &[u32]) -> Self {
        let all = (0..1u32 << k)
            .map(|m| {
                (0..k)
                    .filter(|i| m >> i & 1 == 1)
                    .fold(0, |acc, i| acc ^ images[i])
            })
            .collect();
        Self { k, images: all }
    }

    pub fn from_table(k: usize, images: Vec<u32>) -> Self {
        Self { k, images }
    }

    pub fn apply(&self, l: &GroupLabel) -> GroupLabel {
        GroupLabel::new(self.k, self.images[l.mask() as usize])
    }

    pub fn is_group_automorphism(&self) -> bool {
        let size = 1usize << self.k;
        if self.images.len() != size || self.images.iter().any(|&m| m as usize >= size) {
            return false;
        }
        let mut seen = vec![false; size];
        for &m in &self.images {
            if std::mem::replace(&mut seen[m as usize], true) {
                return false;
            }
        }
        (0..size).all(|a| (0..size).all(|b| self.images[a ^ b] == self.images[a] ^ self.images[b]))
    }

    /// Every automorphism of ℤ₂ᵏ.
    pub fn all_automorphisms(k: usize) -> Vec<LabelMap> {
        let size = 1u32 << k;
        let mut out = Vec::new();
        let mut gens = vec![0u32; k];
        loop {
            if gf2_rank(&gens) == k {
                out.push(Self::from_generator_images(k, &gens));
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return out;
                }
                gens[pos] += 1;
                if gens[pos] < size {
                    break;
                }
                gens[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// True iff `π(g_{ω(γ)}) = g'_γ` for every label `γ`.
pub fn equivalent_under(
    g: &Grading,
    gp: &Grading,
    pi: &Matrix,
    omega: &LabelMap,
) -> Result<bool, GradingError> {
    if g.k() != gp.k() || g.dim() != gp.dim() || omega.k != g.k() {
        return Err(GradingError::Mismatch);
    }
    if !g.algebra().is_automorphism(pi) {
        return Err(GradingError::PiNotAutomorphism);
    }
    if !omega.is_group_automorphism() {
        return Err(GradingError::BadOmega);
    }
    for label in GroupLabel::all(g.k()) {
        let source = g.component(&omega.apply(&label));
        if source.image(pi)? != *gp.component(&label) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for `(π, ω)` with [`equivalent_under`] true, for two gradings of
/// `h_3`. `π` ranges over automorphisms with small-height coordinates.
pub fn find_h3_equivalence(
    g: &Grading,
    gp: &Grading,
    max_height: u32,
) -> Option<(Matrix, LabelMap)> {
    let h3 = heisenberg(1).expect("p = 1");
    if g.algebra().structure_tensor() != h3.structure_tensor()
        || gp.algebra().structure_tensor() != h3.structure_tensor()
        || g.k() != gp.k()
    {
        return None;
    }
    for omega in LabelMap::all_automorphisms(g.k()) {
        let mut eqs: Vec<Vec<Rational>> = Vec::new();
        for label in GroupLabel::all(g.k()) {
            let source = g.component(&omega.apply(&label));
            let target = gp.component(&label);
            if source.dim() != target.dim() {
                eqs.clear();
                eqs.push(vec![int(1); 1]);
                break;
            }
            let ann = target.annihilator().basis_vectors();
            for v in source.basis_vectors() {
                for a in &ann {
                    let mut row = vec![int(0); 9];
                    for r in 0..3 {
                        for c in 0..3 {
                            row[3 * r + c] = &a[r] * &v[c];
                        }
                    }
                    eqs.push(row);
                }
            }
        }
        if eqs.first().map(Vec::len) == Some(1) {
            continue;
        }
        if let Some(pi) = search_h3_automorphism(&eqs, max_height) {
            if equivalent_under(g, gp, &pi, &omega).unwrap_or(false) {
                return Some((pi, omega));
            }
        }
    }
    None
}

/// Named gradings of the Heisenberg algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GradingName {
    /// `ℝ{X2} ⊕ ℝ{X1,X3}` on `h_3`.
    H3Z2A,
    /// `ℝ{X1} ⊕ ℝ{X2,X3}` on `h_3`.
    H3Z2B,
    /// `ℝ{X_{2p+1}} ⊕ ℝ{X_1..X_{2p}}`.
    H2p1Z2Center,
    /// `ℝ{X_1..X_{2k}, X_{2p+1}} ⊕ ℝ{X_{2k+1}..X_{2p}}`, `1 ≤ k < p`.
    H2p1Z2Sub(usize),
    /// Odd-index generators ⊕ even-index generators and the center.
    H2p1Z2Odd,
    /// Even-index generators ⊕ odd-index generators and the center.
    H2p1Z2Even,
    /// `{0} ⊕ odd ⊕ even ⊕ center`.
    H2p1Z22,
}

impl fmt::Display for GradingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::H3Z2A => write!(f, "H3-Z2-A"),
            Self::H3Z2B => write!(f, "H3-Z2-B"),
            Self::H2p1Z2Center => write!(f, "H2p1-Z2-center"),
            Self::H2p1Z2Sub(k) => write!(f, "H2p1-Z2-sub({k})"),
            Self::H2p1Z2Odd => write!(f, "H2p1-Z2-odd"),
            Self::H2p1Z2Even => write!(f, "H2p1-Z2-even"),
            Self::H2p1Z22 => write!(f, "H2p1-Z22"),
        }
    }
}

fn diag_signs(signs: &[i64]) -> Matrix {
    Matrix::diagonal(&signs.iter().map(|&s| int(s)).collect::<Vec<_>>())
}

/// Sign `-1` on odd-index generators `X_1, X_3, …` when `odd`, else on the
/// even ones; the center always gets `-1`.
fn parity_involution(p: usize, odd: bool) -> Matrix {
    let mut signs: Vec<i64> = (0..2 * p)
        .map(|i| if (i % 2 == 0) == odd { -1 } else { 1 })
        .collect();
    signs.push(-1);
    diag_signs(&signs)
}

/// The involutions realizing a catalog grading on `heisenberg(p)`.
pub fn catalog_involutions(name: GradingName, p: usize) -> Result<Vec<Matrix>, GradingError> {
    if p == 0 {
        return Err(GradingError::InvalidName("p must be at least 1".into()));
    }
    let n = 2 * p + 1;
    Ok(match name {
        GradingName::H3Z2A | GradingName::H3Z2B if p != 1 => {
            return Err(GradingError::InvalidName(format!("{name} needs p = 1")));
        }
        GradingName::H3Z2A => vec![crate::aut_h3::tau1(&int(0), &int(0))],
        GradingName::H3Z2B => vec![crate::aut_h3::tau2(&int(0), &int(0))],
        GradingName::H2p1Z2Center => {
            let mut s = vec![-1; n];
            s[n - 1] = 1;
            vec![diag_signs(&s)]
        }
        GradingName::H2p1Z2Sub(k) => {
            if k == 0 || k >= p {
                return Err(GradingError::InvalidName(format!(
                    "sub({k}) needs 1 <= k < p = {p}"
                )));
            }
            let s: Vec<i64> = (0..n)
                .map(|i| if i < 2 * k || i == n - 1 { 1 } else { -1 })
                .collect();
            vec![diag_signs(&s)]
        }
        GradingName::H2p1Z2Odd => vec![parity_involution(p, false)],
        GradingName::H2p1Z2Even => vec![parity_involution(p, true)],
        GradingName::H2p1Z22 => vec![parity_involution(p, true), parity_involution(p, false)],
    })
}

pub fn heisenberg_grading(name: GradingName, p: usize) -> Result<Grading, GradingError> {
    let taus = catalog_involutions(name, p)?;
    grading_from_involutions(Arc::new(heisenberg(p)?), &taus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut_h3::{tau1, tau2, tau3, tau4};

    fn h3() -> Arc<LieAlgebra> {
        Arc::new(heisenberg(1).unwrap())
    }

    fn coord(n: usize, idx: &[usize]) -> Subspace {
        Subspace::coordinate(n, idx)
    }

    fn l(k: usize, m: u32) -> GroupLabel {
        GroupLabel::new(k, m)
    }

    #[test]
    fn labels() {
        let a = GroupLabel::from_signs(&[1, -1]);
        let b = GroupLabel::from_signs(&[-1, 1]);
        assert_eq!(a.product(&b), GroupLabel::from_signs(&[-1, -1]));
        assert_eq!(a.to_string(), "(+,-)");
        assert!(GroupLabel::epsilon(2).is_epsilon());
        assert_eq!(GroupLabel::all(2).len(), 4);
    }

    #[test]
    fn gamma7_grading() {
        let z = int(0);
        let g = grading_from_involutions(h3(), &[tau1(&z, &z), tau2(&z, &z)]).unwrap();
        assert!(g.epsilon_component().is_zero());
        assert_eq!(*g.component(&l(2, 1)), coord(3, &[0]));
        assert_eq!(*g.component(&l(2, 2)), coord(3, &[1]));
        assert_eq!(*g.component(&l(2, 3)), coord(3, &[2]));
        assert!(check_grading(&g).is_empty());
        assert_eq!(support(&g).len(), 3);
        assert!(is_irreducible(&g));
    }

    #[test]
    fn trivial_and_single_involution() {
        let g = grading_from_involutions(h3(), &[]).unwrap();
        assert_eq!(*g.epsilon_component(), Subspace::full(3));
        assert_eq!(support(&g), vec![GroupLabel::epsilon(0)]);

        let z = int(0);
        let g = grading_from_involutions(h3(), &[tau4(&z, &z)]).unwrap();
        assert_eq!(*g.epsilon_component(), coord(3, &[2]));
        assert_eq!(*g.component(&l(1, 1)), coord(3, &[0, 1]));
        assert_eq!(support(&g).len(), 2);
    }

    #[test]
    fn rejects_bad_involutions() {
        let z = int(0);
        let not_inv = Matrix::diagonal(&[int(2), int(1), int(2)]);
        assert_eq!(
            grading_from_involutions(h3(), &[not_inv]),
            Err(GradingError::NotInvolutive(0))
        );
        let not_aut = Matrix::diagonal(&[int(1), int(1), int(-1)]);
        assert_eq!(
            grading_from_involutions(h3(), &[not_aut]),
            Err(GradingError::NotAutomorphism(0))
        );
        let t3 = tau3(&z, &int(1), &z).unwrap();
        assert_eq!(
            grading_from_involutions(h3(), &[tau1(&z, &z), t3]),
            Err(GradingError::NotCommuting(0, 1))
        );
    }

    #[test]
    fn hand_built_gradings() {
        let ok = Grading::from_components(
            h3(),
            1,
            vec![(l(1, 0), coord(3, &[1])), (l(1, 1), coord(3, &[0, 2]))],
        )
        .unwrap();
        assert!(check_grading(&ok).is_empty());

        let flipped = Grading::from_components(
            h3(),
            1,
            vec![(l(1, 0), coord(3, &[0, 2])), (l(1, 1), coord(3, &[1]))],
        )
        .unwrap();
        let v = check_grading(&flipped);
        assert!(v
            .iter()
            .any(|x| matches!(x, GradingViolation::Bracket { bracket, .. } if *bracket == crate::linalg::unit_vector(3, 2))));

        let short = Grading::from_components(h3(), 1, vec![(l(1, 0), coord(3, &[0]))]).unwrap();
        assert!(check_grading(&short)
            .iter()
            .any(|x| matches!(x, GradingViolation::DimensionCount { .. })));
    }

    #[test]
    fn irreducibility() {
        let g = Grading::from_components(h3(), 1, vec![(l(1, 0), Subspace::full(3))]).unwrap();
        assert!(!is_irreducible(&g));
        assert!(is_irreducible(
            &heisenberg_grading(GradingName::H2p1Z22, 2).unwrap()
        ));
    }

    #[test]
    fn catalog() {
        let g = heisenberg_grading(GradingName::H2p1Z2Center, 1).unwrap();
        assert_eq!(*g.epsilon_component(), coord(3, &[2]));
        assert_eq!(*g.component(&l(1, 1)), coord(3, &[0, 1]));

        let g = heisenberg_grading(GradingName::H2p1Z22, 2).unwrap();
        assert!(g.epsilon_component().is_zero());
        assert_eq!(*g.component(&l(2, 1)), coord(5, &[0, 2]));
        assert_eq!(*g.component(&l(2, 2)), coord(5, &[1, 3]));
        assert_eq!(*g.component(&l(2, 3)), coord(5, &[4]));

        let g = heisenberg_grading(GradingName::H2p1Z2Sub(1), 3).unwrap();
        assert_eq!(*g.epsilon_component(), coord(7, &[0, 1, 6]));

        let g = heisenberg_grading(GradingName::H2p1Z2Odd, 2).unwrap();
        assert_eq!(*g.epsilon_component(), coord(5, &[0, 2]));
        let g = heisenberg_grading(GradingName::H2p1Z2Even, 2).unwrap();
        assert_eq!(*g.epsilon_component(), coord(5, &[1, 3]));

        for p in 1..=3 {
            let mut names = vec![
                GradingName::H2p1Z2Center,
                GradingName::H2p1Z2Odd,
                GradingName::H2p1Z2Even,
                GradingName::H2p1Z22,
            ];
            names.extend((1..p).map(GradingName::H2p1Z2Sub));
            for name in names {
                assert!(check_grading(&heisenberg_grading(name, p).unwrap()).is_empty());
            }
        }
        assert!(heisenberg_grading(GradingName::H2p1Z2Sub(2), 2).is_err());
        assert!(heisenberg_grading(GradingName::H3Z2A, 2).is_err());
    }

    #[test]
    fn equivalence() {
        let a = heisenberg_grading(GradingName::H3Z2A, 1).unwrap();
        let b = heisenberg_grading(GradingName::H3Z2B, 1).unwrap();
        let id = LabelMap::identity(1);
        assert!(equivalent_under(&a, &a, &Matrix::identity(3), &id).unwrap());
        let swap = tau3(&int(0), &int(1), &int(0)).unwrap();
        assert!(equivalent_under(&a, &b, &swap, &id).unwrap());
        assert!(!equivalent_under(&a, &b, &Matrix::identity(3), &id).unwrap());

        let c = heisenberg_grading(GradingName::H2p1Z2Center, 1).unwrap();
        assert!(!equivalent_under(&a, &c, &Matrix::identity(3), &id).unwrap());
        assert!(find_h3_equivalence(&a, &c, 2).is_none());

        let (pi, omega) = find_h3_equivalence(&a, &b, 2).unwrap();
        assert!(equivalent_under(&a, &b, &pi, &omega).unwrap());

        let bad = LabelMap::from_table(1, vec![1, 0]);
        assert_eq!(
            equivalent_under(&a, &b, &swap, &bad),
            Err(GradingError::BadOmega)
        );
    }

    #[test]
    fn z2_squared_automorphisms() {
        assert_eq!(LabelMap::all_automorphisms(2).len(), 6);
        assert!(LabelMap::all_automorphisms(2)
            .iter()
            .all(LabelMap::is_group_automorphism));
    }
}

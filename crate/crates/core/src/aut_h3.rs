//! Automorphisms of the three-dimensional Heisenberg algebra `h_3`.
//!
//! In the basis `X_1, X_2, X_3` with `[X_1, X_2] = X_3`, every automorphism has
//! the block form
//!
//! ```text
//! [ a1 a2 0 ]
//! [ a3 a4 0 ]     Δ = a1·a4 − a2·a3 ≠ 0
//! [ a5 a6 Δ ]
//! ```
//!
//! This module builds that family, the involution families `τ1..τ4`, the
//! Klein four-groups `Γ7`, `Γ8`, cyclic instances of order 3, 4, 6 and the
//! non-abelian order-six example, and searches for conjugating automorphisms.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::lie::{heisenberg, LieAlgebra};
use crate::linalg::{self, fmt_q, int, kernel, rat, sqrt_exact, LinalgError, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("Δ = a1·a4 − a2·a3 vanishes")]
    DeltaZero,
    #[error("τ3 requires a2 ≠ 0")]
    Tau3NeedsA2,
    #[error("matrix is not an automorphism of h3")]
    NotAutomorphism,
    #[error("matrix is not involutive")]
    NotInvolutive,
    #[error("involution matches no family")]
    Unclassified,
    #[error("group closure exceeded {0} elements")]
    BoundExceeded(usize),
    #[error("no generators supplied")]
    NoGenerators,
    #[error("element list is not closed under composition")]
    NotClosed,
    #[error("expected a Klein four-group, got {0}")]
    NotKlein(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn h3() -> LieAlgebra {
    heisenberg(1).expect("p = 1")
}

/// The six free entries of an automorphism matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutParams {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a5: Rational,
    pub a6: Rational,
}

impl AutParams {
    pub fn new(a: [Rational; 6]) -> Self {
        let [a1, a2, a3, a4, a5, a6] = a;
        Self {
            a1,
            a2,
            a3,
            a4,
            a5,
            a6,
        }
    }

    pub fn delta(&self) -> Rational {
        &self.a1 * &self.a4 - &self.a2 * &self.a3
    }

    /// Reads the parameters back from a matrix of the block form.
    pub fn from_matrix(m: &Matrix) -> Option<Self> {
        if m.rows() != 3 || m.cols() != 3 || !m[(0, 2)].is_zero() || !m[(1, 2)].is_zero() {
            return None;
        }
        let p = Self::new([
            m[(0, 0)].clone(),
            m[(0, 1)].clone(),
            m[(1, 0)].clone(),
            m[(1, 1)].clone(),
            m[(2, 0)].clone(),
            m[(2, 1)].clone(),
        ]);
        (p.delta() == m[(2, 2)] && !p.delta().is_zero()).then_some(p)
    }
}

pub fn aut_matrix(p: &AutParams) -> Result<Matrix, AutError> {
    let d = p.delta();
    if d.is_zero() {
        return Err(AutError::DeltaZero);
    }
    let z = Rational::zero();
    Ok(Matrix::from_rows(vec![
        vec![p.a1.clone(), p.a2.clone(), z.clone()],
        vec![p.a3.clone(), p.a4.clone(), z],
        vec![p.a5.clone(), p.a6.clone(), d],
    ])?)
}

/// The four involution families plus the identity, with their free parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutionTag {
    Identity,
    Tau1 {
        a3: Rational,
        a6: Rational,
    },
    Tau2 {
        a3: Rational,
        a5: Rational,
    },
    Tau3 {
        a1: Rational,
        a2: Rational,
        a6: Rational,
    },
    Tau4 {
        a5: Rational,
        a6: Rational,
    },
}

impl fmt::Display for InvolutionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Identity => write!(f, "Id"),
            Self::Tau1 { a3, a6 } => write!(f, "tau1({},{})", fmt_q(a3), fmt_q(a6)),
            Self::Tau2 { a3, a5 } => write!(f, "tau2({},{})", fmt_q(a3), fmt_q(a5)),
            Self::Tau3 { a1, a2, a6 } => {
                write!(f, "tau3({},{},{})", fmt_q(a1), fmt_q(a2), fmt_q(a6))
            }
            Self::Tau4 { a5, a6 } => write!(f, "tau4({},{})", fmt_q(a5), fmt_q(a6)),
        }
    }
}

pub fn tau1(a3: &Rational, a6: &Rational) -> Matrix {
    let half = rat(1, 2);
    Matrix::from_rows(vec![
        vec![int(-1), int(0), int(0)],
        vec![a3.clone(), int(1), int(0)],
        vec![a3 * a6 * half, a6.clone(), int(-1)],
    ])
    .expect("3x3")
}

pub fn tau2(a3: &Rational, a5: &Rational) -> Matrix {
    Matrix::from_rows(vec![
        vec![int(1), int(0), int(0)],
        vec![a3.clone(), int(-1), int(0)],
        vec![a5.clone(), int(0), int(-1)],
    ])
    .expect("3x3")
}

pub fn tau3(a1: &Rational, a2: &Rational, a6: &Rational) -> Result<Matrix, AutError> {
    if a2.is_zero() {
        return Err(AutError::Tau3NeedsA2);
    }
    let one = Rational::one();
    Ok(Matrix::from_rows(vec![
        vec![a1.clone(), a2.clone(), int(0)],
        vec![(&one - a1 * a1) / a2, -a1.clone(), int(0)],
        vec![(&one + a1) * a6 / a2, a6.clone(), int(-1)],
    ])?)
}

pub fn tau4(a5: &Rational, a6: &Rational) -> Matrix {
    Matrix::from_rows(vec![
        vec![int(-1), int(0), int(0)],
        vec![int(0), int(-1), int(0)],
        vec![a5.clone(), a6.clone(), int(1)],
    ])
    .expect("3x3")
}

pub fn tau(tag: &InvolutionTag) -> Result<Matrix, AutError> {
    Ok(match tag {
        InvolutionTag::Identity => Matrix::identity(3),
        InvolutionTag::Tau1 { a3, a6 } => tau1(a3, a6),
        InvolutionTag::Tau2 { a3, a5 } => tau2(a3, a5),
        InvolutionTag::Tau3 { a1, a2, a6 } => tau3(a1, a2, a6)?,
        InvolutionTag::Tau4 { a5, a6 } => tau4(a5, a6),
    })
}

/// Identifies the family of an involutive automorphism and recovers its
/// parameters. Families are tried in the order Identity, τ4, τ1, τ2, τ3.
pub fn classify_involution(m: &Matrix) -> Result<InvolutionTag, AutError> {
    if !h3().is_automorphism(m) {
        return Err(AutError::NotAutomorphism);
    }
    if !m.mul(m)?.is_identity() {
        return Err(AutError::NotInvolutive);
    }
    let e = |i, j| m[(i, j)].clone();
    let candidates = [
        InvolutionTag::Identity,
        InvolutionTag::Tau4 {
            a5: e(2, 0),
            a6: e(2, 1),
        },
        InvolutionTag::Tau1 {
            a3: e(1, 0),
            a6: e(2, 1),
        },
        InvolutionTag::Tau2 {
            a3: e(1, 0),
            a5: e(2, 0),
        },
        InvolutionTag::Tau3 {
            a1: e(0, 0),
            a2: e(0, 1),
            a6: e(2, 1),
        },
    ];
    for tag in candidates {
        if tau(&tag).map(|t| &t == m).unwrap_or(false) {
            return Ok(tag);
        }
    }
    Err(AutError::Unclassified)
}

pub fn compose(m1: &Matrix, m2: &Matrix) -> Result<Matrix, AutError> {
    Ok(m1.mul(m2)?)
}

/// A finite matrix group with its composition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    elements: Vec<Matrix>,
    /// `table[i][j]` is the index of `elements[i] · elements[j]`.
    table: Vec<Vec<usize>>,
}

impl FiniteGroupTable {
    /// Tabulates a list of distinct matrices, failing unless it is a group.
    pub fn from_elements(elements: Vec<Matrix>) -> Result<Self, AutError> {
        if elements.is_empty() {
            return Err(AutError::NoGenerators);
        }
        let mut table = Vec::with_capacity(elements.len());
        for a in &elements {
            let row = elements
                .iter()
                .map(|b| {
                    let ab = a.mul(b)?;
                    elements
                        .iter()
                        .position(|x| x == &ab)
                        .ok_or(AutError::NotClosed)
                })
                .collect::<Result<Vec<_>, _>>()?;
            table.push(row);
        }
        let g = Self { elements, table };
        if g.identity_index().is_none() {
            return Err(AutError::NotClosed);
        }
        let e = g.identity_index().unwrap();
        if !g.table.iter().all(|row| row.contains(&e)) {
            return Err(AutError::NotClosed);
        }
        Ok(g)
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity_index(&self) -> Option<usize> {
        self.elements.iter().position(Matrix::is_identity)
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.elements.iter().position(|x| x == m)
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.index_of(m).is_some()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn order_of(&self, i: usize) -> usize {
        let e = self.identity_index().expect("group has identity");
        let mut k = 1;
        let mut cur = i;
        while cur != e {
            cur = self.table[cur][i];
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.len()).map(|i| self.order_of(i)).collect()
    }

    pub fn exponent(&self) -> usize {
        self.element_orders()
            .into_iter()
            .fold(1, |acc, o| acc / num_integer::gcd(acc, o) * o)
    }

    /// Same element set, ignoring order.
    pub fn same_elements(&self, other: &FiniteGroupTable) -> bool {
        self.len() == other.len() && self.elements.iter().all(|m| other.contains(m))
    }

    pub fn is_klein_four(&self) -> bool {
        self.len() == 4 && self.is_abelian() && self.exponent() == 2
    }
}

/// Closes the generators under composition, failing beyond `bound` elements.
pub fn group_closure(generators: &[Matrix], bound: usize) -> Result<FiniteGroupTable, AutError> {
    let first = generators.first().ok_or(AutError::NoGenerators)?;
    let n = first.rows();
    let mut elements = vec![Matrix::identity(n)];
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        for g in generators {
            let prod = current.mul(g)?;
            if !elements.contains(&prod) {
                if elements.len() == bound {
                    return Err(AutError::BoundExceeded(bound));
                }
                elements.push(prod);
            }
        }
        frontier += 1;
    }
    FiniteGroupTable::from_elements(elements)
}

fn klein(elements: Vec<Matrix>) -> Result<FiniteGroupTable, AutError> {
    let g = FiniteGroupTable::from_elements(elements)?;
    if !g.is_klein_four() {
        return Err(AutError::NotKlein(format!(
            "order {}, abelian {}, exponent {}",
            g.len(),
            g.is_abelian(),
            g.exponent()
        )));
    }
    Ok(g)
}

/// `{Id, τ1(a3,a6), τ2(−a3,a5), τ4(−a3·a6/2 − a5, −a6)}`.
pub fn gamma7(a3: &Rational, a5: &Rational, a6: &Rational) -> Result<FiniteGroupTable, AutError> {
    let t4_a5 = -(a3 * a6 / int(2)) - a5;
    klein(vec![
        Matrix::identity(3),
        tau1(a3, a6),
        tau2(&-a3.clone(), a5),
        tau4(&t4_a5, &-a6.clone()),
    ])
}

/// `{Id, τ3(a1,a2,a6), τ3(−a1,−a2,a6'), τ4((a6'(1−a1) − a6(1+a1))/a2, −a6 − a6')}`.
pub fn gamma8(
    a1: &Rational,
    a2: &Rational,
    a6: &Rational,
    a6p: &Rational,
) -> Result<FiniteGroupTable, AutError> {
    if a2.is_zero() {
        return Err(AutError::Tau3NeedsA2);
    }
    let one = Rational::one();
    let t4_a5 = (a6p * (&one - a1) - a6 * (&one + a1)) / a2;
    let t4_a6 = -a6.clone() - a6p;
    klein(vec![
        Matrix::identity(3),
        tau3(a1, a2, a6)?,
        tau3(&-a1.clone(), &-a2.clone(), a6p)?,
        tau4(&t4_a5, &t4_a6),
    ])
}

/// True iff `{σ⁻¹·m·σ : m ∈ g}` equals `h` as a set.
pub fn conjugates_to(
    sigma: &Matrix,
    g: &FiniteGroupTable,
    h: &FiniteGroupTable,
) -> Result<bool, AutError> {
    let inv = sigma.inverse()?;
    if g.len() != h.len() {
        return Ok(false);
    }
    for m in g.elements() {
        let c = inv.mul(m)?.mul(sigma)?;
        if !h.contains(&c) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rationals of height at most `h` (|num|, den ≤ h), each listed once,
/// ordered by height then magnitude.
pub fn small_height_rationals(h: u32) -> Vec<Rational> {
    let mut out: Vec<Rational> = vec![Rational::zero()];
    for level in 1..=h as i64 {
        let mut fresh = Vec::new();
        for den in 1..=level {
            for num in 1..=level {
                if num.max(den) != level || num_integer::gcd(num, den) != 1 {
                    continue;
                }
                fresh.push(rat(num, den));
                fresh.push(rat(-num, den));
            }
        }
        out.extend(fresh);
    }
    out
}

/// Linear equations (rows over the 9 entries of σ, row-major) for `a·σ = σ·b`.
pub fn intertwiner_equations(a: &Matrix, b: &Matrix) -> Vec<Vec<Rational>> {
    let mut rows = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            let mut row = vec![Rational::zero(); 9];
            for k in 0..3 {
                row[3 * k + j] += &a[(i, k)];
                row[3 * i + k] -= &b[(k, j)];
            }
            rows.push(row);
        }
    }
    rows
}

/// Searches the linear subspace of 3×3 matrices cut out by `equations`
/// (each a row over the 9 row-major entries) for an automorphism of `h_3`.
///
/// Coefficients along a basis of the solution space range over rationals of
/// height ≤ `max_height`; each candidate `σ` with `Δ(σ) ≠ 0` and `σ33 ≠ 0` is
/// rescaled by `σ33/Δ` so that the corner equals the determinant of the
/// upper block. The result is verified with [`LieAlgebra::is_automorphism`].
pub fn search_h3_automorphism(equations: &[Vec<Rational>], max_height: u32) -> Option<Matrix> {
    let mut rows = equations.to_vec();
    rows.push(linalg::unit_vector(9, 2));
    rows.push(linalg::unit_vector(9, 5));
    let space = kernel(&Matrix::from_rows(rows).ok()?);
    let basis = space.basis_vectors();
    if basis.is_empty() {
        return None;
    }
    let h3 = h3();
    let values = small_height_rationals(max_height);
    let r = basis.len();
    let mut idx = vec![0usize; r];
    loop {
        let mut v = vec![Rational::zero(); 9];
        for (c, b) in idx.iter().zip(&basis) {
            let coef = &values[*c];
            if !coef.is_zero() {
                v = linalg::add_vec(&v, &linalg::scale_vec(coef, b));
            }
        }
        let delta = &v[0] * &v[4] - &v[1] * &v[3];
        if !delta.is_zero() && !v[8].is_zero() {
            let t = &v[8] / &delta;
            let m = Matrix::from_rows(v.chunks(3).map(|c| linalg::scale_vec(&t, c)).collect())
                .expect("3x3");
            if h3.is_automorphism(&m) {
                return Some(m);
            }
        }
        // odometer over the coefficient grid
        let mut pos = 0;
        loop {
            if pos == r {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Greedy generating set: adds elements until their closure is the group.
fn generating_set(g: &FiniteGroupTable) -> Vec<Matrix> {
    let mut gens: Vec<Matrix> = Vec::new();
    for m in g.elements() {
        if m.is_identity() {
            continue;
        }
        let covered = !gens.is_empty()
            && group_closure(&gens, g.len())
                .map(|c| c.contains(m))
                .unwrap_or(false);
        if !covered {
            gens.push(m.clone());
        }
        if !gens.is_empty()
            && group_closure(&gens, g.len())
                .map(|c| c.len() == g.len())
                .unwrap_or(false)
        {
            break;
        }
    }
    gens
}

/// Finds an automorphism `σ` of `h_3` with `σ⁻¹·g·σ = h`.
///
/// Generators of `g` are matched against every tuple of elements of `h`; each
/// assignment is a linear condition `g_i·σ = σ·h_i` on `σ`, searched with
/// [`search_h3_automorphism`] and then verified with [`conjugates_to`].
pub fn find_conjugacy_witness(
    g: &FiniteGroupTable,
    h: &FiniteGroupTable,
    max_height: u32,
) -> Option<Matrix> {
    if g.len() != h.len() {
        return None;
    }
    let gens = generating_set(g);
    let targets: Vec<&Matrix> = h.elements().iter().filter(|m| !m.is_identity()).collect();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let distinct =
            (0..choice.len()).all(|i| (i + 1..choice.len()).all(|j| choice[i] != choice[j]));
        if distinct {
            let eqs: Vec<Vec<Rational>> = gens
                .iter()
                .zip(&choice)
                .flat_map(|(a, &c)| intertwiner_equations(a, targets[c]))
                .collect();
            if let Some(sigma) = search_h3_automorphism(&eqs, max_height) {
                if conjugates_to(&sigma, g, h).unwrap_or(false) {
                    return Some(sigma);
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return None;
            }
            choice[pos] += 1;
            if choice[pos] < targets.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// `cos(2π/k)` when it is rational and `k ≥ 3`.
pub fn rational_cos_two_pi_over(k: u32) -> Option<Rational> {
    match k {
        3 => Some(rat(-1, 2)),
        4 => Some(Rational::zero()),
        6 => Some(rat(1, 2)),
        _ => None,
    }
}

/// Generator of a cyclic subgroup of order `k`:
///
/// ```text
/// [ c − s  a2    0 ]
/// [ a3     c + s 0 ]     c = cos(2π/k),  s = √(c² − 1 − a2·a3)
/// [ a5     a6    1 ]
/// ```
///
/// Absent when `c` is irrational or the discriminant is not a rational square.
pub fn order_k_instance(
    k: u32,
    a2: &Rational,
    a3: &Rational,
    a5: &Rational,
    a6: &Rational,
) -> Option<Matrix> {
    let c = rational_cos_two_pi_over(k)?;
    let disc = &c * &c - Rational::one() - a2 * a3;
    let s = sqrt_exact(&disc)?;
    let m = Matrix::from_rows(vec![
        vec![&c - &s, a2.clone(), int(0)],
        vec![a3.clone(), &c + &s, int(0)],
        vec![a5.clone(), a6.clone(), int(1)],
    ])
    .expect("3x3");
    (multiplicative_order(&m, k) == Some(k)).then_some(m)
}

/// Smallest `j ≤ limit` with `m^j = I`.
pub fn multiplicative_order(m: &Matrix, limit: u32) -> Option<u32> {
    let mut p = m.clone();
    for j in 1..=limit {
        if p.is_identity() {
            return Some(j);
        }
        p = p.mul(m).ok()?;
    }
    None
}

/// The generators `σ1 = diag(−1, 1, −1)` and `σ2` of a non-abelian subgroup of
/// order six (`σ1² = σ2³ = Id`, `σ1σ2σ1 = σ2²`).
pub fn sigma3_generators(alpha: &Rational) -> Result<(Matrix, Matrix), AutError> {
    if alpha.is_zero() {
        return Err(AutError::DeltaZero);
    }
    let s1 = Matrix::diagonal(&[int(-1), int(1), int(-1)]);
    let s2 = Matrix::from_rows(vec![
        vec![rat(-1, 2), alpha.clone(), int(0)],
        vec![rat(-3, 4) / alpha, rat(-1, 2), int(0)],
        vec![int(0), int(0), int(1)],
    ])?;
    Ok((s1, s2))
}

//! Invariant affine connections on reductive splits.
//!
//! A connection is a linear map `Λ: m → gl(m)`. `Λ(Y_i)` is stored as a
//! matrix in `m_basis` coordinates whose column `j` is `Λ(Y_i)Y_j`.
//!
//! ```text
//! T(X,Y) = Λ(X)Y − Λ(Y)X − [X,Y]_m
//! R(X,Y) = [Λ(X), Λ(Y)] − Λ([X,Y]_m) − λ([X,Y]_h)
//! ```

mod flat;
mod l5;
pub mod poly;

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::gradings::{heisenberg_grading, Grading, GradingError, GradingName, GroupLabel};
use crate::linalg::{self, rat, solve_affine, AffineSolution, LinalgError, Matrix, Rational};
use crate::metrics::{reductive_split, MetricError, ReductiveSplit};

pub use flat::{
    flat_enumeration, h3_flat_enumeration, Branch, BranchOutcome, FlatEnumeration, H3FlatReport,
};
pub use l5::{
    l5_evaluate, l5_printed_connection, l5_printed_convention, l5_printed_isotropy, l5_split,
    l5_vanishing_point, L5Evaluation, L5Reading, L5Sample,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectionError {
    #[error("expected {expected} maps, got {found}")]
    MapCount { expected: usize, found: usize },
    #[error("map {index} is not {dim}x{dim}")]
    MapSize { index: usize, dim: usize },
    #[error("vector is not in h")]
    NotInH,
    #[error("grading does not match the connection's split")]
    SplitMismatch,
    #[error("p must be at least 1")]
    ZeroRank,
    #[error("C grid must be {p}x{p}")]
    GridShape { p: usize },
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Sign used for the isotropy action of `h` on `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum IsotropyConvention {
    /// `λ(z)X = [z, X]_m`
    #[default]
    Standard,
    /// `λ(z)X = [X, z]_m`
    Opposite,
}

impl fmt::Display for IsotropyConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Standard => write!(f, "standard"),
            Self::Opposite => write!(f, "opposite"),
        }
    }
}

/// The endomorphism `X ↦ [z, X]_m` of `m` (negated for the opposite convention).
pub fn isotropy_rep(
    split: &ReductiveSplit,
    z: &[Rational],
    convention: IsotropyConvention,
) -> Result<Matrix, ConnectionError> {
    if !split.h().contains(z) {
        return Err(ConnectionError::NotInH);
    }
    let alg = split.algebra();
    let cols: Vec<Vec<Rational>> = split
        .m_basis()
        .iter()
        .map(|y| split.m_coords(&alg.bracket(z, y).expect("dimension")))
        .collect();
    let m = Matrix::from_columns(split.dim_m(), &cols);
    Ok(match convention {
        IsotropyConvention::Standard => m,
        IsotropyConvention::Opposite => m.scale(&-Rational::from_integer(1.into())),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionMap {
    split: Arc<ReductiveSplit>,
    lambda: Vec<Matrix>,
    isotropy: IsotropyConvention,
}

impl ConnectionMap {
    pub fn new(split: Arc<ReductiveSplit>, lambda: Vec<Matrix>) -> Result<Self, ConnectionError> {
        let d = split.dim_m();
        if lambda.len() != d {
            return Err(ConnectionError::MapCount {
                expected: d,
                found: lambda.len(),
            });
        }
        if let Some(index) = lambda.iter().position(|m| m.rows() != d || m.cols() != d) {
            return Err(ConnectionError::MapSize { index, dim: d });
        }
        Ok(Self {
            split,
            lambda,
            isotropy: IsotropyConvention::Standard,
        })
    }

    pub fn zero(split: Arc<ReductiveSplit>) -> Self {
        let d = split.dim_m();
        Self {
            split,
            lambda: vec![Matrix::zeros(d, d); d],
            isotropy: IsotropyConvention::Standard,
        }
    }

    pub fn with_isotropy(mut self, convention: IsotropyConvention) -> Self {
        self.isotropy = convention;
        self
    }

    pub fn isotropy(&self) -> IsotropyConvention {
        self.isotropy
    }

    pub fn split(&self) -> &Arc<ReductiveSplit> {
        &self.split
    }

    pub fn dim(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self, i: usize) -> &Matrix {
        &self.lambda[i]
    }

    pub fn lambdas(&self) -> &[Matrix] {
        &self.lambda
    }

    /// Coefficient of `Y_out` in `Λ(Y_i)Y_input`.
    pub fn entry(&self, i: usize, input: usize, out: usize) -> &Rational {
        &self.lambda[i][(out, input)]
    }

    pub fn set_entry(&mut self, i: usize, input: usize, out: usize, value: Rational) {
        self.lambda[i][(out, input)] = value;
    }

    /// `Λ(Σ c_i Y_i)`.
    pub fn apply(&self, coords: &[Rational]) -> Matrix {
        let d = self.dim();
        let mut acc = Matrix::zeros(d, d);
        for (c, m) in coords.iter().zip(&self.lambda) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c)).expect("same size");
            }
        }
        acc
    }
}

/// `T(Y_i, Y_j)` in `m` coordinates for every ordered basis pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Torsion {
    dim: usize,
    values: Vec<Vec<Rational>>,
}

impl Torsion {
    pub fn get(&self, i: usize, j: usize) -> &[Rational] {
        &self.values[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| linalg::is_zero_vec(v))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                let neg: Vec<Rational> = self.get(j, i).iter().map(|x| -x.clone()).collect();
                self.get(i, j) == neg.as_slice()
            })
        })
    }

    /// `(i, j, k, value)` with `T(Y_i,Y_j)` having `value` on `Y_k`.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, v) in self.get(i, j).iter().enumerate() {
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// `R(Y_i, Y_j)` as an endomorphism of `m` for every ordered basis pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curvature {
    dim: usize,
    values: Vec<Matrix>,
}

impl Curvature {
    pub fn get(&self, i: usize, j: usize) -> &Matrix {
        &self.values[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Matrix::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim;
        let minus = -Rational::from_integer(1.into());
        (0..d).all(|i| (0..d).all(|j| *self.get(i, j) == self.get(j, i).scale(&minus)))
    }

    /// First `(i, j, row, col, value)` with a nonzero entry, pairs `i < j`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize, usize, Rational)> {
        let d = self.dim;
        for i in 0..d {
            for j in i + 1..d {
                let m = self.get(i, j);
                for r in 0..d {
                    for c in 0..d {
                        if !m[(r, c)].is_zero() {
                            return Some((i, j, r, c, m[(r, c)].clone()));
                        }
                    }
                }
            }
        }
        None
    }

    /// All entries flattened, pairs `i < j` only.
    pub fn upper_entries(&self) -> Vec<Rational> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                out.extend(self.get(i, j).entries().iter().cloned());
            }
        }
        out
    }
}

pub fn torsion(c: &ConnectionMap) -> Torsion {
    let split = &c.split;
    let alg = split.algebra();
    let d = c.dim();
    let mut values = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let bracket = split.m_coords(
                &alg.bracket(&split.m_basis()[i], &split.m_basis()[j])
                    .expect("dimension"),
            );
            let v: Vec<Rational> = (0..d)
                .map(|k| c.entry(i, j, k) - c.entry(j, i, k) - &bracket[k])
                .collect();
            values.push(v);
        }
    }
    Torsion { dim: d, values }
}

pub fn curvature(c: &ConnectionMap) -> Curvature {
    let split = &c.split;
    let alg = split.algebra();
    let d = c.dim();
    let mut values = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let b = alg
                .bracket(&split.m_basis()[i], &split.m_basis()[j])
                .expect("dimension");
            let comm = c.lambda[i].commutator(&c.lambda[j]).expect("square");
            let along_m = c.apply(&split.m_coords(&b));
            let iso = isotropy_rep(split, &split.h_part(&b), c.isotropy).expect("h part lies in h");
            values.push(comm.sub(&along_m).unwrap().sub(&iso).unwrap());
        }
    }
    Curvature { dim: d, values }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivarianceViolation {
    pub m_index: usize,
    pub h_index: usize,
    /// `Λ([X,Z]) − [Λ(X), λ(Z)]`.
    pub difference: Matrix,
}

/// Checks `Λ([X,Z]) = [Λ(X), λ(Z)]` for `X` in `m_basis` and `Z` in the `h` basis.
pub fn equivariance_check(c: &ConnectionMap) -> Vec<EquivarianceViolation> {
    let split = &c.split;
    let alg = split.algebra();
    let mut out = Vec::new();
    for (hi, z) in split.h_basis().iter().enumerate() {
        let lz = isotropy_rep(split, z, c.isotropy).expect("basis of h");
        for (mi, x) in split.m_basis().iter().enumerate() {
            let b = alg.bracket(x, z).expect("dimension");
            let lhs = c.apply(&split.m_coords(&b));
            let rhs = c.lambda[mi].commutator(&lz).expect("square");
            let difference = lhs.sub(&rhs).expect("same size");
            if !difference.is_zero() {
                out.push(EquivarianceViolation {
                    m_index: mi,
                    h_index: hi,
                    difference,
                });
            }
        }
    }
    out
}

/// `Λ = 0`.
pub fn first_canonical(split: Arc<ReductiveSplit>) -> ConnectionMap {
    ConnectionMap::zero(split)
}

/// `Λ(X)Y = ½·[X,Y]_m`.
pub fn second_canonical(split: Arc<ReductiveSplit>) -> ConnectionMap {
    let d = split.dim_m();
    let half = rat(1, 2);
    let alg = split.algebra();
    let lambda = (0..d)
        .map(|i| {
            let cols: Vec<Vec<Rational>> = (0..d)
                .map(|j| {
                    let b = alg
                        .bracket(&split.m_basis()[i], &split.m_basis()[j])
                        .expect("dimension");
                    linalg::scale_vec(&half, &split.m_coords(&b))
                })
                .collect();
            Matrix::from_columns(d, &cols)
        })
        .collect();
    ConnectionMap {
        split,
        lambda,
        isotropy: IsotropyConvention::Standard,
    }
}

fn check_grading_matches(c: &ConnectionMap, g: &Grading) -> Result<(), ConnectionError> {
    if c.split.grading() != g {
        return Err(ConnectionError::SplitMismatch);
    }
    Ok(())
}

/// Every `Λ(Y_i)Y_j` lies in the component of `label_i · label_j`.
pub fn is_adapted(c: &ConnectionMap, g: &Grading) -> Result<bool, ConnectionError> {
    check_grading_matches(c, g)?;
    let labels = c.split.m_labels();
    let d = c.dim();
    Ok((0..d).all(|i| {
        (0..d).all(|j| {
            let target = labels[i].product(&labels[j]);
            (0..d).all(|k| labels[k] == target || c.entry(i, j, k).is_zero())
        })
    }))
}

/// Every `Λ(Y_i)` preserves each component.
pub fn is_homogeneous(c: &ConnectionMap, g: &Grading) -> Result<bool, ConnectionError> {
    check_grading_matches(c, g)?;
    let labels = c.split.m_labels();
    let d = c.dim();
    Ok((0..d).all(|i| {
        (0..d).all(|j| (0..d).all(|k| labels[k] == labels[j] || c.entry(i, j, k).is_zero()))
    }))
}

/// The split of `heisenberg(p)` under its `ℤ₂²`-grading; `h = {0}`.
pub fn heisenberg_klein_split(p: usize) -> Result<Arc<ReductiveSplit>, ConnectionError> {
    if p == 0 {
        return Err(ConnectionError::ZeroRank);
    }
    let g = heisenberg_grading(GradingName::H2p1Z22, p)?;
    Ok(Arc::new(reductive_split(&g)?))
}

fn m_index_of_unit(split: &ReductiveSplit, algebra_index: usize) -> usize {
    let n = split.algebra().dim();
    let e = linalg::unit_vector(n, algebra_index);
    split
        .m_basis()
        .iter()
        .position(|v| *v == e)
        .expect("coordinate grading")
}

/// The flat torsion-free adapted family on `heisenberg(p)`.
///
/// With `c[k][t]` attached to the pair `X_{2k+1}, X_{2t+2}` (0-based `k, t`):
/// `Λ(X_{2k+1})X_{2t+2} = c[k][t]·Z`, `Λ(X_{2t+2})X_{2k+1} = c[k][t]·Z` for
/// `k ≠ t` and `(c[t][t] − 1)·Z` for `k = t`, where `Z = X_{2p+1}`. All other
/// values vanish.
pub fn heisenberg_flat_family(
    p: usize,
    c: &[Vec<Rational>],
) -> Result<ConnectionMap, ConnectionError> {
    let split = heisenberg_klein_split(p)?;
    if c.len() != p || c.iter().any(|row| row.len() != p) {
        return Err(ConnectionError::GridShape { p });
    }
    let z = m_index_of_unit(&split, 2 * p);
    let mut map = ConnectionMap::zero(split.clone());
    let one = Rational::from_integer(1.into());
    for (k, row) in c.iter().enumerate() {
        let odd = m_index_of_unit(&split, 2 * k);
        for (t, ckt) in row.iter().enumerate() {
            let even = m_index_of_unit(&split, 2 * t + 1);
            map.set_entry(odd, even, z, ckt.clone());
            let back = if k == t { ckt - &one } else { ckt.clone() };
            map.set_entry(even, odd, z, back);
        }
    }
    Ok(map)
}

/// Which entries of `Λ` are treated as unknowns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// `Λ(Y_i)Y_j` restricted to the component of `label_i · label_j`.
    Adapted,
    /// Every entry.
    Full,
}

/// Coefficient of `Y_output` in `Λ(Y_lambda)Y_input`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unknown {
    pub lambda: usize,
    pub input: usize,
    pub output: usize,
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "L({})Y{}->Y{}",
            self.lambda + 1,
            self.input + 1,
            self.output + 1
        )
    }
}

/// An affine family of connections, `particular + span(homogeneous)`, over
/// the unknown entries of a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionFamily {
    split: Arc<ReductiveSplit>,
    unknowns: Vec<Unknown>,
    solution: AffineSolution,
}

impl ConnectionFamily {
    pub fn unknowns(&self) -> &[Unknown] {
        &self.unknowns
    }

    pub fn solution(&self) -> &AffineSolution {
        &self.solution
    }

    /// Number of free parameters.
    pub fn dim(&self) -> usize {
        self.solution.homogeneous.dim()
    }

    pub fn from_values(&self, values: &[Rational]) -> ConnectionMap {
        let mut map = ConnectionMap::zero(self.split.clone());
        for (u, v) in self.unknowns.iter().zip(values) {
            map.set_entry(u.lambda, u.input, u.output, v.clone());
        }
        map
    }

    pub fn particular(&self) -> ConnectionMap {
        self.from_values(&self.solution.particular)
    }

    pub fn homogeneous_basis(&self) -> Vec<Vec<Rational>> {
        self.solution.homogeneous.basis_vectors()
    }

    /// `particular + Σ t_i·basis_i`, in unknown coordinates.
    pub fn point(&self, t: &[Rational]) -> Vec<Rational> {
        let mut x = self.solution.particular.clone();
        for (ti, b) in t.iter().zip(self.homogeneous_basis()) {
            if !ti.is_zero() {
                x = linalg::add_vec(&x, &linalg::scale_vec(ti, &b));
            }
        }
        x
    }

    pub fn member(&self, t: &[Rational]) -> ConnectionMap {
        self.from_values(&self.point(t))
    }

    /// Unknown values of `c`, or `None` if `c` has entries outside the pattern.
    pub fn values_of(&self, c: &ConnectionMap) -> Option<Vec<Rational>> {
        let d = c.dim();
        let mut rest = c.clone();
        let mut out = Vec::with_capacity(self.unknowns.len());
        for u in &self.unknowns {
            out.push(c.entry(u.lambda, u.input, u.output).clone());
            rest.set_entry(u.lambda, u.input, u.output, Rational::zero());
        }
        let clean = (0..d).all(|i| rest.lambda(i).is_zero());
        clean.then_some(out)
    }

    pub fn contains(&self, c: &ConnectionMap) -> bool {
        c.split.as_ref() == self.split.as_ref()
            && self
                .values_of(c)
                .map(|v| self.solution.contains(&v))
                .unwrap_or(false)
    }
}

fn pattern_unknowns(split: &ReductiveSplit, pattern: Pattern) -> Vec<Unknown> {
    let d = split.dim_m();
    let labels = split.m_labels();
    let mut out = Vec::new();
    for lambda in 0..d {
        for input in 0..d {
            let target: GroupLabel = labels[lambda].product(&labels[input]);
            for (output, label) in labels.iter().enumerate() {
                if pattern == Pattern::Full || *label == target {
                    out.push(Unknown {
                        lambda,
                        input,
                        output,
                    });
                }
            }
        }
    }
    out
}

/// Affine space of torsion-free, `h`-equivariant connections whose nonzero
/// entries follow `pattern`. `None` when the constraints are inconsistent.
pub fn torsion_free_adapted_space(
    g: &Grading,
    pattern: Pattern,
) -> Result<Option<ConnectionFamily>, ConnectionError> {
    let split = Arc::new(reductive_split(g)?);
    let unknowns = pattern_unknowns(&split, pattern);
    let nu = unknowns.len();
    let d = split.dim_m();
    let col = |l: usize, i: usize, o: usize| {
        unknowns
            .iter()
            .position(|u| u.lambda == l && u.input == i && u.output == o)
    };
    let alg = split.algebra();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    // T(Y_i, Y_j) = 0
    for i in 0..d {
        for j in i + 1..d {
            let b = split.m_coords(
                &alg.bracket(&split.m_basis()[i], &split.m_basis()[j])
                    .expect("dimension"),
            );
            for (k, bk) in b.iter().enumerate() {
                let mut row = vec![Rational::zero(); nu];
                if let Some(x) = col(i, j, k) {
                    row[x] += Rational::from_integer(1.into());
                }
                if let Some(x) = col(j, i, k) {
                    row[x] -= Rational::from_integer(1.into());
                }
                rows.push(row);
                rhs.push(bk.clone());
            }
        }
    }
    // Λ([X,Z]) − Λ(X)λ(Z) + λ(Z)Λ(X) = 0
    for z in split.h_basis() {
        let lz = isotropy_rep(&split, z, IsotropyConvention::Standard)?;
        for (mi, x) in split.m_basis().iter().enumerate() {
            let w = split.m_coords(&alg.bracket(x, z).expect("dimension"));
            for r in 0..d {
                for cc in 0..d {
                    let mut row = vec![Rational::zero(); nu];
                    for (idx, u) in unknowns.iter().enumerate() {
                        // u contributes e_{output, input} to Λ(Y_lambda)
                        let mut coef = Rational::zero();
                        if u.output == r && u.input == cc {
                            coef += &w[u.lambda];
                        }
                        if u.lambda == mi {
                            if u.output == r {
                                coef -= &lz[(u.input, cc)];
                            }
                            if u.input == cc {
                                coef += &lz[(r, u.output)];
                            }
                        }
                        row[idx] = coef;
                    }
                    rows.push(row);
                    rhs.push(Rational::zero());
                }
            }
        }
    }
    let solution = if rows.is_empty() {
        Some(AffineSolution {
            particular: vec![Rational::zero(); nu],
            homogeneous: linalg::Subspace::full(nu),
        })
    } else {
        solve_affine(&Matrix::from_rows(rows)?, &rhs)?
    };
    Ok(solution.map(|solution| ConnectionFamily {
        split,
        unknowns,
        solution,
    }))
}

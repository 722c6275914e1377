//! Reductive splits, ad-invariant symmetric forms and their classification.
//!
//! Forms live on `m` and are written in the coordinates of
//! [`ReductiveSplit::m_basis`]: entry `(i, j)` is `B(Y_i, Y_j)`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::aut_h3::{tau1, tau2};
use crate::gradings::{check_grading, grading_from_involutions, Grading, GradingError, GroupLabel};
use crate::lie::{heisenberg, LieAlgebra};
use crate::linalg::{
    self, int, kernel, rat, signature, sqrt_exact, LinalgError, Matrix, Rational, Signature,
    Subspace,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("grading fails its axioms: {0}")]
    InvalidGrading(String),
    #[error("[{0}] not contained in {1}")]
    NotReductive(&'static str, &'static str),
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("form has size {found}, m has dimension {expected}")]
    FormSize { expected: usize, found: usize },
    #[error("vector is not in h")]
    NotInH,
    #[error("automorphism does not preserve m")]
    DoesNotPreserveM,
    #[error("expected a diagonal positive-definite 3x3 form")]
    NotDiagonalPositive,
    #[error("form is not Lorentzian on this grading: {0}")]
    NotLorentzian(String),
    #[error("degenerate component {0} is off the center; reducible to Case I by an automorphism, reduction not performed")]
    ReductionNotPerformed(String),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `g = h ⊕ m` with `h = g_ε` and `m` the sum of the other components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductiveSplit {
    grading: Grading,
    h: Subspace,
    m: Subspace,
    h_basis: Vec<Vec<Rational>>,
    m_basis: Vec<Vec<Rational>>,
    m_labels: Vec<GroupLabel>,
    /// Inverse of the matrix whose columns are `h_basis` then `m_basis`.
    to_adapted: Matrix,
}

impl ReductiveSplit {
    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.grading.algebra()
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn m(&self) -> &Subspace {
        &self.m
    }

    pub fn h_basis(&self) -> &[Vec<Rational>] {
        &self.h_basis
    }

    /// Concatenated component bases of the non-ε labels, in label order.
    pub fn m_basis(&self) -> &[Vec<Rational>] {
        &self.m_basis
    }

    /// Label of each `m_basis` vector.
    pub fn m_labels(&self) -> &[GroupLabel] {
        &self.m_labels
    }

    pub fn dim_m(&self) -> usize {
        self.m_basis.len()
    }

    /// Indices into `m_basis` of the vectors spanning component `label`.
    pub fn indices_of(&self, label: &GroupLabel) -> Vec<usize> {
        (0..self.dim_m())
            .filter(|&i| self.m_labels[i] == *label)
            .collect()
    }

    fn adapted_coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.to_adapted.mul_vec(v).expect("ambient dimension")
    }

    /// Coordinates of the `m`-projection of `v` along `h`.
    pub fn m_coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.adapted_coords(v)[self.h_basis.len()..].to_vec()
    }

    /// The `h`-projection of `v` along `m`, as an algebra vector.
    pub fn h_part(&self, v: &[Rational]) -> Vec<Rational> {
        let c = self.adapted_coords(v);
        combine(
            self.algebra().dim(),
            &c[..self.h_basis.len()],
            &self.h_basis,
        )
    }

    /// The `m`-projection of `v` along `h`, as an algebra vector.
    pub fn m_part(&self, v: &[Rational]) -> Vec<Rational> {
        self.from_m_coords(&self.m_coords(v))
    }

    pub fn from_m_coords(&self, c: &[Rational]) -> Vec<Rational> {
        combine(self.algebra().dim(), c, &self.m_basis)
    }
}

fn combine(n: usize, coeffs: &[Rational], basis: &[Vec<Rational>]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            out = linalg::add_vec(&out, &linalg::scale_vec(c, b));
        }
    }
    out
}

pub fn reductive_split(g: &Grading) -> Result<ReductiveSplit, MetricError> {
    let violations = check_grading(g);
    if let Some(v) = violations.first() {
        return Err(MetricError::InvalidGrading(v.to_string()));
    }
    let n = g.dim();
    let h = g.epsilon_component().clone();
    let h_basis = h.basis_vectors();
    let mut m_basis = Vec::new();
    let mut m_labels = Vec::new();
    for (label, space) in g.components() {
        if label.is_epsilon() {
            continue;
        }
        for v in space.basis_vectors() {
            m_basis.push(v);
            m_labels.push(*label);
        }
    }
    let m = Subspace::span(n, &m_basis)?;
    let alg = g.algebra();
    for x in &h_basis {
        for y in &h_basis {
            if !h.contains(&alg.bracket(x, y).expect("dimension")) {
                return Err(MetricError::NotReductive("h,h", "h"));
            }
        }
        for y in &m_basis {
            if !m.contains(&alg.bracket(x, y).expect("dimension")) {
                return Err(MetricError::NotReductive("h,m", "m"));
            }
        }
    }
    let columns: Vec<Vec<Rational>> = h_basis.iter().chain(&m_basis).cloned().collect();
    let to_adapted = Matrix::from_columns(n, &columns).inverse()?;
    Ok(ReductiveSplit {
        grading: g.clone(),
        h,
        m,
        h_basis,
        m_basis,
        m_labels,
        to_adapted,
    })
}

/// A symmetric bilinear form on `m`, in `m_basis` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymBilinearForm {
    matrix: Matrix,
}

impl SymBilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self, MetricError> {
        if !matrix.is_square() || !matrix.is_symmetric() {
            return Err(MetricError::NotSymmetric);
        }
        Ok(Self { matrix })
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        Self {
            matrix: Matrix::diagonal(entries),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn signature(&self) -> Signature {
        signature(&self.matrix).expect("symmetric by construction")
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        linalg::dot(x, &self.matrix.mul_vec(y).expect("dimension"))
    }
}

impl fmt::Display for SymBilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// Upper-triangular index pairs of a `d×d` symmetric matrix.
fn sym_pairs(d: usize) -> Vec<(usize, usize)> {
    (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect()
}

fn sym_index(d: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * d - i * (i + 1) / 2 + j
}

fn form_to_vec(m: &Matrix) -> Vec<Rational> {
    sym_pairs(m.rows())
        .into_iter()
        .map(|(i, j)| m[(i, j)].clone())
        .collect()
}

fn vec_to_form(d: usize, v: &[Rational]) -> SymBilinearForm {
    let mut m = Matrix::zeros(d, d);
    for (idx, (i, j)) in sym_pairs(d).into_iter().enumerate() {
        m[(i, j)] = v[idx].clone();
        m[(j, i)] = v[idx].clone();
    }
    SymBilinearForm { matrix: m }
}

/// A linear family of symmetric forms on `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpace {
    dim_m: usize,
    ambient_dim: usize,
    m_basis: Vec<Vec<Rational>>,
    basis: Vec<SymBilinearForm>,
    span: Subspace,
}

impl FormSpace {
    pub fn basis(&self) -> &[SymBilinearForm] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, b: &SymBilinearForm) -> bool {
        b.dim() == self.dim_m && self.span.contains(&form_to_vec(&b.matrix))
    }

    /// `Σ c_i·basis_i`.
    pub fn combination(&self, coeffs: &[Rational]) -> SymBilinearForm {
        let d = self.dim_m;
        let mut acc = Matrix::zeros(d, d);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            acc = acc.add(&b.matrix.scale(c)).expect("same size");
        }
        SymBilinearForm { matrix: acc }
    }
}

/// Solves `B([Z,X],Y) + B(X,[Z,Y]) = 0` for `Z` in `h` and `X, Y` in `m`.
/// With `orthogonality`, distinct non-ε components are also made orthogonal.
pub fn invariant_form_space(split: &ReductiveSplit, orthogonality: Option<&Grading>) -> FormSpace {
    let d = split.dim_m();
    let unknowns = d * (d + 1) / 2;
    let alg = split.algebra();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for z in split.h_basis() {
        let ad: Vec<Vec<Rational>> = split
            .m_basis()
            .iter()
            .map(|y| split.m_coords(&alg.bracket(z, y).expect("dimension")))
            .collect();
        for (a, b) in sym_pairs(d) {
            let mut row = vec![Rational::zero(); unknowns];
            for i in 0..d {
                row[sym_index(d, i, b)] += &ad[a][i];
                row[sym_index(d, a, i)] += &ad[b][i];
            }
            rows.push(row);
        }
    }
    if let Some(g) = orthogonality {
        let labels: Vec<Option<GroupLabel>> =
            split.m_basis().iter().map(|v| g.label_of(v)).collect();
        for (a, b) in sym_pairs(d) {
            let differ = match (labels[a], labels[b]) {
                (Some(la), Some(lb)) => la != lb && !la.is_epsilon() && !lb.is_epsilon(),
                _ => false,
            };
            if differ {
                let mut row = vec![Rational::zero(); unknowns];
                row[sym_index(d, a, b)] = Rational::one();
                rows.push(row);
            }
        }
    }
    let span = if rows.is_empty() {
        Subspace::full(unknowns)
    } else {
        kernel(&Matrix::from_rows(rows).expect("uniform rows"))
    };
    let basis = span
        .basis_vectors()
        .iter()
        .map(|v| vec_to_form(d, v))
        .collect();
    FormSpace {
        dim_m: d,
        ambient_dim: alg.dim(),
        m_basis: split.m_basis().to_vec(),
        basis,
        span,
    }
}

/// Vectors of `m` annihilated by every form in the space, as algebra vectors.
pub fn common_radical(fs: &FormSpace) -> Subspace {
    let rows: Vec<Vec<Rational>> = fs
        .basis
        .iter()
        .flat_map(|b| b.matrix.row_vectors())
        .collect();
    let in_m = if rows.is_empty() {
        Subspace::full(fs.dim_m)
    } else {
        kernel(&Matrix::from_rows(rows).expect("uniform rows"))
    };
    let vectors: Vec<Vec<Rational>> = in_m
        .basis_vectors()
        .iter()
        .map(|c| combine(fs.ambient_dim, c, &fs.m_basis))
        .collect();
    Subspace::span(fs.ambient_dim, &vectors).expect("ambient dimension")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricKind {
    RiemannianZ2k,
    LorentzianCaseI,
    /// One degenerate component, pairing with `partner` in signature (1,1).
    LorentzianCaseII {
        degenerate: GroupLabel,
        partner: GroupLabel,
    },
    /// Case II shape, but the degenerate component misses the center.
    LorentzianReducible {
        degenerate: GroupLabel,
    },
    PseudoRiemannian {
        p: usize,
        q: usize,
    },
    Degenerate,
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RiemannianZ2k => write!(f, "RiemannianZ2k"),
            Self::LorentzianCaseI => write!(f, "LorentzianCaseI"),
            Self::LorentzianCaseII {
                degenerate,
                partner,
            } => write!(
                f,
                "LorentzianCaseII(degenerate {degenerate}, partner {partner})"
            ),
            Self::LorentzianReducible { degenerate } => {
                write!(f, "LorentzianReducible(degenerate {degenerate})")
            }
            Self::PseudoRiemannian { p, q } => write!(f, "PseudoRiemannian({p},{q})"),
            Self::Degenerate => write!(f, "Degenerate"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricVerdict {
    pub kind: MetricKind,
    pub signature: Signature,
    /// Restriction signature of each nonzero non-ε component.
    pub restrictions: Vec<(GroupLabel, Signature)>,
}

fn restrict(b: &Matrix, idx: &[usize]) -> Matrix {
    b.select(idx, idx)
}

fn block_is_zero(b: &Matrix, r: &[usize], c: &[usize]) -> bool {
    b.select(r, c).is_zero()
}

pub fn classify_metric(
    b: &SymBilinearForm,
    split: &ReductiveSplit,
) -> Result<MetricVerdict, MetricError> {
    if b.dim() != split.dim_m() {
        return Err(MetricError::FormSize {
            expected: split.dim_m(),
            found: b.dim(),
        });
    }
    let m = b.matrix();
    let sig = b.signature();
    let mut labels: Vec<GroupLabel> = split.m_labels().to_vec();
    labels.dedup();
    let idx: Vec<Vec<usize>> = labels.iter().map(|l| split.indices_of(l)).collect();
    let restrictions: Vec<(GroupLabel, Signature)> = labels
        .iter()
        .zip(&idx)
        .map(|(l, i)| (*l, signature(&restrict(m, i)).expect("symmetric")))
        .collect();
    let verdict = |kind| MetricVerdict {
        kind,
        signature: sig,
        restrictions: restrictions.clone(),
    };
    if !sig.is_nondegenerate() {
        return Ok(verdict(MetricKind::Degenerate));
    }
    let orthogonal_except = |skip: Option<(usize, usize)>| {
        (0..labels.len()).all(|a| {
            (a + 1..labels.len())
                .all(|c| skip == Some((a, c)) || block_is_zero(m, &idx[a], &idx[c]))
        })
    };
    if orthogonal_except(None) {
        if sig.is_positive_definite() {
            return Ok(verdict(MetricKind::RiemannianZ2k));
        }
        if sig.is_lorentzian() && restrictions.iter().all(|(_, s)| s.is_nondegenerate()) {
            return Ok(verdict(MetricKind::LorentzianCaseI));
        }
    }
    let degenerate: Vec<usize> = (0..labels.len())
        .filter(|&a| !restrictions[a].1.is_nondegenerate())
        .collect();
    if sig.is_lorentzian() && degenerate.len() == 1 {
        let d0 = degenerate[0];
        for d1 in (0..labels.len()).filter(|&x| x != d0) {
            let pair: Vec<usize> = idx[d0].iter().chain(&idx[d1]).copied().collect();
            let pair_sig = signature(&restrict(m, &pair)).expect("symmetric");
            let key = (d0.min(d1), d0.max(d1));
            if pair_sig == Signature::new(1, 1, 0) && orthogonal_except(Some(key)) {
                let center = split.algebra().center();
                let component = split.grading().component(&labels[d0]);
                let on_center = !component.intersect(&center).expect("ambient").is_zero();
                return Ok(verdict(if on_center {
                    MetricKind::LorentzianCaseII {
                        degenerate: labels[d0],
                        partner: labels[d1],
                    }
                } else {
                    MetricKind::LorentzianReducible {
                        degenerate: labels[d0],
                    }
                }));
            }
        }
    }
    Ok(verdict(MetricKind::PseudoRiemannian {
        p: sig.positive,
        q: sig.negative,
    }))
}

/// `(x, y) ↦ B(τx, τy)` on `m`.
pub fn pullback(
    tau: &Matrix,
    b: &SymBilinearForm,
    split: &ReductiveSplit,
) -> Result<SymBilinearForm, MetricError> {
    let d = split.dim_m();
    if b.dim() != d {
        return Err(MetricError::FormSize {
            expected: d,
            found: b.dim(),
        });
    }
    let mut cols = Vec::with_capacity(d);
    for y in split.m_basis() {
        let img = tau.mul_vec(y)?;
        if !split.m().contains(&img) {
            return Err(MetricError::DoesNotPreserveM);
        }
        cols.push(split.m_coords(&img));
    }
    let t = Matrix::from_columns(d, &cols);
    SymBilinearForm::new(t.transpose().mul(b.matrix())?.mul(&t)?)
}

/// The `h_3` grading `{0} ⊕ ℝX1 ⊕ ℝX2 ⊕ ℝX3` from `Γ7(0,0,0)`.
pub fn h3_klein_grading() -> Grading {
    let z = Rational::zero();
    grading_from_involutions(
        Arc::new(heisenberg(1).expect("p = 1")),
        &[tau1(&z, &z), tau2(&z, &z)],
    )
    .expect("commuting involutions")
}

/// λ² = α3/(α1·α2) for `B = diag(α1, α2, α3)` positive definite, with the
/// diagonal witness `diag(1/√α1, 1/√α2, 1/√(α1α2))` when both roots are rational.
pub fn riemannian_invariant_h3(
    b: &SymBilinearForm,
) -> Result<(Rational, Option<Matrix>), MetricError> {
    let m = b.matrix();
    if m.rows() != 3 || !m.is_diagonal() || !m.diagonal_entries().iter().all(Signed::is_positive) {
        return Err(MetricError::NotDiagonalPositive);
    }
    let d = m.diagonal_entries();
    let lambda_sq = &d[2] / (&d[0] * &d[1]);
    let witness = match (sqrt_exact(&d[0]), sqrt_exact(&d[1])) {
        (Some(r1), Some(r2)) => {
            let one = Rational::one();
            let s1 = &one / &r1;
            let s2 = &one / &r2;
            let s3 = &s1 * &s2;
            Some(Matrix::diagonal(&[s1, s2, s3]))
        }
        _ => None,
    };
    Ok((lambda_sq, witness))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LorentzianTag {
    /// `−ω1² + ω2² + λ²ω3²`
    NegOnPlane,
    /// `ω1² + ω2² − λ²ω3²`
    NegOnCenter,
    /// `ω1² + ω3² − (ω2 − ω3)²`
    CaseII,
}

impl fmt::Display for LorentzianTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::NegOnPlane => "NegOnPlane",
            Self::NegOnCenter => "NegOnCenter",
            Self::CaseII => "CaseII",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LorentzianNormalForm {
    pub tag: LorentzianTag,
    pub lambda_sq: Option<Rational>,
    pub canonical: Matrix,
}

pub fn case_two_canonical() -> Matrix {
    Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 1], &[0, 1, 0]])
}

/// Normal form of a Lorentzian form on the `Γ7(0,0,0)` grading of `h_3`.
pub fn lorentzian_normal_form_h3(b: &SymBilinearForm) -> Result<LorentzianNormalForm, MetricError> {
    let split = reductive_split(&h3_klein_grading())?;
    let verdict = classify_metric(b, &split)?;
    match verdict.kind {
        MetricKind::LorentzianCaseI => {
            let d = b.matrix().diagonal_entries();
            let lambda_sq = d[2].abs() / (d[0].abs() * d[1].abs());
            let (tag, canonical) = if d[2].is_negative() {
                (
                    LorentzianTag::NegOnCenter,
                    Matrix::diagonal(&[int(1), int(1), -lambda_sq.clone()]),
                )
            } else {
                (
                    LorentzianTag::NegOnPlane,
                    Matrix::diagonal(&[int(-1), int(1), lambda_sq.clone()]),
                )
            };
            Ok(LorentzianNormalForm {
                tag,
                lambda_sq: Some(lambda_sq),
                canonical,
            })
        }
        MetricKind::LorentzianCaseII { .. } => Ok(LorentzianNormalForm {
            tag: LorentzianTag::CaseII,
            lambda_sq: None,
            canonical: case_two_canonical(),
        }),
        MetricKind::LorentzianReducible { degenerate } => {
            Err(MetricError::ReductionNotPerformed(degenerate.to_string()))
        }
        other => Err(MetricError::NotLorentzian(other.to_string())),
    }
}

/// Outcome of comparing the `Γ7(α3,α5,α6)` eigenbasis and its dual with the
/// printed expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualChangeReport {
    /// Eigenvectors of labels `(-,+)`, `(+,-)`, `(-,-)`, normalized.
    pub computed_y: [Vec<Rational>; 3],
    pub printed_y1_matches: bool,
    /// `Y2 = X2 − α6/2·X3` as printed.
    pub printed_y2_matches: bool,
    /// `Y2 = X2 + α6/2·X3`.
    pub corrected_y2_matches: bool,
    /// Rows of the inverse of `[Y1 Y2 Y3]` equal the printed ϑ rows.
    pub theta_matches: bool,
    pub change_matrix_is_automorphism: bool,
    /// The printed lower-triangular matrix equals the ϑ coefficient matrix.
    pub change_matrix_is_theta: bool,
}

impl DualChangeReport {
    pub fn ok(&self) -> bool {
        self.printed_y1_matches
            && self.corrected_y2_matches
            && self.theta_matches
            && self.change_matrix_is_automorphism
            && self.change_matrix_is_theta
    }
}

/// The printed lower-triangular change of basis
/// `[[1,0,0],[α3/2,1,0],[−α5/2 − α3α6/4, −α6/2, 1]]`.
pub fn lorentz_change_matrix(a3: &Rational, a5: &Rational, a6: &Rational) -> Matrix {
    let half = rat(1, 2);
    let quarter = rat(1, 4);
    Matrix::from_rows(vec![
        vec![int(1), int(0), int(0)],
        vec![a3 * &half, int(1), int(0)],
        vec![-(a5 * &half) - a3 * a6 * &quarter, -(a6 * &half), int(1)],
    ])
    .expect("3x3")
}

fn normalized(space: &Subspace, pivot: usize) -> Vec<Rational> {
    let v = space.basis_vectors().remove(0);
    let s = Rational::one() / &v[pivot];
    linalg::scale_vec(&s, &v)
}

pub fn dual_change_check(
    a3: &Rational,
    a5: &Rational,
    a6: &Rational,
) -> Result<DualChangeReport, MetricError> {
    let half = rat(1, 2);
    let quarter = rat(1, 4);
    let g = grading_from_involutions(
        Arc::new(heisenberg(1).expect("p = 1")),
        &[tau1(a3, a6), tau2(&-a3.clone(), a5)],
    )?;
    let y1 = normalized(g.component(&GroupLabel::new(2, 1)), 0);
    let y2 = normalized(g.component(&GroupLabel::new(2, 2)), 1);
    let y3 = normalized(g.component(&GroupLabel::new(2, 3)), 2);

    let printed_y1 = vec![int(1), -(a3 * &half), a5 * &half];
    let printed_y2 = vec![int(0), int(1), -(a6 * &half)];
    let corrected_y2 = vec![int(0), int(1), a6 * &half];

    let p = Matrix::from_columns(3, &[y1.clone(), y2.clone(), y3.clone()]);
    let theta = p.inverse()?;
    let printed_theta = Matrix::from_rows(vec![
        vec![int(1), int(0), int(0)],
        vec![a3 * &half, int(1), int(0)],
        vec![-(a3 * a6 * &quarter) - a5 * &half, -(a6 * &half), int(1)],
    ])?;
    let change = lorentz_change_matrix(a3, a5, a6);
    let h3 = heisenberg(1).expect("p = 1");
    Ok(DualChangeReport {
        printed_y1_matches: y1 == printed_y1,
        printed_y2_matches: y2 == printed_y2,
        corrected_y2_matches: y2 == corrected_y2,
        theta_matches: theta == printed_theta,
        change_matrix_is_automorphism: h3.is_automorphism(&change),
        change_matrix_is_theta: change == theta,
        computed_y: [y1, y2, y3],
    })
}

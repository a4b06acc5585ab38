//! Sen operators as exact data.
//!
//! An operator is either a semisimple class, a vector of `t̂ ⊗ K` taken
//! modulo `W`, or a matrix in the standard representation of `GLₙ`. Only
//! conjugation-invariant information is ever extracted from a matrix.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};
use thiserror::Error;

use crate::linalg::{eval_poly_at_matrix, ScalarMatrix};
use crate::rootdata::BasedRootDatum;
use crate::scalar::{NumberField, RingError, Scalar};
use crate::upoly::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SenError {
    #[error("cannot combine a semisimple class with a matrix")]
    MixedRepresentationKind,
    #[error("characteristic polynomial {} does not split over the coefficient ring", format_poly(.charpoly))]
    CharPolyDoesNotSplit { charpoly: Vec<Scalar> },
    #[error("matrix operators need the standard GLn datum")]
    NotTypeA,
    #[error("operator has size {len}, the datum has rank {rank}")]
    SizeMismatch { len: usize, rank: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

fn format_poly(c: &[Scalar]) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SenOperator {
    Class(Vec<Scalar>),
    Matrix(ScalarMatrix),
}

impl SenOperator {
    pub fn class(values: Vec<Scalar>) -> Self {
        SenOperator::Class(values)
    }

    pub fn matrix(m: ScalarMatrix) -> Self {
        SenOperator::Matrix(m)
    }

    /// Multiset size, or matrix dimension.
    pub fn size(&self) -> usize {
        match self {
            SenOperator::Class(v) => v.len(),
            SenOperator::Matrix(m) => m.dim(),
        }
    }

    pub fn as_class(&self) -> Option<&[Scalar]> {
        match self {
            SenOperator::Class(v) => Some(v),
            SenOperator::Matrix(_) => None,
        }
    }

    /// `Π (x − λ)` for a class, `det(x − M)` for a matrix; highest degree first.
    pub fn charpoly(&self) -> Vec<Scalar> {
        match self {
            SenOperator::Class(v) => crate::invariants::charpoly_of_eigenvalues(v),
            SenOperator::Matrix(m) => m.charpoly(),
        }
    }

    pub fn scalars(&self) -> Vec<&Scalar> {
        match self {
            SenOperator::Class(v) => v.iter().collect(),
            SenOperator::Matrix(m) => m.entries().iter().collect(),
        }
    }

    /// The semisimple class in `t̂ ⊗ K` coordinates of `d`.
    pub fn class_for(&self, d: &BasedRootDatum) -> Result<Vec<Scalar>, SenError> {
        self.class_in(d, None)
    }

    /// As [`Self::class_for`], splitting characteristic polynomials over
    /// `field` (or the field of the entries, if any).
    pub fn class_in(&self, d: &BasedRootDatum, field: Option<&Arc<NumberField>>) -> Result<Vec<Scalar>, SenError> {
        match self {
            SenOperator::Class(v) if v.len() == d.rank() => Ok(v.clone()),
            SenOperator::Class(v) => Err(SenError::SizeMismatch {
                len: v.len(),
                rank: d.rank(),
            }),
            SenOperator::Matrix(m) => semisimple_class_of_matrix_in(m, d, field),
        }
    }
}

impl fmt::Display for SenOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Scalar]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        match self {
            SenOperator::Class(v) => write!(f, "{{{}}}", join(v)),
            SenOperator::Matrix(m) => {
                let rows: Vec<String> = m.to_rows().iter().map(|r| format!("[{}]", join(r))).collect();
                write!(f, "[{}]", rows.join(", "))
            }
        }
    }
}

pub fn sen_from_ht_weights(weights: &[i64]) -> SenOperator {
    SenOperator::Class(weights.iter().map(|&w| Scalar::from_int(w)).collect())
}

/// `Θ_{V⊕W} = Θ_V ⊕ Θ_W`.
pub fn sen_direct_sum(a: &SenOperator, b: &SenOperator) -> Result<SenOperator, SenError> {
    match (a, b) {
        (SenOperator::Class(x), SenOperator::Class(y)) => Ok(SenOperator::Class(x.iter().chain(y).cloned().collect())),
        (SenOperator::Matrix(x), SenOperator::Matrix(y)) => Ok(SenOperator::Matrix(ScalarMatrix::block_diagonal(x, y))),
        _ => Err(SenError::MixedRepresentationKind),
    }
}

/// `Θ_{V⊗W} = Θ_V ⊗ 1 + 1 ⊗ Θ_W`; for classes the pairwise sums, `a` outer.
pub fn sen_tensor(a: &SenOperator, b: &SenOperator) -> Result<SenOperator, SenError> {
    match (a, b) {
        (SenOperator::Class(x), SenOperator::Class(y)) => Ok(SenOperator::Class(
            x.iter().flat_map(|u| y.iter().map(move |v| u + v)).collect(),
        )),
        (SenOperator::Matrix(x), SenOperator::Matrix(y)) => Ok(SenOperator::Matrix(ScalarMatrix::kronecker_sum(x, y))),
        _ => Err(SenError::MixedRepresentationKind),
    }
}

/// Coordinates of a constant scalar in the power basis of its field.
fn field_coords(s: &Scalar) -> Option<Vec<Rational>> {
    if s.is_zero() {
        return Some(Vec::new());
    }
    let mut it = s.terms();
    let (m, c) = it.next()?;
    (m.is_one() && it.next().is_none()).then(|| c.to_vec())
}

/// A square root of `x` in `ℚ` or in a quadratic field.
pub fn sqrt_in_field(x: &Scalar, field: Option<&Arc<NumberField>>) -> Option<Scalar> {
    if let Some(q) = x.to_rational() {
        if let Some(r) = upoly::rational_sqrt(&q) {
            return Some(Scalar::from_rational(r));
        }
    }
    let f = field.filter(|f| f.degree() == 2)?;
    let mut c = field_coords(x)?;
    c.resize(2, Rational::zero());
    // t² + p t + q = 0, so √Δ = 2t + p with Δ = p² − 4q
    let (q, p) = (&f.min_poly()[0], &f.min_poly()[1]);
    let disc = p * p - Rational::from_integer(4.into()) * q;
    let two = Rational::from_integer(2.into());
    let u = &c[0] - &c[1] * p / &two;
    let v = &c[1] / &two;
    let root_delta = Scalar::generator(f).mul_int(2) + Scalar::from_rational(p.clone());
    // solve (a + b√Δ)² = u + v√Δ
    let mut candidates: Vec<(Rational, Rational)> = Vec::new();
    if v.is_zero() {
        if let Some(a) = upoly::rational_sqrt(&u) {
            candidates.push((a, Rational::zero()));
        }
        if let Some(b) = upoly::rational_sqrt(&(&u / &disc)) {
            candidates.push((Rational::zero(), b));
        }
    } else if let Some(s) = upoly::rational_sqrt(&(&u * &u - &disc * &v * &v)) {
        for a2 in [(&u + &s) / &two, (&u - &s) / &two] {
            if let Some(a) = upoly::rational_sqrt(&a2).filter(|a| !a.is_zero()) {
                let b = &v / (&two * &a);
                candidates.push((a, b));
            }
        }
    }
    candidates.into_iter().map(|(a, b)| Scalar::from_rational(a) + root_delta.scale(&b)).find(|r| &(r * r) == x)
}

fn field_of(m: &ScalarMatrix) -> Option<Arc<NumberField>> {
    m.entries().iter().find_map(|x| x.field().cloned())
}

/// Roots of a monic polynomial (highest degree first) with multiplicity, if it splits.
pub fn split_roots(charpoly: &[Scalar], field: Option<&Arc<NumberField>>) -> Option<Vec<Scalar>> {
    let n = charpoly.len() - 1;
    let mut roots: Vec<Scalar> = Vec::new();
    let mut rest: Vec<Scalar> = charpoly.to_vec();
    if let Some(rational) = charpoly.iter().map(Scalar::to_rational).collect::<Option<Vec<_>>>() {
        let low_first: Vec<Rational> = rational.into_iter().rev().collect();
        let (found, leftover) = upoly::rational_roots(&low_first);
        roots.extend(found.into_iter().map(Scalar::from_rational));
        rest = leftover.into_iter().rev().map(Scalar::from_rational).collect();
        let lead = rest[0].inv()?;
        rest = rest.iter().map(|c| c * &lead).collect();
    }
    match rest.len() - 1 {
        0 => {}
        1 => roots.push(-&rest[1]),
        2 => {
            let (b, c) = (&rest[1], &rest[2]);
            let disc = b * b - c.mul_int(4);
            let s = sqrt_in_field(&disc, field)?;
            let half = Rational::new(One::one(), 2.into());
            roots.push((-b + &s).scale(&half));
            roots.push((-b - &s).scale(&half));
        }
        _ => return None,
    }
    debug_assert_eq!(roots.len(), n);
    Some(roots)
}

/// Eigenvalues with multiplicity.
pub fn eigenvalues(m: &ScalarMatrix) -> Result<Vec<Scalar>, SenError> {
    eigenvalues_in(m, None)
}

/// Eigenvalues in `field`, falling back to the field of the entries.
pub fn eigenvalues_in(m: &ScalarMatrix, field: Option<&Arc<NumberField>>) -> Result<Vec<Scalar>, SenError> {
    if m.is_upper_triangular() || m.is_lower_triangular() {
        return Ok(m.diagonal_entries());
    }
    let charpoly = m.charpoly();
    let field = field.cloned().or_else(|| field_of(m));
    split_roots(&charpoly, field.as_ref()).ok_or(SenError::CharPolyDoesNotSplit { charpoly })
}

/// Eigenvalue multiset of the semisimple part; the nilpotent part does not
/// change the characteristic polynomial.
pub fn semisimple_class_of_matrix(m: &ScalarMatrix, d: &BasedRootDatum) -> Result<Vec<Scalar>, SenError> {
    semisimple_class_of_matrix_in(m, d, None)
}

pub fn semisimple_class_of_matrix_in(
    m: &ScalarMatrix,
    d: &BasedRootDatum,
    field: Option<&Arc<NumberField>>,
) -> Result<Vec<Scalar>, SenError> {
    if !d.is_standard_gl() {
        return Err(SenError::NotTypeA);
    }
    if m.dim() != d.rank() {
        return Err(SenError::SizeMismatch {
            len: m.dim(),
            rank: d.rank(),
        });
    }
    eigenvalues_in(m, field)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeTateVerdict {
    pub hodge_tate: bool,
    pub reason: Option<String>,
}

impl HodgeTateVerdict {
    fn yes() -> Self {
        HodgeTateVerdict {
            hodge_tate: true,
            reason: None,
        }
    }

    fn no(reason: String) -> Self {
        HodgeTateVerdict {
            hodge_tate: false,
            reason: Some(reason),
        }
    }
}

/// Semisimple with integer eigenvalues.
pub fn is_hodge_tate(op: &SenOperator) -> HodgeTateVerdict {
    is_hodge_tate_in(op, None)
}

pub fn is_hodge_tate_in(op: &SenOperator, field: Option<&Arc<NumberField>>) -> HodgeTateVerdict {
    if let Some(x) = op.scalars().into_iter().find(|x| !x.is_constant()) {
        return HodgeTateVerdict::no(format!("entry {x} depends on family variables"));
    }
    let eig = match op {
        SenOperator::Class(v) => v.clone(),
        SenOperator::Matrix(m) => match eigenvalues_in(m, field) {
            Ok(e) => e,
            Err(e) => return HodgeTateVerdict::no(e.to_string()),
        },
    };
    if let Some(x) = eig.iter().find(|x| !x.is_integer()) {
        return HodgeTateVerdict::no(format!("eigenvalue {x} is not an integer"));
    }
    if let SenOperator::Matrix(m) = op {
        let mut distinct: Vec<Scalar> = Vec::new();
        for x in eig {
            if !distinct.contains(&x) {
                distinct.push(x);
            }
        }
        let minimal = crate::invariants::charpoly_of_eigenvalues(&distinct);
        if !eval_poly_at_matrix(&minimal, m).is_zero() {
            return HodgeTateVerdict::no("minimal polynomial is not squarefree".to_string());
        }
    }
    HodgeTateVerdict::yes()
}

/// Evaluates every family variable.
pub fn specialize(op: &SenOperator, assignment: &BTreeMap<String, Scalar>) -> Result<SenOperator, SenError> {
    Ok(match op {
        SenOperator::Class(v) => SenOperator::Class(
            v.iter().map(|x| x.substitute(assignment)).collect::<Result<_, _>>()?,
        ),
        SenOperator::Matrix(m) => SenOperator::Matrix(m.try_map(|x| x.substitute(assignment))?),
    })
}

//! Weyl-invariant polynomials on `t̂` and infinitesimal characters.
//!
//! A character of the center `Z(g)` is never built as an enveloping-algebra
//! object. Through the Harish-Chandra isomorphism it is an evaluation of
//! `S(t̂*)^W`, hence determined by a `W`-orbit of evaluation points; the
//! irreducible representation of highest weight `λ` corresponds to the orbit
//! of `λ + δ`.

use std::collections::BTreeMap;

use num::{One, Zero};
use thiserror::Error;

use crate::linalg::IntMatrix;
use crate::par::{self, Strategy};
use crate::rootdata::{BasedRootDatum, RootDataError, Weight, WeylGroup};
use crate::scalar::Scalar;
use crate::upoly::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantsError {
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not integral")]
    NotIntegral(String),
    #[error("polynomial is not invariant under simple reflection {0}")]
    NotInvariant(usize),
    #[error("point has {len} coordinates, expected {rank}")]
    Length { len: usize, rank: usize },
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// A polynomial in `nvars` variables with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly {
            nvars,
            terms: BTreeMap::from([(e, Rational::one())]),
        }
    }

    /// Builds from `(exponents, coefficient)` pairs.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    /// `Σ x_i^k`.
    pub fn power_sum(nvars: usize, k: u32) -> Self {
        Self::from_terms(
            nvars,
            (0..nvars).map(|i| {
                let mut e = vec![0; nvars];
                e[i] = k;
                (e, Rational::one())
            }),
        )
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        let entry = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_terms(self.nvars, self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// `x ↦ p(w x)`.
    pub fn compose_linear(&self, w: &IntMatrix) -> Poly {
        let n = self.nvars;
        let images: Vec<Poly> = (0..n)
            .map(|i| {
                Poly::from_terms(
                    n,
                    (0..n).filter(|&j| w[(i, j)] != 0).map(|j| {
                        let mut e = vec![0; n];
                        e[j] = 1;
                        (e, Rational::from_integer(w[(i, j)].into()))
                    }),
                )
            })
            .collect();
        let mut out = Poly::zero(n);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term.mul(&images[i]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "point length");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .filter(|(k, _)| **k > 0)
                    .fold(Scalar::from_rational(c.clone()), |acc, (k, x)| acc * x.pow(*k))
            })
            .sum()
    }
}

/// An element of `S(t̂*)^W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantPolynomial {
    poly: Poly,
}

impl InvariantPolynomial {
    /// Checks invariance under every simple reflection.
    pub fn certify(poly: Poly, weyl: &WeylGroup) -> Result<Self, InvariantsError> {
        for (i, s) in weyl.generators().iter().enumerate() {
            if poly.compose_linear(s) != poly {
                return Err(InvariantsError::NotInvariant(i));
            }
        }
        Ok(InvariantPolynomial { poly })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }
}

/// `(1/|W|) Σ_w p(w x)`.
pub fn symmetrize(p: &Poly, weyl: &WeylGroup) -> InvariantPolynomial {
    symmetrize_with(p, weyl, Strategy::default())
}

pub fn symmetrize_with(p: &Poly, weyl: &WeylGroup, strategy: Strategy) -> InvariantPolynomial {
    let images = par::map(weyl.elements(), strategy, |w| p.compose_linear(w));
    let sum = images.iter().fold(Poly::zero(p.nvars()), |acc, q| acc.add(q));
    let scale = Rational::new(One::one(), (weyl.order() as i64).into());
    InvariantPolynomial {
        poly: sum.scale(&scale),
    }
}

pub fn evaluate(p: &InvariantPolynomial, point: &[Scalar]) -> Scalar {
    p.poly.evaluate(point)
}

/// A character of `Z(g) ⊗ K`, stored as a representative of its `W`-orbit in `t̂ ⊗ K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinitesimalCharacter {
    point: Vec<Scalar>,
}

impl InfinitesimalCharacter {
    pub fn new(point: Vec<Scalar>) -> Self {
        InfinitesimalCharacter { point }
    }

    pub fn from_weight(w: &Weight) -> Self {
        InfinitesimalCharacter {
            point: w.0.iter().cloned().map(Scalar::from_rational).collect(),
        }
    }

    pub fn point(&self) -> &[Scalar] {
        &self.point
    }

    /// The representative as a rational weight, when every coordinate is rational.
    pub fn rational_point(&self) -> Option<Weight> {
        self.point.iter().map(Scalar::to_rational).collect::<Option<Vec<_>>>().map(Weight)
    }

    /// The dominant element of the orbit, when the representative is rational.
    pub fn dominant_representative(&self, d: &BasedRootDatum) -> Option<Weight> {
        self.rational_point().map(|w| d.dominant_representative(&w).0)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        InfinitesimalCharacter {
            point: self.point.iter().map(f).collect(),
        }
    }

    /// Value of an invariant polynomial on this character.
    pub fn evaluate(&self, p: &InvariantPolynomial) -> Scalar {
        evaluate(p, &self.point)
    }
}

/// The infinitesimal character of the irreducible representation of highest weight `λ`: the orbit of `λ + δ`.
pub fn inf_char_of_highest_weight(
    lambda: &Weight,
    d: &BasedRootDatum,
) -> Result<InfinitesimalCharacter, InvariantsError> {
    if lambda.len() != d.rank() {
        return Err(InvariantsError::Length {
            len: lambda.len(),
            rank: d.rank(),
        });
    }
    if !lambda.is_integral() {
        return Err(InvariantsError::NotIntegral(lambda.to_string()));
    }
    if !d.is_dominant(lambda) {
        return Err(InvariantsError::NotDominant(lambda.to_string()));
    }
    Ok(InfinitesimalCharacter::from_weight(&lambda.add(&d.half_sum_positive_roots())))
}

pub fn characters_equal(a: &InfinitesimalCharacter, b: &InfinitesimalCharacter, weyl: &WeylGroup) -> bool {
    weyl.same_orbit(&a.point, &b.point)
}

pub fn characters_equal_with(
    a: &InfinitesimalCharacter,
    b: &InfinitesimalCharacter,
    weyl: &WeylGroup,
    strategy: Strategy,
) -> bool {
    weyl.same_orbit_with(&a.point, &b.point, strategy)
}

/// The dominant integral `λ` whose character is `χ`, if there is one.
pub fn match_algebraic(chi: &InfinitesimalCharacter, d: &BasedRootDatum) -> Option<Weight> {
    if chi.point.len() != d.rank() {
        return None;
    }
    let dominant = chi.dominant_representative(d)?;
    let lambda = dominant.sub(&d.half_sum_positive_roots());
    (lambda.is_integral() && d.is_dominant(&lambda)).then_some(lambda)
}

/// Newton's identities: power sums `p_1..p_{k_max}` of the roots of a monic
/// polynomial, given highest degree first (`[1, c_1, …, c_n]`).
pub fn charpoly_to_power_sums(coeffs: &[Scalar], k_max: usize) -> Vec<Scalar> {
    assert!(coeffs.first().is_some_and(Scalar::is_one), "polynomial must be monic");
    let n = coeffs.len() - 1;
    // elementary symmetric functions e_k = (-1)^k c_k
    let e: Vec<Scalar> = (0..=n)
        .map(|k| if k % 2 == 0 { coeffs[k].clone() } else { -&coeffs[k] })
        .collect();
    let mut p: Vec<Scalar> = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let mut acc = Scalar::zero();
        for i in 1..k.min(n + 1) {
            let term = &e[i] * &p[k - i - 1];
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        if k <= n {
            let term = e[k].mul_int(k as i64);
            acc = if k % 2 == 1 { acc + term } else { acc - term };
        }
        p.push(acc);
    }
    p
}

/// Inverse of [`charpoly_to_power_sums`]: the monic degree-`n` polynomial
/// with power sums `p_1..p_n`.
pub fn power_sums_to_charpoly(p: &[Scalar], n: usize) -> Vec<Scalar> {
    assert!(p.len() >= n);
    let mut e = vec![Scalar::one()];
    for k in 1..=n {
        let mut acc = Scalar::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i - 1];
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        e.push(acc.scale(&Rational::new(One::one(), (k as i64).into())));
    }
    e.into_iter()
        .enumerate()
        .map(|(k, x)| if k % 2 == 0 { x } else { -x })
        .collect()
}

/// `Π (x − λ_i)`, highest degree first.
pub fn charpoly_of_eigenvalues(eigenvalues: &[Scalar]) -> Vec<Scalar> {
    let mut c = vec![Scalar::one()];
    for l in eigenvalues {
        let mut next = c.clone();
        next.push(Scalar::zero());
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] = &next[i + 1] - &(ci * l);
        }
        c = next;
    }
    c
}

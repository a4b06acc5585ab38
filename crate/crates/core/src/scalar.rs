//! Exact scalars: rationals, number fields `ℚ[t]/(m)`, and polynomial family
//! rings over either.
//!
//! A single [`Scalar`] type covers all three coefficient rings. A scalar is a
//! polynomial in named family variables whose coefficients live in the base
//! field; constants without a field attached are plain rationals and mix
//! freely with elements of any field.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

use crate::upoly::{self, Rational};

/// Largest minimal-polynomial degree accepted for a number field.
pub const MAX_FIELD_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("division by a non-invertible element `{0}`")]
    NonInvertible(String),
    #[error("minimal polynomial `{0}` is not irreducible over the rationals")]
    Reducible(String),
    #[error("minimal polynomial degree {0} exceeds the supported maximum {MAX_FIELD_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("minimal polynomial must have positive degree")]
    ConstantMinimalPolynomial,
    #[error("variable `{0}` is declared twice")]
    DuplicateVariable(String),
    #[error("variable `{0}` has no value in the assignment")]
    UnboundVariable(String),
    #[error("`{0}` is not a constant of the base field")]
    NotConstant(String),
}

/// A number field presented by the monic minimal polynomial of a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    generator: String,
    min_poly: Vec<Rational>,
}

impl NumberField {
    /// `min_poly` holds rational coefficients, lowest degree first.
    pub fn new(generator: impl Into<String>, min_poly: Vec<Rational>) -> Result<Self, RingError> {
        let generator = generator.into();
        let mut m = min_poly;
        upoly::trim(&mut m);
        let deg = upoly::degree(&m).unwrap_or(0);
        if deg == 0 {
            return Err(RingError::ConstantMinimalPolynomial);
        }
        if deg > MAX_FIELD_DEGREE {
            return Err(RingError::DegreeTooLarge(deg));
        }
        upoly::make_monic(&mut m);
        if !upoly::is_irreducible(&m) {
            return Err(RingError::Reducible(render_univariate(&m, &generator)));
        }
        Ok(Self { generator, min_poly: m })
    }

    /// Parses the minimal polynomial from an expression in the generator.
    pub fn parse(generator: &str, min_poly: &str) -> Result<Self, RingError> {
        let ring = CoefficientRing::Family {
            base: None,
            variables: vec![generator.to_string()],
        };
        let p = ring.parse(min_poly)?;
        let mut coeffs = Vec::new();
        for (mono, c) in &p.terms {
            let exp = match mono.0.as_slice() {
                [] => 0,
                [(_, e)] => *e as usize,
                _ => unreachable!("single-variable ring"),
            };
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, Rational::zero());
            }
            coeffs[exp] = c.first().cloned().unwrap_or_else(Rational::zero);
        }
        Self::new(generator, coeffs)
    }

    pub fn generator(&self) -> &str {
        &self.generator
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    /// Monic minimal polynomial, lowest degree first.
    pub fn min_poly(&self) -> &[Rational] {
        &self.min_poly
    }

    fn reduce(&self, c: Vec<Rational>) -> Vec<Rational> {
        if c.len() <= self.degree() {
            let mut c = c;
            upoly::trim(&mut c);
            return c;
        }
        upoly::div_rem(&c, &self.min_poly).1
    }

    pub fn min_poly_text(&self) -> String {
        render_univariate(&self.min_poly, &self.generator)
    }
}

fn render_univariate(p: &[Rational], var: &str) -> String {
    let mut terms = BTreeMap::new();
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mono = if i == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(var.to_string(), i as u32)])
        };
        terms.insert(mono, vec![c.clone()]);
    }
    Scalar { field: None, terms }.to_string()
}

/// A product of named variables with positive exponents, sorted by name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(String, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(name.to_string(), 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(String, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<String, u32> = self.0.iter().cloned().collect();
        for (v, e) in &other.0 {
            *map.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(map.into_iter().collect())
    }
}

/// An exact scalar; see the module docs.
#[derive(Debug, Clone)]
pub struct Scalar {
    field: Option<Arc<NumberField>>,
    terms: BTreeMap<Monomial, Vec<Rational>>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Scalar {}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            field: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Monomial::one(), vec![q]);
        }
        Scalar { field: None, terms }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num.into(), den.into()))
    }

    /// The generator of `field` as a scalar.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        let coeffs = field.reduce(vec![Rational::zero(), Rational::one()]);
        let mut terms = BTreeMap::new();
        if !coeffs.is_empty() {
            terms.insert(Monomial::one(), coeffs);
        }
        Scalar {
            field: Some(field.clone()),
            terms,
        }
    }

    pub fn variable(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(name), vec![Rational::one()]);
        Scalar { field: None, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|q| q.is_one())
    }

    /// The rational value, if the scalar is a constant in `ℚ`.
    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_one() && c.len() == 1 {
                    Some(c[0].clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn is_integer(&self) -> bool {
        self.to_integer().is_some()
    }

    /// True when no family variable occurs.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &[Rational])> {
        self.terms.iter().map(|(m, c)| (m, c.as_slice()))
    }

    fn join_field(a: &Option<Arc<NumberField>>, b: &Option<Arc<NumberField>>) -> Option<Arc<NumberField>> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert!(
                    Arc::ptr_eq(x, y) || x == y,
                    "mixing scalars from different number fields"
                );
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.iter().map(|x| x * q).collect()))
                .collect(),
        }
    }

    pub fn mul_int(&self, n: i64) -> Scalar {
        self.scale(&Rational::from_integer(n.into()))
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero constant.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() || !self.is_constant() {
            return None;
        }
        let c = &self.terms[&Monomial::one()];
        let inv = match &self.field {
            Some(f) if c.len() > 1 => upoly::inverse_mod(c, &f.min_poly)?,
            _ => vec![Rational::one() / &c[0]],
        };
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::one(), inv);
        Some(Scalar {
            field: self.field.clone(),
            terms,
        })
    }

    /// Integer power, inverting for negative exponents.
    pub fn powi(&self, exp: i64) -> Option<Scalar> {
        if exp >= 0 {
            Some(self.pow(exp as u32))
        } else {
            Some(self.inv()?.pow((-exp) as u32))
        }
    }

    /// Substitutes values for family variables. Every variable occurring in
    /// `self` must be bound.
    pub fn substitute(&self, assignment: &BTreeMap<String, Scalar>) -> Result<Scalar, RingError> {
        let mut out = Scalar::zero();
        for (mono, coeff) in &self.terms {
            let mut term = Scalar {
                field: self.field.clone(),
                terms: BTreeMap::from([(Monomial::one(), coeff.clone())]),
            };
            for (v, e) in &mono.0 {
                let value = assignment
                    .get(v)
                    .ok_or_else(|| RingError::UnboundVariable(v.clone()))?;
                term = &term * &value.pow(*e);
            }
            out += &term;
        }
        Ok(out)
    }

    fn normalize(mut self) -> Scalar {
        self.terms.retain(|_, c| !c.is_empty());
        self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::from_rational(q)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.field = Scalar::join_field(&self.field, &rhs.field);
        for (m, c) in &rhs.terms {
            let entry = self.terms.entry(m.clone()).or_default();
            *entry = upoly::add(entry, c);
        }
        self.terms.retain(|_, c| !c.is_empty());
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scale(&-Rational::one())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let field = Scalar::join_field(&self.field, &rhs.field);
        let mut terms: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let entry = terms.entry(m).or_default();
                *entry = upoly::add(entry, &upoly::mul(ca, cb));
            }
        }
        if let Some(f) = &field {
            for c in terms.values_mut() {
                *c = f.reduce(std::mem::take(c));
            }
        }
        Scalar { field, terms }.normalize()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: terms by descending total degree (the field
    /// generator counts as a variable), no spaces, rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gen = self.field.as_ref().map(|fld| fld.generator.clone());
        let mut flat: Vec<(Monomial, Rational)> = Vec::new();
        for (m, coeff) in &self.terms {
            for (k, c) in coeff.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mono = match (&gen, k) {
                    (_, 0) => m.clone(),
                    (Some(g), k) => m.mul(&Monomial(vec![(g.clone(), k as u32)])),
                    (None, _) => unreachable!("field-less scalar with generator powers"),
                };
                flat.push((mono, c.clone()));
            }
        }
        if flat.is_empty() {
            return write!(f, "0");
        }
        flat.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(&b.0)));
        for (i, (mono, c)) in flat.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if negative {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let vars: Vec<String> = mono
                .0
                .iter()
                .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if mono.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// The exact scalar domain of a computation.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientRing {
    Rationals,
    NumberField(Arc<NumberField>),
    Family {
        base: Option<Arc<NumberField>>,
        variables: Vec<String>,
    },
}

impl CoefficientRing {
    pub fn number_field(generator: &str, min_poly: &str) -> Result<Self, RingError> {
        Ok(CoefficientRing::NumberField(Arc::new(NumberField::parse(
            generator, min_poly,
        )?)))
    }

    pub fn family(base: CoefficientRing, variables: Vec<String>) -> Result<Self, RingError> {
        let field = match base {
            CoefficientRing::Rationals => None,
            CoefficientRing::NumberField(f) => Some(f),
            CoefficientRing::Family { .. } => {
                return Err(RingError::NotConstant("nested family ring".into()))
            }
        };
        let mut seen = BTreeSet::new();
        for v in &variables {
            if !seen.insert(v.clone()) || field.as_ref().is_some_and(|f| f.generator == *v) {
                return Err(RingError::DuplicateVariable(v.clone()));
            }
        }
        Ok(CoefficientRing::Family { base: field, variables })
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        match self {
            CoefficientRing::Rationals => None,
            CoefficientRing::NumberField(f) => Some(f),
            CoefficientRing::Family { base, .. } => base.as_ref(),
        }
    }

    pub fn variables(&self) -> &[String] {
        match self {
            CoefficientRing::Family { variables, .. } => variables,
            _ => &[],
        }
    }

    pub fn is_family(&self) -> bool {
        matches!(self, CoefficientRing::Family { .. })
    }

    /// The ring obtained after specializing every family variable.
    pub fn base(&self) -> CoefficientRing {
        match self.field() {
            None => CoefficientRing::Rationals,
            Some(f) => CoefficientRing::NumberField(f.clone()),
        }
    }

    /// True if `x` only uses this ring's variables and field.
    pub fn contains(&self, x: &Scalar) -> bool {
        let vars_ok = x.variables().iter().all(|v| self.variables().contains(v));
        let field_ok = match (x.field(), self.field()) {
            (None, _) => true,
            (Some(a), Some(b)) => a == b,
            (Some(_), None) => x.terms().all(|(_, c)| c.len() <= 1),
        };
        vars_ok && field_ok
    }

    /// Parses an expression such as `"5/2"`, `"x+1"` or `"2*s^2-x*y"`.
    pub fn parse(&self, text: &str) -> Result<Scalar, RingError> {
        let mut parser = Parser {
            src: text.as_bytes(),
            pos: 0,
            ring: self,
        };
        parser.skip_ws();
        if parser.pos == parser.src.len() {
            return Err(parser.error("empty expression"));
        }
        let value = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a CoefficientRing,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> RingError {
        RingError::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, RingError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, RingError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let inv = d.inv().ok_or_else(|| RingError::NonInvertible(d.to_string()))?;
                    acc = acc * inv;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, RingError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar, RingError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected a nonnegative integer exponent"));
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let exp: u32 = text
                .parse()
                .map_err(|_| RingError::Parse { offset: start, message: "exponent too large".into() })?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, RingError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.src.get(self.pos).is_some_and(|c| *c == b'.' || *c == b'e' || *c == b'E') {
                    return Err(self.error("floating-point literals are not accepted"));
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = text.parse().expect("digits");
                Ok(Scalar::from_rational(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(f) = self.ring.field() {
                    if f.generator == name {
                        return Ok(Scalar::generator(f));
                    }
                }
                if self.ring.variables().iter().any(|v| v == name) {
                    return Ok(Scalar::variable(name));
                }
                Err(RingError::UnknownSymbol(name.to_string()))
            }
            Some(b'.') => Err(self.error("floating-point literals are not accepted")),
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_are_canonical() {
        let ring = CoefficientRing::family(CoefficientRing::Rationals, vec!["x".into(), "y".into()]).unwrap();
        let a = ring.parse("x + 2").unwrap();
        assert_eq!(a.to_string(), "x+2");
        let b = ring.parse("-(x) + 3/6*y*x - 1/2 * x*y").unwrap();
        assert_eq!(b.to_string(), "-x");
        let c = ring.parse("(x+1)^2").unwrap();
        assert_eq!(c.to_string(), "x^2+2*x+1");
        assert_eq!(ring.parse(&c.to_string()).unwrap(), c);
        assert_eq!(ring.parse("6/4").unwrap().to_string(), "3/2");
        assert_eq!(ring.parse("-0").unwrap().to_string(), "0");
    }

    #[test]
    fn parse_rejects_floats_and_unknown_symbols() {
        let ring = CoefficientRing::Rationals;
        assert!(matches!(ring.parse("1.5"), Err(RingError::Parse { .. })));
        assert!(matches!(ring.parse("x"), Err(RingError::UnknownSymbol(_))));
        assert!(matches!(ring.parse("1/0"), Err(RingError::NonInvertible(_))));
        assert!(matches!(ring.parse(""), Err(RingError::Parse { .. })));
        assert!(matches!(ring.parse("2 3"), Err(RingError::Parse { offset: 2, .. })));
    }

    #[test]
    fn number_field_arithmetic() {
        let ring = CoefficientRing::number_field("s", "s^2 - 2").unwrap();
        let s = ring.parse("s").unwrap();
        assert_eq!(&s * &s, Scalar::from_int(2));
        let a = ring.parse("1 + s").unwrap();
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(ring.parse("1/(s+1)").unwrap().to_string(), "s-1");
        assert!(!s.is_integer());
    }

    #[test]
    fn reducible_min_poly_rejected() {
        assert!(matches!(
            CoefficientRing::number_field("s", "s^2 - 4"),
            Err(RingError::Reducible(_))
        ));
        assert!(matches!(
            CoefficientRing::number_field("s", "s^4 + 4"),
            Err(RingError::Reducible(_))
        ));
        assert!(matches!(
            CoefficientRing::number_field("s", "s^7 - 2"),
            Err(RingError::DegreeTooLarge(7))
        ));
    }

    #[test]
    fn substitution() {
        let ring = CoefficientRing::family(CoefficientRing::Rationals, vec!["x".into()]).unwrap();
        let p = ring.parse("x^2 - 3*x + 1").unwrap();
        let assign = BTreeMap::from([("x".to_string(), Scalar::from_int(2))]);
        assert_eq!(p.substitute(&assign).unwrap(), Scalar::from_int(-1));
        assert!(matches!(
            p.substitute(&BTreeMap::new()),
            Err(RingError::UnboundVariable(_))
        ));
    }
}

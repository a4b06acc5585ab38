//! Based root data in fixed coordinates.
//!
//! The character lattice `X` is always `ℤ^r` and `X∨` is paired with it by
//! the ordinary dot product, so a root datum is just two index-paired lists of
//! integer vectors. Points of `t̂ = X ⊗ K` use the same coordinates.

mod automorphism;
mod builtin;
mod weyl;

use std::collections::HashMap;
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, IntMatrix};
use crate::upoly::Rational;

pub use automorphism::{PinnedAutomorphism, DEFAULT_ORDER_CAP};
pub use builtin::{builtin_datum, BuiltinFamily, MAX_BUILTIN_RANK};
pub use weyl::{WeylGroup, DEFAULT_WEYL_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("{what} {index} has length {len}, expected rank {rank}")]
    Ragged {
        what: &'static str,
        index: usize,
        len: usize,
        rank: usize,
    },
    #[error("{roots} roots but {coroots} coroots")]
    LengthMismatch { roots: usize, coroots: usize },
    #[error("root {0} appears twice")]
    DuplicateRoot(usize),
    #[error("pairing of root {index} with its coroot is {value}, expected 2")]
    PairingViolation { index: usize, value: i64 },
    #[error("reflection in root {reflection} sends {} {image_of} outside the datum", if *.dual { "coroot" } else { "root" })]
    NotClosedUnderReflection {
        reflection: usize,
        image_of: usize,
        dual: bool,
    },
    #[error("root {0} is twice another root; only reduced data are supported")]
    NotReduced(usize),
    #[error("simple index {0} is out of range")]
    SimpleIndexOutOfRange(usize),
    #[error("simple roots are linearly dependent")]
    DependentSimpleRoots,
    #[error("root {0} is not a nonnegative or nonpositive integer combination of the simple roots")]
    NotBased(usize),
    #[error("unsupported group family `{0}`")]
    UnsupportedFamily(String),
    #[error("rank parameter {n} is outside the supported range 1..={cap}")]
    RankCapExceeded { n: usize, cap: usize },
    #[error("Weyl group has more than {cap} elements")]
    WeylCapExceeded { cap: usize },
    #[error("automorphism matrix is not a unimodular {rank}×{rank} integer matrix")]
    NotUnimodular { rank: usize },
    #[error("automorphism does not map simple root {0} to a simple root")]
    DoesNotPermuteSimpleRoots(usize),
    #[error("automorphism does not preserve the pairing at simple coroot {0}")]
    DoesNotPreservePairing(usize),
    #[error("automorphism has no finite order up to {cap}")]
    InfiniteOrder { cap: usize },
    #[error("weight has length {len}, expected rank {rank}")]
    WeightLength { len: usize, rank: usize },
}

/// A rational vector in `X ⊗ ℚ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|x| if x.is_integer() { i64::try_from(x.to_integer()).ok() } else { None })
            .collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn pair(&self, coroot: &[i64]) -> Rational {
        linalg::dot_rational(&self.0, coroot)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(crate::scalar::format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An unvalidated based root datum, as read from input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawRootDatum {
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    pub simple: Vec<usize>,
}

/// A reduced root datum `(X, Φ, X∨, Φ∨)` with `X = ℤ^rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
}

impl RootDatum {
    pub fn new(rank: usize, roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>>) -> Result<Self, RootDataError> {
        if rank == 0 {
            return Err(RootDataError::ZeroRank);
        }
        for (what, list) in [("root", &roots), ("coroot", &coroots)] {
            if let Some((index, v)) = list.iter().enumerate().find(|(_, v)| v.len() != rank) {
                return Err(RootDataError::Ragged {
                    what,
                    index,
                    len: v.len(),
                    rank,
                });
            }
        }
        if roots.len() != coroots.len() {
            return Err(RootDataError::LengthMismatch {
                roots: roots.len(),
                coroots: coroots.len(),
            });
        }
        let mut index: HashMap<&[i64], usize> = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            if index.insert(r.as_slice(), i).is_some() {
                return Err(RootDataError::DuplicateRoot(i));
            }
        }
        for (i, (a, c)) in roots.iter().zip(&coroots).enumerate() {
            let value = linalg::dot(a, c);
            if value != 2 {
                return Err(RootDataError::PairingViolation { index: i, value });
            }
        }
        for a in &roots {
            let double: Vec<i64> = a.iter().map(|x| 2 * x).collect();
            if index.contains_key(double.as_slice()) {
                return Err(RootDataError::NotReduced(index[double.as_slice()]));
            }
        }
        for (i, (a, ac)) in roots.iter().zip(&coroots).enumerate() {
            for (k, (b, bc)) in roots.iter().zip(&coroots).enumerate() {
                let image = reflect(b, a, ac);
                let Some(&j) = index.get(image.as_slice()) else {
                    return Err(RootDataError::NotClosedUnderReflection {
                        reflection: i,
                        image_of: k,
                        dual: false,
                    });
                };
                if reflect(bc, ac, a) != coroots[j] {
                    return Err(RootDataError::NotClosedUnderReflection {
                        reflection: i,
                        image_of: k,
                        dual: true,
                    });
                }
            }
        }
        Ok(RootDatum { rank, roots, coroots })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == v)
    }
}

/// `x − ⟨x, c⟩ a`.
fn reflect(x: &[i64], a: &[i64], c: &[i64]) -> Vec<i64> {
    let p = linalg::dot(x, c);
    x.iter().zip(a).map(|(xi, ai)| xi - p * ai).collect()
}

/// A root datum together with a basis `Δ` of simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedRootDatum {
    datum: RootDatum,
    simple: Vec<usize>,
    /// Δ-coordinates of every root.
    expansions: Vec<Vec<i64>>,
}

impl BasedRootDatum {
    pub fn new(datum: RootDatum, simple: Vec<usize>) -> Result<Self, RootDataError> {
        let n = datum.roots.len();
        let mut seen = vec![false; n];
        for &s in &simple {
            if s >= n {
                return Err(RootDataError::SimpleIndexOutOfRange(s));
            }
            if seen[s] {
                return Err(RootDataError::DependentSimpleRoots);
            }
            seen[s] = true;
        }
        let basis: Vec<Vec<i64>> = simple.iter().map(|&s| datum.roots[s].clone()).collect();
        let as_rational: Vec<Vec<Rational>> = basis
            .iter()
            .map(|v| v.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        if linalg::rational_rank(&as_rational) != simple.len() {
            return Err(RootDataError::DependentSimpleRoots);
        }
        let mut expansions = Vec::with_capacity(n);
        for (i, r) in datum.roots.iter().enumerate() {
            let c = linalg::express_in_basis(&basis, r).ok_or(RootDataError::NotBased(i))?;
            if c.iter().any(|x| !x.is_integer()) {
                return Err(RootDataError::NotBased(i));
            }
            let nonneg = c.iter().all(|x| !x.is_negative());
            let nonpos = c.iter().all(|x| !x.is_positive());
            if !nonneg && !nonpos {
                return Err(RootDataError::NotBased(i));
            }
            expansions.push(c.iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect());
        }
        Ok(BasedRootDatum {
            datum,
            simple,
            expansions,
        })
    }

    /// Validates raw lists into a based root datum.
    pub fn from_raw(raw: &RawRootDatum) -> Result<Self, RootDataError> {
        let datum = RootDatum::new(raw.rank, raw.roots.clone(), raw.coroots.clone())?;
        Self::new(datum, raw.simple.clone())
    }

    pub fn to_raw(&self) -> RawRootDatum {
        RawRootDatum {
            rank: self.rank(),
            roots: self.datum.roots.clone(),
            coroots: self.datum.coroots.clone(),
            simple: self.simple.clone(),
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.datum.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.datum.coroots
    }

    /// Indices of the simple roots in [`Self::roots`].
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = &[i64]> {
        self.simple.iter().map(|&i| self.datum.roots[i].as_slice())
    }

    pub fn simple_coroots(&self) -> impl Iterator<Item = &[i64]> {
        self.simple.iter().map(|&i| self.datum.coroots[i].as_slice())
    }

    pub fn is_positive(&self, root: usize) -> bool {
        self.expansions[root].iter().all(|&c| c >= 0)
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.datum.roots.len()).filter(|&i| self.is_positive(i))
    }

    /// Coordinates of a root in the simple roots.
    pub fn expansion(&self, root: usize) -> &[i64] {
        &self.expansions[root]
    }

    /// Swaps roots with coroots; the simple indices carry over.
    pub fn dualize(&self) -> BasedRootDatum {
        let datum = RootDatum::new(self.rank(), self.datum.coroots.clone(), self.datum.roots.clone())
            .expect("dual of a valid root datum is valid");
        BasedRootDatum::new(datum, self.simple.clone()).expect("dual of a based datum is based")
    }

    /// Reflection `x ↦ x − ⟨x, α_i∨⟩ α_i` in the `i`-th simple root, as a matrix on `X`.
    pub fn simple_reflection(&self, i: usize) -> IntMatrix {
        let r = self.rank();
        let a = &self.datum.roots[self.simple[i]];
        let c = &self.datum.coroots[self.simple[i]];
        let mut m = IntMatrix::identity(r);
        for row in 0..r {
            for col in 0..r {
                m[(row, col)] -= a[row] * c[col];
            }
        }
        m
    }

    pub fn weyl_group(&self) -> Result<WeylGroup, RootDataError> {
        WeylGroup::generate(self, DEFAULT_WEYL_CAP)
    }

    pub fn weyl_group_with_cap(&self, cap: usize) -> Result<WeylGroup, RootDataError> {
        WeylGroup::generate(self, cap)
    }

    /// `δ`, half the sum of the positive roots.
    pub fn half_sum_positive_roots(&self) -> Weight {
        let r = self.rank();
        let mut sum = vec![0i64; r];
        for i in self.positive_roots() {
            for (s, x) in sum.iter_mut().zip(&self.datum.roots[i]) {
                *s += x;
            }
        }
        let half = Rational::new(1.into(), 2.into());
        Weight(sum.into_iter().map(|x| Rational::from_integer(x.into()) * &half).collect())
    }

    /// An integral `δ̃` with `⟨δ̃, α∨⟩ = 1` on every simple coroot, if one exists.
    ///
    /// Among the solutions the one reduced against the Hermite basis of the
    /// kernel is returned; for `GLₙ` this puts the first coordinate at 0.
    pub fn find_twisting_element(&self) -> Option<Vec<i64>> {
        let rows: Vec<Vec<i64>> = self.simple_coroots().map(<[i64]>::to_vec).collect();
        let ones = vec![1; rows.len()];
        linalg::solve_integer(&rows, &ones, self.rank())
    }

    /// True if `⟨v, α∨⟩ = 1` for every simple coroot.
    pub fn is_twisting_element(&self, v: &[i64]) -> bool {
        v.len() == self.rank() && self.simple_coroots().all(|c| linalg::dot(v, c) == 1)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<(), RootDataError> {
        if w.len() != self.rank() {
            return Err(RootDataError::WeightLength {
                len: w.len(),
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `⟨λ, α∨⟩ ≥ 0` for all simple coroots.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.simple_coroots().all(|c| !w.pair(c).is_negative())
    }

    /// `⟨λ, α∨⟩ > 0` for all simple coroots.
    pub fn is_strictly_dominant(&self, w: &Weight) -> bool {
        self.simple_coroots().all(|c| w.pair(c).is_positive())
    }

    /// The dominant element of `W·λ` and a word reaching it.
    ///
    /// The word `[i₁, …, i_k]` means `s_{i_k} ⋯ s_{i₁}`: `s_{i₁}` is applied
    /// first. Indices are positions in [`Self::simple_indices`].
    pub fn dominant_representative(&self, w: &Weight) -> (Weight, Vec<usize>) {
        let coroots: Vec<&[i64]> = self.simple_coroots().collect();
        let roots: Vec<&[i64]> = self.simple_roots().collect();
        let mut current = w.clone();
        let mut word = Vec::new();
        while let Some(i) = coroots.iter().position(|c| current.pair(c).is_negative()) {
            let p = current.pair(coroots[i]);
            for (x, a) in current.0.iter_mut().zip(roots[i]) {
                *x -= &p * Rational::from_integer((*a).into());
            }
            word.push(i);
        }
        (current, word)
    }

    /// Applies a simple-reflection word in the convention of
    /// [`Self::dominant_representative`].
    pub fn apply_word(&self, word: &[usize], w: &Weight) -> Weight {
        word.iter().fold(w.clone(), |acc, &i| {
            Weight(self.simple_reflection(i).apply_rational(&acc.0))
        })
    }

    /// True when the roots are exactly `e_i − e_j` in `ℤ^rank`.
    pub fn is_standard_gl(&self) -> bool {
        let n = self.rank();
        if self.roots().len() != n * (n - 1) {
            return false;
        }
        self.roots().iter().zip(self.coroots()).all(|(r, c)| {
            r == c && r.iter().filter(|&&x| x == 1).count() == 1 && r.iter().filter(|&&x| x == -1).count() == 1
                && r.iter().filter(|&&x| x == 0).count() == n - 2
        })
    }
}

impl Weight {
    pub fn one_half() -> Rational {
        Rational::new(One::one(), 2.into())
    }
}

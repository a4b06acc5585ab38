use std::collections::{HashMap, HashSet, VecDeque};

use crate::linalg::IntMatrix;
use crate::par::{self, Strategy};
use crate::scalar::Scalar;

use super::{BasedRootDatum, RootDataError};

pub const DEFAULT_WEYL_CAP: usize = 10_000;

/// The Weyl group as an explicit list of matrices on `X`.
///
/// Elements are in breadth-first order from the identity, so `words[i]` is
/// a reduced word for `elements[i]` (same convention as
/// [`BasedRootDatum::dominant_representative`]).
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<IntMatrix>,
    words: Vec<Vec<usize>>,
    generators: Vec<IntMatrix>,
}

impl WeylGroup {
    pub(super) fn generate(d: &BasedRootDatum, cap: usize) -> Result<Self, RootDataError> {
        let rank = d.rank();
        let generators: Vec<IntMatrix> = (0..d.simple_indices().len()).map(|i| d.simple_reflection(i)).collect();
        let id = IntMatrix::identity(rank);
        let mut index: HashMap<IntMatrix, usize> = HashMap::from([(id.clone(), 0)]);
        let mut elements = vec![id];
        let mut words = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (i, s) in generators.iter().enumerate() {
                let next = s.mul(&elements[k]);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() == cap {
                    return Err(RootDataError::WeylCapExceeded { cap });
                }
                let mut word = words[k].clone();
                word.push(i);
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
                words.push(word);
            }
        }
        Ok(WeylGroup {
            rank,
            elements,
            words,
            generators,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    /// `W·x` with duplicates removed, in element order.
    pub fn orbit(&self, point: &[Scalar]) -> Vec<Vec<Scalar>> {
        self.orbit_with(point, Strategy::default())
    }

    pub fn orbit_with(&self, point: &[Scalar], strategy: Strategy) -> Vec<Vec<Scalar>> {
        let images = par::map(&self.elements, strategy, |w| w.apply_scalar(point));
        let mut seen = HashSet::with_capacity(images.len());
        images.into_iter().filter(|img| seen.insert(img.clone())).collect()
    }

    /// True if `b ∈ W·a`, by exhaustive search.
    pub fn same_orbit(&self, a: &[Scalar], b: &[Scalar]) -> bool {
        self.same_orbit_with(a, b, Strategy::default())
    }

    pub fn same_orbit_with(&self, a: &[Scalar], b: &[Scalar], strategy: Strategy) -> bool {
        if a.len() != b.len() {
            return false;
        }
        par::any(&self.elements, strategy, |w| w.apply_scalar(a) == b)
    }

    /// Number of `w` with `w·x = x`.
    pub fn stabilizer_order(&self, point: &[Scalar]) -> usize {
        self.elements.iter().filter(|w| w.apply_scalar(point) == point).count()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{builtin_datum, BuiltinFamily};
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(builtin_datum(BuiltinFamily::GL, 2).unwrap().weyl_group().unwrap().order(), 2);
        assert_eq!(builtin_datum(BuiltinFamily::GL, 3).unwrap().weyl_group().unwrap().order(), 6);
        assert_eq!(builtin_datum(BuiltinFamily::Sp, 2).unwrap().weyl_group().unwrap().order(), 8);
        assert_eq!(builtin_datum(BuiltinFamily::GL, 1).unwrap().weyl_group().unwrap().order(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let d = builtin_datum(BuiltinFamily::GL, 4).unwrap();
        assert_eq!(
            d.weyl_group_with_cap(10).unwrap_err(),
            RootDataError::WeylCapExceeded { cap: 10 }
        );
    }

    #[test]
    fn orbits_and_stabilizers() {
        let w = builtin_datum(BuiltinFamily::GL, 3).unwrap().weyl_group().unwrap();
        let p: Vec<Scalar> = [1, 1, 0].iter().map(|&x| Scalar::from_int(x)).collect();
        assert_eq!(w.orbit(&p).len(), 3);
        assert_eq!(w.stabilizer_order(&p), 2);
        let q: Vec<Scalar> = [0, 1, 1].iter().map(|&x| Scalar::from_int(x)).collect();
        assert!(w.same_orbit(&p, &q));
        assert!(w.same_orbit_with(&p, &q, Strategy::Sequential));
    }
}

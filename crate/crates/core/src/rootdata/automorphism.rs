use crate::linalg::IntMatrix;
use crate::scalar::Scalar;

use super::{BasedRootDatum, RootDataError, Weight};

pub const DEFAULT_ORDER_CAP: usize = 64;

/// An automorphism of the based root datum, given by its matrix on `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinnedAutomorphism {
    matrix: IntMatrix,
    inverse: IntMatrix,
    order: usize,
}

impl PinnedAutomorphism {
    pub fn new(matrix: IntMatrix, d: &BasedRootDatum) -> Result<Self, RootDataError> {
        Self::with_order_cap(matrix, d, DEFAULT_ORDER_CAP)
    }

    pub fn with_order_cap(matrix: IntMatrix, d: &BasedRootDatum, cap: usize) -> Result<Self, RootDataError> {
        let r = d.rank();
        if matrix.rows() != r || matrix.cols() != r {
            return Err(RootDataError::NotUnimodular { rank: r });
        }
        let inverse = matrix.inverse().ok_or(RootDataError::NotUnimodular { rank: r })?;
        // the inverse transpose acts on X∨
        let dual = inverse.transpose();
        let simple: Vec<usize> = d.simple_indices().to_vec();
        for (k, &s) in simple.iter().enumerate() {
            let image = matrix.apply(&d.roots()[s]);
            let Some(j) = d.datum().root_index(&image).filter(|j| simple.contains(j)) else {
                return Err(RootDataError::DoesNotPermuteSimpleRoots(k));
            };
            if dual.apply(&d.coroots()[s]) != d.coroots()[j] {
                return Err(RootDataError::DoesNotPreservePairing(k));
            }
        }
        let id = IntMatrix::identity(r);
        let mut power = matrix.clone();
        let mut order = 1;
        while power != id {
            if order == cap {
                return Err(RootDataError::InfiniteOrder { cap });
            }
            power = power.mul(&matrix);
            order += 1;
        }
        Ok(PinnedAutomorphism { matrix, inverse, order })
    }

    pub fn identity(d: &BasedRootDatum) -> Self {
        let id = IntMatrix::identity(d.rank());
        PinnedAutomorphism {
            matrix: id.clone(),
            inverse: id,
            order: 1,
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &IntMatrix {
        &self.inverse
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(self.matrix.apply_rational(&w.0))
    }

    pub fn apply_ints(&self, v: &[i64]) -> Vec<i64> {
        self.matrix.apply(v)
    }

    pub fn apply_scalars(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply_scalar(v)
    }

    pub fn apply_inverse_scalars(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.inverse.apply_scalar(v)
    }

    pub fn compose(&self, other: &PinnedAutomorphism) -> IntMatrix {
        self.matrix.mul(&other.matrix)
    }
}

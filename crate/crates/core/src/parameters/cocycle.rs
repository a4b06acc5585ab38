//! Cocycles `Γ → T̂(K) ⋊ W` at a finite level.

use crate::linalg::IntMatrix;
use crate::scalar::Scalar;

use super::{GammaGroup, ParameterError};

/// `(A·t)_i = Π_j t_j^{A_ij}`: the action of an integer matrix on `T̂(K) = X ⊗ K^×`.
pub fn torus_act(m: &IntMatrix, t: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows())
        .map(|i| {
            t.iter().enumerate().fold(Scalar::one(), |acc, (j, x)| {
                acc * x.powi(m[(i, j)]).expect("torus coordinates are invertible")
            })
        })
        .collect()
}

/// An element `(t, w)` of `T̂(K) ⋊ W`, with `w` given by its matrix on `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusWeylElement {
    t: Vec<Scalar>,
    w: IntMatrix,
}

impl TorusWeylElement {
    pub fn new(t: Vec<Scalar>, w: IntMatrix) -> Result<Self, ParameterError> {
        if !w.is_square() || w.rows() != t.len() || w.inverse().is_none() {
            return Err(ParameterError::BadCocycle("Weyl part must be unimodular of the torus rank".into()));
        }
        if let Some(x) = t.iter().find(|x| x.inv().is_none()) {
            return Err(ParameterError::BadCocycle(format!("torus coordinate {x} is not invertible")));
        }
        Ok(TorusWeylElement { t, w })
    }

    pub fn identity(rank: usize) -> Self {
        TorusWeylElement {
            t: vec![Scalar::one(); rank],
            w: IntMatrix::identity(rank),
        }
    }

    pub fn torus(t: Vec<Scalar>) -> Result<Self, ParameterError> {
        let r = t.len();
        Self::new(t, IntMatrix::identity(r))
    }

    pub fn t(&self) -> &[Scalar] {
        &self.t
    }

    pub fn w(&self) -> &IntMatrix {
        &self.w
    }

    /// `(t, w)(t′, w′) = (t · w(t′), w w′)`.
    pub fn mul(&self, other: &TorusWeylElement) -> TorusWeylElement {
        let moved = torus_act(&self.w, &other.t);
        TorusWeylElement {
            t: self.t.iter().zip(&moved).map(|(a, b)| a * b).collect(),
            w: self.w.mul(&other.w),
        }
    }

    pub fn inverse(&self) -> TorusWeylElement {
        let w_inv = self.w.inverse().expect("unimodular");
        let t_inv: Vec<Scalar> = self.t.iter().map(|x| x.inv().expect("invertible")).collect();
        TorusWeylElement {
            t: torus_act(&w_inv, &t_inv),
            w: w_inv,
        }
    }

    /// `γ·(t, w) = (A t, A w A⁻¹)`.
    pub fn act(&self, a: &IntMatrix, a_inv: &IntMatrix) -> TorusWeylElement {
        TorusWeylElement {
            t: torus_act(a, &self.t),
            w: a.mul(&self.w).mul(a_inv),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TorusWeylCocycle {
    gamma: GammaGroup,
    values: Vec<TorusWeylElement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CocycleVerdict {
    pub valid: bool,
    /// First `(γ, β)` with `c_{γβ} ≠ c_γ · γ(c_β)`.
    pub violation: Option<(usize, usize)>,
}

impl TorusWeylCocycle {
    pub fn new(gamma: GammaGroup, values: Vec<TorusWeylElement>) -> Result<Self, ParameterError> {
        if values.len() != gamma.order() {
            return Err(ParameterError::BadCocycle(format!(
                "{} values for a group of order {}",
                values.len(),
                gamma.order()
            )));
        }
        if values.iter().any(|v| v.t.len() != gamma.rank()) {
            return Err(ParameterError::BadCocycle("value of the wrong rank".into()));
        }
        Ok(TorusWeylCocycle { gamma, values })
    }

    pub fn gamma(&self) -> &GammaGroup {
        &self.gamma
    }

    pub fn values(&self) -> &[TorusWeylElement] {
        &self.values
    }

    fn act(&self, g: usize, x: &TorusWeylElement) -> TorusWeylElement {
        x.act(self.gamma.matrix(g), self.gamma.inverse_matrix(g))
    }
}

pub fn validate_cocycle(c: &TorusWeylCocycle) -> CocycleVerdict {
    let n = c.gamma.order();
    for g in 0..n {
        for b in 0..n {
            let lhs = &c.values[c.gamma.product(g, b)];
            let rhs = c.values[g].mul(&c.act(g, &c.values[b]));
            if *lhs != rhs {
                return CocycleVerdict {
                    valid: false,
                    violation: Some((g, b)),
                };
            }
        }
    }
    CocycleVerdict {
        valid: true,
        violation: None,
    }
}

/// True if `c′_γ = n c_γ γ(n⁻¹)` for all `γ`.
pub fn cohomologous(c: &TorusWeylCocycle, c2: &TorusWeylCocycle, n: &TorusWeylElement) -> bool {
    if c.gamma.order() != c2.gamma.order() || c.gamma.table() != c2.gamma.table() {
        return false;
    }
    let n_inv = n.inverse();
    (0..c.gamma.order()).all(|g| c2.values[g] == n.mul(&c.values[g]).mul(&c.act(g, &n_inv)))
}

/// The cocycle `γ ↦ n γ(n⁻¹)`.
pub fn coboundary(gamma: &GammaGroup, n: &TorusWeylElement) -> TorusWeylCocycle {
    let n_inv = n.inverse();
    let values = (0..gamma.order())
        .map(|g| n.mul(&n_inv.act(gamma.matrix(g), gamma.inverse_matrix(g))))
        .collect();
    TorusWeylCocycle {
        gamma: gamma.clone(),
        values,
    }
}

//! Galois-parameter specifications: the finite combinatorial shadow of an
//! L- or C-parameter that the infinitesimal character depends on.
//!
//! Only the trivial-torsor case is represented. `Γ` is a finite group given
//! by a multiplication table together with its action on `X` by pinned
//! automorphisms, and each embedding `σ` carries the `τ`'s above it with a
//! simply transitive `Γ`-action.

mod cocycle;
mod raw;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::linalg::IntMatrix;
use crate::rootdata::{builtin_datum, BasedRootDatum, BuiltinFamily, PinnedAutomorphism, RootDataError, WeylGroup};
use crate::scalar::{CoefficientRing, RingError, Scalar};
use crate::sen::{SenError, SenOperator};

pub use cocycle::{
    coboundary, cohomologous, torus_act, validate_cocycle, CocycleVerdict, TorusWeylCocycle, TorusWeylElement,
};
pub use raw::{
    RawCoefficients, RawEmbedding, RawGamma, RawGammaElement, RawGroup, RawBuiltin, RawParameterSpec, RawSen,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParameterError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Sen(#[from] SenError),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid group table: {0}")]
    BadGroupTable(String),
    #[error("matrix of {a}·{b} is not the product of the matrices of {a} and {b}")]
    ActionNotHomomorphism { a: String, b: String },
    #[error("unknown element `{0}` of Γ")]
    UnknownGammaElement(String),
    #[error("label `{0}` is used twice")]
    DuplicateLabel(String),
    #[error("at least one embedding σ is required")]
    NoSigmas,
    #[error("Γ-action on the embeddings above `{sigma}`: {reason}")]
    BadEmbeddingAction { sigma: String, reason: String },
    #[error("Γ does not act simply transitively on the embeddings above `{sigma}`")]
    NotSimplyTransitive { sigma: String },
    #[error("no Sen data for embedding `{tau}`")]
    MissingSenData { tau: String },
    #[error("Sen data for unknown embedding `{tau}`")]
    UnknownTau { tau: String },
    #[error("Sen data for {what} must have {expected} entries, found {found}")]
    SenShape { what: String, expected: usize, found: usize },
    #[error("Sen data needs exactly one of `eigenvalues` and `matrix`")]
    SenForm,
    #[error("Sen class at {gamma}·{tau} (above `{sigma}`) is not {gamma} applied to the class at `{tau}` up to W")]
    GammaIncompatibleSenData { sigma: String, tau: String, gamma: String },
    #[error("C-mode parameters need d_weight = 1")]
    MissingCyclotomicConstraint,
    #[error("vector is not a twisting element: ⟨δ̃, α∨⟩ = 1 fails on some simple coroot")]
    InvalidTwisting,
    #[error("the datum admits no twisting element")]
    NoTwistingElement,
    #[error("twisting element is not fixed by {gamma}")]
    TwistingNotGammaInvariant { gamma: String },
    #[error("operation needs an L-mode parameter")]
    NotLMode,
    #[error("scalar `{0}` does not lie in the coefficient ring")]
    ScalarNotInRing(String),
    #[error("expected an integer, found `{0}`")]
    NotAnInteger(String),
    #[error("malformed cocycle: {0}")]
    BadCocycle(String),
}

/// A validation failure together with the JSON pointer of the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pointer}: {error}")]
pub struct SpecError {
    pub pointer: String,
    pub error: ParameterError,
}

impl SpecError {
    pub(crate) fn at(pointer: impl Into<String>, error: impl Into<ParameterError>) -> Self {
        SpecError {
            pointer: pointer.into(),
            error: error.into(),
        }
    }
}

/// Escapes a key for use in a JSON pointer.
pub(crate) fn pointer_token(key: &str) -> String {
    key.replace('~', "~0").replace('/', "~1")
}

/// A finite group with a multiplication table and an action on `X = ℤ^rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaGroup {
    names: Vec<String>,
    matrices: Vec<IntMatrix>,
    inverse_matrices: Vec<IntMatrix>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GammaGroup {
    pub fn trivial(rank: usize) -> Self {
        GammaGroup {
            names: vec!["1".into()],
            matrices: vec![IntMatrix::identity(rank)],
            inverse_matrices: vec![IntMatrix::identity(rank)],
            table: vec![vec![0]],
            identity: 0,
            inverses: vec![0],
        }
    }

    pub fn new(names: Vec<String>, matrices: Vec<IntMatrix>, table: Vec<Vec<usize>>) -> Result<Self, ParameterError> {
        let n = names.len();
        let bad = |m: String| Err(ParameterError::BadGroupTable(m));
        if n == 0 {
            return bad("the group is empty".into());
        }
        if matrices.len() != n {
            return bad(format!("{} matrices for {n} elements", matrices.len()));
        }
        if let Some(dup) = names.iter().enumerate().find(|(i, x)| names[..*i].contains(x)) {
            return Err(ParameterError::DuplicateLabel(dup.1.clone()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad(format!("table must be {n}×{n} with entries below {n}"));
        }
        let ident: Vec<usize> = (0..n).collect();
        let Some(identity) = (0..n).find(|&e| table[e] == ident && (0..n).all(|a| table[a][e] == a)) else {
            return bad("no identity element".into());
        };
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverses.push(b),
                None => return bad(format!("`{}` has no inverse", names[a])),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad("multiplication is not associative".into());
                    }
                }
            }
        }
        let rank = matrices[0].rows();
        if matrices.iter().any(|m| m.rows() != rank || m.cols() != rank) {
            return Err(ParameterError::InvalidGroup("Γ matrices have different sizes".into()));
        }
        if let Some(g) = matrices.iter().position(|m| m.inverse().is_none()) {
            return Err(ParameterError::InvalidGroup(format!("matrix of `{}` is not unimodular", names[g])));
        }
        for a in 0..n {
            for b in 0..n {
                if matrices[table[a][b]] != matrices[a].mul(&matrices[b]) {
                    return Err(ParameterError::ActionNotHomomorphism {
                        a: names[a].clone(),
                        b: names[b].clone(),
                    });
                }
            }
        }
        let inverse_matrices = inverses.iter().map(|&b| matrices[b].clone()).collect();
        Ok(GammaGroup {
            names,
            matrices,
            inverse_matrices,
            table,
            identity,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn rank(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn matrix(&self, g: usize) -> &IntMatrix {
        &self.matrices[g]
    }

    pub fn inverse_matrix(&self, g: usize) -> &IntMatrix {
        &self.inverse_matrices[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Mode {
    L,
    C,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Builtin(BuiltinFamily, usize),
    Explicit,
}

/// The embeddings `τ` above one `σ`, with `action[γ][i]` the index of `γ·τ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaData {
    pub label: String,
    pub taus: Vec<String>,
    pub action: Vec<Vec<usize>>,
}

impl SigmaData {
    /// The unique `γ` with `γ·τ_0 = τ_i`.
    pub fn gamma_from_reference(&self, i: usize) -> usize {
        self.action.iter().position(|perm| perm[0] == i).expect("simply transitive")
    }
}

/// Typed input for [`GaloisParameterSpec::new`]; `action` maps element names to
/// the images of `taus` and may omit the identity.
#[derive(Debug, Clone)]
pub struct EmbeddingInput {
    pub sigma: String,
    pub taus: Vec<String>,
    pub action: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct SpecInput {
    pub name: Option<String>,
    pub description: Option<String>,
    pub coefficients: CoefficientRing,
    pub group: BasedRootDatum,
    pub group_source: GroupSource,
    pub gamma: Option<GammaGroup>,
    pub embeddings: Vec<EmbeddingInput>,
    pub sen: BTreeMap<String, SenOperator>,
    pub mode: Mode,
    pub d_weight: Option<Scalar>,
    pub twisting: Option<Vec<i64>>,
}

impl SpecInput {
    /// Trivial `Γ`, one `τ` per `σ` labelled `<σ>.0`, rational coefficients, L mode.
    pub fn split(group: BasedRootDatum, sigmas: Vec<(String, SenOperator)>) -> Self {
        let mut embeddings = Vec::new();
        let mut sen = BTreeMap::new();
        for (sigma, op) in sigmas {
            let tau = format!("{sigma}.0");
            sen.insert(tau.clone(), op);
            embeddings.push(EmbeddingInput {
                sigma,
                taus: vec![tau],
                action: BTreeMap::new(),
            });
        }
        SpecInput {
            name: None,
            description: None,
            coefficients: CoefficientRing::Rationals,
            group,
            group_source: GroupSource::Explicit,
            gamma: None,
            embeddings,
            sen,
            mode: Mode::L,
            d_weight: None,
            twisting: None,
        }
    }

    pub fn builtin(family: BuiltinFamily, n: usize, sigmas: Vec<(String, SenOperator)>) -> Result<Self, ParameterError> {
        let mut s = Self::split(builtin_datum(family, n)?, sigmas);
        s.group_source = GroupSource::Builtin(family, n);
        Ok(s)
    }
}

/// A validated parameter specification.
#[derive(Debug, Clone)]
pub struct GaloisParameterSpec {
    name: Option<String>,
    description: Option<String>,
    coefficients: CoefficientRing,
    group: BasedRootDatum,
    group_source: GroupSource,
    weyl: WeylGroup,
    gamma: GammaGroup,
    sigmas: Vec<SigmaData>,
    sen: BTreeMap<String, SenOperator>,
    mode: Mode,
    d_weight: Option<Scalar>,
    twisting: Option<Vec<i64>>,
}

impl PartialEq for GaloisParameterSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.description == other.description
            && self.coefficients == other.coefficients
            && self.group == other.group
            && self.group_source == other.group_source
            && self.gamma == other.gamma
            && self.sigmas == other.sigmas
            && self.sen == other.sen
            && self.mode == other.mode
            && self.d_weight == other.d_weight
            && self.twisting == other.twisting
    }
}

impl GaloisParameterSpec {
    /// Validates every invariant; errors carry the JSON pointer of the
    /// corresponding field of the file format.
    pub fn new(input: SpecInput) -> Result<Self, SpecError> {
        let d = input.group;
        let rank = d.rank();
        let weyl = d.weyl_group().map_err(|e| SpecError::at("/group", e))?;
        let gamma = input.gamma.unwrap_or_else(|| GammaGroup::trivial(rank));
        if gamma.rank() != rank {
            return Err(SpecError::at(
                "/gamma/elements",
                ParameterError::InvalidGroup(format!("Γ acts on rank {}, the datum has rank {rank}", gamma.rank())),
            ));
        }
        for g in 0..gamma.order() {
            PinnedAutomorphism::new(gamma.matrix(g).clone(), &d)
                .map_err(|e| SpecError::at(format!("/gamma/elements/{g}/matrix"), e))?;
        }
        for (tau, op) in &input.sen {
            if let Some(x) = op.scalars().into_iter().find(|x| !input.coefficients.contains(x)) {
                return Err(SpecError::at(
                    format!("/sen/{}", pointer_token(tau)),
                    ParameterError::ScalarNotInRing(x.to_string()),
                ));
            }
        }

        let sigmas = Self::check_embeddings(&input.embeddings, &gamma)?;
        let all_taus: BTreeSet<&String> = sigmas.iter().flat_map(|s| &s.taus).collect();
        for s in &sigmas {
            for tau in &s.taus {
                if !input.sen.contains_key(tau) {
                    return Err(SpecError::at("/sen", ParameterError::MissingSenData { tau: tau.clone() }));
                }
            }
        }
        if let Some(tau) = input.sen.keys().find(|t| !all_taus.contains(t)) {
            return Err(SpecError::at(
                format!("/sen/{}", pointer_token(tau)),
                ParameterError::UnknownTau { tau: tau.clone() },
            ));
        }
        for (tau, op) in &input.sen {
            let ptr = format!("/sen/{}", pointer_token(tau));
            match op {
                SenOperator::Class(v) if v.len() != rank => {
                    return Err(SpecError::at(
                        format!("{ptr}/eigenvalues"),
                        ParameterError::SenShape {
                            what: "a semisimple class".into(),
                            expected: rank,
                            found: v.len(),
                        },
                    ))
                }
                SenOperator::Matrix(_) if !d.is_standard_gl() => {
                    return Err(SpecError::at(format!("{ptr}/matrix"), SenError::NotTypeA));
                }
                SenOperator::Matrix(m) if m.dim() != rank => {
                    return Err(SpecError::at(
                        format!("{ptr}/matrix"),
                        ParameterError::SenShape {
                            what: "a matrix".into(),
                            expected: rank,
                            found: m.dim(),
                        },
                    ))
                }
                _ => {}
            }
        }

        if !gamma.is_trivial() {
            for s in &sigmas {
                Self::check_gamma_compatibility(s, &gamma, &input.sen, (&d, &weyl), input.coefficients.field())?;
            }
        }

        if input.mode == Mode::C && !input.d_weight.as_ref().is_some_and(Scalar::is_one) {
            return Err(SpecError::at("/d_weight", ParameterError::MissingCyclotomicConstraint));
        }
        if let Some(t) = &input.twisting {
            check_twisting(t, &d, &gamma).map_err(|e| SpecError::at("/twisting_element", e))?;
        }

        Ok(GaloisParameterSpec {
            name: input.name,
            description: input.description,
            coefficients: input.coefficients,
            group: d,
            group_source: input.group_source,
            weyl,
            gamma,
            sigmas,
            sen: input.sen,
            mode: input.mode,
            d_weight: input.d_weight,
            twisting: input.twisting,
        })
    }

    fn check_embeddings(embeddings: &[EmbeddingInput], gamma: &GammaGroup) -> Result<Vec<SigmaData>, SpecError> {
        if embeddings.is_empty() {
            return Err(SpecError::at("/embeddings", ParameterError::NoSigmas));
        }
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut out = Vec::new();
        for (k, e) in embeddings.iter().enumerate() {
            let ptr = format!("/embeddings/{k}");
            for label in std::iter::once(&e.sigma).chain(&e.taus) {
                if !seen.insert(label) {
                    return Err(SpecError::at(ptr, ParameterError::DuplicateLabel(label.clone())));
                }
            }
            let bad = |reason: String| {
                SpecError::at(
                    format!("{ptr}/action"),
                    ParameterError::BadEmbeddingAction {
                        sigma: e.sigma.clone(),
                        reason,
                    },
                )
            };
            if e.taus.is_empty() {
                return Err(SpecError::at(format!("{ptr}/taus"), bad("no embeddings τ".into()).error));
            }
            if let Some(name) = e.action.keys().find(|g| gamma.index_of(g).is_none()) {
                return Err(SpecError::at(
                    format!("{ptr}/action/{}", pointer_token(name)),
                    ParameterError::UnknownGammaElement(name.clone()),
                ));
            }
            let mut action = Vec::with_capacity(gamma.order());
            for g in 0..gamma.order() {
                let perm: Vec<usize> = match e.action.get(gamma.name(g)) {
                    Some(images) => {
                        if images.len() != e.taus.len() {
                            return Err(bad(format!("`{}` must list {} images", gamma.name(g), e.taus.len())));
                        }
                        let mut perm = Vec::with_capacity(images.len());
                        for img in images {
                            match e.taus.iter().position(|t| t == img) {
                                Some(i) => perm.push(i),
                                None => return Err(bad(format!("`{img}` is not an embedding above this σ"))),
                            }
                        }
                        let distinct: BTreeSet<usize> = perm.iter().copied().collect();
                        if distinct.len() != perm.len() {
                            return Err(bad(format!("`{}` does not permute the embeddings", gamma.name(g))));
                        }
                        perm
                    }
                    None if g == gamma.identity() => (0..e.taus.len()).collect(),
                    None => return Err(bad(format!("no images given for `{}`", gamma.name(g)))),
                };
                action.push(perm);
            }
            if action[gamma.identity()] != (0..e.taus.len()).collect::<Vec<_>>() {
                return Err(bad("the identity must act trivially".into()));
            }
            for a in 0..gamma.order() {
                for b in 0..gamma.order() {
                    let ab = gamma.product(a, b);
                    if (0..e.taus.len()).any(|i| action[ab][i] != action[a][action[b][i]]) {
                        return Err(bad(format!(
                            "`{}`·`{}` does not act as the composite",
                            gamma.name(a),
                            gamma.name(b)
                        )));
                    }
                }
            }
            let orbit: BTreeSet<usize> = action.iter().map(|p| p[0]).collect();
            if e.taus.len() != gamma.order() || orbit.len() != gamma.order() {
                return Err(SpecError::at(
                    format!("{ptr}/taus"),
                    ParameterError::NotSimplyTransitive { sigma: e.sigma.clone() },
                ));
            }
            out.push(SigmaData {
                label: e.sigma.clone(),
                taus: e.taus.clone(),
                action,
            });
        }
        Ok(out)
    }

    fn check_gamma_compatibility(
        s: &SigmaData,
        gamma: &GammaGroup,
        sen: &BTreeMap<String, SenOperator>,
        (d, weyl): (&BasedRootDatum, &WeylGroup),
        field: Option<&std::sync::Arc<crate::scalar::NumberField>>,
    ) -> Result<(), SpecError> {
        let classes: Vec<Vec<Scalar>> = s
            .taus
            .iter()
            .map(|t| {
                sen[t]
                    .class_in(d, field)
                    .map_err(|e| SpecError::at(format!("/sen/{}", pointer_token(t)), e))
            })
            .collect::<Result<_, _>>()?;
        for g in 0..gamma.order() {
            for (i, tau) in s.taus.iter().enumerate() {
                let j = s.action[g][i];
                let moved = gamma.matrix(g).apply_scalar(&classes[i]);
                if !weyl.same_orbit(&moved, &classes[j]) {
                    return Err(SpecError::at(
                        format!("/sen/{}", pointer_token(&s.taus[j])),
                        ParameterError::GammaIncompatibleSenData {
                            sigma: s.label.clone(),
                            tau: tau.clone(),
                            gamma: gamma.name(g).to_string(),
                        },
                    ));
                }
            }
        }
        Ok(())
    }

    /// Re-validates the spec after direct edits, e.g. for negative controls.
    pub fn into_input(self) -> SpecInput {
        let embeddings = self
            .sigmas
            .iter()
            .map(|s| EmbeddingInput {
                sigma: s.label.clone(),
                taus: s.taus.clone(),
                action: (0..self.gamma.order())
                    .filter(|&g| g != self.gamma.identity())
                    .map(|g| {
                        (
                            self.gamma.name(g).to_string(),
                            s.action[g].iter().map(|&i| s.taus[i].clone()).collect(),
                        )
                    })
                    .collect(),
            })
            .collect();
        SpecInput {
            name: self.name,
            description: self.description,
            coefficients: self.coefficients,
            group: self.group,
            group_source: self.group_source,
            gamma: (!self.gamma.is_trivial()).then_some(self.gamma),
            embeddings,
            sen: self.sen,
            mode: self.mode,
            d_weight: self.d_weight,
            twisting: self.twisting,
        }
    }

    /// Evaluates the family variables in all Sen data and `d_weight`,
    /// landing over the base ring of the family.
    pub fn specialize(&self, assignment: &BTreeMap<String, Scalar>) -> Result<Self, SpecError> {
        let mut input = self.clone().into_input();
        for (tau, op) in input.sen.iter_mut() {
            *op = crate::sen::specialize(op, assignment)
                .map_err(|e| SpecError::at(format!("/sen/{}", pointer_token(tau)), e))?;
        }
        if let Some(w) = input.d_weight.as_mut() {
            *w = w.substitute(assignment).map_err(|e| SpecError::at("/d_weight", e))?;
        }
        input.coefficients = input.coefficients.base();
        Self::new(input)
    }

    /// Replaces Sen data without any validation. Only meant for building
    /// deliberately inconsistent specs in tests of the consistency checks.
    pub fn with_unchecked_sen(mut self, tau: &str, op: SenOperator) -> Self {
        self.sen.insert(tau.to_string(), op);
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn description(&self) -> Option<&str> {
        self.description.as_deref()
    }

    pub fn coefficients(&self) -> &CoefficientRing {
        &self.coefficients
    }

    pub fn group(&self) -> &BasedRootDatum {
        &self.group
    }

    pub fn group_source(&self) -> &GroupSource {
        &self.group_source
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn gamma(&self) -> &GammaGroup {
        &self.gamma
    }

    pub fn sigmas(&self) -> &[SigmaData] {
        &self.sigmas
    }

    pub fn sigma(&self, label: &str) -> Option<&SigmaData> {
        self.sigmas.iter().find(|s| s.label == label)
    }

    pub fn sen(&self, tau: &str) -> Option<&SenOperator> {
        self.sen.get(tau)
    }

    pub fn sen_data(&self) -> &BTreeMap<String, SenOperator> {
        &self.sen
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn d_weight(&self) -> Option<&Scalar> {
        self.d_weight.as_ref()
    }

    pub fn twisting(&self) -> Option<&[i64]> {
        self.twisting.as_deref()
    }
}

fn check_twisting(t: &[i64], d: &BasedRootDatum, gamma: &GammaGroup) -> Result<(), ParameterError> {
    if !d.is_twisting_element(t) {
        return Err(ParameterError::InvalidTwisting);
    }
    for g in 0..gamma.order() {
        if gamma.matrix(g).apply(t) != t {
            return Err(ParameterError::TwistingNotGammaInvariant {
                gamma: gamma.name(g).to_string(),
            });
        }
    }
    Ok(())
}

/// Builds and validates a spec from its file representation.
pub fn build_parameter_spec(raw: &RawParameterSpec) -> Result<GaloisParameterSpec, SpecError> {
    GaloisParameterSpec::new(raw.to_input()?)
}

/// The C-mode spec `tw_δ̃⁻¹ ∘ (ρ ⊠ χ_cyc)`: Sen classes are kept and the
/// shift by `δ − δ̃` is applied when characters are evaluated.
pub fn twist_to_c(spec: &GaloisParameterSpec, twisting: &[i64]) -> Result<GaloisParameterSpec, ParameterError> {
    if spec.mode != Mode::L {
        return Err(ParameterError::NotLMode);
    }
    if !spec.group.is_twisting_element(twisting) {
        return Err(if spec.group.find_twisting_element().is_none() {
            ParameterError::NoTwistingElement
        } else {
            ParameterError::InvalidTwisting
        });
    }
    check_twisting(twisting, &spec.group, &spec.gamma)?;
    let mut out = spec.clone();
    out.mode = Mode::C;
    out.d_weight = Some(Scalar::one());
    out.twisting = Some(twisting.to_vec());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sen::sen_from_ht_weights;

    fn flip() -> IntMatrix {
        IntMatrix::from_rows(&[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]]).unwrap()
    }

    fn a2_flip_input(second: &[i64]) -> SpecInput {
        let gamma = GammaGroup::new(
            vec!["1".into(), "c".into()],
            vec![IntMatrix::identity(3), flip()],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        let mut s = SpecInput::builtin(BuiltinFamily::GL, 3, vec![]).unwrap();
        s.gamma = Some(gamma);
        s.embeddings = vec![EmbeddingInput {
            sigma: "s".into(),
            taus: vec!["t0".into(), "t1".into()],
            action: BTreeMap::from([("c".to_string(), vec!["t1".to_string(), "t0".to_string()])]),
        }];
        s.sen = BTreeMap::from([
            ("t0".to_string(), sen_from_ht_weights(&[3, 1, 0])),
            ("t1".to_string(), sen_from_ht_weights(second)),
        ]);
        s
    }

    #[test]
    fn split_gl2_is_valid() {
        let s = SpecInput::builtin(BuiltinFamily::GL, 2, vec![("s".into(), sen_from_ht_weights(&[3, 0]))]).unwrap();
        let spec = GaloisParameterSpec::new(s).unwrap();
        assert_eq!(spec.sigmas().len(), 1);
        assert_eq!(spec.mode(), Mode::L);
    }

    #[test]
    fn gamma_compatibility() {
        assert!(GaloisParameterSpec::new(a2_flip_input(&[0, -1, -3])).is_ok());
        // any W-translate of the flipped class is accepted
        assert!(GaloisParameterSpec::new(a2_flip_input(&[-3, 0, -1])).is_ok());
        let err = GaloisParameterSpec::new(a2_flip_input(&[3, 1, 0])).unwrap_err();
        assert_eq!(err.pointer, "/sen/t1");
        assert!(matches!(
            err.error,
            ParameterError::GammaIncompatibleSenData { ref sigma, ref tau, ref gamma }
                if sigma == "s" && tau == "t0" && gamma == "c"
        ));
    }

    #[test]
    fn embedding_structure() {
        let mut s = a2_flip_input(&[0, -1, -3]);
        s.embeddings[0].taus.pop();
        assert!(GaloisParameterSpec::new(s).is_err());
        let mut s = a2_flip_input(&[0, -1, -3]);
        // c fixing everything is a valid action but not a simply transitive one
        s.embeddings[0].action.insert("c".into(), vec!["t0".into(), "t1".into()]);
        assert!(matches!(
            GaloisParameterSpec::new(s).unwrap_err().error,
            ParameterError::NotSimplyTransitive { .. }
        ));
    }

    #[test]
    fn cyclotomic_constraint() {
        let mut s = SpecInput::builtin(BuiltinFamily::GL, 2, vec![("s".into(), sen_from_ht_weights(&[3, 0]))]).unwrap();
        s.mode = Mode::C;
        let err = GaloisParameterSpec::new(s.clone()).unwrap_err();
        assert_eq!(err.error, ParameterError::MissingCyclotomicConstraint);
        assert_eq!(err.pointer, "/d_weight");
        s.d_weight = Some(Scalar::from_int(2));
        assert!(GaloisParameterSpec::new(s.clone()).is_err());
        s.d_weight = Some(Scalar::one());
        assert!(GaloisParameterSpec::new(s).is_ok());
    }

    #[test]
    fn twisting() {
        let gl2 = GaloisParameterSpec::new(
            SpecInput::builtin(BuiltinFamily::GL, 2, vec![("s".into(), sen_from_ht_weights(&[3, 0]))]).unwrap(),
        )
        .unwrap();
        let c = twist_to_c(&gl2, &[1, 0]).unwrap();
        assert_eq!(c.mode(), Mode::C);
        assert_eq!(c.d_weight(), Some(&Scalar::one()));
        assert_eq!(c.sen_data(), gl2.sen_data());
        assert_eq!(twist_to_c(&gl2, &[1, 1]).unwrap_err(), ParameterError::InvalidTwisting);
        assert_eq!(twist_to_c(&c, &[1, 0]).unwrap_err(), ParameterError::NotLMode);

        let gl3 = GaloisParameterSpec::new(
            SpecInput::builtin(BuiltinFamily::GL, 3, vec![("s".into(), sen_from_ht_weights(&[2, 1, 0]))]).unwrap(),
        )
        .unwrap();
        assert!(twist_to_c(&gl3, &[0, -1, -2]).is_ok());

        let pgl2 = GaloisParameterSpec::new(
            SpecInput::builtin(BuiltinFamily::PGL, 2, vec![("s".into(), sen_from_ht_weights(&[1]))]).unwrap(),
        )
        .unwrap();
        for t in -3..=3 {
            assert!(twist_to_c(&pgl2, &[t]).is_err());
        }

        // on GL3 with the flip, (0,−1,−2) is moved to (2,1,0)
        let flipped = GaloisParameterSpec::new(a2_flip_input(&[0, -1, -3])).unwrap();
        assert_eq!(
            twist_to_c(&flipped, &[0, -1, -2]).unwrap_err(),
            ParameterError::TwistingNotGammaInvariant { gamma: "c".into() }
        );
        assert!(twist_to_c(&flipped, &[1, 0, -1]).is_ok());
    }

    #[test]
    fn group_tables() {
        let m = IntMatrix::identity(1);
        assert!(GammaGroup::new(vec!["a".into(), "b".into()], vec![m.clone(), m.clone()], vec![vec![0, 0], vec![0, 0]]).is_err());
        let neg = IntMatrix::from_rows(&[vec![-1]]).unwrap();
        // the action need not be faithful
        assert!(matches!(
            GammaGroup::new(vec!["1".into(), "c".into()], vec![m.clone(), m.clone()], vec![vec![0, 1], vec![1, 0]]),
            Ok(_)
        ));
        assert!(matches!(
            GammaGroup::new(vec!["1".into(), "c".into()], vec![neg.clone(), neg], vec![vec![0, 1], vec![1, 0]]),
            Err(ParameterError::ActionNotHomomorphism { .. })
        ));
    }
}

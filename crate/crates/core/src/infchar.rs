//! Infinitesimal characters of parameters.
//!
//! For an embedding `σ` the character `ζ_{ρ,σ}` is the `W`-orbit of an
//! evaluation point in `t̂ ⊗ K` built from the Sen class at any `τ` above
//! `σ`:
//!
//! * L mode: the class itself (the `δ`-normalization of the Harish-Chandra
//!   map and the `λ + δ` convention cancel);
//! * C mode with a recorded twisting element: `class − δ̃ + δ`;
//! * C mode without one: `class + δ`, with the class taken literally.
//!
//! `δ − δ̃` pairs to zero with every coroot, so the first two shifts commute
//! with `W`. The third does not, which is why the class is then read as a
//! specific vector rather than an orbit.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::invariants::{characters_equal_with, inf_char_of_highest_weight, match_algebraic, InfinitesimalCharacter, InvariantsError};
use crate::par::{self, Strategy};
use crate::parameters::{GaloisParameterSpec, Mode, SigmaData};
use crate::rootdata::Weight;
use crate::scalar::{RingError, Scalar};
use crate::sen::{is_hodge_tate_in, HodgeTateVerdict, SenError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InfCharError {
    #[error("Sen data at `{tau}`: {error}")]
    Sen { tau: String, error: SenError },
    #[error("characters from `{tau}` and from the first embedding above `{sigma}` differ")]
    TauIndependenceViolated { sigma: String, tau: String },
    #[error("unknown embedding σ `{0}`")]
    UnknownSigma(String),
    #[error("unknown embedding τ `{0}`")]
    UnknownTau(String),
    #[error("not Hodge-Tate at `{tau}`: {reason}")]
    NotHodgeTate { tau: String, reason: String },
    #[error("not regular at `{tau}`")]
    NotRegular { tau: String },
    #[error("the round trip needs a C-mode spec")]
    NotCMode,
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

fn sigma_of<'a>(spec: &'a GaloisParameterSpec, label: &str) -> Result<&'a SigmaData, InfCharError> {
    spec.sigma(label).ok_or_else(|| InfCharError::UnknownSigma(label.to_string()))
}

fn class_at(spec: &GaloisParameterSpec, tau: &str) -> Result<Vec<Scalar>, InfCharError> {
    let op = spec.sen(tau).ok_or_else(|| InfCharError::UnknownTau(tau.to_string()))?;
    op.class_in(spec.group(), spec.coefficients().field()).map_err(|error| InfCharError::Sen {
        tau: tau.to_string(),
        error,
    })
}

fn to_scalars(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}

fn weight_scalars(w: &Weight) -> Vec<Scalar> {
    w.0.iter().cloned().map(Scalar::from_rational).collect()
}

/// The mode-dependent shift taking a Sen class to the evaluation point.
pub fn evaluation_point(spec: &GaloisParameterSpec, class: &[Scalar]) -> Vec<Scalar> {
    let delta = weight_scalars(&spec.group().half_sum_positive_roots());
    match (spec.mode(), spec.twisting()) {
        (Mode::L, _) => class.to_vec(),
        (Mode::C, Some(t)) => class
            .iter()
            .zip(to_scalars(t))
            .zip(&delta)
            .map(|((x, t), d)| x - &t + d)
            .collect(),
        (Mode::C, None) => class.iter().zip(&delta).map(|(x, d)| x + d).collect(),
    }
}

/// The evaluation point computed from `τ_i`, moved back to `τ_0` by the
/// `γ` with `γ·τ_0 = τ_i`.
pub fn point_from_tau(spec: &GaloisParameterSpec, sigma: &SigmaData, i: usize) -> Result<Vec<Scalar>, InfCharError> {
    let class = class_at(spec, &sigma.taus[i])?;
    let g = sigma.gamma_from_reference(i);
    let corrected = spec.gamma().inverse_matrix(g).apply_scalar(&class);
    Ok(evaluation_point(spec, &corrected))
}

/// Outcome of comparing the characters obtained from every `τ` above `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauIndependence {
    pub independent: bool,
    /// The first `τ` whose character differs from the one at `τ_0`.
    pub witness: Option<String>,
}

pub fn verify_tau_independence(spec: &GaloisParameterSpec, sigma: &str) -> Result<TauIndependence, InfCharError> {
    verify_tau_independence_with(spec, sigma, Strategy::default())
}

pub fn verify_tau_independence_with(
    spec: &GaloisParameterSpec,
    sigma: &str,
    strategy: Strategy,
) -> Result<TauIndependence, InfCharError> {
    let s = sigma_of(spec, sigma)?;
    let reference = InfinitesimalCharacter::new(point_from_tau(spec, s, 0)?);
    for i in 1..s.taus.len() {
        let other = InfinitesimalCharacter::new(point_from_tau(spec, s, i)?);
        if !characters_equal_with(&reference, &other, spec.weyl(), strategy) {
            return Ok(TauIndependence {
                independent: false,
                witness: Some(s.taus[i].clone()),
            });
        }
    }
    Ok(TauIndependence {
        independent: true,
        witness: None,
    })
}

/// `ζ_{ρ,σ}`, checked against every `τ` above `σ`.
pub fn zeta_sigma(spec: &GaloisParameterSpec, sigma: &str) -> Result<InfinitesimalCharacter, InfCharError> {
    zeta_sigma_with(spec, sigma, Strategy::default())
}

pub fn zeta_sigma_with(
    spec: &GaloisParameterSpec,
    sigma: &str,
    strategy: Strategy,
) -> Result<InfinitesimalCharacter, InfCharError> {
    let s = sigma_of(spec, sigma)?;
    let check = verify_tau_independence_with(spec, sigma, strategy)?;
    if let Some(tau) = check.witness {
        return Err(InfCharError::TauIndependenceViolated {
            sigma: sigma.to_string(),
            tau,
        });
    }
    Ok(InfinitesimalCharacter::new(point_from_tau(spec, s, 0)?))
}

/// `ζ_ρ = ⊗_σ ζ_{ρ,σ}`, represented by the tuple of factors in `σ` order.
pub fn zeta_global(spec: &GaloisParameterSpec) -> Result<Vec<(String, InfinitesimalCharacter)>, InfCharError> {
    zeta_global_with(spec, Strategy::default())
}

pub fn zeta_global_with(
    spec: &GaloisParameterSpec,
    strategy: Strategy,
) -> Result<Vec<(String, InfinitesimalCharacter)>, InfCharError> {
    // the orbit searches inside each factor run sequentially; the factors are the parallel unit
    let results = par::map(spec.sigmas(), strategy, |s| {
        zeta_sigma_with(spec, &s.label, Strategy::Sequential).map(|z| (s.label.clone(), z))
    });
    results.into_iter().collect()
}

/// Substitutes family variables into a character's representative.
pub fn specialize_character(
    chi: &InfinitesimalCharacter,
    assignment: &BTreeMap<String, Scalar>,
) -> Result<InfinitesimalCharacter, InfCharError> {
    let point = chi
        .point()
        .iter()
        .map(|x| x.substitute(assignment))
        .collect::<Result<_, _>>()?;
    Ok(InfinitesimalCharacter::new(point))
}

/// The Hodge-Tate cocharacter `ν` at `τ` (before any shift), as the class itself.
pub fn ht_cocharacter(spec: &GaloisParameterSpec, tau: &str) -> Result<Weight, InfCharError> {
    let op = spec.sen(tau).ok_or_else(|| InfCharError::UnknownTau(tau.to_string()))?;
    let HodgeTateVerdict { hodge_tate, reason } = is_hodge_tate_in(op, spec.coefficients().field());
    if !hodge_tate {
        return Err(InfCharError::NotHodgeTate {
            tau: tau.to_string(),
            reason: reason.unwrap_or_default(),
        });
    }
    let class = class_at(spec, tau)?;
    Ok(Weight(class.iter().map(|x| x.to_rational().expect("integral")).collect()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regularity {
    /// Some `λ ∈ W·ν` has `λ − δ̃` dominant (`λ` dominant without a twisting element).
    pub dominant: bool,
    /// The evaluation point has trivial stabilizer in `W`.
    pub strict: bool,
    /// The dominant element `λ_τ` of `W·ν`.
    pub lambda: Weight,
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        self.dominant && self.strict
    }
}

pub fn regularity_at(spec: &GaloisParameterSpec, tau: &str) -> Result<Regularity, InfCharError> {
    let nu = ht_cocharacter(spec, tau)?;
    let d = spec.group();
    // λ − δ̃ dominant forces λ itself to be dominant, so only the dominant
    // element of the orbit can qualify
    let (lambda, _) = d.dominant_representative(&nu);
    let dominant = match spec.twisting() {
        Some(t) => d.is_dominant(&lambda.sub(&Weight::from_ints(t))),
        None => true,
    };
    let point = evaluation_point(spec, &weight_scalars(&nu));
    let strict = spec.weyl().stabilizer_order(&point) == 1;
    Ok(Regularity { dominant, strict, lambda })
}

/// Regularity at every `τ`, in spec order.
pub fn is_regular(spec: &GaloisParameterSpec) -> Result<Vec<(String, Regularity)>, InfCharError> {
    spec.sigmas()
        .iter()
        .flat_map(|s| &s.taus)
        .map(|t| regularity_at(spec, t).map(|r| (t.clone(), r)))
        .collect()
}

/// `π_alg(ρ)`: per `σ` the highest weight `λ_τ − δ̃` (or `λ_τ`) at the first `τ`.
pub fn pi_alg(spec: &GaloisParameterSpec) -> Result<Vec<(String, Weight)>, InfCharError> {
    spec.sigmas()
        .iter()
        .map(|s| {
            let tau = &s.taus[0];
            let r = regularity_at(spec, tau)?;
            if !r.is_regular() {
                return Err(InfCharError::NotRegular { tau: tau.clone() });
            }
            let pi = match spec.twisting() {
                Some(t) => r.lambda.sub(&Weight::from_ints(t)),
                None => r.lambda,
            };
            Ok((s.label.clone(), pi))
        })
        .collect()
}

/// True iff every `ζ^C_{ρ,σ}` is the character of `π_alg(ρ)_σ`.
pub fn verify_inf_ht_roundtrip(spec: &GaloisParameterSpec) -> Result<bool, InfCharError> {
    if spec.mode() != Mode::C {
        return Err(InfCharError::NotCMode);
    }
    for (sigma, pi) in pi_alg(spec)? {
        let zeta = zeta_sigma(spec, &sigma)?;
        let expected = inf_char_of_highest_weight(&pi, spec.group())?;
        if !characters_equal_with(&zeta, &expected, spec.weyl(), Strategy::default()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone)]
pub struct SigmaReport {
    pub sigma: String,
    pub character: InfinitesimalCharacter,
    pub dominant_representative: Option<Weight>,
    pub algebraic_match: Option<Weight>,
    pub taus: Vec<String>,
    pub tau_independence: TauIndependence,
}

#[derive(Debug, Clone)]
pub struct TauReport {
    pub tau: String,
    pub hodge_tate: HodgeTateVerdict,
    pub nu: Option<Weight>,
    pub regularity: Option<Regularity>,
}

/// Everything computed for a spec. Fields that could not be computed are
/// `None`; `error` holds the first computation error, if any.
#[derive(Debug, Clone)]
pub struct ZetaReport {
    pub sigmas: Vec<SigmaReport>,
    pub tau_independence: bool,
    /// `None` over family rings, where integrality is not decided.
    pub hodge_tate: Option<bool>,
    pub taus: Vec<TauReport>,
    pub regular: Option<bool>,
    pub pi_alg: Option<Vec<(String, Weight)>>,
    pub roundtrip: Option<bool>,
    pub error: Option<InfCharError>,
}

impl ZetaReport {
    fn fail(&mut self, e: InfCharError) {
        if self.error.is_none() {
            self.error = Some(e);
        }
    }
}

/// Runs the whole pipeline, collecting a partial report on failure.
pub fn compute_report(spec: &GaloisParameterSpec) -> ZetaReport {
    compute_report_with(spec, Strategy::default())
}

pub fn compute_report_with(spec: &GaloisParameterSpec, strategy: Strategy) -> ZetaReport {
    let mut report = ZetaReport {
        sigmas: Vec::new(),
        tau_independence: true,
        hodge_tate: None,
        taus: Vec::new(),
        regular: None,
        pi_alg: None,
        roundtrip: None,
        error: None,
    };
    let family = spec.coefficients().is_family();
    let d = spec.group();

    let per_sigma = par::map(spec.sigmas(), strategy, |s| -> Result<SigmaReport, InfCharError> {
        let check = verify_tau_independence_with(spec, &s.label, Strategy::Sequential)?;
        let character = InfinitesimalCharacter::new(point_from_tau(spec, s, 0)?);
        let (dominant_representative, algebraic_match) = if family {
            (None, None)
        } else {
            (character.dominant_representative(d), match_algebraic(&character, d))
        };
        Ok(SigmaReport {
            sigma: s.label.clone(),
            character,
            dominant_representative,
            algebraic_match,
            taus: s.taus.clone(),
            tau_independence: check,
        })
    });
    for r in per_sigma {
        match r {
            Ok(s) => {
                report.tau_independence &= s.tau_independence.independent;
                if let Some(tau) = &s.tau_independence.witness {
                    report.fail(InfCharError::TauIndependenceViolated {
                        sigma: s.sigma.clone(),
                        tau: tau.clone(),
                    });
                }
                report.sigmas.push(s);
            }
            Err(e) => report.fail(e),
        }
    }
    if family {
        return report;
    }

    let mut all_ht = true;
    let mut all_regular = true;
    for s in spec.sigmas() {
        for tau in &s.taus {
            let verdict = is_hodge_tate_in(spec.sen(tau).expect("validated"), spec.coefficients().field());
            let mut t = TauReport {
                tau: tau.clone(),
                hodge_tate: verdict.clone(),
                nu: None,
                regularity: None,
            };
            if verdict.hodge_tate {
                match regularity_at(spec, tau) {
                    Ok(r) => {
                        all_regular &= r.is_regular();
                        t.nu = ht_cocharacter(spec, tau).ok();
                        t.regularity = Some(r);
                    }
                    Err(e) => report.fail(e),
                }
            } else {
                all_ht = false;
                report.fail(InfCharError::NotHodgeTate {
                    tau: tau.clone(),
                    reason: verdict.reason.clone().unwrap_or_default(),
                });
            }
            report.taus.push(t);
        }
    }
    report.hodge_tate = Some(all_ht);
    if !all_ht || report.error.is_some() {
        return report;
    }
    report.regular = Some(all_regular);
    if all_regular {
        match pi_alg(spec) {
            Ok(p) => report.pi_alg = Some(p),
            Err(e) => report.fail(e),
        }
        if spec.mode() == Mode::C {
            match verify_inf_ht_roundtrip(spec) {
                Ok(b) => report.roundtrip = Some(b),
                Err(e) => report.fail(e),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{IntMatrix, ScalarMatrix};
    use crate::parameters::{twist_to_c, EmbeddingInput, GammaGroup, SpecInput};
    use crate::rootdata::BuiltinFamily;
    use crate::sen::{sen_from_ht_weights, SenOperator};

    fn gl(n: usize, classes: &[&[i64]]) -> GaloisParameterSpec {
        let sigmas = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("s{i}"), sen_from_ht_weights(c)))
            .collect();
        GaloisParameterSpec::new(SpecInput::builtin(BuiltinFamily::GL, n, sigmas).unwrap()).unwrap()
    }

    fn pt(v: &[(i64, i64)]) -> Vec<Scalar> {
        v.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect()
    }

    #[test]
    fn gl2_l_and_c() {
        let l = gl(2, &[&[3, 0]]);
        let z = zeta_sigma(&l, "s0").unwrap();
        assert_eq!(z.point(), to_scalars(&[3, 0]).as_slice());
        assert_eq!(match_algebraic(&z, l.group()), None);

        let c = twist_to_c(&l, &[1, 0]).unwrap();
        let z = zeta_sigma(&c, "s0").unwrap();
        assert_eq!(z.point(), pt(&[(5, 2), (-1, 2)]).as_slice());
        assert_eq!(match_algebraic(&z, c.group()), Some(Weight::from_ints(&[2, 0])));
        assert_eq!(pi_alg(&c).unwrap(), vec![("s0".to_string(), Weight::from_ints(&[2, 0]))]);
        assert!(verify_inf_ht_roundtrip(&c).unwrap());

        // class = δ̃ gives the trivial representation
        let c = twist_to_c(&gl(2, &[&[1, 0]]), &[1, 0]).unwrap();
        let z = zeta_sigma(&c, "s0").unwrap();
        assert_eq!(z.point(), pt(&[(1, 2), (-1, 2)]).as_slice());
        assert_eq!(pi_alg(&c).unwrap()[0].1, Weight::from_ints(&[0, 0]));
    }

    #[test]
    fn gl3_det_squared() {
        let c = twist_to_c(&gl(3, &[&[2, 1, 0]]), &[0, -1, -2]).unwrap();
        assert_eq!(pi_alg(&c).unwrap()[0].1, Weight::from_ints(&[2, 2, 2]));
        assert!(verify_inf_ht_roundtrip(&c).unwrap());
    }

    #[test]
    fn two_sigmas() {
        let spec = gl(2, &[&[3, 0], &[2, 1]]);
        let z = zeta_global(&spec).unwrap();
        assert_eq!(z.len(), 2);
        assert_eq!(z[1].1.point(), to_scalars(&[2, 1]).as_slice());
        assert_eq!(zeta_global_with(&spec, Strategy::Sequential).unwrap(), z);
    }

    #[test]
    fn regularity() {
        let twisted = |c: &[i64]| twist_to_c(&gl(2, &[c]), &[1, 0]).unwrap();
        assert!(!regularity_at(&twisted(&[1, 1]), "s0.0").unwrap().is_regular());
        assert!(regularity_at(&twisted(&[3, 0]), "s0.0").unwrap().is_regular());
        assert!(regularity_at(&twisted(&[0, 3]), "s0.0").unwrap().is_regular());
        assert!(matches!(pi_alg(&twisted(&[1, 1])), Err(InfCharError::NotRegular { .. })));
        assert!(matches!(verify_inf_ht_roundtrip(&twisted(&[2, 2])), Err(InfCharError::NotRegular { .. })));
    }

    #[test]
    fn hodge_tate_cocharacters() {
        assert_eq!(ht_cocharacter(&gl(2, &[&[3, 0]]), "s0.0").unwrap(), Weight::from_ints(&[3, 0]));
        let nil = ScalarMatrix::from_rows(vec![to_scalars(&[0, 1]), to_scalars(&[0, 0])]).unwrap();
        let s = SpecInput::builtin(BuiltinFamily::GL, 2, vec![("s".into(), SenOperator::Matrix(nil))]).unwrap();
        let spec = GaloisParameterSpec::new(s).unwrap();
        assert!(matches!(ht_cocharacter(&spec, "s.0"), Err(InfCharError::NotHodgeTate { .. })));
        let report = compute_report(&spec);
        assert_eq!(report.hodge_tate, Some(false));
        assert!(report.error.is_some());
    }

    fn flip_spec(second: &[i64]) -> GaloisParameterSpec {
        let flip = IntMatrix::from_rows(&[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]]).unwrap();
        let gamma = GammaGroup::new(vec!["1".into(), "c".into()], vec![IntMatrix::identity(3), flip], vec![vec![0, 1], vec![1, 0]]).unwrap();
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
        GaloisParameterSpec::new(s).unwrap()
    }

    #[test]
    fn tau_independence() {
        let spec = flip_spec(&[0, -1, -3]);
        assert!(verify_tau_independence(&spec, "s").unwrap().independent);
        let s = spec.sigma("s").unwrap();
        let a = InfinitesimalCharacter::new(point_from_tau(&spec, s, 0).unwrap());
        let b = InfinitesimalCharacter::new(point_from_tau(&spec, s, 1).unwrap());
        assert!(crate::invariants::characters_equal(&a, &b, spec.weyl()));

        let corrupted = spec.with_unchecked_sen("t1", sen_from_ht_weights(&[3, 1, 0]));
        let v = verify_tau_independence(&corrupted, "s").unwrap();
        assert_eq!(v.witness.as_deref(), Some("t1"));
        assert!(matches!(zeta_sigma(&corrupted, "s"), Err(InfCharError::TauIndependenceViolated { .. })));
        assert!(!compute_report(&corrupted).tau_independence);
    }

    #[test]
    fn report_consistency() {
        let c = twist_to_c(&gl(2, &[&[5, 1]]), &[1, 0]).unwrap();
        let r = compute_report(&c);
        assert!(r.error.is_none());
        assert_eq!(r.roundtrip, Some(true));
        let s = &r.sigmas[0];
        let lambda = s.algebraic_match.clone().unwrap();
        let chi = inf_char_of_highest_weight(&lambda, c.group()).unwrap();
        assert!(crate::invariants::characters_equal(&chi, &s.character, c.weyl()));
    }
}

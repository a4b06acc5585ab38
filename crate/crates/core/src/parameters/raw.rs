//! The JSON file representation of a parameter spec.
//!
//! Mathematical values (scalars, root coordinates, matrix entries) are
//! strings; structural integers (rank, `n`, simple-root indices, group
//! table entries) are JSON integers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linalg::{IntMatrix, ScalarMatrix};
use crate::rootdata::{builtin_datum, BasedRootDatum, BuiltinFamily, RootDatum};
use crate::scalar::{CoefficientRing, Scalar};
use crate::sen::SenOperator;

use super::{
    pointer_token, EmbeddingInput, GaloisParameterSpec, GammaGroup, GroupSource, Mode, ParameterError, SpecError,
    SpecInput,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawParameterSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default)]
    pub coefficients: RawCoefficients,
    pub group: RawGroup,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<RawGamma>,
    pub embeddings: Vec<RawEmbedding>,
    pub sen: BTreeMap<String, RawSen>,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_weight: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twisting_element: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RawCoefficients {
    Rationals {},
    NumberField {
        generator: String,
        min_poly: String,
    },
    Family {
        variables: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<Box<RawCoefficients>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBuiltin {
    pub family: String,
    pub n: usize,
}

/// Either `{"builtin": …}` or an explicit datum.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGroup {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<RawBuiltin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coroots: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGammaElement {
    pub name: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGamma {
    pub elements: Vec<RawGammaElement>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawEmbedding {
    pub sigma: String,
    pub taus: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub action: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSen {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

impl Default for RawCoefficients {
    fn default() -> Self {
        RawCoefficients::Rationals {}
    }
}

fn parse_int(text: &str, pointer: &str) -> Result<i64, SpecError> {
    let x = CoefficientRing::Rationals
        .parse(text)
        .map_err(|e| SpecError::at(pointer, e))?;
    x.to_integer()
        .and_then(|n| i64::try_from(n).ok())
        .ok_or_else(|| SpecError::at(pointer, ParameterError::NotAnInteger(text.to_string())))
}

fn parse_int_rows(rows: &[Vec<String>], pointer: &str) -> Result<Vec<Vec<i64>>, SpecError> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| parse_int(x, &format!("{pointer}/{i}/{j}")))
                .collect()
        })
        .collect()
}

fn int_rows_to_strings(rows: &[Vec<i64>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(i64::to_string).collect()).collect()
}

impl RawCoefficients {
    pub fn to_ring(&self, pointer: &str) -> Result<CoefficientRing, SpecError> {
        match self {
            RawCoefficients::Rationals {} => Ok(CoefficientRing::Rationals),
            RawCoefficients::NumberField { generator, min_poly } => CoefficientRing::number_field(generator, min_poly)
                .map_err(|e| SpecError::at(format!("{pointer}/min_poly"), e)),
            RawCoefficients::Family { variables, base } => {
                let base = match base {
                    Some(b) => b.to_ring(&format!("{pointer}/base"))?,
                    None => CoefficientRing::Rationals,
                };
                CoefficientRing::family(base, variables.clone()).map_err(|e| SpecError::at(format!("{pointer}/variables"), e))
            }
        }
    }

    pub fn from_ring(ring: &CoefficientRing) -> Self {
        match ring {
            CoefficientRing::Rationals => RawCoefficients::Rationals {},
            CoefficientRing::NumberField(f) => RawCoefficients::NumberField {
                generator: f.generator().to_string(),
                min_poly: f.min_poly_text(),
            },
            CoefficientRing::Family { base, variables } => RawCoefficients::Family {
                variables: variables.clone(),
                base: base.as_ref().map(|f| {
                    Box::new(RawCoefficients::NumberField {
                        generator: f.generator().to_string(),
                        min_poly: f.min_poly_text(),
                    })
                }),
            },
        }
    }
}

impl RawGroup {
    pub fn to_datum(&self) -> Result<(BasedRootDatum, GroupSource), SpecError> {
        let explicit = self.rank.is_some() || self.roots.is_some() || self.coroots.is_some() || self.simple.is_some();
        match (&self.builtin, explicit) {
            (Some(b), false) => {
                let family: BuiltinFamily = b.family.parse().map_err(|e| SpecError::at("/group/builtin/family", e))?;
                let d = builtin_datum(family, b.n).map_err(|e| SpecError::at("/group/builtin/n", e))?;
                Ok((d, GroupSource::Builtin(family, b.n)))
            }
            (None, true) => {
                let missing = |k: &str| SpecError::at("/group", ParameterError::InvalidGroup(format!("missing `{k}`")));
                let rank = self.rank.ok_or_else(|| missing("rank"))?;
                let roots = parse_int_rows(self.roots.as_ref().ok_or_else(|| missing("roots"))?, "/group/roots")?;
                let coroots = parse_int_rows(self.coroots.as_ref().ok_or_else(|| missing("coroots"))?, "/group/coroots")?;
                let simple = self.simple.clone().ok_or_else(|| missing("simple"))?;
                let datum = RootDatum::new(rank, roots, coroots).map_err(|e| SpecError::at("/group", e))?;
                let d = BasedRootDatum::new(datum, simple).map_err(|e| SpecError::at("/group/simple", e))?;
                Ok((d, GroupSource::Explicit))
            }
            _ => Err(SpecError::at(
                "/group",
                ParameterError::InvalidGroup("give either `builtin` or `rank`, `roots`, `coroots`, `simple`".into()),
            )),
        }
    }

    pub fn from_datum(d: &BasedRootDatum, source: &GroupSource) -> Self {
        match source {
            GroupSource::Builtin(family, n) => RawGroup {
                builtin: Some(RawBuiltin {
                    family: family.to_string(),
                    n: *n,
                }),
                ..Default::default()
            },
            GroupSource::Explicit => {
                let raw = d.to_raw();
                RawGroup {
                    builtin: None,
                    rank: Some(raw.rank),
                    roots: Some(int_rows_to_strings(&raw.roots)),
                    coroots: Some(int_rows_to_strings(&raw.coroots)),
                    simple: Some(raw.simple),
                }
            }
        }
    }
}

impl RawSen {
    pub fn to_operator(&self, ring: &CoefficientRing, pointer: &str) -> Result<SenOperator, SpecError> {
        let scalar = |text: &str, ptr: String| ring.parse(text).map_err(|e| SpecError::at(ptr, e));
        match (&self.eigenvalues, &self.matrix) {
            (Some(v), None) => Ok(SenOperator::Class(
                v.iter()
                    .enumerate()
                    .map(|(i, x)| scalar(x, format!("{pointer}/eigenvalues/{i}")))
                    .collect::<Result<_, _>>()?,
            )),
            (None, Some(rows)) => {
                let entries: Vec<Vec<Scalar>> = rows
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(j, x)| scalar(x, format!("{pointer}/matrix/{i}/{j}")))
                            .collect::<Result<_, _>>()
                    })
                    .collect::<Result<_, _>>()?;
                let found = entries.iter().map(Vec::len).find(|&l| l != entries.len());
                match ScalarMatrix::from_rows(entries.clone()) {
                    Some(m) if found.is_none() => Ok(SenOperator::Matrix(m)),
                    _ => Err(SpecError::at(
                        format!("{pointer}/matrix"),
                        ParameterError::SenShape {
                            what: "each matrix row".into(),
                            expected: entries.len(),
                            found: found.unwrap_or(0),
                        },
                    )),
                }
            }
            _ => Err(SpecError::at(pointer, ParameterError::SenForm)),
        }
    }

    pub fn from_operator(op: &SenOperator) -> Self {
        let strings = |v: &[Scalar]| v.iter().map(Scalar::to_string).collect();
        match op {
            SenOperator::Class(v) => RawSen {
                eigenvalues: Some(strings(v)),
                matrix: None,
            },
            SenOperator::Matrix(m) => RawSen {
                eigenvalues: None,
                matrix: Some(m.to_rows().iter().map(|r| strings(r)).collect()),
            },
        }
    }
}

impl RawParameterSpec {
    pub fn to_input(&self) -> Result<SpecInput, SpecError> {
        let ring = self.coefficients.to_ring("/coefficients")?;
        let (group, group_source) = self.group.to_datum()?;
        let gamma = match &self.gamma {
            None => None,
            Some(g) => {
                let names = g.elements.iter().map(|e| e.name.clone()).collect();
                let mut matrices = Vec::with_capacity(g.elements.len());
                for (k, e) in g.elements.iter().enumerate() {
                    let ptr = format!("/gamma/elements/{k}/matrix");
                    let rows = parse_int_rows(&e.matrix, &ptr)?;
                    let m = IntMatrix::from_rows(&rows).ok_or_else(|| {
                        SpecError::at(&ptr, ParameterError::InvalidGroup("ragged matrix".into()))
                    })?;
                    matrices.push(m);
                }
                Some(GammaGroup::new(names, matrices, g.table.clone()).map_err(|e| SpecError::at("/gamma", e))?)
            }
        };
        let embeddings = self
            .embeddings
            .iter()
            .map(|e| EmbeddingInput {
                sigma: e.sigma.clone(),
                taus: e.taus.clone(),
                action: e.action.clone(),
            })
            .collect();
        let sen = self
            .sen
            .iter()
            .map(|(tau, s)| Ok((tau.clone(), s.to_operator(&ring, &format!("/sen/{}", pointer_token(tau)))?)))
            .collect::<Result<_, SpecError>>()?;
        let d_weight = self
            .d_weight
            .as_deref()
            .map(|t| ring.parse(t).map_err(|e| SpecError::at("/d_weight", e)))
            .transpose()?;
        let twisting = self
            .twisting_element
            .as_ref()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .map(|(i, x)| parse_int(x, &format!("/twisting_element/{i}")))
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()?;
        Ok(SpecInput {
            name: self.name.clone(),
            description: self.description.clone(),
            coefficients: ring,
            group,
            group_source,
            gamma,
            embeddings,
            sen,
            mode: self.mode,
            d_weight,
            twisting,
        })
    }
}

impl GaloisParameterSpec {
    pub fn to_raw(&self) -> RawParameterSpec {
        let g = self.gamma();
        let gamma = (!g.is_trivial()).then(|| RawGamma {
            elements: (0..g.order())
                .map(|k| RawGammaElement {
                    name: g.name(k).to_string(),
                    matrix: int_rows_to_strings(&g.matrix(k).to_rows()),
                })
                .collect(),
            table: g.table().to_vec(),
        });
        let embeddings = self
            .sigmas()
            .iter()
            .map(|s| RawEmbedding {
                sigma: s.label.clone(),
                taus: s.taus.clone(),
                action: (0..g.order())
                    .filter(|&k| k != g.identity())
                    .map(|k| (g.name(k).to_string(), s.action[k].iter().map(|&i| s.taus[i].clone()).collect()))
                    .collect(),
            })
            .collect();
        RawParameterSpec {
            name: self.name().map(str::to_string),
            description: self.description().map(str::to_string),
            coefficients: RawCoefficients::from_ring(self.coefficients()),
            group: RawGroup::from_datum(self.group(), self.group_source()),
            gamma,
            embeddings,
            sen: self.sen_data().iter().map(|(t, op)| (t.clone(), RawSen::from_operator(op))).collect(),
            mode: self.mode(),
            d_weight: self.d_weight().map(Scalar::to_string),
            twisting_element: self.twisting().map(|t| t.iter().map(i64::to_string).collect()),
        }
    }
}

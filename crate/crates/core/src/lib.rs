//! Exact infinitesimal characters attached to L- and C-parameters.
//!
//! The crate works entirely with combinatorial and exact data: based root
//! data in fixed integer coordinates, semisimple Sen classes over exact
//! coefficient rings, and Weyl-group orbits realizing characters of the
//! center of the enveloping algebra through the Harish-Chandra isomorphism.

pub mod infchar;
pub mod invariants;
pub mod linalg;
pub mod par;
pub mod parameters;
pub mod rootdata;
pub mod scalar;
pub mod sen;
pub mod upoly;

pub use par::Strategy;
pub use rootdata::{BasedRootDatum, PinnedAutomorphism, RootDatum, Weight, WeylGroup};
pub use scalar::{CoefficientRing, NumberField, Scalar};
pub use infchar::{compute_report, InfCharError, ZetaReport};
pub use invariants::{InfinitesimalCharacter, InvariantsError};
pub use parameters::{build_parameter_spec, GaloisParameterSpec, Mode, ParameterError, RawParameterSpec, SpecError};
pub use sen::{SenError, SenOperator};

/// Any error raised by the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    RootData(#[from] rootdata::RootDataError),
    #[error(transparent)]
    Ring(#[from] scalar::RingError),
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
    #[error(transparent)]
    Sen(#[from] SenError),
    #[error(transparent)]
    Parameter(#[from] ParameterError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    InfChar(#[from] InfCharError),
}

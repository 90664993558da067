use thiserror::Error;

use crate::rootsys::{Family, LieType};
use crate::symspace::FamilyTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family}{rank} is not a valid Lie type: requires {constraint}")]
    InvalidRank {
        family: Family,
        rank: usize,
        constraint: &'static str,
    },

    #[error("cannot parse Lie type {0:?} (expected e.g. A3, B2, E6, G2)")]
    ParseLieType(String),

    #[error("unknown symmetric space family {0:?}")]
    ParseFamily(String),

    #[error("{family}: parameter constraint violated, requires {constraint}")]
    Parameter {
        family: FamilyTag,
        constraint: String,
    },

    #[error("vector of length {found} does not match ambient rank {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("restricted index {k} out of range 1..={r}")]
    IndexOutOfRange { k: usize, r: usize },

    #[error("invalid restriction map: {0}")]
    InvalidMap(String),

    #[error("no explicit epsilon realization for {0}")]
    Unsupported(LieType),

    #[error("{0} is reducible and has no unique highest root")]
    Reducible(LieType),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::algebra::Family;

/// Errors raised by the analysis kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal rank {rank} for family {family:?}")]
    IllegalRank { family: Family, rank: usize },

    #[error("coordinate dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("Weyl orbit exceeds cap of {cap} elements")]
    OrbitCapExceeded { cap: usize },

    #[error("Weyl group of order {order} exceeds cap of {cap}")]
    GroupTooLarge { order: u128, cap: u128 },

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("weight is not dominant")]
    NotDominant,

    #[error("weight multisets have overlapping factor support")]
    OverlappingBlocks,

    #[error("operands belong to different reductive algebras")]
    AlgebraMismatch,

    #[error("weight is not present in the current weight system")]
    WeightNotPresent,

    #[error("weight is not eligible for a reduction step: {0}")]
    IneligibleWeight(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("table entry condition violated: {0}")]
    ConditionViolated(String),

    #[error("rank condition inapplicable: no summand is stable")]
    NoStablePart,

    #[error("invalid component: {0}")]
    InvalidComponent(String),

    #[error("coefficient list has wrong length: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

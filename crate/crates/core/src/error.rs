use thiserror::Error;

use crate::rootsystem::{Family, Weight};

/// Error type shared by every fallible operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects that must agree in dimension do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A linear system or inversion hit a singular matrix.
    #[error("singular matrix")]
    Singular,

    /// An operation that requires a symmetric matrix received one that is not.
    #[error("matrix is not symmetric")]
    NotSymmetric,

    /// The requested rank is not valid for the family.
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },

    /// A type family letter outside A..G.
    #[error("unknown family {found:?}, expected one of A, B, C, D, E, F, G")]
    UnknownFamily { found: String },

    /// A weight whose length does not match the rank of the root system.
    #[error("rank mismatch: expected {expected} coordinates, found {found}")]
    RankMismatch { expected: usize, found: usize },

    /// A simple reflection index outside 1..=rank.
    #[error("reflection index {index} out of range for rank {rank}")]
    ReflectionIndexOutOfRange { index: usize, rank: usize },

    /// A highest weight that is not dominant.
    #[error("weight {weight} is not dominant")]
    NonDominant { weight: Weight },

    /// The zero highest weight: the trivial representation carries no torus
    /// information, so coefficient extraction rejects it.
    #[error("representation not almost faithful")]
    NotAlmostFaithful,

    /// A torus point with a vanishing coordinate; `index` is 1-based.
    #[error("torus coordinate {index} is zero")]
    ZeroTorusCoordinate { index: usize },

    /// A proven identity failed to hold at runtime. This is never expected;
    /// it signals an implementation bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

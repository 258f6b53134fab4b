use thiserror::Error;

/// Errors surfaced by the public API.
///
/// Pure algebraic operations (composition, tau, cycling) cannot fail and do
/// not appear here; errors arise from parsing, precondition violations, and
/// resource caps on the desk-scale search routines.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed token `{token}` in braid word")]
    MalformedToken { token: String },

    #[error("letter index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("need at least {min} strands, got {got}")]
    TooFewStrands { got: usize, min: usize },

    #[error("not a permutation: image table is not a bijection")]
    InvalidPermutation,

    #[error("invalid non-crossing partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("word does not represent a braid fixing puncture 2")]
    NotFixingSecondPuncture,

    #[error("expected exactly one fixed puncture, found {count}")]
    FixedPointCount { count: usize },

    #[error("normal-form factor is not invariant under the half rotation")]
    NotSymmetric,

    #[error("desk-scale limit exceeded: {what}")]
    DeskScaleExceeded { what: String },

    #[error("budget exceeded: {what}")]
    BudgetExceeded { what: String },

    #[error("contract violation: {what}")]
    ContractViolation { what: String },

    #[error("certificate verification failed: {what}")]
    VerificationFailed { what: String },
}

pub type Result<T> = std::result::Result<T, Error>;

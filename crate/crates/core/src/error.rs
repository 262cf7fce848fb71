use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: out-of-range letter, non-Lyndon word where one is
    /// required, bad constructor data, unparseable serialization.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two operands live over different ranks.
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    /// Inversion of an algebra element whose constant term is not 1.
    #[error("not a unit: constant term must be 1")]
    NotAUnit,

    /// An element claimed to be a Lie element fails Lyndon-coordinate peeling.
    #[error("not a Lie element: {0}")]
    NotLie(String),

    /// Operation requires a pure automorphism (identity permutation).
    #[error("automorphism is not pure")]
    NotPure,

    /// Malformed Milnor index (repetition, or the strand inside the sequence).
    #[error("invalid index: {0}")]
    InvalidIndex(String),

    /// Element is not in the normal closure the operation requires.
    #[error("element is not in the required normal closure")]
    NotInClosure,

    /// An expansion is supported outside the allowed alphabet.
    #[error("unsupported letters present: {0}")]
    SupportError(String),

    /// An internal consistency assertion failed; indicates a bug.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

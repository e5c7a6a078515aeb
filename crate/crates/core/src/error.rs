//! Error taxonomy shared by every layer of the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("invalid division: {0}")]
    InvalidDivision(String),

    #[error("point not on curve: {0}")]
    NotOnCurve(String),

    #[error("branch point: {0}")]
    BranchPoint(String),

    #[error("leading/subleading coefficients share a root in both orientations: {0}")]
    AssumptionViolated(String),

    #[error("bad normalization point: {0}")]
    Normalization(String),

    #[error("preimages are not all rational: {0}; supply preimages or use numeric mode")]
    IrrationalPreimages(String),

    #[error("non-generic configuration: {0}")]
    NonGeneric(String),

    #[error("divisor is special (or degenerate): {0}")]
    SpecialDivisor(String),

    #[error("singular matrix")]
    Singular,

    #[error("representation error: {0}")]
    Representation(String),

    #[error("eigenvalue collision: {0}")]
    EigenvalueCollision(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("series precision exhausted: {0}")]
    Precision(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::AssumptionViolated(_) | Error::BranchPoint(_) | Error::Normalization(_) => 3,
            Error::SpecialDivisor(_) | Error::Singular => 4,
            Error::Internal(_) | Error::Representation(_) | Error::Precision(_) => 5,
            _ => 2,
        }
    }

    /// Short machine-readable tag for structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::DegenerateInput(_) => "degenerate_input",
            Error::InvalidDivision(_) => "invalid_division",
            Error::NotOnCurve(_) => "not_on_curve",
            Error::BranchPoint(_) => "branch_point",
            Error::AssumptionViolated(_) => "assumption_violated",
            Error::Normalization(_) => "normalization",
            Error::IrrationalPreimages(_) => "irrational_preimages",
            Error::NonGeneric(_) => "non_generic",
            Error::SpecialDivisor(_) => "special_divisor",
            Error::Singular => "singular",
            Error::Representation(_) => "representation",
            Error::EigenvalueCollision(_) => "eigenvalue_collision",
            Error::Pole(_) => "pole",
            Error::Precision(_) => "precision",
            Error::Validation(_) => "validation",
            Error::Internal(_) => "internal",
        }
    }
}

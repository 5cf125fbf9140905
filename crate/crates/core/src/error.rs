use thiserror::Error;

/// Errors produced while loading structures or evaluating operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown basis element `{0}`")]
    UnknownBasis(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("{context}: `{element}` has degree {found}, expected {expected}")]
    DegreeMismatch {
        context: String,
        element: String,
        found: i64,
        expected: i64,
    },

    #[error("arity mismatch: expected {expected} factors, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("input is not {required}-reduced: `{witness}` has degree {degree}")]
    NotReduced {
        required: u32,
        witness: String,
        degree: i64,
    },

    #[error("truncation overflow: {0}")]
    TruncationOverflow(String),

    #[error("degree {degree} is outside the truncated region (complete through degree {complete})")]
    OutOfTruncatedRegion { degree: i64, complete: i64 },

    #[error("twisting cochain applied outside its stored region: `{0}`")]
    OutsideCochainRegion(String),

    #[error("twisting cochain handles do not match")]
    HandleMismatch,

    #[error("Brown condition violated at `{0}`")]
    BrownViolated(String),

    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

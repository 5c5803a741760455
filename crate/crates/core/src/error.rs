use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed symbol {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("cell(n={n}, w={w}) has {predicted} cells, above the cap of {cap}")]
    BudgetExceeded {
        n: usize,
        w: usize,
        predicted: u64,
        cap: u64,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("symbol {0} is not a critical cell")]
    NotCritical(String),

    #[error("code does not decode to a critical cell: {0}")]
    InconsistentCode(String),

    #[error("matching is not an involution at {0}")]
    InvolutionViolation(String),

    #[error("point is outside the admissible domain: {0}")]
    OutsideDomain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is not non-increasing at position {position}")]
    UnsortedSequence { position: usize },

    #[error("degree set must be nonempty")]
    EmptySet,

    #[error("degree set entries must be positive")]
    NonPositiveSetEntry,

    #[error("degree set is not strictly decreasing at position {position}")]
    NotStrictlyDecreasing { position: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("vertex index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("not a permutation of 0..{0}")]
    NotPermutation(usize),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("pairing does not certify the mirror property")]
    InvalidPairing,

    #[error("the pair of sequences is not bigraphic")]
    NotBigraphic,

    #[error("the sequence is not loop graphic")]
    NotLoopGraphic,

    #[error("work budget of {limit} search nodes exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

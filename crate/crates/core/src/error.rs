use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row must not be empty")]
    EmptyRow,

    #[error("row of degree {degree} needs {expected} entries, got {actual}")]
    LengthMismatch {
        degree: usize,
        expected: usize,
        actual: usize,
    },

    #[error("entry {index} is not strictly positive")]
    NonPositiveEntry { index: usize },

    #[error("rows must have consecutive degrees, got {lower} and {upper}")]
    DegreeMismatch { lower: usize, upper: usize },

    #[error("{check} needs degree at least {minimum}, got {degree}")]
    DegreeTooSmall {
        check: &'static str,
        minimum: usize,
        degree: usize,
    },

    #[error("{check} needs at least {needed} rows, triangle has {available}")]
    TooFewRows {
        check: &'static str,
        needed: usize,
        available: usize,
    },

    #[error("triangle row {index} has degree {degree}")]
    NonContiguousTriangle { index: usize, degree: usize },

    #[error("value {value} is not a dyadic rational")]
    NotDyadic { value: String },

    #[error("zero polynomial has no well-defined root count")]
    ZeroPolynomial,

    #[error("{function} is undefined at (n={n}, k={k})")]
    Undefined {
        function: &'static str,
        n: u64,
        k: u64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

use thiserror::Error;

/// Failure while reading the polynomial text grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {pos}")]
pub struct ParseError {
    /// Byte offset into the input text.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("non-homogeneous polynomial (term of degree {found}, expected {expected})")]
    NonHomogeneous { expected: u32, found: u32 },
    #[error("unknown variable or parameter `{0}`")]
    UnknownIdentifier(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("exponent vector has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("row and column sums disagree: {rows} vs {cols}")]
    MarginMismatch { rows: u64, cols: u64 },

    #[error("trace table has no entry for index {0:?}")]
    MissingEntry(Vec<u32>),

    #[error("oracle not applicable: {0}")]
    NotApplicable(String),

    #[error("oracle inconclusive: {0}")]
    Inconclusive(String),

    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

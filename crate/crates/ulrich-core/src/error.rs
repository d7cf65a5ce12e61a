use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring context mismatch")]
    RingMismatch,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("local length did not stabilize within truncation degree {0}")]
    BudgetExhausted(u32),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("trace ideal has unexpected shape: {0}")]
    Shape(String),
    #[error("reduction search exhausted: {0}")]
    SearchFailure(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

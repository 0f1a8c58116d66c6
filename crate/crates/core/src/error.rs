use thiserror::Error;

/// Errors raised by the algebra engine and the factorization pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("division by the zero polynomial")]
    DivideByZero,
    #[error("quotient is not a polynomial")]
    NotDivisible,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("index {index} out of range (limit {limit})")]
    OutOfRange { index: usize, limit: usize },
    #[error("all {size}x{size} minors vanish")]
    AllMinorsZero { size: usize },
    #[error("leading {size}x{size} block is singular")]
    SingularBlock { size: usize },
    #[error("row {row} is not in the span of the basis (nonzero remainder)")]
    NonzeroRemainder { row: usize },
    #[error("the ideal is zero")]
    ZeroIdeal,
    #[error("{generators} generators cannot span a module of rank {rank}")]
    InconsistentRank { generators: usize, rank: usize },
    #[error("free basis extraction incomplete: {0}")]
    ExtractionIncomplete(String),
    #[error("the zero matrix has no factorization of positive rank")]
    ZeroMatrix,
    #[error("internal consistency check failed: {0}")]
    VerificationFailed(String),
    #[error("invalid matrix document: {0}")]
    Document(String),
    #[error("{case}: labelled {expected} but {algorithm} decided {found}")]
    LabelMismatch {
        case: String,
        algorithm: String,
        expected: String,
        found: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

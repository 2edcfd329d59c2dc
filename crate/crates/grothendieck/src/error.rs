use crate::ring::RingContext;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context mismatch: {0} vs {1}")]
    ContextMismatch(RingContext, RingContext),
    #[error("variable index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("not divisible; leading remainder term {witness}")]
    NotDivisible { witness: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square")]
    NotSquare,
    #[error("invalid substitution: {0}")]
    BadSubstitution(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("invalid index vector: {0}")]
    BadIndexVector(String),
    #[error("k = {k} exceeds the number of b variables ({b})")]
    KExceedsB { k: usize, b: usize },
    #[error("series window is empty")]
    EmptyWindow,
    #[error("substitution u -> -u-beta requires a u-polynomial (lo >= 0, exact above)")]
    ShiftOnLaurent,
}

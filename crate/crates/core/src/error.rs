use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational number `{0}`")]
    InvalidRational(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero vector is not a projective point")]
    ZeroVector,
    #[error("number of marked points must be at least 4, got {0}")]
    TooFewPoints(usize),
    #[error("operation is only defined for n = {expected}, got n = {got}")]
    UnsupportedN { expected: usize, got: usize },
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("F-curve partition {0:?} is invalid for n = {1}")]
    InvalidPartition(Vec<usize>, usize),
    #[error("divisor is not effective")]
    NotEffective,
    #[error("weight vector outside the hypersimplex: {0}")]
    WeightsOutsideHypersimplex(String),
    #[error("one-parameter subgroup with all weights equal acts trivially")]
    TrivialSubgroup,
    #[error("configuration is not strictly semistable")]
    NotStrictlySemistable,
    #[error("point is not on the {0}")]
    NotOnHypersurface(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

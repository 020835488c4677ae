use thiserror::Error;

/// Failures of the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("arithmetic overflow of the fixed-width representation")]
    Overflow,
    #[error("power sums are only provided up to degree 4, got {0}")]
    UnsupportedDegree(u32),
    #[error("not a canonical decimal integer: {0:?}")]
    Parse(String),
    #[error("division by a non-positive divisor")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("floor-sum modulus must be positive")]
    InvalidModulus,
    #[error("parameter `{0}` must be nonnegative")]
    NegativeParameter(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("sieve limit must be at least 1")]
    InvalidLimit,
    #[error("{what} = {value} is outside 1..={limit}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error("oracle refuses n = {n}; its limit is {limit}")]
    OracleLimit { n: u64, limit: u64 },
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

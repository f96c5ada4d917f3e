use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0:?} is not a root of this datum")]
    NotARoot(Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("partition has {len} parts but only {bound} letters are available")]
    ShapeTooLong { len: usize, bound: usize },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("divisor polynomial is not monic or is constant")]
    NotMonic,
    #[error("cyclotomic factor Phi_{0} has negative exponent")]
    InternalNegativeExponent(u64),
    #[error("divisibility condition fails for n = {0}")]
    ConditionViolated(u64),
    #[error("congruence check failed: {0}")]
    CongruenceMismatch(String),
    #[error("b_{0} is not an integer")]
    NonIntegerB(u64),
    #[error("value is not an integer: {0}")]
    NonInteger(String),
    #[error("enumeration of {count} elements exceeds the cap {cap}")]
    ResourceLimit { count: String, cap: u64 },
    #[error("|λ| = {lambda} but |μ| = {mu}")]
    SizeMismatch { lambda: u64, mu: u64 },
    #[error("crystal operator returned 0 while applying s_{0}")]
    InternalNull(usize),
    #[error("{m} does not divide |λ| = {size}")]
    NotDivisible { m: usize, size: u64 },
    #[error("sequential filling of shape {0} is not semistandard")]
    NotSemistandard(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} is smaller than m = {m}")]
    PTooSmall { p: u64, m: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
}

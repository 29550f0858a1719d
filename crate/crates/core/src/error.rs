use thiserror::Error;

/// Errors raised by ring queries and constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("element {0} is not a unit")]
    NotAUnit(usize),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("element {0} is not central")]
    NotCentral(usize),
    #[error("subset is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ring order {order} exceeds the order budget {budget}")]
    BudgetExceeded { order: u128, budget: usize },
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),
    #[error("not an endomorphism: {0}")]
    NotAnEndomorphism(String),
    #[error("not a ring homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("ring was not built as a group ring")]
    NotAGroupRing,
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("invalid operation table: {0}")]
    InvalidTable(String),
    #[error("element index {index} out of range for ring of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = RingError> = std::result::Result<T, E>;

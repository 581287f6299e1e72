use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("m = {m} is not coprime to q = {q}")]
    NotCoprime { m: u32, q: u32 },
    #[error("lambda = {0} is not a nonzero element of the base field")]
    InvalidLambda(u32),
    #[error("field of order {0} is too large for table arithmetic")]
    FieldTooLarge(u64),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    BadModulus(u32),
    #[error("label {label} is outside a field of order {order}")]
    NotInField { label: u32, order: u32 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("subfield degree {d} does not divide extension degree {e}")]
    NotSubfield { d: u32, e: u32 },
    #[error("index {index} is outside 0..{m}")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("distance search exceeded its budget of {0} steps")]
    BudgetExceeded(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series is not a unit (constant term is zero)")]
    NonUnitSeries,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("evaluation at a pole: {0}")]
    Pole(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("divergent zeta parameters: {0}")]
    Divergent(String),
    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),
    #[error("truncation degree {degree} too small for `{id}`: {detail}")]
    TruncationTooSmall {
        id: String,
        degree: usize,
        detail: String,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cyclotomic order {0}: expected p^2 for an odd prime p <= 11")]
    InvalidOrder(u64),

    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("invalid local dimension {0}: expected an odd prime between 3 and 11")]
    InvalidDimension(u32),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("word at circle position {position} is not an eigenoperator of GHZ state {variant}")]
    NotEigenoperator { position: u32, variant: u32 },

    #[error("result is not proportional to the target GHZ state: {0}")]
    NotEigenstate(String),

    #[error("search space of {size} assignments exceeds the cap of {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("verification mismatch: {0}")]
    VerificationMismatch(String),
}

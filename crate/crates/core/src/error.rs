use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ramification format: {0}")]
    InvalidFormat(String),

    #[error("format {format} has degree {found}, expected {expected}")]
    DegreeMismatch {
        format: String,
        expected: u32,
        found: u32,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{what} = {value} out of range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("classes live on different numbers of points ({left} vs {right})")]
    MismatchedPoints { left: u32, right: u32 },

    #[error("enumeration of {size} items exceeds the limit {limit}")]
    EnumerationTooLarge { size: u128, limit: u128 },

    #[error("degree {degree} exceeds the oracle limit {limit}")]
    OracleTooLarge { degree: u32, limit: u32 },

    #[error("symbol {0} cannot be rewritten to boundary classes")]
    UnknownSymbol(String),

    #[error("class is not symmetric under exchanging the two sides: {0}")]
    NotSymmetric(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: i64, min: i64, max: i64) -> Self {
        Error::OutOfRange {
            what,
            value,
            min,
            max,
        }
    }
}

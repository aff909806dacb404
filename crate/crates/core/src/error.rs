use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("grid needs at least 2 dimensions, each of size at least 2 (got {0:?})")]
    DimensionTooSmall(Vec<usize>),

    #[error("dimensions must be non-increasing (got {0:?})")]
    DimensionOrderViolation(Vec<usize>),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("coordinate {coord:?} out of range for grid {dims:?}")]
    CoordOutOfRange { coord: Vec<usize>, dims: Vec<usize> },

    #[error("labeling does not match grid: {0}")]
    SpecMismatch(String),

    #[error("search space of {required} candidates exceeds budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported format version {found:?} (expected {expected:?})")]
    VersionMismatch { found: String, expected: String },

    #[error("{style} rendering needs d = {required}, grid has d = {found}")]
    UnsupportedDimension {
        style: &'static str,
        required: usize,
        found: usize,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>) -> Self {
        Error::Parse {
            line: 0,
            column: 0,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn checked_add(a: i64, b: i64, what: &str) -> Result<i64> {
    a.checked_add(b).ok_or_else(|| Error::Overflow(what.to_string()))
}

pub(crate) fn checked_mul(a: i64, b: i64, what: &str) -> Result<i64> {
    a.checked_mul(b).ok_or_else(|| Error::Overflow(what.to_string()))
}

pub(crate) fn checked_pow2(exp: usize, what: &str) -> Result<i64> {
    if exp >= 63 {
        return Err(Error::Overflow(what.to_string()));
    }
    Ok(1i64 << exp)
}

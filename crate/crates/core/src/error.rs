use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("exact kernel supports ambient dimension 2 or 3, got {0}; use the estimator")]
    UnsupportedDimension(usize),
    #[error("{0} requires a full-dimensional body")]
    LowerDimensional(&'static str),
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("empty point set")]
    EmptyInput,
    #[error("intersection is empty")]
    EmptyIntersection,
    #[error("{0} is not contained in the reference body")]
    NotContained(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("linear program is {0}")]
    Lp(&'static str),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::NotContained(_) => 3,
            Error::Config(_) | Error::InvalidArgument(_) | Error::UnsupportedDimension(_) => 4,
            _ => 5,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

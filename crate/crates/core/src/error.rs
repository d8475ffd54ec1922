use thiserror::Error;

/// Errors raised by evaluation, verification and file handling.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {degree} outside supported range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("non-finite argument {0}")]
    NonFinite(f64),

    #[error("invalid quadrature: {0}")]
    InvalidQuadrature(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid beam parameters: {0}")]
    InvalidBeam(String),

    #[error("operator {op} cannot act on a {basis} index")]
    BasisMismatch { op: String, basis: String },

    #[error("analytic derivatives are only available for HG/LG basis functions")]
    AnalyticUnavailable,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown budget `{0}` (expected quick or full)")]
    UnknownBudget(String),

    #[error("unsupported symbol `{0}`")]
    UnsupportedSymbol(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

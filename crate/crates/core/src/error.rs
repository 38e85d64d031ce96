use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("pole at the origin: denominator vanishes at w = 0")]
    PoleAtOrigin,

    #[error("series has no logarithm: constant term is not 1")]
    NotUnitSeries,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("root iteration did not converge after {iterations} iterations (best residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("line {line}: {message}")]
    Line { line: usize, message: String },

    #[error("malformed record: {0}")]
    Record(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Coincident points or otherwise ill-posed geometry.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("zero polynomial has no isolated roots")]
    ZeroPolynomial,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown graph {0:?}")]
    UnknownGraph(String),

    #[error("drawing has no position for vertex {0:?}")]
    MissingVertex(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A solver branch produced no admissible candidate where one must exist.
    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

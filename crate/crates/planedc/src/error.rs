use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input file or JSON could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// The combinatorial structure is malformed (bad rotation, non-spherical
    /// embedding, loops or parallel edges where a simple graph is required).
    #[error("structure error: {0}")]
    Structure(String),
    #[error("unknown vertex id: {0}")]
    UnknownVertex(String),
    /// An operation's precondition was violated (e.g. 3-connectivity, k >= 3).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A configured search or size limit was exceeded.
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },

    #[error("loop at vertex {0} but loops are forbidden")]
    LoopForbidden(usize),

    #[error("not a matching: {0}")]
    NotAMatching(String),

    #[error("matching refers to edges outside the host graph")]
    HostMismatch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("loop cut not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid path/cycle system: {0}")]
    InvalidSystem(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

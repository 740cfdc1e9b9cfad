use thiserror::Error;

/// Errors raised by parsers and constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: self-loop at vertex {label}")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("unknown built-in system {0:?}")]
    UnknownSystem(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph has a bridge {u}-{v}")]
    Bridge { u: String, v: String },
    #[error("graph is not planar: {0}")]
    NonPlanar(String),
    #[error("invalid embedding: {0}")]
    Embedding(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

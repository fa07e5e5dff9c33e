use crate::hypergraph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {0} not found")]
    UnknownVertex(VertexId),

    #[error("edge {0} not found")]
    UnknownEdge(EdgeId),

    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid arity: expected d = {expected}, found d = {found}")]
    InvalidArity { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The exact search exhausted every stash of size at most `cap`.
    #[error("no stash of size at most {cap} exists")]
    CapExceeded { cap: usize },

    #[error("unsupported case k = {k}, d = {d}: {reason}")]
    Unsupported { k: usize, d: usize, reason: String },

    #[error("contract violation: {0}")]
    ContractViolation(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

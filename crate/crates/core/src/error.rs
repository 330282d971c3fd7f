use thiserror::Error;

use crate::graph::Vertex;
use crate::outerplanar::Obstruction;

/// Errors raised by graph operations, rule preconditions and I/O.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} does not exist")]
    MissingVertex(Vertex),
    #[error("edge {0}-{1} does not exist")]
    MissingEdge(Vertex, Vertex),
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("endpoints must differ (got {0} twice)")]
    SameEndpoints(Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not outerplanar")]
    NotOuterplanar(Box<Obstruction>),
    #[error("trace step {index} is illegal: {reason}")]
    IllegalStep { index: usize, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("instance too large for the oracle: {0}")]
    TooLarge(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidStructure(msg.into())
}

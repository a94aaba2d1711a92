use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("edge {edge} out of range (m = {m})")]
    EdgeOutOfRange { edge: EdgeId, m: usize },

    #[error("loop at vertex {0} is not allowed")]
    Loop(Vertex),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is not {k}-degenerate: no special edge among {remaining} remaining edges")]
    NotDegenerate { k: usize, remaining: usize },

    #[error("malformed ordering: {0}")]
    MalformedOrdering(String),

    #[error("partial coloring: edge {0} has no color")]
    PartialColoring(EdgeId),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

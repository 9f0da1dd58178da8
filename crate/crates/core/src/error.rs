use thiserror::Error;

/// Errors produced by graph construction, parsing, the oracle and the
/// reduction generator.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex id {id} out of range for a graph with {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph has {n} vertices, exceeding the exhaustive-search bound of {max}")]
    SizeLimit { n: usize, max: usize },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexRange { line: usize, vertex: usize, n: usize },

    #[error("color {color} out of range 0..={t}")]
    ColorRange { color: usize, t: usize },

    #[error("invalid input: {0}")]
    Input(String),

    /// A result that a theorem rules out was produced; some supplied
    /// precondition (usually a chromatic lower bound) must be false.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("no monochromatic matching reaches its target")]
    NotFound,

    #[error("instance too large: {0}")]
    TooLarge(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

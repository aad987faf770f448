use thiserror::Error;

/// Errors raised by the categorical operations and the term parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition mismatch: {0}")]
    CompositionMismatch(String),

    #[error("index {index} out of range for {what} (bound {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("{what} requires level >= {min}, got {level}")]
    LevelTooLow {
        what: &'static str,
        min: usize,
        level: usize,
    },

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("not a thin category: {0}")]
    NotThin(String),

    #[error("basepoint is not a 0-cell of the presheaf: {0}")]
    NotAVertex(String),

    #[error("codomain mismatch: {0}")]
    CodomainMismatch(String),

    #[error("unknown check: {0}")]
    UnknownCheck(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

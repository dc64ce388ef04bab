use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph would have {requested} vertices, capacity is {capacity}")]
    Capacity { requested: usize, capacity: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid pattern: {0}")]
    Pattern(String),

    #[error("n below minimum {min_n} for pattern {pattern}")]
    TooFewVertices { min_n: usize, pattern: String },

    #[error("{0}")]
    Domain(String),

    #[error("refused: {0}")]
    Refused(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Shapes or lengths that do not fit together.
    #[error("structural error: {0}")]
    Structural(String),
    /// An operation that needs exact rational input received something else.
    #[error("mode error: {0}")]
    Mode(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("numeric error: {0}")]
    Numeric(String),
    /// Two independent computations of the same quantity disagree.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    /// An operator slot holds something other than a Variable, Literal or IndexedVar.
    #[error("kind violation: {0}")]
    KindViolation(String),
    #[error("malformed parts: {0}")]
    MalformedParts(String),
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
}

pub type Result<T, E = ExprError> = std::result::Result<T, E>;

pub(crate) fn malformed<T>(msg: impl Into<String>) -> Result<T> {
    Err(ExprError::MalformedParts(msg.into()))
}

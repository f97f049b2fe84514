use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("{name} has free variables {free:?}")]
    NotClosed { name: String, free: Vec<String> },
    #[error("{0} is already registered")]
    DuplicateName(String),
    #[error("{0:?} is not a valid item or package name")]
    BadName(String),
    #[error("unknown theory item {0}")]
    UnknownTheoryItem(String),
    #[error("unknown package {0}")]
    UnknownPath(String),
    #[error("{theorem} cannot use {via}, which already depends on it")]
    CircularDependency { theorem: String, via: String },
    #[error("{item} is not presumed in the proof of {theorem}")]
    PresumptionViolation { theorem: String, item: String },
    #[error("proof of {theorem} failed verification: {message}")]
    VerificationFailed { theorem: String, message: String },
    #[error("{0}")]
    FixtureCorrupt(String),
}

impl TheoryError {
    pub fn code(&self) -> &'static str {
        match self {
            TheoryError::NotClosed { .. } => "NotClosed",
            TheoryError::DuplicateName(_) => "DuplicateName",
            TheoryError::BadName(_) => "BadName",
            TheoryError::UnknownTheoryItem(_) => "UnknownTheoryItem",
            TheoryError::UnknownPath(_) => "UnknownPath",
            TheoryError::CircularDependency { .. } => "CircularDependency",
            TheoryError::PresumptionViolation { .. } => "PresumptionViolation",
            TheoryError::VerificationFailed { .. } => "VerificationFailed",
            TheoryError::FixtureCorrupt(_) => "FixtureCorrupt",
        }
    }
}

impl From<pvk_cert::layout::LayoutError> for TheoryError {
    fn from(e: pvk_cert::layout::LayoutError) -> Self {
        TheoryError::FixtureCorrupt(e.to_string())
    }
}

pub type Result<T, E = TheoryError> = std::result::Result<T, E>;

use pvk_expr::ExprError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("fuel exhausted after {0} beta reductions")]
    FuelExhausted(u64),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("relabeling forbidden: {0}")]
    RelabelForbidden(String),
    #[error("a lambda replacing an operator may not have an ExprRange body: {0}")]
    RangeBodyForbidden(String),
    #[error("index mismatch: {0}")]
    IndexMismatch(String),
    #[error("unreducible extent: {0}")]
    UnreducibleExtent(String),
    #[error("not a universal quantification: {0}")]
    NotUniversal(String),
    #[error("bad replacement map: {0}")]
    BadMap(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

impl ReduceError {
    /// Stable machine-readable name.
    pub fn code(&self) -> &'static str {
        match self {
            ReduceError::FuelExhausted(_) => "FuelExhausted",
            ReduceError::LengthMismatch(_) => "LengthMismatch",
            ReduceError::RelabelForbidden(_) => "RelabelForbidden",
            ReduceError::RangeBodyForbidden(_) => "RangeBodyForbidden",
            ReduceError::IndexMismatch(_) => "IndexMismatch",
            ReduceError::UnreducibleExtent(_) => "UnreducibleExtent",
            ReduceError::NotUniversal(_) => "NotUniversal",
            ReduceError::BadMap(_) => "BadMap",
            ReduceError::Expr(ExprError::KindViolation(_)) => "KindViolation",
            ReduceError::Expr(ExprError::MalformedParts(_)) => "MalformedParts",
            ReduceError::Expr(ExprError::Syntax { .. }) => "SyntaxError",
        }
    }
}

pub type Result<T, E = ReduceError> = std::result::Result<T, E>;

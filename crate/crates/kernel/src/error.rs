use pvk_expr::ExprError;
use pvk_reduce::ReduceError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("unknown theory item {0}")]
    UnknownTheoryItem(String),
    #[error("{0} is not presumed in this context")]
    PresumptionViolation(String),
    #[error("not an implication: {0}")]
    NotAnImplication(String),
    #[error("antecedent mismatch: expected {expected}, got {found}")]
    AntecedentMismatch { expected: String, found: String },
    #[error("not a universal quantification over {layers} layer(s): {expr}")]
    NotUniversal { expr: String, layers: usize },
    #[error("unsatisfied condition: {0}")]
    UnsatisfiedCondition(String),
    #[error("parameter {param} occurs free in retained assumption {assumption}")]
    FreeVariableLeak { param: String, assumption: String },
    #[error("{0} is not fully proven")]
    NotFullyProven(String),
    #[error("literal {literal} is still required through {item}")]
    LiteralStillRequired { literal: String, item: String },
    #[error("variable {0} already occurs in the judgment")]
    NotFresh(String),
    #[error("bad argument: {0}")]
    BadArgument(String),
    #[error("unknown judgment index {0}")]
    UnknownIndex(usize),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
}

impl From<ExprError> for KernelError {
    fn from(e: ExprError) -> Self {
        KernelError::Reduce(ReduceError::Expr(e))
    }
}

impl KernelError {
    /// Stable machine-readable name.
    pub fn code(&self) -> &'static str {
        match self {
            KernelError::UnknownTheoryItem(_) => "UnknownTheoryItem",
            KernelError::PresumptionViolation(_) => "PresumptionViolation",
            KernelError::NotAnImplication(_) => "NotAnImplication",
            KernelError::AntecedentMismatch { .. } => "AntecedentMismatch",
            KernelError::NotUniversal { .. } => "NotUniversal",
            KernelError::UnsatisfiedCondition(_) => "UnsatisfiedCondition",
            KernelError::FreeVariableLeak { .. } => "FreeVariableLeak",
            KernelError::NotFullyProven(_) => "NotFullyProven",
            KernelError::LiteralStillRequired { .. } => "LiteralStillRequired",
            KernelError::NotFresh(_) => "NotFresh",
            KernelError::BadArgument(_) => "BadArgument",
            KernelError::UnknownIndex(_) => "UnknownIndex",
            KernelError::Reduce(e) => e.code(),
        }
    }
}

pub type Result<T, E = KernelError> = std::result::Result<T, E>;

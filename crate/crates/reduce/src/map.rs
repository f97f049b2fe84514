use pvk_expr::{param_base, Expr, ExprKind, Kind, Name};

use crate::error::{ReduceError, Result};

/// Replacements keyed by parameter.
///
/// Keys are a Variable (`x: a`), a tuple of indexed parameters sharing one
/// base (`(x_1, ..., x_n): (a, b_1, ..., b_k)`), or an operator pattern
/// (`f(x): x^a`), which is stored as `f: x ↦ x^a`. Alternative expansions
/// describe the same replacement under another split of the indices, so
/// occurrences like `x_1, ..., x_i` can find their slice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReplacementMap {
    entries: Vec<(Expr, Expr)>,
    alts: Vec<(Expr, Option<Expr>)>,
}

impl ReplacementMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a replacement, normalizing operator patterns.
    pub fn with(mut self, key: Expr, value: Expr) -> Result<Self> {
        self.insert(key, value)?;
        Ok(self)
    }

    pub fn insert(&mut self, key: Expr, value: Expr) -> Result<()> {
        let (key, value) = normalize(key, value)?;
        if self.entries.iter().any(|(k, _)| k.same_labels(&key)) {
            return Err(ReduceError::BadMap(format!("{key} is replaced twice")));
        }
        self.entries.push((key, value));
        Ok(())
    }

    /// Adds an alternative expansion. `value` defaults to the main
    /// replacement of the same base.
    pub fn with_alt(mut self, key: Expr, value: Option<Expr>) -> Result<Self> {
        indexed_base(&key)?;
        if let Some(v) = &value {
            if v.tag() != ExprKind::ExprTuple {
                return Err(ReduceError::BadMap(format!("alternative replacement {v} must be an ExprTuple")));
            }
        }
        self.alts.push((key, value));
        Ok(self)
    }

    pub fn entries(&self) -> &[(Expr, Expr)] {
        &self.entries
    }

    pub fn alternatives(&self) -> &[(Expr, Option<Expr>)] {
        &self.alts
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty() && self.alts.is_empty()
    }

    /// Replacement for a key, matched by exact labels first, then by identity.
    pub fn get(&self, key: &Expr) -> Option<&Expr> {
        self.entries
            .iter()
            .find(|(k, _)| k.same_labels(key))
            .or_else(|| self.entries.iter().find(|(k, _)| k == key))
            .map(|(_, v)| v)
    }
}

fn normalize(key: Expr, value: Expr) -> Result<(Expr, Expr)> {
    match key.kind() {
        Kind::Variable(_) => Ok((key, value)),
        Kind::Tuple(_) => {
            indexed_base(&key)?;
            if value.tag() != ExprKind::ExprTuple {
                return Err(ReduceError::BadMap(format!("replacement for {key} must be an ExprTuple, not {value}")));
            }
            Ok((key, value))
        }
        Kind::Operation { operator, operands } => {
            let args = operands.entries().unwrap_or(std::slice::from_ref(operands));
            if operator.tag() != ExprKind::Variable || args.iter().any(|a| param_base(a).is_none()) {
                return Err(ReduceError::BadMap(format!("{key} is not an operator pattern")));
            }
            let lambda = Expr::lambda(args.to_vec(), value)?;
            Ok((operator.clone(), lambda))
        }
        _ => Err(ReduceError::BadMap(format!("{key} cannot be a replacement key"))),
    }
}

/// The shared base of a tuple of indexed parameters.
pub(crate) fn indexed_base(key: &Expr) -> Result<Name> {
    let bad = || ReduceError::BadMap(format!("{key} is not a tuple of indexed parameters with one base"));
    let es = key.entries().ok_or_else(bad)?;
    let mut base: Option<Name> = None;
    for e in es {
        if e.tag() == ExprKind::Variable {
            return Err(bad());
        }
        let b = param_base(e).ok_or_else(bad)?;
        match &base {
            None => base = Some(b.clone()),
            Some(x) if x == b => {}
            Some(_) => return Err(bad()),
        }
    }
    base.ok_or_else(bad)
}

//! Derived forms that desugar into primitive nodes.

use crate::error::{malformed, Result};
use crate::node::{Expr, ExprKind};
use crate::vocab::{pkg, sym};

/// `Q_{params | conds} body` as `Q((params) ↦ {body if conds})`.
///
/// No condition leaves the body bare; one plain condition becomes the
/// Conditional's condition; several conditions, or a single ExprRange of
/// conditions, are joined under a conjunction.
pub fn quantifier(q: Expr, params: Vec<Expr>, conds: Vec<Expr>, body: Expr) -> Result<Expr> {
    if params.is_empty() {
        return malformed("a quantifier needs at least one parameter");
    }
    let inner = match conds.as_slice() {
        [] => body,
        [c] if c.tag() != ExprKind::ExprRange => Expr::conditional(body, c.clone()),
        _ => Expr::conditional(body, Expr::operation(sym::and(), Expr::tuple(conds))?),
    };
    let lambda = Expr::lambda(params, inner)?;
    Expr::operation(q, Expr::tuple(vec![lambda]))
}

/// The pieces of a quantifier-shaped expression.
#[derive(Clone, Debug)]
pub struct Quantified {
    pub quantifier: Expr,
    pub params: Vec<Expr>,
    /// The Conditional's condition, if any, unsplit.
    pub condition: Option<Expr>,
    pub body: Expr,
    pub lambda: Expr,
}

impl Quantified {
    /// The condition split into conjunction entries.
    pub fn conditions(&self) -> Vec<Expr> {
        match &self.condition {
            None => vec![],
            Some(c) => conjuncts(c),
        }
    }
}

/// Entries of a conjunction, or the expression itself.
pub fn conjuncts(c: &Expr) -> Vec<Expr> {
    if c.is_op(pkg::CONJUNCTION, "And") {
        c.operand_entries().expect("operation")
    } else {
        vec![c.clone()]
    }
}

/// Recognizes `Q((params) ↦ body)` for any operator literal `Q`.
pub fn as_quantified(e: &Expr) -> Option<Quantified> {
    let (q, operands) = e.as_operation()?;
    q.as_literal()?;
    let lambda = match operands.entries() {
        Some([l]) => l,
        Some(_) => return None,
        None => operands,
    };
    let (params, inner) = lambda.as_lambda()?;
    let (body, condition) = match inner.as_conditional() {
        Some((v, c)) => (v.clone(), Some(c.clone())),
        None => (inner.clone(), None),
    };
    Some(Quantified { quantifier: q.clone(), params: params.to_vec(), condition, body, lambda: lambda.clone() })
}

/// Recognizes a universal quantification.
pub fn as_forall(e: &Expr) -> Option<Quantified> {
    as_quantified(e).filter(|q| q.quantifier.as_literal() == Some((pkg::UNIVERSALITY, "Forall")))
}

/// `{v1 if c1, v2 if c2, ...}`: exactly one condition is expected to hold.
pub fn conditional_set(cases: Vec<(Expr, Expr)>) -> Result<Expr> {
    if cases.is_empty() {
        return malformed("a ConditionalSet needs at least one case");
    }
    let entries = cases.into_iter().map(|(v, c)| Expr::conditional(v, c)).collect();
    Expr::operation(sym::conditional_set(), Expr::tuple(entries))
}

/// A two-dimensional array: a tuple of row tuples of equal length.
pub fn expr_array(rows: Vec<Vec<Expr>>) -> Result<Expr> {
    if let Some(first) = rows.first() {
        if rows.iter().any(|r| r.len() != first.len()) {
            return malformed("ExprArray rows must have equal length");
        }
    }
    Ok(Expr::tuple(rows.into_iter().map(Expr::tuple).collect()))
}

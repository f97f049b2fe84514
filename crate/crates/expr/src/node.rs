use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::canon;
use crate::digest::ExprId;
use crate::error::{malformed, ExprError, Result};
use crate::intern;

pub type Name = Arc<str>;

/// The nine primitive expression kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExprKind {
    Variable = 1,
    Literal = 2,
    ExprTuple = 3,
    Operation = 4,
    Conditional = 5,
    Lambda = 6,
    NamedExprs = 7,
    ExprRange = 8,
    IndexedVar = 9,
}

impl ExprKind {
    pub const ALL: [ExprKind; 9] = [
        ExprKind::Variable,
        ExprKind::Literal,
        ExprKind::ExprTuple,
        ExprKind::Operation,
        ExprKind::Conditional,
        ExprKind::Lambda,
        ExprKind::NamedExprs,
        ExprKind::ExprRange,
        ExprKind::IndexedVar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExprKind::Variable => "Variable",
            ExprKind::Literal => "Literal",
            ExprKind::ExprTuple => "ExprTuple",
            ExprKind::Operation => "Operation",
            ExprKind::Conditional => "Conditional",
            ExprKind::Lambda => "Lambda",
            ExprKind::NamedExprs => "NamedExprs",
            ExprKind::ExprRange => "ExprRange",
            ExprKind::IndexedVar => "IndexedVar",
        }
    }

    pub fn from_name(s: &str) -> Option<ExprKind> {
        ExprKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for ExprKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Kind-specific children of a node.
#[derive(Clone)]
pub enum Kind {
    Variable(Name),
    Literal {
        package: Name,
        name: Name,
    },
    Tuple(Vec<Expr>),
    Operation {
        operator: Expr,
        operands: Expr,
    },
    Conditional {
        value: Expr,
        condition: Expr,
    },
    /// `params` is always an ExprTuple.
    Lambda {
        params: Expr,
        body: Expr,
    },
    /// Sorted by key, keys unique.
    Named(Vec<(Name, Expr)>),
    /// `lambda` is a single-parameter Lambda over a plain Variable.
    Range {
        lambda: Expr,
        start: Expr,
        end: Expr,
    },
    Indexed {
        var: Expr,
        indices: Vec<Expr>,
    },
}

impl Kind {
    pub fn tag(&self) -> ExprKind {
        match self {
            Kind::Variable(_) => ExprKind::Variable,
            Kind::Literal { .. } => ExprKind::Literal,
            Kind::Tuple(_) => ExprKind::ExprTuple,
            Kind::Operation { .. } => ExprKind::Operation,
            Kind::Conditional { .. } => ExprKind::Conditional,
            Kind::Lambda { .. } => ExprKind::Lambda,
            Kind::Named(_) => ExprKind::NamedExprs,
            Kind::Range { .. } => ExprKind::ExprRange,
            Kind::Indexed { .. } => ExprKind::IndexedVar,
        }
    }

    /// Children in path order.
    pub fn children(&self) -> Vec<&Expr> {
        match self {
            Kind::Variable(_) | Kind::Literal { .. } => vec![],
            Kind::Tuple(es) => es.iter().collect(),
            Kind::Operation { operator, operands } => vec![operator, operands],
            Kind::Conditional { value, condition } => vec![value, condition],
            Kind::Lambda { params, body } => vec![params, body],
            Kind::Named(items) => items.iter().map(|(_, v)| v).collect(),
            Kind::Range { lambda, start, end } => vec![lambda, start, end],
            Kind::Indexed { var, indices } => {
                let mut v = vec![var];
                v.extend(indices.iter());
                v
            }
        }
    }
}

pub(crate) struct Node {
    pub(crate) kind: Kind,
    pub(crate) key: [u8; 32],
    pub(crate) id: ExprId,
    /// Alpha-canonical twin; `None` when the node is already canonical.
    pub(crate) canon: Option<Expr>,
    pub(crate) depth: u32,
    pub(crate) free: OnceLock<Arc<BTreeSet<Name>>>,
    pub(crate) names: OnceLock<Arc<BTreeSet<Name>>>,
}

/// An immutable, interned expression node.
///
/// Equality, ordering and hashing go through [`ExprId`], so two expressions
/// that differ only by lambda parameter labels compare equal. Use
/// [`Expr::ptr_eq`] or [`Expr::same_labels`] for finer distinctions.
#[derive(Clone)]
pub struct Expr(pub(crate) Arc<Node>);

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Expr {}

impl Hash for Expr {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state)
    }
}

impl PartialOrd for Expr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Expr {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.id.cmp(&other.0.id)
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::sexpr::to_sexpr(self))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::sexpr::to_sexpr(self))
    }
}

/// One element of a constructor descriptor for [`build`].
#[derive(Clone, Debug)]
pub enum Part {
    Expr(Expr),
    Str(String),
    Named(String, Expr),
}

/// Builds a node of the given kind from a flat descriptor.
///
/// * Variable: `[Str(name)]`
/// * Literal: `[Str(package), Str(name)]`
/// * ExprTuple: entries
/// * Operation: `[operator, operands]`
/// * Conditional: `[value, condition]`
/// * Lambda: `[params (ExprTuple), body]`
/// * NamedExprs: `Named` pairs
/// * ExprRange: `[lambda_map, start, end]`
/// * IndexedVar: `[var, index, ...]`
pub fn build(kind: ExprKind, parts: Vec<Part>) -> Result<Expr> {
    fn exprs(kind: ExprKind, parts: Vec<Part>) -> Result<Vec<Expr>> {
        parts
            .into_iter()
            .map(|p| match p {
                Part::Expr(e) => Ok(e),
                other => malformed(format!("{kind} expects expression parts, got {other:?}")),
            })
            .collect()
    }
    fn strs(kind: ExprKind, parts: Vec<Part>) -> Result<Vec<String>> {
        parts
            .into_iter()
            .map(|p| match p {
                Part::Str(s) => Ok(s),
                other => malformed(format!("{kind} expects string parts, got {other:?}")),
            })
            .collect()
    }
    fn exactly<const N: usize>(kind: ExprKind, v: Vec<Expr>) -> Result<[Expr; N]> {
        let n = v.len();
        v.try_into().map_err(|_| ExprError::MalformedParts(format!("{kind} takes {N} parts, got {n}")))
    }
    match kind {
        ExprKind::Variable => match strs(kind, parts)?.as_slice() {
            [name] => Expr::try_var(name),
            other => malformed(format!("Variable takes 1 name, got {}", other.len())),
        },
        ExprKind::Literal => match strs(kind, parts)?.as_slice() {
            [package, name] => Expr::try_literal(package, name),
            other => malformed(format!("Literal takes package and name, got {} parts", other.len())),
        },
        ExprKind::ExprTuple => Ok(Expr::tuple(exprs(kind, parts)?)),
        ExprKind::Operation => {
            let [op, operands] = exactly(kind, exprs(kind, parts)?)?;
            Expr::operation(op, operands)
        }
        ExprKind::Conditional => {
            let [value, condition] = exactly(kind, exprs(kind, parts)?)?;
            Ok(Expr::conditional(value, condition))
        }
        ExprKind::Lambda => {
            let [params, body] = exactly(kind, exprs(kind, parts)?)?;
            let params = match params.kind() {
                Kind::Tuple(es) => es.clone(),
                _ => return malformed("Lambda parameters must be an ExprTuple"),
            };
            Expr::lambda(params, body)
        }
        ExprKind::NamedExprs => {
            let items = parts
                .into_iter()
                .map(|p| match p {
                    Part::Named(k, v) => Ok((k, v)),
                    other => malformed(format!("NamedExprs expects keyword parts, got {other:?}")),
                })
                .collect::<Result<Vec<_>>>()?;
            Expr::named(items)
        }
        ExprKind::ExprRange => {
            let [lambda, start, end] = exactly(kind, exprs(kind, parts)?)?;
            Expr::range(lambda, start, end)
        }
        ExprKind::IndexedVar => {
            let mut es = exprs(kind, parts)?;
            if es.len() < 2 {
                return malformed("IndexedVar needs a variable and at least one index");
            }
            let var = es.remove(0);
            Expr::indexed(var, es)
        }
    }
}

impl Expr {
    pub fn kind(&self) -> &Kind {
        &self.0.kind
    }

    pub fn tag(&self) -> ExprKind {
        self.0.kind.tag()
    }

    pub fn id(&self) -> ExprId {
        self.0.id
    }

    /// Digest of the exact structure, parameter labels included.
    pub fn label_key(&self) -> ExprId {
        ExprId(self.0.key)
    }

    pub(crate) fn key(&self) -> &[u8; 32] {
        &self.0.key
    }

    pub fn depth(&self) -> u32 {
        self.0.depth
    }

    pub fn ptr_eq(a: &Expr, b: &Expr) -> bool {
        Arc::ptr_eq(&a.0, &b.0)
    }

    /// Structural equality including parameter labels.
    pub fn same_labels(&self, other: &Expr) -> bool {
        self.0.key == other.0.key
    }

    pub fn is_canonical(&self) -> bool {
        self.0.canon.is_none()
    }

    // ---- constructors ----

    /// # Panics
    /// If `name` is empty.
    pub fn var(name: &str) -> Expr {
        Expr::try_var(name).expect("variable name must be nonempty")
    }

    pub fn try_var(name: &str) -> Result<Expr> {
        if name.is_empty() {
            return malformed("Variable name is empty");
        }
        Ok(intern::make(Kind::Variable(name.into())))
    }

    /// # Panics
    /// If `package` or `name` is empty.
    pub fn literal(package: &str, name: &str) -> Expr {
        Expr::try_literal(package, name).expect("literal package and name must be nonempty")
    }

    pub fn try_literal(package: &str, name: &str) -> Result<Expr> {
        if name.is_empty() {
            return malformed("Literal name is empty");
        }
        if package.is_empty() {
            return malformed(format!("Literal {name} has no package qualifier"));
        }
        Ok(intern::make(Kind::Literal { package: package.into(), name: name.into() }))
    }

    pub fn tuple(entries: Vec<Expr>) -> Expr {
        intern::make(Kind::Tuple(entries))
    }

    pub fn empty_tuple() -> Expr {
        Expr::tuple(vec![])
    }

    pub fn operation(operator: Expr, operands: Expr) -> Result<Expr> {
        match operator.tag() {
            ExprKind::Variable | ExprKind::Literal | ExprKind::IndexedVar => {}
            ExprKind::Lambda => {
                return Err(ExprError::KindViolation("an Operation operator may not be a Lambda".into()))
            }
            other => {
                return Err(ExprError::KindViolation(format!(
                    "an Operation operator must be a Variable, Literal or IndexedVar, not {other}"
                )))
            }
        }
        if operands.tag() == ExprKind::ExprRange {
            return malformed("a bare ExprRange cannot be an operand; wrap it in an ExprTuple");
        }
        Ok(intern::make(Kind::Operation { operator, operands }))
    }

    pub fn conditional(value: Expr, condition: Expr) -> Expr {
        intern::make(Kind::Conditional { value, condition })
    }

    pub fn lambda(params: Vec<Expr>, body: Expr) -> Result<Expr> {
        if params.is_empty() {
            return malformed("Lambda needs at least one parameter");
        }
        canon::check_params(&params)?;
        Ok(intern::make(Kind::Lambda { params: Expr::tuple(params), body }))
    }

    pub fn named(items: Vec<(String, Expr)>) -> Result<Expr> {
        let mut items: Vec<(Name, Expr)> = items.into_iter().map(|(k, v)| (k.into(), v)).collect();
        items.sort_by(|a, b| a.0.cmp(&b.0));
        for w in items.windows(2) {
            if w[0].0 == w[1].0 {
                return malformed(format!("duplicate NamedExprs key {:?}", w[0].0));
            }
        }
        if items.iter().any(|(k, _)| k.is_empty()) {
            return malformed("NamedExprs key is empty");
        }
        Ok(intern::make(Kind::Named(items)))
    }

    pub fn range(lambda: Expr, start: Expr, end: Expr) -> Result<Expr> {
        match lambda.kind() {
            Kind::Lambda { params, .. } => {
                let ps = params.entries().unwrap_or(&[]);
                if ps.len() != 1 || ps[0].tag() != ExprKind::Variable {
                    return malformed("ExprRange lambda_map must have exactly one Variable parameter");
                }
            }
            _ => return malformed("ExprRange lambda_map must be a Lambda"),
        }
        Ok(intern::make(Kind::Range { lambda, start, end }))
    }

    /// Convenience: the range `body[param:=start], ..., body[param:=end]`.
    pub fn range_over(param: &str, body: Expr, start: Expr, end: Expr) -> Expr {
        let lambda = Expr::lambda(vec![Expr::var(param)], body).expect("single variable parameter");
        Expr::range(lambda, start, end).expect("well-formed range")
    }

    pub fn indexed(var: Expr, indices: Vec<Expr>) -> Result<Expr> {
        if var.tag() != ExprKind::Variable {
            return Err(ExprError::MalformedParts(format!("IndexedVar must index a Variable, not {}", var.tag())));
        }
        if indices.is_empty() {
            return malformed("IndexedVar needs at least one index");
        }
        Ok(intern::make(Kind::Indexed { var, indices }))
    }

    // ---- accessors ----

    pub fn as_var(&self) -> Option<&Name> {
        match self.kind() {
            Kind::Variable(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<(&str, &str)> {
        match self.kind() {
            Kind::Literal { package, name } => Some((package, name)),
            _ => None,
        }
    }

    pub fn entries(&self) -> Option<&[Expr]> {
        match self.kind() {
            Kind::Tuple(es) => Some(es),
            _ => None,
        }
    }

    pub fn as_operation(&self) -> Option<(&Expr, &Expr)> {
        match self.kind() {
            Kind::Operation { operator, operands } => Some((operator, operands)),
            _ => None,
        }
    }

    /// Operands as a list of entries: a tuple's entries, or the single bare operand.
    pub fn operand_entries(&self) -> Option<Vec<Expr>> {
        let (_, operands) = self.as_operation()?;
        Some(match operands.entries() {
            Some(es) => es.to_vec(),
            None => vec![operands.clone()],
        })
    }

    pub fn as_lambda(&self) -> Option<(&[Expr], &Expr)> {
        match self.kind() {
            Kind::Lambda { params, body } => Some((params.entries().expect("tuple params"), body)),
            _ => None,
        }
    }

    pub fn as_conditional(&self) -> Option<(&Expr, &Expr)> {
        match self.kind() {
            Kind::Conditional { value, condition } => Some((value, condition)),
            _ => None,
        }
    }

    /// `(parameter, body, start, end)` of an ExprRange.
    pub fn as_range(&self) -> Option<(&Name, &Expr, &Expr, &Expr)> {
        match self.kind() {
            Kind::Range { lambda, start, end } => {
                let (ps, body) = lambda.as_lambda()?;
                Some((ps[0].as_var()?, body, start, end))
            }
            _ => None,
        }
    }

    pub fn as_indexed(&self) -> Option<(&Name, &[Expr])> {
        match self.kind() {
            Kind::Indexed { var, indices } => Some((var.as_var()?, indices)),
            _ => None,
        }
    }

    /// True when this is an Operation whose operator is the given literal.
    pub fn is_op(&self, package: &str, name: &str) -> bool {
        self.as_operation().and_then(|(op, _)| op.as_literal()).is_some_and(|(p, n)| p == package && n == name)
    }

    pub fn children(&self) -> Vec<&Expr> {
        self.0.kind.children()
    }

    /// Rebuilds this node with each child replaced by `f(child)`.
    pub fn map_children(&self, mut f: impl FnMut(&Expr) -> Result<Expr>) -> Result<Expr> {
        Ok(match self.kind() {
            Kind::Variable(_) | Kind::Literal { .. } => self.clone(),
            Kind::Tuple(es) => Expr::tuple(es.iter().map(&mut f).collect::<Result<_>>()?),
            Kind::Operation { operator, operands } => Expr::operation(f(operator)?, f(operands)?)?,
            Kind::Conditional { value, condition } => Expr::conditional(f(value)?, f(condition)?),
            Kind::Lambda { params, body } => {
                let params = f(params)?;
                let ps = match params.kind() {
                    Kind::Tuple(es) => es.clone(),
                    _ => return malformed("Lambda parameters must remain an ExprTuple"),
                };
                Expr::lambda(ps, f(body)?)?
            }
            Kind::Named(items) => {
                Expr::named(items.iter().map(|(k, v)| Ok((k.to_string(), f(v)?))).collect::<Result<_>>()?)?
            }
            Kind::Range { lambda, start, end } => Expr::range(f(lambda)?, f(start)?, f(end)?)?,
            Kind::Indexed { var, indices } => {
                Expr::indexed(f(var)?, indices.iter().map(&mut f).collect::<Result<_>>()?)?
            }
        })
    }

    /// Every Variable name occurring anywhere, binders included.
    pub fn all_names(&self) -> Arc<BTreeSet<Name>> {
        self.0
            .names
            .get_or_init(|| {
                let mut out = BTreeSet::new();
                if let Kind::Variable(n) = self.kind() {
                    out.insert(n.clone());
                }
                for c in self.children() {
                    out.extend(c.all_names().iter().cloned());
                }
                Arc::new(out)
            })
            .clone()
    }

    /// True if `sub` occurs (by identity) anywhere inside `self`.
    pub fn contains(&self, sub: &Expr) -> bool {
        fn go(e: &Expr, sub: &Expr, seen: &mut std::collections::HashSet<[u8; 32]>) -> bool {
            if e == sub {
                return true;
            }
            if !seen.insert(e.0.key) {
                return false;
            }
            e.children().into_iter().any(|c| go(c, sub, seen))
        }
        go(self, sub, &mut Default::default())
    }
}

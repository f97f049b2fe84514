//! Alpha-canonical forms.
//!
//! Relabel-able lambda parameters are renamed to dummies `_a, _b, ..., _z,
//! _aa, ...`. Each parameter takes the first dummy not already used in the
//! canonical parameters or body; parameters are assigned from last to first,
//! and inner lambdas are canonicalized before the enclosing one.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::digest::ExprId;
use crate::error::{malformed, Result};
use crate::intern;
use crate::node::{Expr, ExprKind, Kind, Name};

/// The `n`-th dummy label: `_a` .. `_z`, `_aa` .. `_az`, `_ba`, ...
pub fn dummy_name(mut n: usize) -> String {
    let mut letters = Vec::new();
    loop {
        letters.push(b'a' + (n % 26) as u8);
        if n < 26 {
            break;
        }
        n = n / 26 - 1;
    }
    letters.reverse();
    format!("_{}", String::from_utf8(letters).expect("ascii"))
}

/// First dummy label absent from `used`.
pub fn first_unused_dummy(used: &BTreeSet<Name>) -> Name {
    (0..).map(dummy_name).find(|d| !used.contains(d.as_str())).expect("unbounded alphabet").into()
}

/// The alpha-canonical representative of `e`.
pub fn canonical_form(e: &Expr) -> Expr {
    e.0.canon.clone().unwrap_or_else(|| e.clone())
}

/// The binder name a lambda parameter introduces.
pub fn param_base(p: &Expr) -> Option<&Name> {
    match p.kind() {
        Kind::Variable(n) => Some(n),
        Kind::Indexed { var, .. } => var.as_var(),
        Kind::Range { lambda, .. } => {
            let (_, body) = lambda.as_lambda()?;
            match body.kind() {
                Kind::Indexed { var, .. } => var.as_var(),
                _ => None,
            }
        }
        _ => None,
    }
}

pub(crate) fn check_params(params: &[Expr]) -> Result<()> {
    let mut plain = HashSet::new();
    let mut indexed = HashSet::new();
    let mut seen = HashSet::new();
    for p in params {
        let base = match (p.tag(), param_base(p)) {
            (ExprKind::Variable | ExprKind::IndexedVar | ExprKind::ExprRange, Some(b)) => b.clone(),
            _ => {
                return malformed(format!(
                    "Lambda parameter must be a Variable, IndexedVar or ExprRange of IndexedVar, got {}",
                    p.tag()
                ))
            }
        };
        if !seen.insert(*p.key()) {
            return malformed(format!("repeated Lambda parameter {p}"));
        }
        if p.tag() == ExprKind::Variable {
            if !plain.insert(base.clone()) {
                return malformed(format!("repeated Lambda parameter {base}"));
            }
        } else {
            indexed.insert(base);
        }
    }
    if let Some(clash) = plain.intersection(&indexed).next() {
        return malformed(format!("{clash} is both a plain and an indexed parameter"));
    }
    Ok(())
}

/// Whether the parameters with binder `base` cover every occurrence of
/// `base` in `body`, so that renaming them is meaning-preserving.
pub fn is_relabelable(params: &[Expr], body: &Expr, base: &Name) -> bool {
    let mut singles = HashSet::new();
    let mut bounds = HashSet::new();
    for p in params.iter().filter(|p| param_base(p) == Some(base)) {
        match p.kind() {
            Kind::Variable(_) => return true,
            Kind::Indexed { indices, .. } if indices.len() == 1 => {
                singles.insert(indices[0].id());
            }
            Kind::Range { lambda, start, end } => {
                let (ps, inner) = lambda.as_lambda().expect("range lambda");
                let k = ps[0].as_var().expect("range parameter");
                match inner.as_indexed() {
                    Some((_, [i])) if i.as_var() == Some(k) => {
                        bounds.insert((start.id(), end.id()));
                    }
                    _ => return false,
                }
            }
            _ => return false,
        }
    }
    let cov = Coverage { base, singles: &singles, bounds: &bounds };
    cov.check(body, &mut Vec::new())
}

struct Coverage<'a> {
    base: &'a Name,
    singles: &'a HashSet<ExprId>,
    bounds: &'a HashSet<(ExprId, ExprId)>,
}

type RangeCtx = Vec<(Name, Option<(ExprId, ExprId)>)>;

impl Coverage<'_> {
    fn index_ok(&self, idx: &Expr, ctx: &RangeCtx) -> bool {
        if self.singles.contains(&idx.id()) {
            return true;
        }
        let Some(k) = idx.as_var() else { return false };
        match ctx.iter().rev().find(|(n, _)| n == k) {
            Some((_, Some(b))) => self.bounds.contains(b),
            _ => false,
        }
    }

    fn check(&self, e: &Expr, ctx: &mut RangeCtx) -> bool {
        stacker::maybe_grow(64 * 1024, 1024 * 1024, || self.check_inner(e, ctx))
    }

    fn check_inner(&self, e: &Expr, ctx: &mut RangeCtx) -> bool {
        if !e.all_names().contains(self.base) {
            return true;
        }
        match e.kind() {
            Kind::Variable(n) => n != self.base,
            Kind::Indexed { var, indices } => {
                if !indices.iter().all(|i| self.check(i, ctx)) {
                    return false;
                }
                if var.as_var() != Some(self.base) {
                    return true;
                }
                indices.len() == 1 && self.index_ok(&indices[0], ctx)
            }
            Kind::Range { lambda, start, end } => {
                if !self.check(start, ctx) || !self.check(end, ctx) {
                    return false;
                }
                let (ps, body) = lambda.as_lambda().expect("range lambda");
                let k = ps[0].as_var().expect("range parameter").clone();
                if &k == self.base {
                    return true;
                }
                ctx.push((k, Some((start.id(), end.id()))));
                let ok = self.check(body, ctx);
                ctx.pop();
                ok
            }
            Kind::Lambda { params, body } => {
                let ps = params.entries().expect("tuple params");
                if !ps.iter().all(|p| self.check_param_parts(p, ctx)) {
                    return false;
                }
                if ps.iter().any(|p| param_base(p) == Some(self.base)) {
                    return true;
                }
                let n = ctx.len();
                ctx.extend(ps.iter().filter_map(param_base).map(|b| (b.clone(), None)));
                let ok = self.check(body, ctx);
                ctx.truncate(n);
                ok
            }
            _ => e.children().into_iter().all(|c| self.check(c, ctx)),
        }
    }

    fn check_param_parts(&self, p: &Expr, ctx: &mut RangeCtx) -> bool {
        match p.kind() {
            Kind::Indexed { indices, .. } => indices.iter().all(|i| self.check(i, ctx)),
            Kind::Range { lambda, start, end } => {
                if !self.check(start, ctx) || !self.check(end, ctx) {
                    return false;
                }
                let (ps, body) = lambda.as_lambda().expect("range lambda");
                let k = ps[0].as_var().expect("range parameter");
                if k == self.base {
                    return true;
                }
                match body.kind() {
                    Kind::Indexed { indices, .. } => {
                        ctx.push((k.clone(), None));
                        let ok = indices.iter().all(|i| self.check(i, ctx));
                        ctx.pop();
                        ok
                    }
                    _ => true,
                }
            }
            _ => true,
        }
    }
}

/// Renames the binder of a parameter without touching its indices or bounds.
pub fn rename_param_base(p: &Expr, to: &str) -> Expr {
    match p.kind() {
        Kind::Variable(_) => Expr::var(to),
        Kind::Indexed { indices, .. } => Expr::indexed(Expr::var(to), indices.clone()).expect("indexed parameter"),
        Kind::Range { lambda, start, end } => {
            let (ps, body) = lambda.as_lambda().expect("range lambda");
            let (_, indices) = body.as_indexed().expect("indexed range body");
            let inner = Expr::indexed(Expr::var(to), indices.to_vec()).expect("indexed parameter");
            let lambda = Expr::lambda(ps.to_vec(), inner).expect("range lambda");
            Expr::range(lambda, start.clone(), end.clone()).expect("range parameter")
        }
        _ => p.clone(),
    }
}

/// Replaces every occurrence of the literal `lit` with the variable `to`.
///
/// As with [`rename_free`], `to` must be fresh in `e`.
pub fn replace_literal(e: &Expr, lit: &Expr, to: &str) -> Expr {
    fn go(e: &Expr, lit: &Expr, to: &str, memo: &mut HashMap<[u8; 32], Expr>) -> Expr {
        if e.same_labels(lit) {
            return Expr::var(to);
        }
        if let Some(hit) = memo.get(e.key()) {
            return hit.clone();
        }
        let out = stacker::maybe_grow(64 * 1024, 1024 * 1024, || {
            e.map_children(|c| Ok(go(c, lit, to, memo))).expect("a variable fits wherever a literal did")
        });
        memo.insert(*e.key(), out.clone());
        out
    }
    go(e, lit, to, &mut HashMap::new())
}

/// Renames the free occurrences of variable `from` to `to`.
///
/// `to` must not be captured by any binder inside `e`; callers pick fresh
/// names.
pub fn rename_free(e: &Expr, from: &Name, to: &str) -> Expr {
    let mut r = Renamer { from, to, memo: HashMap::new() };
    r.go(e)
}

struct Renamer<'a> {
    from: &'a Name,
    to: &'a str,
    memo: HashMap<[u8; 32], Expr>,
}

impl Renamer<'_> {
    fn go(&mut self, e: &Expr) -> Expr {
        if !e.all_names().contains(self.from) {
            return e.clone();
        }
        if let Some(hit) = self.memo.get(e.key()) {
            return hit.clone();
        }
        let out = stacker::maybe_grow(64 * 1024, 1024 * 1024, || self.go_inner(e));
        self.memo.insert(*e.key(), out.clone());
        out
    }

    fn go_inner(&mut self, e: &Expr) -> Expr {
        match e.kind() {
            Kind::Variable(n) if n == self.from => Expr::var(self.to),
            Kind::Lambda { params, body } => {
                let ps = params.entries().expect("tuple params");
                let new_ps: Vec<Expr> = ps.iter().map(|p| self.param_parts(p)).collect();
                let bound = ps.iter().any(|p| param_base(p) == Some(self.from));
                let new_body = if bound { body.clone() } else { self.go(body) };
                Expr::lambda(new_ps, new_body).expect("renaming preserves parameter shape")
            }
            _ => e.map_children(|c| Ok(self.go(c))).expect("renaming preserves node shape"),
        }
    }

    fn param_parts(&mut self, p: &Expr) -> Expr {
        match p.kind() {
            Kind::Indexed { var, indices } => {
                Expr::indexed(var.clone(), indices.iter().map(|i| self.go(i)).collect()).expect("indexed parameter")
            }
            Kind::Range { lambda, start, end } => {
                let (ps, body) = lambda.as_lambda().expect("range lambda");
                let k = ps[0].as_var().expect("range parameter");
                let body = if k == self.from {
                    body.clone()
                } else {
                    let (base, indices) = body.as_indexed().expect("indexed range body");
                    Expr::indexed(Expr::var(base), indices.iter().map(|i| self.go(i)).collect())
                        .expect("indexed parameter")
                };
                let lambda = Expr::lambda(ps.to_vec(), body).expect("range lambda");
                Expr::range(lambda, self.go(start), self.go(end)).expect("range parameter")
            }
            _ => p.clone(),
        }
    }
}

fn map_kind(kind: &Kind, f: impl Fn(&Expr) -> Expr) -> Kind {
    match kind {
        Kind::Variable(_) | Kind::Literal { .. } => kind.clone(),
        Kind::Tuple(es) => Kind::Tuple(es.iter().map(&f).collect()),
        Kind::Operation { operator, operands } => Kind::Operation { operator: f(operator), operands: f(operands) },
        Kind::Conditional { value, condition } => Kind::Conditional { value: f(value), condition: f(condition) },
        Kind::Lambda { params, body } => Kind::Lambda { params: f(params), body: f(body) },
        Kind::Named(items) => Kind::Named(items.iter().map(|(k, v)| (k.clone(), f(v))).collect()),
        Kind::Range { lambda, start, end } => Kind::Range { lambda: f(lambda), start: f(start), end: f(end) },
        Kind::Indexed { var, indices } => Kind::Indexed { var: f(var), indices: indices.iter().map(&f).collect() },
    }
}

/// The canonical twin of a freshly built node, or `None` if the node is
/// canonical as it stands.
pub(crate) fn canonical_twin(kind: &Kind) -> Option<Expr> {
    if let Kind::Lambda { params, body } = kind {
        return Some(canonical_lambda(params.entries().expect("tuple params"), body));
    }
    if kind.children().iter().all(|c| c.is_canonical()) {
        return None;
    }
    Some(intern::make_canonical(map_kind(kind, canonical_form)))
}

fn canonical_lambda(params: &[Expr], body: &Expr) -> Expr {
    let mut relabel: Vec<Name> = Vec::new();
    for p in params {
        let b = param_base(p).expect("validated parameter");
        if !relabel.contains(b) && is_relabelable(params, body, b) {
            relabel.push(b.clone());
        }
    }

    let mut taken: BTreeSet<Name> = body.all_names().iter().cloned().collect();
    for p in params {
        taken.extend(p.all_names().iter().cloned());
    }
    let mut holders = Vec::with_capacity(relabel.len());
    let mut n = 0usize;
    for _ in &relabel {
        let h = loop {
            let cand = format!("#{n}");
            n += 1;
            if !taken.contains(cand.as_str()) {
                break cand;
            }
        };
        holders.push(h);
    }

    let swap = |p: &Expr, table: &[(Name, String)]| -> Expr {
        match param_base(p).and_then(|b| table.iter().find(|(from, _)| from == b)) {
            Some((_, to)) => rename_param_base(p, to),
            None => p.clone(),
        }
    };

    let table: Vec<(Name, String)> = relabel.iter().cloned().zip(holders.iter().cloned()).collect();
    let mut b = body.clone();
    for (from, to) in &table {
        b = rename_free(&b, from, to);
    }
    let cparams: Vec<Expr> = params.iter().map(|p| canonical_form(&swap(p, &table))).collect();
    let cbody = canonical_form(&b);

    let mut used: BTreeSet<Name> = cbody.all_names().iter().cloned().collect();
    for p in &cparams {
        used.extend(p.all_names().iter().cloned());
    }
    let mut assign: Vec<(Name, String)> = Vec::with_capacity(holders.len());
    for h in holders.iter().rev() {
        let d = first_unused_dummy(&used);
        used.insert(d.clone());
        assign.push((h.as_str().into(), d.to_string()));
    }

    let mut fbody = cbody;
    for (from, to) in &assign {
        fbody = rename_free(&fbody, from, to);
    }
    let fparams: Vec<Expr> = cparams.iter().map(|p| swap(p, &assign)).collect();
    intern::make_canonical(Kind::Lambda { params: Expr::tuple(fparams), body: fbody })
}

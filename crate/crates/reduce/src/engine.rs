use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use pvk_expr::composite::conjuncts;
use pvk_expr::vocab::{numeral_value, sym};
use pvk_expr::{
    first_unused_dummy, free_vars, is_relabelable, param_base, rename_free, rename_param_base, Expr, ExprError, ExprId,
    ExprKind, Kind, Name,
};

use crate::error::{ReduceError, Result};
use crate::map::{indexed_base, ReplacementMap};
use crate::{equals, index_range, len_of, plus_one, EqReduction, Obligation, ObligationKind, Options, Reduction};

const RED_ZONE: usize = 128 * 1024;
const STACK_CHUNK: usize = 4 * 1024 * 1024;

/// One way of splitting a base's replacement: each parameter entry with the
/// slice of replacement entries it receives.
#[derive(Clone, Debug)]
pub(crate) struct Expansion {
    entries: Vec<(Expr, Vec<Expr>)>,
}

impl Expansion {
    fn replacement(&self) -> Vec<Expr> {
        self.entries.iter().flat_map(|(_, s)| s.iter().cloned()).collect()
    }
}

/// Substitution state at one point of the traversal.
#[derive(Clone, Debug, Default)]
pub(crate) struct Ctx {
    singles: BTreeMap<Name, Expr>,
    /// Main expansion first, then alternatives.
    ranges: BTreeMap<Name, Arc<Vec<Expansion>>>,
    /// `(x, k, v)`: inside a range being expanded, `x_k` becomes `v`.
    overrides: Vec<(Name, Name, Expr)>,
    pub(crate) scope: Vec<Expr>,
    bound: Vec<Name>,
}

impl Ctx {
    fn binds(&self, n: &Name) -> bool {
        self.singles.contains_key(n) || self.ranges.contains_key(n) || self.overrides.iter().any(|(b, _, _)| b == n)
    }

    fn is_empty(&self) -> bool {
        self.singles.is_empty() && self.ranges.is_empty() && self.overrides.is_empty()
    }

    fn touches(&self, e: &Expr) -> bool {
        !self.is_empty() && free_vars(e).iter().any(|n| self.binds(n))
    }

    fn unbind(&mut self, n: &Name) {
        self.singles.remove(n);
        self.ranges.remove(n);
        self.overrides.retain(|(b, k, _)| b != n && k != n);
    }

    /// Free variables of every replacement that can reach into `e`.
    fn incoming(&self, e: &Expr) -> BTreeSet<Name> {
        let fv = free_vars(e);
        let mut out = BTreeSet::new();
        for (n, v) in &self.singles {
            if fv.contains(n) {
                out.extend(free_vars(v).iter().cloned());
            }
        }
        for (n, exps) in &self.ranges {
            if fv.contains(n) {
                for v in exps.iter().flat_map(|x| x.entries.iter()).flat_map(|(_, s)| s.iter()) {
                    out.extend(free_vars(v).iter().cloned());
                }
            }
        }
        for (b, _, v) in &self.overrides {
            if fv.contains(b) {
                out.extend(free_vars(v).iter().cloned());
            }
        }
        out
    }
}

pub(crate) struct Engine<'a> {
    opts: &'a Options,
    assumptions: &'a [Expr],
    fuel_used: u64,
    reqs: Vec<Obligation>,
    seen: HashSet<(ExprId, Vec<ExprId>)>,
    used: Vec<Expr>,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(opts: &'a Options, assumptions: &'a [Expr]) -> Self {
        Engine { opts, assumptions, fuel_used: 0, reqs: vec![], seen: HashSet::new(), used: vec![] }
    }

    pub(crate) fn finish(self, expr: Expr) -> Reduction {
        Reduction { expr, requirements: self.reqs, assumptions_used: self.used, fuel_used: self.fuel_used }
    }

    fn require(&mut self, expr: Expr, kind: ObligationKind, ctx: &Ctx) {
        let key = (expr.id(), ctx.scope.iter().map(Expr::id).collect());
        if self.seen.insert(key) {
            self.reqs.push(Obligation { expr, scope: ctx.scope.clone(), bound: ctx.bound.clone(), kind });
        }
    }

    fn spend(&mut self) -> Result<()> {
        if self.fuel_used >= self.opts.fuel {
            return Err(ReduceError::FuelExhausted(self.fuel_used));
        }
        self.fuel_used += 1;
        Ok(())
    }

    fn assume(&mut self, fact: &Expr, ctx: &Ctx) -> bool {
        if ctx.scope.contains(fact) {
            return true;
        }
        match self.assumptions.iter().find(|a| *a == fact) {
            Some(a) => {
                if !self.used.contains(a) {
                    self.used.push(a.clone());
                }
                true
            }
            None => false,
        }
    }

    pub(crate) fn subst(&mut self, e: &Expr, ctx: &Ctx) -> Result<Expr> {
        if !ctx.touches(e) {
            return Ok(e.clone());
        }
        stacker::maybe_grow(RED_ZONE, STACK_CHUNK, || self.subst_node(e, ctx))
    }

    fn subst_node(&mut self, e: &Expr, ctx: &Ctx) -> Result<Expr> {
        match e.kind() {
            Kind::Variable(n) => {
                if let Some(v) = ctx.singles.get(n) {
                    Ok(v.clone())
                } else if ctx.binds(n) {
                    Err(ReduceError::IndexMismatch(format!(
                        "{n} occurs without an index while its entries are being replaced"
                    )))
                } else {
                    Ok(e.clone())
                }
            }
            Kind::Literal { .. } => Ok(e.clone()),
            Kind::Tuple(es) => Ok(Expr::tuple(self.subst_tuple(es, ctx)?)),
            Kind::Operation { operator, operands } => self.subst_operation(operator, operands, ctx),
            Kind::Conditional { value, condition } => {
                let c = self.subst(condition, ctx)?;
                let mut inner = ctx.clone();
                inner.scope.extend(conjuncts(&c));
                let v = self.subst(value, &inner)?;
                Ok(Expr::conditional(v, c))
            }
            Kind::Lambda { .. } => self.subst_lambda(e, ctx),
            Kind::Named(items) => {
                let mut out = Vec::with_capacity(items.len());
                for (k, v) in items {
                    out.push((k.to_string(), self.subst(v, ctx)?));
                }
                Ok(Expr::named(out)?)
            }
            Kind::Range { .. } => match self.subst_entries(e, ctx)?.as_slice() {
                [one] => Ok(one.clone()),
                many => Err(ReduceError::IndexMismatch(format!(
                    "{e} outside an ExprTuple expanded to {} entries",
                    many.len()
                ))),
            },
            Kind::Indexed { var, indices } => {
                let x = var.as_var().expect("indexed variable");
                self.subst_indexed(x, indices, ctx)
            }
        }
    }

    pub(crate) fn subst_entries(&mut self, e: &Expr, ctx: &Ctx) -> Result<Vec<Expr>> {
        if e.tag() != ExprKind::ExprRange {
            return Ok(vec![self.subst(e, ctx)?]);
        }
        if !ctx.touches(e) {
            return Ok(vec![e.clone()]);
        }
        stacker::maybe_grow(RED_ZONE, STACK_CHUNK, || self.expand(e, ctx))
    }

    fn subst_tuple(&mut self, es: &[Expr], ctx: &Ctx) -> Result<Vec<Expr>> {
        let mut out = Vec::with_capacity(es.len());
        for e in es {
            out.extend(self.subst_entries(e, ctx)?);
        }
        Ok(out)
    }

    fn subst_indexed(&mut self, x: &Name, indices: &[Expr], ctx: &Ctx) -> Result<Expr> {
        if let Some((_, k, v)) = ctx.overrides.iter().rev().find(|(b, _, _)| b == x) {
            if let [i] = indices {
                if i.as_var() == Some(k) {
                    return Ok(v.clone());
                }
            }
        }
        if ctx.ranges.contains_key(x) {
            return self.lone(x, indices, ctx);
        }
        let idx = indices.iter().map(|i| self.subst(i, ctx)).collect::<Result<Vec<_>>>()?;
        let base = match ctx.singles.get(x) {
            None => Expr::var(x),
            Some(v) if v.tag() == ExprKind::Variable => v.clone(),
            Some(v) => {
                return Err(ReduceError::IndexMismatch(format!("{x} is replaced by {v}, which cannot be indexed")))
            }
        };
        Ok(Expr::indexed(base, idx)?)
    }

    /// A single `x_i` outside any range over `x`: it must be a singular
    /// parameter entry of some expansion.
    fn lone(&self, x: &Name, indices: &[Expr], ctx: &Ctx) -> Result<Expr> {
        for exp in ctx.ranges[x].iter() {
            for (p, slice) in &exp.entries {
                if p.as_indexed().is_some_and(|(_, pi)| pi == indices) {
                    return match slice.as_slice() {
                        [v] if v.tag() != ExprKind::ExprRange => Ok(v.clone()),
                        _ => Err(ReduceError::LengthMismatch(format!(
                            "{p} needs exactly one replacement entry, got {}",
                            Expr::tuple(slice.clone())
                        ))),
                    };
                }
            }
        }
        let shown = Expr::indexed(Expr::var(x), indices.to_vec())?;
        Err(ReduceError::IndexMismatch(format!("no parameter expansion covers {shown}")))
    }

    fn subst_operation(&mut self, operator: &Expr, operands: &Expr, ctx: &Ctx) -> Result<Expr> {
        let original = operands.entries().map(<[Expr]>::to_vec).unwrap_or_else(|| vec![operands.clone()]);
        let new_operands = match operands.entries() {
            Some(es) => Expr::tuple(self.subst_tuple(es, ctx)?),
            None => self.subst(operands, ctx)?,
        };
        let op = self.subst(operator, ctx)?;
        if op.tag() == ExprKind::Lambda {
            let args = new_operands.entries().map(<[Expr]>::to_vec).unwrap_or_else(|| vec![new_operands.clone()]);
            return self.beta(&op, args, ctx);
        }
        let result = Expr::operation(op, new_operands)?;
        if let Some(red) = EqReduction::for_expr(&result) {
            if self.opts.equality_reductions.contains(&red) {
                let was_unary = matches!(original.as_slice(), [o] if o.tag() != ExprKind::ExprRange);
                let now = result.operand_entries().unwrap_or_default();
                if let (false, [only]) = (was_unary, now.as_slice()) {
                    if only.tag() != ExprKind::ExprRange {
                        self.require(equals(result.clone(), only.clone()), ObligationKind::Equality, ctx);
                        return Ok(only.clone());
                    }
                }
            }
        }
        Ok(result)
    }

    pub(crate) fn beta(&mut self, f: &Expr, operands: Vec<Expr>, ctx: &Ctx) -> Result<Expr> {
        self.spend()?;
        let (params, body) = f.as_lambda().expect("lambda");
        if body.tag() == ExprKind::ExprRange {
            return Err(ReduceError::RangeBodyForbidden(f.to_string()));
        }
        let groups = match_params(params, &operands)?;
        let base = Ctx { scope: ctx.scope.clone(), bound: ctx.bound.clone(), ..Ctx::default() };
        let inner = self.bind(&groups, &[], base)?;
        self.subst(body, &inner)
    }

    fn subst_lambda(&mut self, lam: &Expr, ctx: &Ctx) -> Result<Expr> {
        let (params, body) = lam.as_lambda().expect("lambda");
        let mut inner = ctx.clone();
        for p in params {
            if let Some(b) = param_base(p) {
                inner.unbind(b);
            }
        }
        let incoming = inner.incoming(lam);
        let (params, body) = avoid_capture(lam, params, body, &incoming)?;
        let mut new_params = Vec::with_capacity(params.len());
        for p in &params {
            match p.kind() {
                Kind::Variable(_) => new_params.push(p.clone()),
                Kind::Indexed { var, indices } => {
                    let idx = indices.iter().map(|i| self.subst(i, &inner)).collect::<Result<Vec<_>>>()?;
                    new_params.push(Expr::indexed(var.clone(), idx)?);
                }
                Kind::Range { lambda, start, end } => {
                    let r = Expr::range(
                        self.subst_lambda(lambda, &inner)?,
                        self.subst(start, &inner)?,
                        self.subst(end, &inner)?,
                    )?;
                    new_params.extend(self.reduce_extent(&r, &inner)?);
                }
                _ => unreachable!("checked lambda parameter"),
            }
        }
        if new_params.is_empty() {
            return Err(ExprError::MalformedParts(format!("every parameter of {lam} reduced away")).into());
        }
        inner.bound.extend(new_params.iter().filter_map(param_base).cloned());
        let body = self.subst(&body, &inner)?;
        Ok(Expr::lambda(new_params, body)?)
    }

    fn expand(&mut self, r: &Expr, ctx: &Ctx) -> Result<Vec<Expr>> {
        let Kind::Range { lambda, start, end } = r.kind() else { unreachable!("range") };
        let (k, body, _, _) = r.as_range().expect("range");
        let xs = expanding_bases(body, k, ctx);
        if xs.is_empty() {
            let r2 = Expr::range(self.subst_lambda(lambda, ctx)?, self.subst(start, ctx)?, self.subst(end, ctx)?)?;
            return self.reduce_extent(&r2, ctx);
        }
        let s2 = self.subst(start, ctx)?;
        let e2 = self.subst(end, ctx)?;
        let slices = xs.iter().map(|x| cover(x, start, end, ctx)).collect::<Result<Vec<_>>>()?;
        let n = slices[0].len();
        if slices.iter().any(|s| s.len() != n) {
            return Err(ReduceError::LengthMismatch(format!("replacements expanding {r} have different lengths")));
        }
        let dependent = depends_on_index(body, k, &xs);
        let mut base = ctx.clone();
        base.unbind(k);

        if dependent {
            let mut bounds = Vec::with_capacity(n);
            for t in 0..n {
                let b = range_bounds(&slices[0][t]).ok_or_else(|| {
                    ReduceError::IndexMismatch(format!(
                        "{r} uses its index outside {}, so {} must be a range",
                        xs[0], slices[0][t]
                    ))
                })?;
                if slices.iter().any(|s| range_bounds(&s[t]).as_ref() != Some(&b)) {
                    return Err(ReduceError::IndexMismatch(format!("replacement ranges for {r} do not align")));
                }
                bounds.push(b);
            }
            if !bounds.is_empty() {
                let contiguous = bounds[0].0 == s2
                    && bounds.windows(2).all(|w| w[1].0 == plus_one(&w[0].1))
                    && bounds[bounds.len() - 1].1 == e2;
                if !contiguous {
                    let shown: Vec<Expr> = bounds.iter().map(|(a, b)| index_range(a, b)).collect();
                    return Err(ReduceError::IndexMismatch(format!(
                        "expanded indices {} do not run from {s2} to {e2}",
                        Expr::tuple(shown)
                    )));
                }
                if bounds.len() > 1 {
                    let lhs = Expr::tuple(bounds.iter().map(|(a, b)| index_range(a, b)).collect());
                    let rhs = Expr::tuple(vec![index_range(&s2, &e2)]);
                    self.require(equals(lhs, rhs), ObligationKind::Index, ctx);
                }
            }
        }

        let mut out = Vec::new();
        for t in 0..n {
            let column: Vec<&Expr> = slices.iter().map(|s| &s[t]).collect();
            let ranged = column.iter().filter(|c| c.tag() == ExprKind::ExprRange).count();
            if ranged == 0 {
                let mut inner = base.clone();
                for (x, v) in xs.iter().zip(&column) {
                    inner.overrides.push((x.clone(), k.clone(), (*v).clone()));
                }
                out.push(self.subst(body, &inner)?);
                continue;
            }
            let b0 = range_bounds(column[0]);
            if ranged != column.len() || column.iter().any(|c| range_bounds(c) != b0) {
                return Err(ReduceError::IndexMismatch(format!(
                    "replacement entries for {r} do not align at position {t}"
                )));
            }
            let (cs, ce) = b0.expect("range entry");
            let m = self.fresh_index(k, body, &column, lambda, ctx);
            let mut inner = base.clone();
            if &m != k {
                inner.singles.insert(k.clone(), Expr::var(&m));
            }
            for (x, c) in xs.iter().zip(&column) {
                let g = self.range_at(c, &Expr::var(&m), &Ctx::default())?;
                inner.overrides.push((x.clone(), k.clone(), g));
            }
            let body2 = self.subst(body, &inner)?;
            let r2 = Expr::range(Expr::lambda(vec![Expr::var(&m)], body2)?, cs, ce)?;
            out.extend(self.reduce_extent(&r2, ctx)?);
        }
        Ok(out)
    }

    fn fresh_index(&self, k: &Name, body: &Expr, column: &[&Expr], lambda: &Expr, ctx: &Ctx) -> Name {
        let mut taken = ctx.incoming(lambda);
        for c in column {
            taken.extend(free_vars(c).iter().cloned());
        }
        taken.extend(free_vars(body).iter().filter(|n| *n != k).cloned());
        if !taken.contains(k) {
            return k.clone();
        }
        taken.extend(body.all_names().iter().cloned());
        first_unused_dummy(&taken)
    }

    /// `body[k := v]` for the range's own parameter.
    fn range_at(&mut self, r: &Expr, v: &Expr, ctx: &Ctx) -> Result<Expr> {
        let (k, body, _, _) = r.as_range().expect("range");
        let mut inner = Ctx { scope: ctx.scope.clone(), bound: ctx.bound.clone(), ..Ctx::default() };
        inner.singles.insert(k.clone(), v.clone());
        self.subst(body, &inner)
    }

    /// Drops a range known to be empty, collapses one known to be singular.
    fn reduce_extent(&mut self, r: &Expr, ctx: &Ctx) -> Result<Vec<Expr>> {
        if !self.opts.range_reductions {
            return Ok(vec![r.clone()]);
        }
        self.try_reduce_extent(r, ctx)
    }

    fn try_reduce_extent(&mut self, r: &Expr, ctx: &Ctx) -> Result<Vec<Expr>> {
        let (_, _, s, e) = r.as_range().expect("range");
        if s == e {
            return Ok(vec![self.range_at(r, s, ctx)?]);
        }
        let empty = equals(plus_one(e), s.clone());
        if self.assume(&empty, ctx) {
            self.require(empty, ObligationKind::Extent, ctx);
            return Ok(vec![]);
        }
        for single in [equals(e.clone(), s.clone()), equals(s.clone(), e.clone())] {
            if self.assume(&single, ctx) {
                self.require(single, ObligationKind::Extent, ctx);
                return Ok(vec![self.range_at(r, s, ctx)?]);
            }
        }
        let (Some((sv, s_fact)), Some((ev, e_fact))) = (self.numeric(s, ctx), self.numeric(e, ctx)) else {
            return Ok(vec![r.clone()]);
        };
        let facts: Vec<Expr> = s_fact.into_iter().chain(e_fact).collect();
        if ev.checked_add(1) == Some(sv) {
            for f in facts {
                self.assume(&f, ctx);
                self.require(f, ObligationKind::Extent, ctx);
            }
            self.require(equals(plus_one(&sym::num(ev)), sym::num(sv)), ObligationKind::Extent, ctx);
            return Ok(vec![]);
        }
        if ev == sv {
            for f in facts {
                self.assume(&f, ctx);
                self.require(f, ObligationKind::Extent, ctx);
            }
            return Ok(vec![self.range_at(r, s, ctx)?]);
        }
        Ok(vec![r.clone()])
    }

    /// A bound's numeral value, directly or through an assumption `b = n`.
    fn numeric(&self, b: &Expr, ctx: &Ctx) -> Option<(u64, Option<Expr>)> {
        if let Some(v) = numeral_value(b) {
            return Some((v, None));
        }
        let found = ctx.scope.iter().chain(self.assumptions.iter()).find_map(|a| {
            let (op, args) = a.as_operation()?;
            if op != &sym::equals() {
                return None;
            }
            match args.entries()? {
                [l, r] if l == b => numeral_value(r).map(|v| (v, a.clone())),
                [l, r] if r == b => numeral_value(l).map(|v| (v, a.clone())),
                _ => None,
            }
        })?;
        Some((found.0, Some(found.1)))
    }

    /// Binds parameters to operand slices and records the length and index
    /// requirements, main expansion first, then each alternative.
    pub(crate) fn bind(
        &mut self,
        groups: &[(Expr, Vec<Expr>)],
        alts: &[(Expr, Option<Expr>)],
        base: Ctx,
    ) -> Result<Ctx> {
        let mut ctx = base;
        let mut mains: Vec<(Name, Vec<(Expr, Vec<Expr>)>)> = Vec::new();
        for (p, slice) in groups {
            if let Kind::Variable(x) = p.kind() {
                match slice.as_slice() {
                    [v] if v.tag() != ExprKind::ExprRange => {
                        ctx.singles.insert(x.clone(), v.clone());
                    }
                    _ => {
                        return Err(ReduceError::LengthMismatch(format!(
                            "{p} needs exactly one entry, got {}",
                            Expr::tuple(slice.clone())
                        )))
                    }
                }
                continue;
            }
            let x = param_base(p).expect("parameter").clone();
            match mains.iter_mut().find(|(n, _)| *n == x) {
                Some((_, es)) => es.push((p.clone(), slice.clone())),
                None => mains.push((x, vec![(p.clone(), slice.clone())])),
            }
        }
        for (x, entries) in &mains {
            ctx.ranges.insert(x.clone(), Arc::new(vec![Expansion { entries: entries.clone() }]));
        }
        for (p, slice) in groups {
            self.length_requirement(p, slice, &ctx)?;
        }

        let mut extra: Vec<(Name, Expansion, Expr)> = Vec::new();
        let mut expansion_reqs = Vec::new();
        for (key, value) in alts {
            let x = indexed_base(key)?;
            let main = mains.iter().find(|(n, _)| *n == x).ok_or_else(|| {
                ReduceError::BadMap(format!("alternative expansion {key} of {x}, which is not replaced"))
            })?;
            let main_repl = Expansion { entries: main.1.clone() }.replacement();
            let repl = match value {
                Some(v) => {
                    let es = v.entries().expect("checked tuple").to_vec();
                    if Expr::tuple(es.clone()) != Expr::tuple(main_repl.clone()) {
                        expansion_reqs.push(equals(v.clone(), Expr::tuple(main_repl.clone())));
                    }
                    es
                }
                None => main_repl,
            };
            let split = match_params(key.entries().expect("checked tuple"), &repl)?;
            for (p, slice) in &split {
                self.length_requirement(p, slice, &ctx)?;
            }
            extra.push((x, Expansion { entries: split }, key.clone()));
        }
        for e in expansion_reqs {
            self.require(e, ObligationKind::Expansion, &ctx);
        }
        for (x, _, key) in &extra {
            let main = &mains.iter().find(|(n, _)| n == x).expect("main").1;
            let main_params: Vec<Expr> = main.iter().map(|(p, _)| p.clone()).collect();
            let lhs = self.indices(key.entries().expect("tuple"), &ctx)?;
            let rhs = self.indices(&main_params, &ctx)?;
            self.require(equals(lhs, rhs), ObligationKind::Index, &ctx);
        }
        for (x, exp, _) in extra {
            let mut all = ctx.ranges[&x].as_ref().clone();
            all.push(exp);
            ctx.ranges.insert(x, Arc::new(all));
        }
        Ok(ctx)
    }

    fn length_requirement(&mut self, p: &Expr, slice: &[Expr], ctx: &Ctx) -> Result<()> {
        match p.kind() {
            Kind::Range { start, end, .. } => {
                if slice != std::slice::from_ref(p) {
                    let s = self.subst(start, ctx)?;
                    let e = self.subst(end, ctx)?;
                    let req = equals(len_of(slice.to_vec()), len_of(vec![index_range(&s, &e)]));
                    self.require(req, ObligationKind::Length, ctx);
                }
                Ok(())
            }
            Kind::Indexed { .. } => match slice {
                [v] if v.tag() != ExprKind::ExprRange => Ok(()),
                _ => Err(ReduceError::LengthMismatch(format!(
                    "{p} needs exactly one entry, got {}",
                    Expr::tuple(slice.to_vec())
                ))),
            },
            _ => Ok(()),
        }
    }

    /// The index tuple a parameter list covers.
    fn indices(&mut self, params: &[Expr], ctx: &Ctx) -> Result<Expr> {
        let mut out = Vec::new();
        for p in params {
            match p.kind() {
                Kind::Range { start, end, .. } => {
                    out.push(index_range(&self.subst(start, ctx)?, &self.subst(end, ctx)?))
                }
                Kind::Indexed { indices, .. } if indices.len() == 1 => out.push(self.subst(&indices[0], ctx)?),
                _ => return Err(ReduceError::IndexMismatch(format!("{p} has no single index"))),
            }
        }
        Ok(Expr::tuple(out))
    }
}

/// Renames parameters whose base would capture a free variable of an
/// incoming replacement.
fn avoid_capture(lam: &Expr, params: &[Expr], body: &Expr, incoming: &BTreeSet<Name>) -> Result<(Vec<Expr>, Expr)> {
    let mut params = params.to_vec();
    let mut body = body.clone();
    let mut taken: BTreeSet<Name> = incoming.clone();
    taken.extend(lam.all_names().iter().cloned());
    let bases: Vec<Name> = {
        let mut seen = Vec::new();
        for p in &params {
            if let Some(b) = param_base(p) {
                if !seen.contains(b) {
                    seen.push(b.clone());
                }
            }
        }
        seen
    };
    for b in bases.iter().filter(|b| incoming.contains(*b)) {
        if !is_relabelable(&params, &body, b) {
            return Err(ReduceError::RelabelForbidden(format!(
                "{b} in {lam} would capture a free variable of the replacement"
            )));
        }
        let fresh = first_unused_dummy(&taken);
        taken.insert(fresh.clone());
        params = params
            .iter()
            .map(|p| if param_base(p) == Some(b) { rename_param_base(p, &fresh) } else { p.clone() })
            .collect();
        body = rename_free(&body, b, &fresh);
    }
    Ok((params, body))
}

/// Aligns parameters with operand entries. Singular parameters take one
/// entry each; range parameters share the rest equally.
pub(crate) fn match_params(params: &[Expr], operands: &[Expr]) -> Result<Vec<(Expr, Vec<Expr>)>> {
    let ranges = params.iter().filter(|p| p.tag() == ExprKind::ExprRange).count();
    let singles = params.len() - ranges;
    let share = if ranges == 0 {
        if operands.len() != params.len() {
            return Err(ReduceError::LengthMismatch(format!(
                "{} parameters but {} operands",
                params.len(),
                operands.len()
            )));
        }
        0
    } else {
        let rest = operands.len().checked_sub(singles).ok_or_else(|| {
            ReduceError::LengthMismatch(format!("{singles} singular parameters but {} operands", operands.len()))
        })?;
        if rest % ranges != 0 {
            return Err(ReduceError::LengthMismatch(format!(
                "cannot split {rest} operand entries among {ranges} range parameters"
            )));
        }
        rest / ranges
    };
    let mut out = Vec::with_capacity(params.len());
    let mut i = 0;
    for p in params {
        let take = if p.tag() == ExprKind::ExprRange { share } else { 1 };
        let slice = operands[i..i + take].to_vec();
        if take == 1 && p.tag() != ExprKind::ExprRange && slice[0].tag() == ExprKind::ExprRange {
            return Err(ReduceError::LengthMismatch(format!("{p} cannot take the range {}", slice[0])));
        }
        out.push((p.clone(), slice));
        i += take;
    }
    Ok(out)
}

fn range_bounds(e: &Expr) -> Option<(Expr, Expr)> {
    e.as_range().map(|(_, _, s, e)| (s.clone(), e.clone()))
}

/// `(start, end)` a parameter entry covers.
fn param_bounds(p: &Expr) -> Option<(Expr, Expr)> {
    match p.kind() {
        Kind::Indexed { indices, .. } if indices.len() == 1 => Some((indices[0].clone(), indices[0].clone())),
        Kind::Range { start, end, .. } => {
            let (k, body, _, _) = p.as_range()?;
            let (_, idx) = body.as_indexed()?;
            match idx {
                [i] if i.as_var() == Some(k) => Some((start.clone(), end.clone())),
                _ => None,
            }
        }
        _ => None,
    }
}

/// The replacement entries for `x_start, ..., x_end`: the first expansion
/// with a contiguous run of parameter entries from `start` to `end`.
fn cover(x: &Name, start: &Expr, end: &Expr, ctx: &Ctx) -> Result<Vec<Expr>> {
    for exp in ctx.ranges[x].iter() {
        let bounds: Vec<_> = exp.entries.iter().map(|(p, _)| param_bounds(p)).collect();
        for a in 0..bounds.len() {
            if bounds[a].as_ref().map(|b| &b.0) != Some(start) {
                continue;
            }
            let mut acc = Vec::new();
            for b in a..bounds.len() {
                let Some((_, be)) = &bounds[b] else { break };
                acc.extend(exp.entries[b].1.iter().cloned());
                if be == end {
                    return Ok(acc);
                }
            }
        }
    }
    Err(ReduceError::IndexMismatch(format!("no expansion of {x} covers the indices {start} to {end}")))
}

/// Bases `x` being replaced that occur as `x_k` in a range body over `k`.
fn expanding_bases(body: &Expr, k: &Name, ctx: &Ctx) -> Vec<Name> {
    fn go(e: &Expr, k: &Name, ctx: &Ctx, out: &mut Vec<Name>, seen: &mut HashSet<ExprId>) {
        if !seen.insert(e.label_key()) || !free_vars(e).contains(k) {
            return;
        }
        match e.kind() {
            Kind::Indexed { var, indices } => {
                let x = var.as_var().expect("variable");
                if let [i] = indices.as_slice() {
                    if i.as_var() == Some(k) && ctx.ranges.contains_key(x) && !out.contains(x) {
                        out.push(x.clone());
                    }
                }
                for i in indices {
                    go(i, k, ctx, out, seen);
                }
            }
            Kind::Lambda { params, .. } if params.entries().unwrap_or(&[]).iter().any(|p| param_base(p) == Some(k)) => {
            }
            _ => {
                for c in e.children() {
                    go(c, k, ctx, out, seen);
                }
            }
        }
    }
    let mut out = Vec::new();
    go(body, k, ctx, &mut out, &mut HashSet::new());
    out
}

/// Whether `k` occurs in `body` other than as the index of an expanding base.
fn depends_on_index(body: &Expr, k: &Name, xs: &[Name]) -> bool {
    fn go(e: &Expr, k: &Name, xs: &[Name]) -> bool {
        if !free_vars(e).contains(k) {
            return false;
        }
        match e.kind() {
            Kind::Variable(n) => n == k,
            Kind::Indexed { var, indices } => {
                let x = var.as_var().expect("variable");
                match indices.as_slice() {
                    [i] if i.as_var() == Some(k) && xs.contains(x) => false,
                    _ => indices.iter().any(|i| go(i, k, xs)),
                }
            }
            _ => e.children().into_iter().any(|c| go(c, k, xs)),
        }
    }
    go(body, k, xs)
}

fn require_lambda(f: &Expr) -> Result<()> {
    if f.tag() != ExprKind::Lambda {
        return Err(ExprError::KindViolation(format!("{f} is not a Lambda")).into());
    }
    Ok(())
}

/// Applies a lambda to operand entries, consuming one unit of fuel per beta
/// step, including those triggered by replaced operators.
pub fn apply_lambda(f: &Expr, operands: &[Expr], assumptions: &[Expr], opts: &Options) -> Result<Reduction> {
    require_lambda(f)?;
    let mut engine = Engine::new(opts, assumptions);
    let expr = engine.beta(f, operands.to_vec(), &Ctx::default())?;
    Ok(engine.finish(expr))
}

/// [`apply_lambda`] with alternative expansions for range parameters.
pub fn apply_lambda_with(
    f: &Expr,
    operands: &[Expr],
    alternatives: &ReplacementMap,
    assumptions: &[Expr],
    opts: &Options,
) -> Result<Reduction> {
    require_lambda(f)?;
    let mut engine = Engine::new(opts, assumptions);
    engine.spend()?;
    let (params, body) = f.as_lambda().expect("lambda");
    let groups = match_params(params, operands)?;
    let ctx = engine.bind(&groups, alternatives.alternatives(), Ctx::default())?;
    let expr = engine.subst(body, &ctx)?;
    Ok(engine.finish(expr))
}

/// Replaces every application `op(...)` of the operator variable `op`: a
/// Lambda replacement beta-reduces, a Literal or Variable re-tags.
pub fn replace_operation(
    e: &Expr,
    op: &str,
    replacement: &Expr,
    assumptions: &[Expr],
    opts: &Options,
) -> Result<Reduction> {
    let mut ctx = Ctx::default();
    ctx.singles.insert(Name::from(op), replacement.clone());
    let mut engine = Engine::new(opts, assumptions);
    let expr = engine.subst(e, &ctx)?;
    Ok(engine.finish(expr))
}

/// Renames the lambda's parameters that collide with `incoming`.
pub fn relabel_for_capture(lam: &Expr, incoming: &BTreeSet<Name>) -> Result<Expr> {
    require_lambda(lam)?;
    let (params, body) = lam.as_lambda().expect("lambda");
    let (params, body) = avoid_capture(lam, params, body, incoming)?;
    Ok(Expr::lambda(params, body)?)
}

/// `[∧](A)` to `A` (likewise for `∨`), with the equation to justify it as
/// an equality replacement requirement. Disabled classes pass through.
pub fn equality_reduce(e: &Expr, opts: &Options) -> Reduction {
    let mut engine = Engine::new(opts, &[]);
    let reduced = EqReduction::for_expr(e).filter(|red| opts.equality_reductions.contains(red)).and_then(|_| {
        match e.operand_entries()?.as_slice() {
            [only] if only.tag() != ExprKind::ExprRange => Some(only.clone()),
            _ => None,
        }
    });
    match reduced {
        Some(only) => {
            engine.require(equals(e.clone(), only.clone()), ObligationKind::Equality, &Ctx::default());
            engine.finish(only)
        }
        None => engine.finish(e.clone()),
    }
}

/// Expands one ExprRange under a replacement map. The result is the tuple of
/// entries it becomes.
pub fn expand_range(r: &Expr, map: &ReplacementMap, assumptions: &[Expr], opts: &Options) -> Result<Reduction> {
    if r.tag() != ExprKind::ExprRange {
        return Err(ExprError::KindViolation(format!("{r} is not an ExprRange")).into());
    }
    let mut groups = Vec::new();
    for (key, value) in map.entries() {
        match key.entries() {
            Some(ps) => groups.extend(match_params(ps, value.entries().expect("checked tuple"))?),
            None => groups.push((key.clone(), vec![value.clone()])),
        }
    }
    let mut engine = Engine::new(opts, assumptions);
    let ctx = engine.bind(&groups, map.alternatives(), Ctx::default())?;
    let entries = engine.subst_entries(r, &ctx)?;
    Ok(engine.finish(Expr::tuple(entries)))
}

/// Drops an empty range or collapses a singular one; fails when neither is
/// established by numerals or the supplied assumptions.
pub fn reduce_range(r: &Expr, assumptions: &[Expr], opts: &Options) -> Result<Reduction> {
    if r.tag() != ExprKind::ExprRange {
        return Err(ExprError::KindViolation(format!("{r} is not an ExprRange")).into());
    }
    let mut engine = Engine::new(opts, assumptions);
    let entries = engine.try_reduce_extent(r, &Ctx::default())?;
    if entries.as_slice() == std::slice::from_ref(r) {
        return Err(ReduceError::UnreducibleExtent(format!("{r} is not known to be empty or singular")));
    }
    Ok(engine.finish(Expr::tuple(entries)))
}

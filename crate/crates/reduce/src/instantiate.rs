use std::collections::BTreeSet;

use pvk_expr::composite::{as_forall, Quantified};
use pvk_expr::{param_base, Expr, ExprKind, Name};

use crate::engine::{match_params, Ctx, Engine};
use crate::error::{ReduceError, Result};
use crate::map::ReplacementMap;
use crate::{Obligation, ObligationKind, Options};

/// Result of instantiating one or more layers of a universal.
#[derive(Clone, Debug)]
pub struct Instantiation {
    pub expr: Expr,
    /// The instantiated conditions, in order.
    pub conditions: Vec<Obligation>,
    pub requirements: Vec<Obligation>,
    pub assumptions_used: Vec<Expr>,
    pub fuel_used: u64,
}

/// Strips `layers` nested universals and replaces their parameters.
///
/// Parameters absent from the map stay as they are. Each condition conjunct
/// is instantiated on its own; the body is reduced with the instantiated
/// conditions in scope.
pub fn instantiate(
    univ: &Expr,
    map: &ReplacementMap,
    layers: usize,
    assumptions: &[Expr],
    opts: &Options,
) -> Result<Instantiation> {
    if layers == 0 {
        return Err(ReduceError::BadMap("at least one layer must be instantiated".into()));
    }
    let mut qs: Vec<Quantified> = Vec::with_capacity(layers);
    let mut cur = univ.clone();
    for _ in 0..layers {
        let q = as_forall(&cur).ok_or_else(|| ReduceError::NotUniversal(cur.to_string()))?;
        cur = q.body.clone();
        qs.push(q);
    }

    let mut bases: BTreeSet<Name> = BTreeSet::new();
    let mut used_keys: Vec<&Expr> = Vec::new();
    let mut groups = Vec::new();
    for q in &qs {
        let mut layer_bases: Vec<&Name> = Vec::new();
        for p in &q.params {
            let b = param_base(p).expect("lambda parameter");
            if !layer_bases.contains(&b) {
                layer_bases.push(b);
            }
        }
        for b in layer_bases {
            if !bases.insert(b.clone()) {
                return Err(ReduceError::BadMap(format!("{b} is bound by more than one layer")));
            }
            let ps: Vec<Expr> = q.params.iter().filter(|p| param_base(p) == Some(b)).cloned().collect();
            let key = if ps[0].tag() == ExprKind::Variable { ps[0].clone() } else { Expr::tuple(ps.clone()) };
            let Some((k, value)) = map.entries().iter().find(|(k, _)| *k == key) else { continue };
            used_keys.push(k);
            match value.entries() {
                Some(vs) if key.tag() == ExprKind::ExprTuple => groups.extend(match_params(&ps, vs)?),
                _ => groups.push((key.clone(), vec![value.clone()])),
            }
        }
    }
    for (k, _) in map.entries() {
        if !used_keys.iter().any(|u| Expr::ptr_eq(u, k)) {
            return Err(ReduceError::BadMap(format!("{k} does not name parameters of the instantiated layers")));
        }
    }

    let mut engine = Engine::new(opts, assumptions);
    let ctx = engine.bind(&groups, map.alternatives(), Ctx::default())?;
    let mut conditions = Vec::new();
    for q in &qs {
        for c in q.conditions() {
            conditions.extend(engine.subst_entries(&c, &ctx)?);
        }
    }
    let mut body_ctx = ctx;
    body_ctx.scope = conditions.clone();
    let expr = engine.subst(&qs.last().expect("one layer").body, &body_ctx)?;
    let r = engine.finish(expr);
    Ok(Instantiation {
        expr: r.expr,
        conditions: conditions
            .into_iter()
            .map(|expr| Obligation { expr, scope: vec![], bound: vec![], kind: ObligationKind::Condition })
            .collect(),
        requirements: r.requirements,
        assumptions_used: r.assumptions_used,
        fuel_used: r.fuel_used,
    })
}

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::canon::param_base;
use crate::node::{Expr, Kind, Name};

/// Variables occurring outside every lambda scope that binds them.
///
/// An IndexedVar reports its base variable. Parameter indices and range
/// bounds belong to the enclosing scope.
pub fn free_vars(e: &Expr) -> Arc<BTreeSet<Name>> {
    e.0.free.get_or_init(|| stacker::maybe_grow(64 * 1024, 1024 * 1024, || Arc::new(compute(e)))).clone()
}

pub fn is_closed(e: &Expr) -> bool {
    free_vars(e).is_empty()
}

pub fn occurs_free(e: &Expr, name: &str) -> bool {
    free_vars(e).contains(name)
}

fn compute(e: &Expr) -> BTreeSet<Name> {
    match e.kind() {
        Kind::Variable(n) => BTreeSet::from([n.clone()]),
        Kind::Literal { .. } => BTreeSet::new(),
        Kind::Lambda { params, body } => {
            let ps = params.entries().expect("tuple params");
            let mut out: BTreeSet<Name> = free_vars(body).iter().cloned().collect();
            for p in ps {
                if let Some(b) = param_base(p) {
                    out.remove(b);
                }
            }
            for p in ps {
                out.extend(param_free(p));
            }
            out
        }
        _ => {
            let mut out = BTreeSet::new();
            for c in e.children() {
                out.extend(free_vars(c).iter().cloned());
            }
            out
        }
    }
}

fn param_free(p: &Expr) -> BTreeSet<Name> {
    let mut out = BTreeSet::new();
    match p.kind() {
        Kind::Indexed { indices, .. } => {
            for i in indices {
                out.extend(free_vars(i).iter().cloned());
            }
        }
        Kind::Range { lambda, start, end } => {
            let (ps, body) = lambda.as_lambda().expect("range lambda");
            let k = ps[0].as_var().expect("range parameter");
            if let Some((_, indices)) = body.as_indexed() {
                for i in indices {
                    out.extend(free_vars(i).iter().filter(|n| *n != k).cloned());
                }
            }
            out.extend(free_vars(start).iter().cloned());
            out.extend(free_vars(end).iter().cloned());
        }
        _ => {}
    }
    out
}

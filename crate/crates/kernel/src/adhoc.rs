use std::collections::BTreeMap;

use pvk_cert::{ItemKind, ItemRef, Status, TheoryLookup};
use pvk_expr::Expr;

/// A small in-memory theory for experiments and tests: axioms plus
/// theorems with fixed statuses and direct dependencies.
#[derive(Clone, Debug, Default)]
pub struct AdHocTheory {
    items: BTreeMap<String, (ItemKind, Expr, Status, Vec<String>)>,
}

impl AdHocTheory {
    pub fn axiom(mut self, name: &str, statement: Expr) -> Self {
        self.items.insert(name.to_string(), (ItemKind::Axiom, statement, Status::FullyProven, vec![]));
        self
    }

    pub fn theorem(mut self, name: &str, statement: Expr, status: Status, dependencies: &[&str]) -> Self {
        let deps = dependencies.iter().map(|d| d.to_string()).collect();
        self.items.insert(name.to_string(), (ItemKind::Theorem, statement, status, deps));
        self
    }
}

impl TheoryLookup for AdHocTheory {
    fn item(&self, name: &str) -> Option<ItemRef> {
        self.items.get(name).map(|(kind, statement, status, _)| ItemRef {
            name: name.to_string(),
            kind: *kind,
            statement: statement.clone(),
            status: *status,
        })
    }

    fn axioms_required(&self, name: &str) -> Vec<String> {
        let mut out = std::collections::BTreeSet::new();
        let mut stack = vec![name.to_string()];
        let mut seen = std::collections::BTreeSet::new();
        while let Some(n) = stack.pop() {
            if !seen.insert(n.clone()) {
                continue;
            }
            match self.items.get(&n) {
                Some((ItemKind::Axiom, ..)) => {
                    out.insert(n);
                }
                Some((_, _, _, deps)) => stack.extend(deps.iter().cloned()),
                None => {}
            }
        }
        out.into_iter().collect()
    }
}

use std::fmt;

use pvk_expr::Expr;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ItemKind {
    Axiom,
    Theorem,
}

/// Proof status of a theory item. Axioms count as fully proven.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "conjecture")]
    Conjecture,
    #[serde(rename = "proven-with-conjectures")]
    ProvenWithConjectures,
    #[serde(rename = "fully-proven")]
    FullyProven,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Conjecture => "conjecture",
            Status::ProvenWithConjectures => "proven-with-conjectures",
            Status::FullyProven => "fully-proven",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct ItemRef {
    pub name: String,
    pub kind: ItemKind,
    pub statement: Expr,
    pub status: Status,
}

/// Read access to a set of registered axioms and theorems, keyed by dotted
/// full name (`logic.booleans.axiom1`).
pub trait TheoryLookup {
    fn item(&self, name: &str) -> Option<ItemRef>;

    /// Axioms at the leaves of the item's dependency closure. An axiom
    /// requires itself; an unproven conjecture requires nothing.
    fn axioms_required(&self, name: &str) -> Vec<String>;
}

impl<T: TheoryLookup + ?Sized> TheoryLookup for &T {
    fn item(&self, name: &str) -> Option<ItemRef> {
        (**self).item(name)
    }
    fn axioms_required(&self, name: &str) -> Vec<String> {
        (**self).axioms_required(name)
    }
}

impl<T: TheoryLookup + ?Sized> TheoryLookup for std::sync::Arc<T> {
    fn item(&self, name: &str) -> Option<ItemRef> {
        (**self).item(name)
    }
    fn axioms_required(&self, name: &str) -> Vec<String> {
        (**self).axioms_required(name)
    }
}

/// Splits `a.b.c` into `("a.b", "c")`.
pub fn split_name(full: &str) -> Option<(&str, &str)> {
    full.rsplit_once('.').filter(|(p, n)| !p.is_empty() && !n.is_empty())
}

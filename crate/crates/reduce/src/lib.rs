//! Substitution and beta reduction over expression DAGs.
//!
//! A lambda applied to operands is reduced by matching its parameters against
//! the operand entries, then replacing throughout the body. Parameters of the
//! form `x_1, ..., x_n` absorb a slice of operands, so the body's ranges over
//! `x` expand entry by entry. Anything the reduction cannot check by itself
//! (lengths, index tuples, empty extents, equality reductions) comes back as
//! an [`Obligation`] for the caller to discharge.
//!
//! ```
//! use pvk_expr::vocab::dsl::*;
//! use pvk_reduce::{apply_lambda, Options};
//!
//! let f = lambda(vec![var("x")], add(vec![var("x"), num(1)]));
//! let r = apply_lambda(&f, &[var("y")], &[], &Options::default()).unwrap();
//! assert_eq!(r.expr, add(vec![var("y"), num(1)]));
//! assert!(r.requirements.is_empty());
//! ```

mod engine;
mod error;
mod instantiate;
mod map;

use std::collections::BTreeSet;

use pvk_expr::vocab::{pkg, sym};
use pvk_expr::{Expr, Name};

pub use engine::{
    apply_lambda, apply_lambda_with, equality_reduce, expand_range, reduce_range, relabel_for_capture,
    replace_operation,
};
pub use error::{ReduceError, Result};
pub use instantiate::{instantiate, Instantiation};
pub use map::ReplacementMap;

pub const DEFAULT_FUEL: u64 = 10_000;

/// Automatic rewrites of unary conjunctions and disjunctions that appear when
/// a range shrinks to one entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EqReduction {
    UnaryConjunction,
    UnaryDisjunction,
}

impl EqReduction {
    pub const ALL: [EqReduction; 2] = [EqReduction::UnaryConjunction, EqReduction::UnaryDisjunction];

    pub fn name(self) -> &'static str {
        match self {
            EqReduction::UnaryConjunction => "unary_conjunction",
            EqReduction::UnaryDisjunction => "unary_disjunction",
        }
    }

    pub fn from_name(s: &str) -> Option<EqReduction> {
        EqReduction::ALL.into_iter().find(|r| r.name() == s)
    }

    /// The reduction that applies to this operation, if any.
    pub fn for_expr(e: &Expr) -> Option<EqReduction> {
        if e.is_op(pkg::CONJUNCTION, "And") {
            Some(EqReduction::UnaryConjunction)
        } else if e.is_op(pkg::DISJUNCTION, "Or") {
            Some(EqReduction::UnaryDisjunction)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Beta reductions allowed before giving up.
    pub fuel: u64,
    pub equality_reductions: BTreeSet<EqReduction>,
    /// Drop ranges known to be empty and collapse ranges known to be singular.
    pub range_reductions: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            fuel: DEFAULT_FUEL,
            equality_reductions: EqReduction::ALL.into_iter().collect(),
            range_reductions: true,
        }
    }
}

impl Options {
    /// Substitution only: no range or equality reductions.
    pub fn preserve_all() -> Self {
        Options { equality_reductions: BTreeSet::new(), range_reductions: false, ..Options::default() }
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }
}

/// Why an obligation was emitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObligationKind {
    /// An instantiated condition of a universal.
    Condition,
    /// `|(slice)| = |(s, ..., e)|` for a range parameter.
    Length,
    /// An alternative parameter expansion indexes the same positions.
    Index,
    /// An alternative replacement equals the main one.
    Expansion,
    /// A range was dropped as empty or collapsed as singular.
    Extent,
    /// An equality reduction `e = e'` was applied.
    Equality,
}

impl ObligationKind {
    pub fn name(self) -> &'static str {
        match self {
            ObligationKind::Condition => "condition",
            ObligationKind::Length => "length",
            ObligationKind::Index => "index",
            ObligationKind::Expansion => "expansion",
            ObligationKind::Extent => "extent",
            ObligationKind::Equality => "equality",
        }
    }
}

/// A judgment the caller must establish for the reduction to stand.
///
/// `scope` holds conditions of enclosing Conditionals at the site, which may
/// be assumed. `bound` lists names bound by enclosing lambdas in the result;
/// the obligation holds for arbitrary values of them, so no outside
/// assumption about them may be used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obligation {
    pub expr: Expr,
    pub scope: Vec<Expr>,
    pub bound: Vec<Name>,
    pub kind: ObligationKind,
}

impl Obligation {
    pub fn is_eq_replacement(&self) -> bool {
        self.kind == ObligationKind::Equality
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub expr: Expr,
    pub requirements: Vec<Obligation>,
    pub assumptions_used: Vec<Expr>,
    pub fuel_used: u64,
}

impl Reduction {
    pub fn eq_requirements(&self) -> impl Iterator<Item = &Obligation> {
        self.requirements.iter().filter(|o| o.is_eq_replacement())
    }
}

/// `(s, ..., e)` as an index tuple entry.
pub fn index_range(s: &Expr, e: &Expr) -> Expr {
    Expr::range_over("_a", Expr::var("_a"), s.clone(), e.clone())
}

fn len_of(entries: Vec<Expr>) -> Expr {
    Expr::operation(sym::len(), Expr::tuple(vec![Expr::tuple(entries)])).expect("Len operation")
}

fn equals(a: Expr, b: Expr) -> Expr {
    Expr::operation(sym::equals(), Expr::tuple(vec![a, b])).expect("Equals operation")
}

fn plus_one(e: &Expr) -> Expr {
    Expr::operation(sym::add(), Expr::tuple(vec![e.clone(), sym::num(1)])).expect("Add operation")
}

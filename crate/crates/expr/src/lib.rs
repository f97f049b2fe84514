//! Expression DAGs for the kernel.
//!
//! Every [`Expr`] is one of nine primitive kinds and is interned: building the
//! same structure twice yields the same shared node. Identity ([`ExprId`]) is
//! the digest of the alpha-canonical form, so lambdas differing only in
//! relabel-able parameter names are equal.
//!
//! ```
//! use pvk_expr::vocab::dsl::*;
//!
//! let a = lambda(vec![var("x")], add(vec![var("x"), num(1)]));
//! let b = lambda(vec![var("y")], add(vec![var("y"), num(1)]));
//! assert_eq!(a.id(), b.id());
//! assert!(!a.same_labels(&b));
//! ```

mod canon;
pub mod composite;
mod digest;
mod error;
mod free;
mod intern;
mod node;
pub mod sexpr;
pub mod vocab;

pub use canon::{
    canonical_form, dummy_name, first_unused_dummy, is_relabelable, param_base, rename_free, rename_param_base,
    replace_literal,
};
pub use digest::ExprId;
pub use error::{ExprError, Result};
pub use free::{free_vars, is_closed, occurs_free};
pub use intern::live_nodes;
pub use node::{build, Expr, ExprKind, Kind, Name, Part};
pub use sexpr::{parse, parse_all, to_sexpr, to_sexpr_pretty};

/// Identity of an expression; shorthand for [`Expr::id`].
pub fn expr_id(e: &Expr) -> ExprId {
    e.id()
}

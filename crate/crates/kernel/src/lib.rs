//! The trusted core: judgments and the rules that produce them.
//!
//! A [`Judgment`] `{A_1, ..., A_n} ⊢ B` has no public constructor. Every one
//! comes out of a [`Prover`] rule (assumption, invocation, modus ponens,
//! deduction, instantiation, generalization or literal generalization) and
//! remembers the step that made it, so [`export_proof`] can lay the whole
//! derivation out as a certificate for the independent checker.
//!
//! ```
//! use std::sync::Arc;
//! use pvk_expr::vocab::dsl::*;
//! use pvk_kernel::{AdHocTheory, Prover};
//!
//! let mut p = Prover::new(Arc::new(AdHocTheory::default()));
//! let three = num(3);
//! let a = p.assume(&three);
//! let j = p.deduce(&a, &three);
//! assert_eq!(j.to_string(), "⊢ 3 ⇒ 3");
//! ```

mod adhoc;
mod error;
mod export;
mod judgment;
mod prover;
pub mod session;

pub use adhoc::AdHocTheory;
pub use error::{KernelError, Result};
pub use export::{export_proof, options_payload, payload_of, Proof, ProofStep};
pub use judgment::{Judgment, StepPayload};
pub use prover::{
    as_implication, assumed_consequent, generalization_conditions, implies, Leaves, Presumptions, Prover,
};
pub use session::{Script, Session, StepRequest};

pub use pvk_cert::{Rule, Status, TheoryLookup};

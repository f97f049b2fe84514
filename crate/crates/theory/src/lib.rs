//! Theory packages: named axioms and theorems, the proofs attached to
//! theorems, and the dependency graph those proofs induce.
//!
//! A theorem starts as a conjecture. Attaching a proof verifies it with the
//! independent checker, records what it invokes, and recomputes the status
//! of the theorem and of everything that depends on it.
//!
//! ```
//! use pvk_expr::vocab::dsl::*;
//! use pvk_cert::Status;
//! use pvk_kernel::export_proof;
//! use pvk_theory::Registry;
//!
//! let mut r = Registry::new();
//! r.register_axiom("toy", "top", t()).unwrap();
//! r.register_theorem("toy", "top_again", t()).unwrap();
//! assert_eq!(r.get("toy.top_again").unwrap().status, Status::Conjecture);
//!
//! let mut p = r.prover_for("toy.top_again").unwrap();
//! let j = p.invoke("toy.top").unwrap();
//! let cert = export_proof(&j).to_certificate();
//! assert_eq!(r.attach_proof("toy.top_again", &cert, None).unwrap(), Status::FullyProven);
//! assert_eq!(r.dependency_report("toy.top_again").unwrap().axioms, ["toy.top"]);
//! ```

mod error;
mod registry;
pub mod scripts;
pub mod sqrt2;
pub mod stdlib;
mod store;

pub use error::{Result, TheoryError};
pub use registry::{DependencyReport, Item, Registry};
pub use stdlib::load_stdlib;
pub use store::TheoryStore;

//! Interactive proving sessions over HTTP/JSON.
//!
//! A session wraps a kernel [`pvk_kernel::Session`] bound to an immutable
//! theory snapshot. Steps are kernel [`pvk_kernel::StepRequest`]s with
//! expressions in s-expression text; a failed step leaves the session as
//! it was. Successful steps go to an append-only JSON-lines event log that
//! [`Service::replay`] turns back into identical sessions.
//!
//! | method | path | |
//! |---|---|---|
//! | POST | `/sessions` | `{snapshot?, presumptions?}` |
//! | GET | `/sessions/{id}` | |
//! | POST | `/sessions/{id}/steps` | a step request |
//! | GET | `/sessions/{id}/judgments/{n}` | |
//! | GET | `/sessions/{id}/judgments/{n}/proof?format=json\|latex-table\|text-table` | |
//! | GET | `/theories/{package}?snapshot=` | items with statuses |
//! | GET | `/studio` | placeholder page |
//!
//! Errors are `{code, message, details}`.

mod error;
mod routes;
mod state;

pub use error::ApiError;
pub use routes::router;
pub use state::{Event, LiveSession, PresumptionSpec, Service, DEFAULT_SNAPSHOT};

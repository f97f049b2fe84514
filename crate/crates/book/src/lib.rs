//! The guide under `book/`, one module per chapter so `cargo test` runs
//! every Rust sample in it.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/expressions.md")]
pub mod expressions {}

#[doc = include_str!("../../../book/src/notation.md")]
pub mod notation {}

#[doc = include_str!("../../../book/src/reductions.md")]
pub mod reductions {}

#[doc = include_str!("../../../book/src/proving.md")]
pub mod proving {}

#[doc = include_str!("../../../book/src/certificates.md")]
pub mod certificates {}

#[doc = include_str!("../../../book/src/theories.md")]
pub mod theories {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../book/src/service.md")]
pub mod service {}

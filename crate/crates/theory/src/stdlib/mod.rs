//! The bundled standard library.
//!
//! [`build`] constructs it from the definitions in [`axioms`] and proves
//! the bundled theorems; the `pvk-gen-stdlib` binary writes the result to
//! `theories/`, and [`load_stdlib`] reads those files back from the copy
//! embedded at compile time, checking the pinned index digest first.

pub mod axioms;
#[rustfmt::skip]
mod files;

use std::collections::BTreeMap;

use pvk_cert::layout::{file_digest, render_files, TheoryDir};
use pvk_kernel::export_proof;

use crate::error::{Result, TheoryError};
use crate::registry::Registry;
use crate::{scripts, sqrt2};

pub use files::{FILES, INDEX_DIGEST};

/// The standard library built from source, proofs included.
pub fn build() -> Registry {
    let mut r = Registry::new();
    axioms::register_all(&mut r);
    let (pkg, name) = pvk_cert::split_name(scripts::EXCLUDED_MIDDLE).expect("dotted name");
    r.register_theorem(pkg, name, scripts::excluded_middle_statement()).expect("registers");
    let (pkg, name) = pvk_cert::split_name(sqrt2::THEOREM).expect("dotted name");
    r.register_theorem(pkg, name, sqrt2::statement()).expect("registers");

    let prover = r.prover_for(scripts::EXCLUDED_MIDDLE).expect("registered");
    let j = scripts::run(&scripts::excluded_middle(), prover).expect("excluded middle derives");
    let cert = export_proof(&j).to_certificate();
    r.attach_proof(scripts::EXCLUDED_MIDDLE, &cert, None).expect("excluded middle verifies");
    r
}

/// `(path, contents)` for every file of the built library.
pub fn render(r: &Registry) -> Vec<(String, String)> {
    render_files(&r.to_packages())
}

/// The embedded library, checked against the pinned index digest.
pub fn load_stdlib() -> Result<Registry> {
    let files: BTreeMap<&str, &str> = FILES.iter().copied().collect();
    let index = files.get("index.json").ok_or_else(|| TheoryError::FixtureCorrupt("index.json is missing".into()))?;
    let actual = file_digest(index.as_bytes());
    if actual != INDEX_DIGEST {
        return Err(TheoryError::FixtureCorrupt(format!("index.json has digest {actual}, expected {INDEX_DIGEST}")));
    }
    Registry::from_dir(&TheoryDir::load_from(&files)?)
}

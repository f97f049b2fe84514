//! Whole-directory verification of a stored theory.

use std::collections::{BTreeMap, BTreeSet};

use pvk_cert::layout::{Section, TheoryDir};
use pvk_cert::Status;
use serde::Serialize;

use crate::{verify_proof, ParsedProof, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub name: String,
    pub recorded: Status,
    pub computed: Status,
    pub errors: Vec<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoryReport {
    pub pass: bool,
    pub theorems: Vec<TheoremReport>,
}

fn error(kind: &str, message: String) -> Verdict {
    Verdict::Error { kind: kind.to_string(), message, missing: None }
}

/// Checks every stored proof against the directory, then recomputes each
/// theorem's status from its dependencies and compares it with the index.
pub fn verify_theory_dir(dir: &TheoryDir) -> TheoryReport {
    let theorems: Vec<_> = dir.section(Section::Theorems).collect();
    let mut errors: BTreeMap<String, Vec<Verdict>> = BTreeMap::new();
    let mut proven: BTreeSet<String> = BTreeSet::new();

    for t in &theorems {
        let name = t.full_name();
        let errs = errors.entry(name.clone()).or_default();
        let Some(cert) = &t.proof else { continue };
        let parsed = match cert.decode() {
            Ok(steps) if !steps.is_empty() => ParsedProof { certificate: cert.clone(), steps },
            Ok(_) => {
                errs.push(error("Malformed", "empty proof".into()));
                continue;
            }
            Err(e) => {
                errs.push(error(e.code(), e.to_string()));
                continue;
            }
        };
        let report = verify_proof(&parsed, dir);
        if let Some(v) = report.first_error() {
            errs.push(v.clone());
        }
        let root = &parsed.steps[0];
        if !root.assumptions.is_empty() || root.consequent != t.statement {
            errs.push(error("RuleViolation", format!("the proof does not conclude ⊢ {}", t.statement)));
        }
        let used: BTreeSet<String> = report.axioms.iter().chain(&report.theorems).cloned().collect();
        let declared: BTreeSet<String> = t.dependencies.iter().cloned().collect();
        if used != declared {
            errs.push(error(
                "FixtureCorrupt",
                format!("recorded dependencies {declared:?} differ from the proof's {used:?}"),
            ));
        }
        if errs.is_empty() {
            proven.insert(name);
        }
    }

    // Statuses, depth first; a theorem on a cycle is never fully proven.
    let mut computed: BTreeMap<String, Status> = BTreeMap::new();
    let mut on_path: BTreeSet<String> = BTreeSet::new();
    for t in &theorems {
        status_of(&t.full_name(), dir, &proven, &mut computed, &mut on_path, &mut errors);
    }

    let reports: Vec<TheoremReport> = theorems
        .iter()
        .map(|t| {
            let name = t.full_name();
            let computed = computed[&name];
            let mut errs = errors.remove(&name).unwrap_or_default();
            if computed != t.status {
                errs.push(error(
                    "FixtureCorrupt",
                    format!("index records {} but the proofs give {}", t.status, computed),
                ));
            }
            TheoremReport { name, recorded: t.status, computed, errors: errs }
        })
        .collect();
    TheoryReport { pass: reports.iter().all(|r| r.errors.is_empty()), theorems: reports }
}

fn status_of(
    name: &str,
    dir: &TheoryDir,
    proven: &BTreeSet<String>,
    computed: &mut BTreeMap<String, Status>,
    on_path: &mut BTreeSet<String>,
    errors: &mut BTreeMap<String, Vec<Verdict>>,
) -> Status {
    if let Some(s) = computed.get(name) {
        return *s;
    }
    if !proven.contains(name) {
        computed.insert(name.to_string(), Status::Conjecture);
        return Status::Conjecture;
    }
    if !on_path.insert(name.to_string()) {
        errors
            .entry(name.to_string())
            .or_default()
            .push(error("CircularDependency", format!("{name} depends on itself")));
        return Status::ProvenWithConjectures;
    }
    let mut status = Status::FullyProven;
    let deps = dir.items.get(name).map(|i| i.dependencies.clone()).unwrap_or_default();
    for d in deps {
        if dir.items.get(&d).is_some_and(|i| i.section == Section::Theorems)
            && status_of(&d, dir, proven, computed, on_path, errors) != Status::FullyProven
        {
            status = Status::ProvenWithConjectures;
        }
    }
    on_path.remove(name);
    computed.insert(name.to_string(), status);
    status
}

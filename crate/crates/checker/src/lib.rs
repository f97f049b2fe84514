//! Re-verifies proof certificates from first principles.
//!
//! The checker links only the expression core, the reduction engine and the
//! certificate format. Each step is checked by re-executing its rule against
//! the judgments of its requirement steps, leaves first, so nothing the
//! prover did is taken on trust except the theory's statements.
//!
//! ```
//! use pvk_checker::{parse_certificate, verify_proof};
//! use pvk_cert::{layout::TheoryDir, Certificate, Payload, Rule, Step, judgment_digest};
//! use pvk_expr::{to_sexpr, vocab::dsl::*};
//!
//! let a = var("A");
//! let cert = Certificate::new(vec![], vec![Step {
//!     index: 0,
//!     rule: Rule::Assumption,
//!     assumptions: vec![to_sexpr(&a)],
//!     consequent: to_sexpr(&a),
//!     requirements: vec![],
//!     payload: Payload::None,
//!     digest: judgment_digest(&[a.clone()], &a),
//! }]);
//! let parsed = parse_certificate(cert.to_json().as_bytes()).unwrap();
//! assert!(verify_proof(&parsed, &TheoryDir::default()).pass);
//! ```

mod rules;
pub mod theory;

use std::collections::BTreeSet;
use std::path::Path;

use pvk_cert::{CertError, Certificate, DecodedStep, Payload, Rule, Status, TheoryLookup};
use serde::Serialize;
use thiserror::Error;

pub use rules::verify_step;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("{rule}: {message}")]
    RuleViolation { rule: Rule, message: String, missing: Option<String> },
    #[error("antecedent mismatch: expected {expected}, got {found}")]
    AntecedentMismatch { expected: String, found: String },
    #[error("unknown theory item {0}")]
    UnknownTheoryItem(String),
    #[error("requirement {requirement} of step {index} does not come after it")]
    OrderingViolation { index: usize, requirement: usize },
    #[error("{0}")]
    HashMismatch(String),
    #[error("{0} is not fully proven")]
    NotFullyProven(String),
}

impl CheckError {
    pub fn code(&self) -> &'static str {
        match self {
            CheckError::RuleViolation { .. } => "RuleViolation",
            CheckError::AntecedentMismatch { .. } => "AntecedentMismatch",
            CheckError::UnknownTheoryItem(_) => "UnknownTheoryItem",
            CheckError::OrderingViolation { .. } => "OrderingViolation",
            CheckError::HashMismatch(_) => "HashMismatch",
            CheckError::NotFullyProven(_) => "NotFullyProven",
        }
    }

    pub(crate) fn rule(rule: Rule, message: impl Into<String>) -> Self {
        CheckError::RuleViolation { rule, message: message.into(), missing: None }
    }
}

/// A certificate whose expressions have been parsed and digests confirmed.
#[derive(Clone, Debug)]
pub struct ParsedProof {
    pub certificate: Certificate,
    pub steps: Vec<DecodedStep>,
}

pub fn parse_certificate(bytes: &[u8]) -> Result<ParsedProof, CertError> {
    let certificate = Certificate::from_bytes(bytes)?;
    let steps = certificate.decode()?;
    if steps.is_empty() {
        return Err(CertError::Malformed { index: 0, message: "a proof needs at least one step".into() });
    }
    Ok(ParsedProof { certificate, steps })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Ok,
    Error {
        kind: String,
        message: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        missing: Option<String>,
    },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }

    fn from_error(e: &CheckError) -> Verdict {
        let missing = match e {
            CheckError::RuleViolation { missing, .. } => missing.clone(),
            _ => None,
        };
        Verdict::Error { kind: e.code().to_string(), message: e.to_string(), missing }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepVerdict {
    pub index: usize,
    pub rule: Rule,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub steps: Vec<StepVerdict>,
    /// Problems with the certificate as a whole.
    pub errors: Vec<Verdict>,
    pub axioms: Vec<String>,
    pub theorems: Vec<String>,
    pub conjectures: Vec<String>,
    /// Digest of the root judgment.
    pub root: String,
}

impl VerificationReport {
    /// First error, certificate-level ones before step verdicts.
    pub fn first_error(&self) -> Option<&Verdict> {
        self.errors.iter().chain(self.steps.iter().map(|s| &s.verdict)).find(|v| !v.is_ok())
    }

    pub fn error_kinds(&self) -> BTreeSet<String> {
        self.errors
            .iter()
            .chain(self.steps.iter().map(|s| &s.verdict))
            .filter_map(|v| match v {
                Verdict::Error { kind, .. } => Some(kind.clone()),
                Verdict::Ok => None,
            })
            .collect()
    }
}

/// Axiom and theorem leaves reachable from `root`, leaving out axioms a
/// literal generalization eliminated.
pub fn leaves(steps: &[DecodedStep], root: usize) -> (BTreeSet<String>, BTreeSet<String>) {
    let mut axioms = BTreeSet::new();
    let mut theorems = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut stack = vec![root];
    while let Some(i) = stack.pop() {
        if !seen.insert(i) {
            continue;
        }
        let Some(s) = steps.get(i) else { continue };
        match (&s.rule, &s.payload) {
            (Rule::AxiomInvocation, Payload::Invocation { name }) => {
                axioms.insert(name.clone());
            }
            (Rule::TheoremInvocation, Payload::Invocation { name }) => {
                theorems.insert(name.clone());
            }
            (Rule::LiteralGeneralization, Payload::LiteralGeneralization { eliminated, .. }) => {
                if let Some(&r) = s.requirements.first().filter(|&&r| r > i) {
                    let (a, t) = leaves(steps, r);
                    axioms.extend(a.into_iter().filter(|x| !eliminated.contains(x)));
                    theorems.extend(t);
                }
            }
            _ => stack.extend(s.requirements.iter().copied().filter(|&r| r > i)),
        }
    }
    (axioms, theorems)
}

/// Verifies every step, leaves first.
pub fn verify_proof(proof: &ParsedProof, theory: &dyn TheoryLookup) -> VerificationReport {
    let steps = &proof.steps;
    let n = steps.len();
    let mut verdicts = vec![Verdict::Ok; n];
    let mut errors = Vec::new();

    let mut required = vec![false; n];
    required[0] = true;
    for i in (0..n).rev() {
        let s = &steps[i];
        let bad = s.requirements.iter().find(|&&r| r <= i || r >= n);
        let result = match bad {
            Some(&r) => Err(CheckError::OrderingViolation { index: i, requirement: r }),
            None => verify_step(s, steps, theory, &proof.certificate),
        };
        if let Err(e) = result {
            verdicts[i] = Verdict::from_error(&e);
        }
    }
    for s in steps {
        for &r in &s.requirements {
            if r > s.index && r < n {
                required[r] = true;
            }
        }
    }
    for (i, r) in required.iter().enumerate() {
        if !r && verdicts[i].is_ok() {
            verdicts[i] = Verdict::from_error(&CheckError::rule(steps[i].rule, "no earlier step requires this step"));
        }
    }

    let (axioms, theorems) = leaves(steps, 0);
    let invoked: BTreeSet<&str> = steps
        .iter()
        .filter_map(|s| match &s.payload {
            Payload::Invocation { name } => Some(name.as_str()),
            _ => None,
        })
        .collect();
    let refs: BTreeSet<&str> = proof.certificate.theory_refs.iter().map(|r| r.name.as_str()).collect();
    if refs != invoked {
        errors.push(Verdict::from_error(&CheckError::HashMismatch(format!(
            "theory_refs {refs:?} do not match the invoked items {invoked:?}"
        ))));
    }
    for r in &proof.certificate.theory_refs {
        if let Some(item) = theory.item(&r.name) {
            let actual = item.statement.id().to_hex();
            if actual != r.digest {
                errors.push(Verdict::from_error(&CheckError::HashMismatch(format!(
                    "{} has digest {actual}, certificate expects {}",
                    r.name, r.digest
                ))));
            }
        }
    }
    let conjectures =
        theorems.iter().filter(|t| theory.item(t).is_some_and(|i| i.status == Status::Conjecture)).cloned().collect();

    let pass = errors.is_empty() && verdicts.iter().all(Verdict::is_ok);
    VerificationReport {
        pass,
        steps: steps
            .iter()
            .zip(verdicts)
            .map(|(s, verdict)| StepVerdict { index: s.index, rule: s.rule, verdict })
            .collect(),
        errors,
        axioms: axioms.into_iter().collect(),
        theorems: theorems.into_iter().collect(),
        conjectures,
        root: proof.certificate.steps[0].digest.clone(),
    }
}

/// Outcome of checking a certificate file.
#[derive(Clone, Debug)]
pub enum Outcome {
    Verified(VerificationReport),
    ParseError(CertError),
}

impl Outcome {
    /// 0 on pass, 1 on failure, 2 when the file could not be parsed. A
    /// digest that disagrees with its step is a failure, not a parse error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Verified(r) if r.pass => 0,
            Outcome::Verified(_) | Outcome::ParseError(CertError::HashMismatch { .. }) => 1,
            Outcome::ParseError(_) => 2,
        }
    }

    pub fn passed(&self) -> bool {
        self.exit_code() == 0
    }
}

pub fn verify_bytes(bytes: &[u8], theory: &dyn TheoryLookup) -> Outcome {
    match parse_certificate(bytes) {
        Ok(p) => Outcome::Verified(verify_proof(&p, theory)),
        Err(e) => Outcome::ParseError(e),
    }
}

pub fn verify_certificate(path: &Path, theory: &dyn TheoryLookup) -> Outcome {
    match std::fs::read(path) {
        Ok(bytes) => verify_bytes(&bytes, theory),
        Err(e) => Outcome::ParseError(CertError::Io(format!("{}: {e}", path.display()))),
    }
}

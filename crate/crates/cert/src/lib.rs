//! Interchange formats: proof certificates and the on-disk theory layout.
//!
//! A certificate lists proof steps root first. Every requirement index is
//! larger than the index of the step that needs it, so a reader can verify
//! leaves first and never meet an unverified requirement. Expressions are
//! embedded as s-expression text and each step carries a digest of its
//! judgment, recomputed on decode.
//!
//! ```
//! use pvk_cert::{Certificate, Payload, Rule, Step, judgment_digest};
//! use pvk_expr::{to_sexpr, vocab::dsl::*};
//!
//! let a = var("A");
//! let step = Step {
//!     index: 0,
//!     rule: Rule::Assumption,
//!     assumptions: vec![to_sexpr(&a)],
//!     consequent: to_sexpr(&a),
//!     requirements: vec![],
//!     payload: Payload::None,
//!     digest: judgment_digest(&[a.clone()], &a),
//! };
//! let cert = Certificate::new(vec![], vec![step]);
//! let back = Certificate::from_json(&cert.to_json()).unwrap();
//! assert_eq!(back.decode().unwrap()[0].consequent, a);
//! ```

pub mod layout;
mod lookup;

use std::collections::BTreeSet;
use std::fmt;

use pvk_expr::{parse, Expr, ExprError};
use serde::{Deserialize, Serialize};
use sha2::{Digest as _, Sha256};
use thiserror::Error;

pub use lookup::{split_name, ItemKind, ItemRef, Status, TheoryLookup};

pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("syntax error at {line}:{col}: {message}")]
    SyntaxError { line: usize, col: usize, message: String },
    #[error("step {index}: declared digest {declared} but judgment hashes to {actual}")]
    HashMismatch { index: usize, declared: String, actual: String },
    #[error("step {index}: {message}")]
    Malformed { index: usize, message: String },
    #[error("unsupported certificate version {0}")]
    Version(u32),
    #[error("{0}")]
    Io(String),
}

impl CertError {
    pub fn code(&self) -> &'static str {
        match self {
            CertError::SyntaxError { .. } => "SyntaxError",
            CertError::HashMismatch { .. } => "HashMismatch",
            CertError::Malformed { .. } => "SyntaxError",
            CertError::Version(_) => "SyntaxError",
            CertError::Io(_) => "IoError",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Assumption,
    AxiomInvocation,
    TheoremInvocation,
    ModusPonens,
    Deduction,
    Instantiation,
    Generalization,
    LiteralGeneralization,
    Reference,
}

impl Rule {
    pub const ALL: [Rule; 9] = [
        Rule::Assumption,
        Rule::AxiomInvocation,
        Rule::TheoremInvocation,
        Rule::ModusPonens,
        Rule::Deduction,
        Rule::Instantiation,
        Rule::Generalization,
        Rule::LiteralGeneralization,
        Rule::Reference,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Assumption => "assumption",
            Rule::AxiomInvocation => "axiom_invocation",
            Rule::TheoremInvocation => "theorem_invocation",
            Rule::ModusPonens => "modus_ponens",
            Rule::Deduction => "deduction",
            Rule::Instantiation => "instantiation",
            Rule::Generalization => "generalization",
            Rule::LiteralGeneralization => "literal_generalization",
            Rule::Reference => "reference",
        }
    }

    /// The words used in proof tables.
    pub fn label(self) -> &'static str {
        match self {
            Rule::Assumption => "assumption",
            Rule::AxiomInvocation => "axiom",
            Rule::TheoremInvocation => "theorem",
            Rule::ModusPonens => "modus ponens",
            Rule::Deduction => "deduction",
            Rule::Instantiation => "instantiation",
            Rule::Generalization => "generalization",
            Rule::LiteralGeneralization => "literal generalization",
            Rule::Reference => "reference",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Reduction settings an instantiation was performed under.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionOptions {
    pub fuel: u64,
    pub equality_reductions: Vec<String>,
    pub range_reductions: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alternative {
    pub key: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstantiationPayload {
    /// `[key, value]` pairs in insertion order.
    pub map: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alternatives: Vec<Alternative>,
    pub layers: usize,
    /// Assumptions the reduction was allowed to consult.
    pub assumptions: Vec<String>,
    pub options: ReductionOptions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiteralMapping {
    pub literal: String,
    pub variable: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    None,
    Invocation { name: String },
    Instantiation(InstantiationPayload),
    Generalization { params: Vec<String>, extra_conditions: Vec<String> },
    LiteralGeneralization { mapping: Vec<LiteralMapping>, eliminated: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoryRef {
    pub name: String,
    /// Identity of the statement the proof relied on.
    pub digest: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub index: usize,
    pub rule: Rule,
    pub assumptions: Vec<String>,
    pub consequent: String,
    pub requirements: Vec<usize>,
    pub payload: Payload,
    pub digest: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub version: u32,
    pub theory_refs: Vec<TheoryRef>,
    pub steps: Vec<Step>,
}

/// A step with its expressions parsed and its digest confirmed.
#[derive(Clone, Debug)]
pub struct DecodedStep {
    pub index: usize,
    pub rule: Rule,
    pub assumptions: Vec<Expr>,
    pub consequent: Expr,
    pub requirements: Vec<usize>,
    pub payload: Payload,
}

/// SHA-256 over the judgment: assumption ids as a set, then the consequent id.
pub fn judgment_digest(assumptions: &[Expr], consequent: &Expr) -> String {
    let ids: BTreeSet<_> = assumptions.iter().map(Expr::id).collect();
    let mut h = Sha256::new();
    h.update(b"pvk-judgment-v1");
    h.update((ids.len() as u64).to_be_bytes());
    for id in &ids {
        h.update(id.as_bytes());
    }
    h.update(consequent.id().as_bytes());
    hex::encode(h.finalize())
}

/// Assumptions sorted by identity with duplicates dropped.
pub fn assumption_set(assumptions: impl IntoIterator<Item = Expr>) -> Vec<Expr> {
    let mut v: Vec<Expr> = assumptions.into_iter().collect();
    v.sort_by_key(Expr::id);
    v.dedup_by_key(|e| e.id());
    v
}

fn syntax(e: &serde_json::Error) -> CertError {
    CertError::SyntaxError { line: e.line(), col: e.column(), message: e.to_string() }
}

impl Certificate {
    pub fn new(theory_refs: Vec<TheoryRef>, steps: Vec<Step>) -> Self {
        Certificate { version: VERSION, theory_refs, steps }
    }

    pub fn from_json(src: &str) -> Result<Certificate, CertError> {
        let cert: Certificate = serde_json::from_str(src).map_err(|e| syntax(&e))?;
        if cert.version != VERSION {
            return Err(CertError::Version(cert.version));
        }
        Ok(cert)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Certificate, CertError> {
        let src = std::str::from_utf8(bytes).map_err(|e| CertError::SyntaxError {
            line: 1 + bytes[..e.valid_up_to()].iter().filter(|b| **b == b'\n').count(),
            col: 1,
            message: format!("invalid UTF-8: {e}"),
        })?;
        Certificate::from_json(src)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Parses every expression and recomputes every step digest.
    pub fn decode(&self) -> Result<Vec<DecodedStep>, CertError> {
        self.steps
            .iter()
            .enumerate()
            .map(|(pos, s)| {
                if s.index != pos {
                    return Err(CertError::Malformed {
                        index: pos,
                        message: format!("step at position {pos} is numbered {}", s.index),
                    });
                }
                let expr = |src: &str| {
                    parse(src).map_err(|e| match e {
                        ExprError::Syntax { line, col, message } => {
                            CertError::SyntaxError { line, col, message: format!("step {pos}: {message}") }
                        }
                        other => CertError::Malformed { index: pos, message: other.to_string() },
                    })
                };
                let assumptions = s.assumptions.iter().map(|a| expr(a)).collect::<Result<Vec<_>, _>>()?;
                let consequent = expr(&s.consequent)?;
                let actual = judgment_digest(&assumptions, &consequent);
                if actual != s.digest {
                    return Err(CertError::HashMismatch { index: pos, declared: s.digest.clone(), actual });
                }
                Ok(DecodedStep {
                    index: pos,
                    rule: s.rule,
                    assumptions: assumption_set(assumptions),
                    consequent,
                    requirements: s.requirements.clone(),
                    payload: s.payload.clone(),
                })
            })
            .collect()
    }

    /// Digest of what the certificate proves: the root judgment.
    pub fn root_digest(&self) -> Option<&str> {
        self.steps.first().map(|s| s.digest.as_str())
    }
}

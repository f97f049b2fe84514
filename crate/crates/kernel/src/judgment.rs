use std::fmt;
use std::sync::Arc;

use pvk_cert::{assumption_set, judgment_digest, Rule};
use pvk_expr::{Expr, Name};
use pvk_reduce::{Options, ReplacementMap};
use pvk_style::Target;

/// Rule-specific data recorded with a step.
#[derive(Clone, Debug)]
pub enum StepPayload {
    None,
    Invocation { name: String },
    Instantiation { map: ReplacementMap, layers: usize, assumptions: Vec<Expr>, options: Options },
    Generalization { params: Vec<Expr>, extra_conditions: Vec<Expr> },
    LiteralGeneralization { mapping: Vec<(Expr, Name)>, eliminated: Vec<String> },
}

struct Inner {
    assumptions: Vec<Expr>,
    consequent: Expr,
    rule: Rule,
    requirements: Vec<Judgment>,
    payload: StepPayload,
}

/// `{A_1, ..., A_n} ⊢ B` together with the step that established it.
///
/// Only the rules in this crate construct judgments. Two judgments are equal
/// when their assumption sets and consequents are, however they were proven.
///
/// Outside code cannot forge one:
///
/// ```compile_fail
/// use pvk_expr::vocab::dsl::*;
/// use pvk_kernel::{Judgment, Rule, StepPayload};
/// let _ = Judgment::new([], f(), Rule::Assumption, vec![], StepPayload::None);
/// ```
///
/// ```compile_fail
/// let _ = pvk_kernel::Judgment(todo!());
/// ```
#[derive(Clone)]
pub struct Judgment(Arc<Inner>);

impl Judgment {
    pub(crate) fn new(
        assumptions: impl IntoIterator<Item = Expr>,
        consequent: Expr,
        rule: Rule,
        requirements: Vec<Judgment>,
        payload: StepPayload,
    ) -> Judgment {
        Judgment(Arc::new(Inner { assumptions: assumption_set(assumptions), consequent, rule, requirements, payload }))
    }

    /// Assumptions sorted by expression identity, without duplicates.
    pub fn assumptions(&self) -> &[Expr] {
        &self.0.assumptions
    }

    pub fn consequent(&self) -> &Expr {
        &self.0.consequent
    }

    pub fn rule(&self) -> Rule {
        self.0.rule
    }

    pub fn requirements(&self) -> &[Judgment] {
        &self.0.requirements
    }

    pub fn payload(&self) -> &StepPayload {
        &self.0.payload
    }

    pub fn digest(&self) -> String {
        judgment_digest(&self.0.assumptions, &self.0.consequent)
    }

    /// Whether `a` is among the assumptions, by identity.
    pub fn assumes(&self, a: &Expr) -> bool {
        self.0.assumptions.binary_search_by_key(&a.id(), Expr::id).is_ok()
    }

    pub fn same_proof(a: &Judgment, b: &Judgment) -> bool {
        Arc::ptr_eq(&a.0, &b.0)
    }

    pub(crate) fn addr(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// Rendered with the default notation.
    pub fn render(&self, target: Target) -> String {
        let turnstile = match target {
            Target::Text => "⊢",
            Target::Latex => r"\vdash",
        };
        let c = pvk_style::format(&self.0.consequent, target);
        if self.0.assumptions.is_empty() {
            return format!("{turnstile} {c}");
        }
        let a: Vec<String> = self.0.assumptions.iter().map(|a| pvk_style::format(a, target)).collect();
        match target {
            Target::Text => format!("{{{}}} {turnstile} {c}", a.join(", ")),
            Target::Latex => format!(r"\{{{}\}} {turnstile} {c}", a.join(", ")),
        }
    }
}

impl PartialEq for Judgment {
    fn eq(&self, other: &Self) -> bool {
        self.0.consequent == other.0.consequent
            && self.0.assumptions.len() == other.0.assumptions.len()
            && self.0.assumptions.iter().zip(&other.0.assumptions).all(|(a, b)| a == b)
    }
}

impl Eq for Judgment {}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Target::Text))
    }
}

impl fmt::Debug for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Judgment({} by {})", self, self.0.rule)
    }
}

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use pvk_cert::{assumption_set, ItemKind, Rule, Status, TheoryLookup};
use pvk_expr::composite::{as_forall, quantifier};
use pvk_expr::vocab::{pkg, sym};
use pvk_expr::{free_vars, param_base, replace_literal, Expr, ExprId, ExprKind, Name};
use pvk_reduce::{Obligation, Options, ReplacementMap};

use crate::error::{KernelError, Result};
use crate::judgment::{Judgment, StepPayload};

/// Which theory items a proof may invoke.
///
/// An entry admits the item of that name and, read as a package path,
/// everything beneath it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presumptions {
    /// `None` admits every registered item.
    allowed: Option<BTreeSet<String>>,
    excluded: BTreeSet<String>,
}

fn covers(prefix: &str, name: &str) -> bool {
    name == prefix || (name.starts_with(prefix) && name.as_bytes().get(prefix.len()) == Some(&b'.'))
}

impl Presumptions {
    pub fn all() -> Self {
        Presumptions { allowed: None, excluded: BTreeSet::new() }
    }

    pub fn none() -> Self {
        Presumptions { allowed: Some(BTreeSet::new()), excluded: BTreeSet::new() }
    }

    pub fn only<I: IntoIterator<Item = S>, S: Into<String>>(names: I) -> Self {
        Presumptions { allowed: Some(names.into_iter().map(Into::into).collect()), excluded: BTreeSet::new() }
    }

    /// Removes individual items, even if a presumed package covers them.
    pub fn excluding<I: IntoIterator<Item = S>, S: Into<String>>(mut self, names: I) -> Self {
        self.excluded.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn allows(&self, name: &str) -> bool {
        if self.excluded.contains(name) {
            return false;
        }
        match &self.allowed {
            None => true,
            Some(set) => set.iter().any(|p| covers(p, name)),
        }
    }
}

/// Applies inference rules against a theory and remembers what it derived,
/// so that instantiation conditions can be found by lookup.
pub struct Prover {
    theory: Arc<dyn TheoryLookup + Send + Sync>,
    presumptions: Presumptions,
    derived: HashMap<ExprId, Vec<Judgment>>,
    order: Vec<Judgment>,
}

impl Prover {
    pub fn new(theory: Arc<dyn TheoryLookup + Send + Sync>) -> Self {
        Prover { theory, presumptions: Presumptions::all(), derived: HashMap::new(), order: Vec::new() }
    }

    pub fn with_presumptions(mut self, p: Presumptions) -> Self {
        self.presumptions = p;
        self
    }

    /// Replaces the set of items later invocations may use.
    pub fn presume(&mut self, p: Presumptions) {
        self.presumptions = p;
    }

    pub fn presumptions(&self) -> &Presumptions {
        &self.presumptions
    }

    pub fn theory(&self) -> &Arc<dyn TheoryLookup + Send + Sync> {
        &self.theory
    }

    /// Every judgment derived so far, oldest first.
    pub fn derived(&self) -> &[Judgment] {
        &self.order
    }

    /// Derived judgments with this consequent.
    pub fn proven(&self, consequent: &Expr) -> &[Judgment] {
        self.derived.get(&consequent.id()).map(Vec::as_slice).unwrap_or(&[])
    }

    fn record(&mut self, j: Judgment) -> Judgment {
        let slot = self.derived.entry(j.consequent().id()).or_default();
        if !slot.iter().any(|k| Judgment::same_proof(k, &j)) {
            slot.push(j.clone());
            self.order.push(j.clone());
        }
        j
    }

    fn cached_assumption(&self, a: &Expr) -> Option<Judgment> {
        self.proven(&assumed_consequent(a))
            .iter()
            .find(|j| j.rule() == Rule::Assumption && j.assumptions().len() == 1 && j.assumes(a))
            .cloned()
    }

    /// `{A} ⊢ A`; for a range `A_1, ..., A_m` the consequent is the
    /// conjunction `A_1 ∧ ... ∧ A_m`. Assuming the same expression twice
    /// returns the same judgment.
    pub fn assume(&mut self, a: &Expr) -> Judgment {
        if let Some(j) = self.cached_assumption(a) {
            return j;
        }
        let j = Judgment::new([a.clone()], assumed_consequent(a), Rule::Assumption, vec![], StepPayload::None);
        self.record(j)
    }

    pub fn invoke(&mut self, name: &str) -> Result<Judgment> {
        let item = self.theory.item(name).ok_or_else(|| KernelError::UnknownTheoryItem(name.to_string()))?;
        if !self.presumptions.allows(name) {
            return Err(KernelError::PresumptionViolation(name.to_string()));
        }
        let rule = match item.kind {
            ItemKind::Axiom => Rule::AxiomInvocation,
            ItemKind::Theorem => Rule::TheoremInvocation,
        };
        let j = Judgment::new([], item.statement, rule, vec![], StepPayload::Invocation { name: name.to_string() });
        Ok(self.record(j))
    }

    /// From `S ⊢ A ⇒ B` and `T ⊢ A`, derives `S ∪ T ⊢ B`.
    pub fn modus_ponens(&mut self, implication: &Judgment, antecedent: &Judgment) -> Result<Judgment> {
        let (a, b) = as_implication(implication.consequent())
            .ok_or_else(|| KernelError::NotAnImplication(implication.consequent().to_string()))?;
        if &a != antecedent.consequent() {
            return Err(KernelError::AntecedentMismatch {
                expected: a.to_string(),
                found: antecedent.consequent().to_string(),
            });
        }
        let assumptions = implication.assumptions().iter().chain(antecedent.assumptions()).cloned();
        let j = Judgment::new(
            assumptions,
            b,
            Rule::ModusPonens,
            vec![implication.clone(), antecedent.clone()],
            StepPayload::None,
        );
        Ok(self.record(j))
    }

    /// From `S ⊢ B`, derives `S \ {A} ⊢ A ⇒ B`.
    pub fn deduce(&mut self, j: &Judgment, antecedent: &Expr) -> Judgment {
        let assumptions = j.assumptions().iter().filter(|a| *a != antecedent).cloned();
        let consequent = implies(antecedent.clone(), j.consequent().clone());
        let out = Judgment::new(assumptions, consequent, Rule::Deduction, vec![j.clone()], StepPayload::None);
        self.record(out)
    }

    pub fn instantiate(
        &mut self,
        univ: &Judgment,
        map: &ReplacementMap,
        assumptions: &[Expr],
        layers: usize,
    ) -> Result<Judgment> {
        self.instantiate_with(univ, map, assumptions, layers, &Options::default())
    }

    /// Eliminates `layers` universal quantifiers.
    ///
    /// Each instantiated condition and each reduction requirement must
    /// already be proven: a derived judgment whose assumptions lie within
    /// `assumptions` (plus the obligation's own scope) is used if one exists,
    /// otherwise an obligation that is itself one of those assumptions is
    /// taken by assumption. The result keeps only the assumptions actually
    /// used.
    pub fn instantiate_with(
        &mut self,
        univ: &Judgment,
        map: &ReplacementMap,
        assumptions: &[Expr],
        layers: usize,
        opts: &Options,
    ) -> Result<Judgment> {
        if layers == 0 {
            return Err(KernelError::BadArgument("at least one layer must be instantiated".into()));
        }
        let mut cur = univ.consequent().clone();
        for _ in 0..layers {
            let q = as_forall(&cur)
                .ok_or_else(|| KernelError::NotUniversal { expr: univ.consequent().to_string(), layers })?;
            cur = q.body;
        }
        let supplied = assumption_set(assumptions.iter().cloned());
        let inst = pvk_reduce::instantiate(univ.consequent(), map, layers, &supplied, opts)?;

        let mut pending: Vec<Judgment> = Vec::new();
        let mut requirements = vec![univ.clone()];
        let mut result: Vec<Expr> = univ.assumptions().to_vec();
        for ob in inst.conditions.iter().chain(&inst.requirements) {
            let j = self.discharge(ob, &supplied, &mut pending)?;
            result.extend(j.assumptions().iter().filter(|a| !ob.scope.contains(a)).cloned());
            requirements.push(j);
        }
        result.extend(inst.assumptions_used);
        for j in pending {
            self.record(j);
        }
        let j = Judgment::new(
            result,
            inst.expr,
            Rule::Instantiation,
            requirements,
            StepPayload::Instantiation { map: map.clone(), layers, assumptions: supplied, options: opts.clone() },
        );
        Ok(self.record(j))
    }

    fn discharge(&self, ob: &Obligation, supplied: &[Expr], pending: &mut Vec<Judgment>) -> Result<Judgment> {
        let bound: BTreeSet<&Name> = ob.bound.iter().collect();
        let usable = |a: &Expr| {
            ob.scope.contains(a)
                || (supplied.binary_search_by_key(&a.id(), Expr::id).is_ok()
                    && !free_vars(a).iter().any(|n| bound.contains(n)))
        };
        let candidates = self.proven(&ob.expr).iter().chain(pending.iter().filter(|j| j.consequent() == &ob.expr));
        let best = candidates.filter(|j| j.assumptions().iter().all(usable)).min_by_key(|j| j.assumptions().len());
        if let Some(j) = best {
            return Ok(j.clone());
        }
        if usable(&ob.expr) {
            if let Some(j) = self.cached_assumption(&ob.expr) {
                return Ok(j);
            }
            let j = Judgment::new([ob.expr.clone()], ob.expr.clone(), Rule::Assumption, vec![], StepPayload::None);
            pending.push(j.clone());
            return Ok(j);
        }
        Err(KernelError::UnsatisfiedCondition(ob.expr.to_string()))
    }

    /// From `S ⊢ P`, derives `S' ⊢ ∀_{params | conditions} P`, moving every
    /// assumption that mentions a parameter into the conditions, ahead of
    /// `extra_conditions`.
    pub fn generalize(&mut self, j: &Judgment, params: &[Expr], extra_conditions: &[Expr]) -> Result<Judgment> {
        let bases = param_bases(params)?;
        let moved: Vec<Expr> = j.assumptions().iter().filter(|a| mentions(a, &bases)).cloned().collect();
        self.generalize_moving(j, params, &moved, extra_conditions)
    }

    /// Like [`Prover::generalize`] but moves only `discharged`; any other
    /// assumption mentioning a parameter is a [`KernelError::FreeVariableLeak`].
    pub fn generalize_discharging(
        &mut self,
        j: &Judgment,
        params: &[Expr],
        discharged: &[Expr],
        extra_conditions: &[Expr],
    ) -> Result<Judgment> {
        let moved: Vec<Expr> = j.assumptions().iter().filter(|a| discharged.contains(a)).cloned().collect();
        self.generalize_moving(j, params, &moved, extra_conditions)
    }

    fn generalize_moving(
        &mut self,
        j: &Judgment,
        params: &[Expr],
        moved: &[Expr],
        extra_conditions: &[Expr],
    ) -> Result<Judgment> {
        let bases = param_bases(params)?;
        let kept: Vec<Expr> = j.assumptions().iter().filter(|a| !moved.contains(a)).cloned().collect();
        if let Some(a) = kept.iter().find(|a| mentions(a, &bases)) {
            let param = bases.iter().find(|b| free_vars(a).contains(*b)).expect("mentioned base");
            return Err(KernelError::FreeVariableLeak { param: param.to_string(), assumption: a.to_string() });
        }
        let extras = assumption_set(extra_conditions.iter().cloned());
        let conditions = generalization_conditions(moved, &extras);
        let consequent = quantifier(sym::forall(), params.to_vec(), conditions, j.consequent().clone())?;
        let out = Judgment::new(
            kept,
            consequent,
            Rule::Generalization,
            vec![j.clone()],
            StepPayload::Generalization { params: params.to_vec(), extra_conditions: extras },
        );
        Ok(self.record(out))
    }

    /// Turns literals into variables, trading each axiom that mentions them
    /// for a condition of the resulting universal.
    pub fn literal_generalize(&mut self, j: &Judgment, mapping: &[(Expr, &str)]) -> Result<Judgment> {
        if mapping.is_empty() {
            return Err(KernelError::BadArgument("no literals to generalize".into()));
        }
        let mut leaves = Leaves::default();
        leaves.collect(j);
        for t in &leaves.theorems {
            let item = self.theory.item(t).ok_or_else(|| KernelError::UnknownTheoryItem(t.clone()))?;
            if item.status != Status::FullyProven {
                return Err(KernelError::NotFullyProven(t.clone()));
            }
        }
        let mut names: BTreeSet<Name> = BTreeSet::new();
        names.extend(j.consequent().all_names().iter().cloned());
        for a in j.assumptions() {
            names.extend(a.all_names().iter().cloned());
        }
        let mut eliminated = Vec::new();
        let mut conditions = Vec::new();
        for name in &leaves.axioms {
            let item = self.theory.item(name).ok_or_else(|| KernelError::UnknownTheoryItem(name.clone()))?;
            if mapping.iter().any(|(lit, _)| item.statement.contains(lit)) {
                names.extend(item.statement.all_names().iter().cloned());
                eliminated.push(name.clone());
                conditions.push(item.statement);
            }
        }
        let mut pairs: Vec<(Expr, Name)> = Vec::new();
        for (lit, v) in mapping {
            if lit.tag() != ExprKind::Literal {
                return Err(KernelError::BadArgument(format!("{lit} is not a literal")));
            }
            let var = Expr::try_var(v)?;
            if names.contains(*v) || pairs.iter().any(|(_, n)| n.as_ref() == *v) {
                return Err(KernelError::NotFresh(v.to_string()));
            }
            if let Some(a) = j.assumptions().iter().find(|a| a.contains(lit)) {
                return Err(KernelError::LiteralStillRequired { literal: lit.to_string(), item: a.to_string() });
            }
            for t in &leaves.theorems {
                let item = self.theory.item(t).expect("checked above");
                let through_axiom = self
                    .theory
                    .axioms_required(t)
                    .into_iter()
                    .find(|ax| self.theory.item(ax).is_some_and(|i| i.statement.contains(lit)));
                if item.statement.contains(lit) || through_axiom.is_some() {
                    return Err(KernelError::LiteralStillRequired { literal: lit.to_string(), item: t.clone() });
                }
            }
            pairs.push((lit.clone(), param_base(&var).expect("variable").clone()));
        }
        let swap = |e: &Expr| pairs.iter().fold(e.clone(), |acc, (lit, v)| replace_literal(&acc, lit, v));
        let params: Vec<Expr> = pairs.iter().map(|(_, v)| Expr::var(v)).collect();
        let conditions: Vec<Expr> = conditions.iter().map(swap).collect();
        let consequent = quantifier(sym::forall(), params, conditions, swap(j.consequent()))?;
        let out = Judgment::new(
            j.assumptions().to_vec(),
            consequent,
            Rule::LiteralGeneralization,
            vec![j.clone()],
            StepPayload::LiteralGeneralization { mapping: pairs, eliminated },
        );
        Ok(self.record(out))
    }
}

/// Axiom and theorem leaves of a proof, with axioms eliminated by literal
/// generalization left out.
#[derive(Default)]
pub struct Leaves {
    pub axioms: BTreeSet<String>,
    pub theorems: BTreeSet<String>,
    seen: HashSet<usize>,
}

impl Leaves {
    pub fn of(j: &Judgment) -> Leaves {
        let mut l = Leaves::default();
        l.collect(j);
        l
    }

    fn collect(&mut self, j: &Judgment) {
        if !self.seen.insert(j.addr()) {
            return;
        }
        match (j.rule(), j.payload()) {
            (Rule::AxiomInvocation, StepPayload::Invocation { name }) => {
                self.axioms.insert(name.clone());
            }
            (Rule::TheoremInvocation, StepPayload::Invocation { name }) => {
                self.theorems.insert(name.clone());
            }
            (Rule::LiteralGeneralization, StepPayload::LiteralGeneralization { eliminated, .. }) => {
                let inner = Leaves::of(&j.requirements()[0]);
                self.axioms.extend(inner.axioms.into_iter().filter(|a| !eliminated.contains(a)));
                self.theorems.extend(inner.theorems);
            }
            _ => {
                for r in j.requirements() {
                    self.collect(r);
                }
            }
        }
    }
}

/// Consequent of assuming `a`.
pub fn assumed_consequent(a: &Expr) -> Expr {
    if a.tag() == ExprKind::ExprRange {
        Expr::operation(sym::and(), Expr::tuple(vec![a.clone()])).expect("And operation")
    } else {
        a.clone()
    }
}

pub fn implies(a: Expr, b: Expr) -> Expr {
    Expr::operation(sym::implies(), Expr::tuple(vec![a, b])).expect("Implies operation")
}

/// `(A, B)` from `A ⇒ B`.
pub fn as_implication(e: &Expr) -> Option<(Expr, Expr)> {
    if !e.is_op(pkg::IMPLICATION, "Implies") {
        return None;
    }
    match e.operand_entries()?.as_slice() {
        [a, b] if a.tag() != ExprKind::ExprRange && b.tag() != ExprKind::ExprRange => Some((a.clone(), b.clone())),
        _ => None,
    }
}

fn param_bases(params: &[Expr]) -> Result<Vec<Name>> {
    if params.is_empty() {
        return Err(KernelError::BadArgument("no parameters to generalize over".into()));
    }
    params
        .iter()
        .map(|p| param_base(p).cloned().ok_or_else(|| KernelError::BadArgument(format!("{p} is not a parameter"))))
        .collect()
}

fn mentions(a: &Expr, bases: &[Name]) -> bool {
    let fv = free_vars(a);
    bases.iter().any(|b| fv.contains(b))
}

/// Moved assumptions (already in identity order) followed by the extra
/// conditions not among them.
pub fn generalization_conditions(moved: &[Expr], extras: &[Expr]) -> Vec<Expr> {
    let mut out: Vec<Expr> = moved.to_vec();
    for e in extras {
        if !out.contains(e) {
            out.push(e.clone());
        }
    }
    out
}

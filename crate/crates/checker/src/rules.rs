use std::collections::BTreeSet;

use pvk_cert::{
    assumption_set, Certificate, DecodedStep, ItemKind, Payload, ReductionOptions, Rule, Status, TheoryLookup,
};
use pvk_expr::composite::quantifier;
use pvk_expr::vocab::{pkg, sym};
use pvk_expr::{free_vars, param_base, parse, replace_literal, Expr, ExprKind, Name};
use pvk_reduce::{EqReduction, Options, ReplacementMap};

use crate::CheckError;

/// Highest fuel a certificate may ask the checker to spend on one step.
pub const FUEL_LIMIT: u64 = 1_000_000;

fn same_set(a: &[Expr], b: &[Expr]) -> bool {
    let a = assumption_set(a.iter().cloned());
    let b = assumption_set(b.iter().cloned());
    a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x == y)
}

fn show(es: &[Expr]) -> String {
    let v: Vec<String> = es.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

fn implies(a: Expr, b: Expr) -> Expr {
    Expr::operation(sym::implies(), Expr::tuple(vec![a, b])).expect("Implies operation")
}

fn as_implication(e: &Expr) -> Option<(Expr, Expr)> {
    if !e.is_op(pkg::IMPLICATION, "Implies") {
        return None;
    }
    match e.operand_entries()?.as_slice() {
        [a, b] if a.tag() != ExprKind::ExprRange && b.tag() != ExprKind::ExprRange => Some((a.clone(), b.clone())),
        _ => None,
    }
}

fn mentions(a: &Expr, bases: &[Name]) -> bool {
    let fv = free_vars(a);
    bases.iter().any(|b| fv.contains(b))
}

struct Ctx<'a> {
    step: &'a DecodedStep,
    reqs: Vec<&'a DecodedStep>,
}

impl Ctx<'_> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, CheckError> {
        Err(CheckError::rule(self.step.rule, message))
    }

    fn arity(&self, n: usize) -> Result<(), CheckError> {
        if self.reqs.len() != n {
            return self.fail(format!("expected {n} requirement(s), found {}", self.reqs.len()));
        }
        Ok(())
    }

    fn expect_consequent(&self, expected: &Expr) -> Result<(), CheckError> {
        if &self.step.consequent != expected {
            return self.fail(format!("consequent should be {expected}, found {}", self.step.consequent));
        }
        Ok(())
    }

    fn expect_assumptions(&self, expected: &[Expr]) -> Result<(), CheckError> {
        if !same_set(&self.step.assumptions, expected) {
            return self.fail(format!(
                "assumptions should be {}, found {}",
                show(&assumption_set(expected.iter().cloned())),
                show(&self.step.assumptions)
            ));
        }
        Ok(())
    }

    fn expr(&self, src: &str) -> Result<Expr, CheckError> {
        parse(src).or_else(|e| self.fail(format!("bad expression in payload: {e}")))
    }
}

/// Re-executes the rule of one step against its (already checked)
/// requirements.
pub fn verify_step(
    step: &DecodedStep,
    steps: &[DecodedStep],
    theory: &dyn TheoryLookup,
    cert: &Certificate,
) -> Result<(), CheckError> {
    let ctx = Ctx { step, reqs: step.requirements.iter().map(|&r| &steps[r]).collect() };
    let payload_none = |ctx: &Ctx| match &step.payload {
        Payload::None => Ok(()),
        _ => ctx.fail("unexpected payload"),
    };
    match step.rule {
        Rule::Assumption => {
            ctx.arity(0)?;
            payload_none(&ctx)?;
            let [a] = step.assumptions.as_slice() else {
                return ctx.fail("an assumption step has exactly one assumption");
            };
            let expected = if a.tag() == ExprKind::ExprRange {
                Expr::operation(sym::and(), Expr::tuple(vec![a.clone()])).expect("And operation")
            } else {
                a.clone()
            };
            ctx.expect_consequent(&expected)
        }
        Rule::AxiomInvocation | Rule::TheoremInvocation => {
            ctx.arity(0)?;
            let Payload::Invocation { name } = &step.payload else {
                return ctx.fail("missing invocation payload");
            };
            let item = theory.item(name).ok_or_else(|| CheckError::UnknownTheoryItem(name.clone()))?;
            let kind_ok = matches!(
                (step.rule, item.kind),
                (Rule::AxiomInvocation, ItemKind::Axiom) | (Rule::TheoremInvocation, ItemKind::Theorem)
            );
            if !kind_ok {
                return ctx.fail(format!("{name} is not invocable as {}", step.rule));
            }
            let declared = cert.theory_refs.iter().find(|r| &r.name == name);
            if declared.is_some_and(|r| r.digest != item.statement.id().to_hex()) {
                return Err(CheckError::HashMismatch(format!("{name} changed since the proof was made")));
            }
            ctx.expect_assumptions(&[])?;
            ctx.expect_consequent(&item.statement)
        }
        Rule::ModusPonens => {
            ctx.arity(2)?;
            payload_none(&ctx)?;
            let (imp, ant) = (ctx.reqs[0], ctx.reqs[1]);
            let Some((a, b)) = as_implication(&imp.consequent) else {
                return ctx.fail(format!("requirement {} is not an implication", imp.index));
            };
            if ant.consequent != a {
                return Err(CheckError::AntecedentMismatch {
                    expected: a.to_string(),
                    found: ant.consequent.to_string(),
                });
            }
            let union: Vec<Expr> = imp.assumptions.iter().chain(&ant.assumptions).cloned().collect();
            ctx.expect_assumptions(&union)?;
            ctx.expect_consequent(&b)
        }
        Rule::Deduction => {
            ctx.arity(1)?;
            payload_none(&ctx)?;
            let Some((a, b)) = as_implication(&step.consequent) else {
                return ctx.fail("a deduction concludes an implication");
            };
            let inner = ctx.reqs[0];
            if inner.consequent != b {
                return ctx.fail(format!("deduced {b} but requirement proves {}", inner.consequent));
            }
            let rest: Vec<Expr> = inner.assumptions.iter().filter(|x| **x != a).cloned().collect();
            ctx.expect_assumptions(&rest)?;
            ctx.expect_consequent(&implies(a, b))
        }
        Rule::Instantiation => verify_instantiation(&ctx),
        Rule::Generalization => verify_generalization(&ctx),
        Rule::LiteralGeneralization => verify_literal_generalization(&ctx, steps, theory),
        Rule::Reference => {
            ctx.arity(1)?;
            payload_none(&ctx)?;
            let target = ctx.reqs[0];
            ctx.expect_assumptions(&target.assumptions)?;
            ctx.expect_consequent(&target.consequent)
        }
    }
}

fn options(ctx: &Ctx, o: &ReductionOptions) -> Result<Options, CheckError> {
    if o.fuel > FUEL_LIMIT {
        return ctx.fail(format!("fuel {} exceeds the checker limit {FUEL_LIMIT}", o.fuel));
    }
    let mut eq = BTreeSet::new();
    for n in &o.equality_reductions {
        match EqReduction::from_name(n) {
            Some(r) => {
                eq.insert(r);
            }
            None => return ctx.fail(format!("unknown equality reduction {n}")),
        }
    }
    Ok(Options { fuel: o.fuel, equality_reductions: eq, range_reductions: o.range_reductions })
}

fn verify_instantiation(ctx: &Ctx) -> Result<(), CheckError> {
    let Payload::Instantiation(p) = &ctx.step.payload else {
        return ctx.fail("missing instantiation payload");
    };
    let Some(univ) = ctx.reqs.first() else {
        return ctx.fail("an instantiation requires the universal it instantiates");
    };
    let mut map = ReplacementMap::new();
    for [k, v] in &p.map {
        map.insert(ctx.expr(k)?, ctx.expr(v)?).or_else(|e| ctx.fail(e.to_string()))?;
    }
    for a in &p.alternatives {
        let value = match &a.value {
            Some(v) => Some(ctx.expr(v)?),
            None => None,
        };
        map = map.with_alt(ctx.expr(&a.key)?, value).or_else(|e| ctx.fail(e.to_string()))?;
    }
    let supplied = assumption_set(p.assumptions.iter().map(|a| ctx.expr(a)).collect::<Result<Vec<_>, _>>()?);
    let opts = options(ctx, &p.options)?;
    let inst = pvk_reduce::instantiate(&univ.consequent, &map, p.layers, &supplied, &opts)
        .or_else(|e| ctx.fail(format!("re-running the instantiation failed: {e}")))?;

    let obligations: Vec<_> = inst.conditions.iter().chain(&inst.requirements).collect();
    let given = &ctx.reqs[1..];
    for (i, ob) in obligations.iter().enumerate() {
        match given.get(i) {
            Some(r) if r.consequent == ob.expr => {
                for a in &r.assumptions {
                    if ob.scope.contains(a) {
                        continue;
                    }
                    if !supplied.contains(a) {
                        return ctx.fail(format!("requirement {} relies on {a}, which was not supplied", r.index));
                    }
                    if free_vars(a).iter().any(|n| ob.bound.contains(n)) {
                        return ctx.fail(format!(
                            "requirement {} relies on {a}, which mentions a name bound at the obligation",
                            r.index
                        ));
                    }
                }
            }
            _ => {
                return Err(CheckError::RuleViolation {
                    rule: Rule::Instantiation,
                    message: format!("missing {} requirement {}", ob.kind.name(), ob.expr),
                    missing: Some(ob.expr.to_string()),
                })
            }
        }
    }
    if given.len() > obligations.len() {
        return ctx.fail(format!("{} unexpected extra requirement(s)", given.len() - obligations.len()));
    }

    let mut expected: Vec<Expr> = univ.assumptions.clone();
    for (ob, r) in obligations.iter().zip(given) {
        expected.extend(r.assumptions.iter().filter(|a| !ob.scope.contains(a)).cloned());
    }
    expected.extend(inst.assumptions_used);
    ctx.expect_assumptions(&expected)?;
    ctx.expect_consequent(&inst.expr)
}

fn verify_generalization(ctx: &Ctx) -> Result<(), CheckError> {
    ctx.arity(1)?;
    let Payload::Generalization { params, extra_conditions } = &ctx.step.payload else {
        return ctx.fail("missing generalization payload");
    };
    let params: Vec<Expr> = params.iter().map(|p| ctx.expr(p)).collect::<Result<_, _>>()?;
    if params.is_empty() {
        return ctx.fail("no parameters");
    }
    let mut bases = Vec::new();
    for p in &params {
        match param_base(p) {
            Some(b) => bases.push(b.clone()),
            None => return ctx.fail(format!("{p} is not a parameter")),
        }
    }
    let inner = ctx.reqs[0];
    for a in &ctx.step.assumptions {
        if !inner.assumptions.contains(a) {
            return ctx.fail(format!("assumption {a} does not come from the requirement"));
        }
        if mentions(a, &bases) {
            return ctx.fail(format!("a parameter occurs free in the retained assumption {a}"));
        }
    }
    let moved: Vec<Expr> = inner.assumptions.iter().filter(|a| !ctx.step.assumptions.contains(a)).cloned().collect();
    let extras = assumption_set(extra_conditions.iter().map(|c| ctx.expr(c)).collect::<Result<Vec<_>, _>>()?);
    let mut conditions = moved;
    for e in extras {
        if !conditions.contains(&e) {
            conditions.push(e);
        }
    }
    let expected =
        quantifier(sym::forall(), params, conditions, inner.consequent.clone()).or_else(|e| ctx.fail(e.to_string()))?;
    ctx.expect_consequent(&expected)
}

fn verify_literal_generalization(
    ctx: &Ctx,
    steps: &[DecodedStep],
    theory: &dyn TheoryLookup,
) -> Result<(), CheckError> {
    ctx.arity(1)?;
    let Payload::LiteralGeneralization { mapping, eliminated } = &ctx.step.payload else {
        return ctx.fail("missing literal generalization payload");
    };
    if mapping.is_empty() {
        return ctx.fail("no literals to generalize");
    }
    let inner = ctx.reqs[0];
    let (axioms, theorems) = crate::leaves(steps, inner.index);
    for t in &theorems {
        let item = theory.item(t).ok_or_else(|| CheckError::UnknownTheoryItem(t.clone()))?;
        if item.status != Status::FullyProven {
            return Err(CheckError::NotFullyProven(t.clone()));
        }
    }
    let mut pairs: Vec<(Expr, String)> = Vec::new();
    for m in mapping {
        let lit = ctx.expr(&m.literal)?;
        if lit.tag() != ExprKind::Literal {
            return ctx.fail(format!("{lit} is not a literal"));
        }
        if Expr::try_var(&m.variable).is_err() {
            return ctx.fail(format!("{:?} is not a variable name", m.variable));
        }
        pairs.push((lit, m.variable.clone()));
    }
    let mut names: BTreeSet<Name> = inner.consequent.all_names().iter().cloned().collect();
    for a in &inner.assumptions {
        names.extend(a.all_names().iter().cloned());
        if pairs.iter().any(|(l, _)| a.contains(l)) {
            return ctx.fail(format!("assumption {a} still mentions a generalized literal"));
        }
    }
    let mut expected_elim = Vec::new();
    let mut conditions = Vec::new();
    for ax in &axioms {
        let item = theory.item(ax).ok_or_else(|| CheckError::UnknownTheoryItem(ax.clone()))?;
        if pairs.iter().any(|(l, _)| item.statement.contains(l)) {
            names.extend(item.statement.all_names().iter().cloned());
            expected_elim.push(ax.clone());
            conditions.push(item.statement);
        }
    }
    if &expected_elim != eliminated {
        return ctx.fail(format!("eliminated axioms should be {expected_elim:?}, found {eliminated:?}"));
    }
    for t in &theorems {
        let item = theory.item(t).expect("checked above");
        let through = theory
            .axioms_required(t)
            .into_iter()
            .any(|ax| theory.item(&ax).is_some_and(|i| pairs.iter().any(|(l, _)| i.statement.contains(l))));
        if through || pairs.iter().any(|(l, _)| item.statement.contains(l)) {
            return ctx.fail(format!("{t} still depends on a generalized literal"));
        }
    }
    let mut fresh = BTreeSet::new();
    for (_, v) in &pairs {
        if names.contains(v.as_str()) || !fresh.insert(v.clone()) {
            return ctx.fail(format!("variable {v} is not fresh"));
        }
    }
    let swap = |e: &Expr| pairs.iter().fold(e.clone(), |acc, (l, v)| replace_literal(&acc, l, v));
    let params: Vec<Expr> = pairs.iter().map(|(_, v)| Expr::var(v)).collect();
    let conditions: Vec<Expr> = conditions.iter().map(swap).collect();
    let expected =
        quantifier(sym::forall(), params, conditions, swap(&inner.consequent)).or_else(|e| ctx.fail(e.to_string()))?;
    ctx.expect_assumptions(&inner.assumptions)?;
    ctx.expect_consequent(&expected)
}

use std::sync::Arc;

use pvk_checker::{parse_certificate, verify_proof};
use pvk_expr::vocab::dsl::*;
use pvk_expr::Expr;
use pvk_kernel::{export_proof, AdHocTheory, Judgment, KernelError, Presumptions, Prover, Rule, Status};
use pvk_reduce::ReplacementMap;

fn substitution() -> Expr {
    let (fx, fy) = (apply("f", vec![var("x")]), apply("f", vec![var("y")]));
    forall(vars(&["f", "x", "y"]), vec![eq(var("x"), var("y"))], eq(fx, fy))
}

fn theory() -> AdHocTheory {
    AdHocTheory::default()
        .axiom("logic.booleans.axiom1", t())
        .axiom("logic.equality.axiom5", forall(vec![var("x")], vec![], eq(var("x"), var("x"))))
        .axiom("logic.equality.axiom6", substitution())
}

fn prover() -> Prover {
    Prover::new(Arc::new(theory()))
}

fn check(j: &Judgment, theory: &AdHocTheory) {
    let cert = export_proof(j).to_certificate();
    let parsed = parse_certificate(cert.to_json().as_bytes()).expect("certificate parses");
    let report = verify_proof(&parsed, theory);
    assert!(report.pass, "{:#?}", report.first_error());
}

#[test]
fn three_implies_three() {
    let mut p = prover();
    let a = p.assume(&num(3));
    assert_eq!(a.to_string(), "{3} ⊢ 3");
    let j = p.deduce(&a, &num(3));
    assert_eq!(j.to_string(), "⊢ 3 ⇒ 3");
    assert_eq!(j.consequent(), &implies(num(3), num(3)));
    check(&j, &theory());
}

#[test]
fn assuming_twice_gives_the_same_judgment() {
    let mut p = prover();
    let a = p.assume(&var("A"));
    let b = p.assume(&var("A"));
    assert!(Judgment::same_proof(&a, &b));
}

#[test]
fn assuming_a_range_gives_its_conjunction() {
    let mut p = prover();
    let r = var_range("A", num(1), var("m"));
    let j = p.assume(&r);
    assert_eq!(j.assumptions(), &[r.clone()]);
    assert_eq!(j.consequent(), &and(vec![r]));
    check(&j, &theory());
}

#[test]
fn invocation() {
    let mut p = prover();
    assert_eq!(p.invoke("logic.booleans.axiom1").unwrap().to_string(), "⊢ ⊤");
    let refl = p.invoke("logic.equality.axiom5").unwrap();
    assert_eq!(refl.consequent(), &forall(vec![var("x")], vec![], eq(var("x"), var("x"))));
    assert!(refl.assumptions().is_empty());
    assert!(matches!(p.invoke("logic.nowhere.axiom1"), Err(KernelError::UnknownTheoryItem(_))));
}

#[test]
fn presumptions_gate_invocation() {
    let mut p = prover().with_presumptions(Presumptions::only(["logic.booleans"]));
    assert!(p.invoke("logic.booleans.axiom1").is_ok());
    let err = p.invoke("logic.equality.axiom5").unwrap_err();
    assert_eq!(err.code(), "PresumptionViolation");

    let mut closed = prover().with_presumptions(Presumptions::none());
    assert!(closed.invoke("logic.booleans.axiom1").is_err());
    let a = closed.assume(&var("A"));
    assert_eq!(closed.deduce(&a, &var("A")).to_string(), "⊢ A ⇒ A");
}

#[test]
fn modus_ponens_unions_assumptions() {
    let mut p = prover();
    let imp = p.assume(&implies(var("A"), var("B")));
    let a = p.assume(&var("A"));
    let b = p.modus_ponens(&imp, &a).unwrap();
    assert_eq!(b.consequent(), &var("B"));
    assert_eq!(b.assumptions().len(), 2);
    check(&b, &theory());

    let aa = p.deduce(&a, &var("A"));
    let again = p.modus_ponens(&aa, &a).unwrap();
    assert_eq!(again, a);
}

#[test]
fn modus_ponens_errors() {
    let mut p = prover();
    let imp = p.assume(&implies(var("A"), var("B")));
    let b = p.assume(&var("B"));
    assert!(matches!(p.modus_ponens(&imp, &b), Err(KernelError::AntecedentMismatch { .. })));
    assert!(matches!(p.modus_ponens(&b, &b), Err(KernelError::NotAnImplication(_))));
}

#[test]
fn deduction_keeps_unrelated_assumptions() {
    let mut p = prover();
    let a = p.assume(&var("A"));
    let b = p.assume(&var("B"));
    let imp = p.assume(&implies(var("A"), var("B")));
    let bb = p.modus_ponens(&imp, &a).unwrap();
    let j = p.deduce(&bb, &var("B"));
    assert_eq!(j.consequent(), &implies(var("B"), var("B")));
    assert_eq!(j.assumptions().len(), 2);
    let j = p.deduce(&b, &var("C"));
    assert_eq!(j.to_string(), "{B} ⊢ C ⇒ B");
}

#[test]
fn reflexivity_instance() {
    let mut p = prover();
    let refl = p.invoke("logic.equality.axiom5").unwrap();
    let map = ReplacementMap::new().with(var("x"), t()).unwrap();
    let j = p.instantiate(&refl, &map, &[], 1).unwrap();
    assert_eq!(j.to_string(), "⊢ ⊤ = ⊤");
    check(&j, &theory());
}

fn exp_map() -> ReplacementMap {
    ReplacementMap::new()
        .with(apply("f", vec![var("x")]), exp(var("x"), var("a")))
        .unwrap()
        .with(var("x"), var("x"))
        .unwrap()
        .with(var("y"), var("y"))
        .unwrap()
}

#[test]
fn unmet_condition_is_reported() {
    let mut p = prover();
    let sub = p.invoke("logic.equality.axiom6").unwrap();
    let err = p.instantiate(&sub, &exp_map(), &[], 1).unwrap_err();
    assert!(matches!(err, KernelError::UnsatisfiedCondition(_)), "{err:?}");
    let j = p.invoke("logic.booleans.axiom1").unwrap();
    assert!(matches!(p.instantiate(&j, &exp_map(), &[], 1), Err(KernelError::NotUniversal { .. })));
}

fn exp_eq(p: &mut Prover) -> Judgment {
    let sub = p.invoke("logic.equality.axiom6").unwrap();
    let xy = eq(var("x"), var("y"));
    let inst = p.instantiate(&sub, &exp_map(), &[xy], 1).unwrap();
    assert_eq!(inst.to_string(), "{x = y} ⊢ x^a = y^a");
    let complex = |v: &str| in_(var(v), pvk_expr::vocab::sym::complex());
    p.generalize(&inst, &vars(&["a", "x", "y"]), &[complex("a"), complex("x"), complex("y")]).unwrap()
}

#[test]
fn exp_eq_proof_has_the_four_node_shape() {
    let mut p = prover();
    let j = exp_eq(&mut p);
    assert!(j.assumptions().is_empty());
    let proof = export_proof(&j);
    let shape: Vec<(Rule, Vec<usize>)> = proof.steps().iter().map(|s| (s.rule, s.requirements.clone())).collect();
    assert_eq!(
        shape,
        vec![
            (Rule::Generalization, vec![1]),
            (Rule::Instantiation, vec![2, 3]),
            (Rule::AxiomInvocation, vec![]),
            (Rule::Assumption, vec![]),
        ]
    );
    let table = proof.text_table();
    assert_eq!(table.lines().count(), 5);
    assert!(table.contains("axiom: logic.equality.axiom6"));
    let latex = proof.latex_table();
    assert!(latex.contains("0 & generalization & 1 &"));
    check(&j, &theory());
}

#[test]
fn generalization_moves_mentioning_assumptions_first() {
    let mut p = prover();
    let (q, pp, r) = (apply("Q", vec![var("x")]), apply("P", vec![var("x")]), apply("R", vec![var("x")]));
    let imp = p.assume(&implies(q.clone(), pp.clone()));
    let qj = p.assume(&q);
    let pj = p.modus_ponens(&imp, &qj).unwrap();
    let leak = p.generalize(&pj, &[var("x")], &[r.clone()]).unwrap();
    let mut conds = pj.assumptions().to_vec();
    conds.push(r.clone());
    assert_eq!(leak.consequent(), &forall(vec![var("x")], conds, pp));
    let err = p.generalize_discharging(&pj, &[var("x")], &[q.clone()], &[r.clone()]).unwrap_err();
    assert_eq!(err.code(), "FreeVariableLeak");
}

#[test]
fn extra_conditions_only_weaken() {
    let mut p = prover();
    let (q, pp, r) = (apply("Q", vec![var("x")]), apply("P", vec![var("x")]), apply("R", vec![var("x")]));
    let base = p.assume(&forall(vec![var("x")], vec![q.clone()], pp.clone()));
    let inst = p.instantiate(&base, &ReplacementMap::new().with(var("x"), var("x")).unwrap(), &[q.clone()], 1).unwrap();
    assert!(inst.assumes(&q));
    let g = p.generalize_discharging(&inst, &[var("x")], &[q.clone()], &[r.clone()]).unwrap();
    assert_eq!(g.consequent(), &forall(vec![var("x")], vec![q, r], pp));
    check(&g, &theory());
}

#[test]
fn generalize_reflexivity() {
    let mut p = prover();
    let refl = p.invoke("logic.equality.axiom5").unwrap();
    let map = ReplacementMap::new().with(var("x"), var("x")).unwrap();
    let xx = p.instantiate(&refl, &map, &[], 1).unwrap();
    let g = p.generalize(&xx, &[var("x")], &[]).unwrap();
    assert_eq!(g, refl);
    check(&g, &theory());
}

#[test]
fn shared_requirement_appears_once_after_its_consumers() {
    let mut p = prover();
    let a = p.assume(&var("A"));
    let ab = p.assume(&implies(var("A"), var("B")));
    let ac = p.assume(&implies(var("A"), var("C")));
    let b = p.modus_ponens(&ab, &a).unwrap();
    let c = p.modus_ponens(&ac, &a).unwrap();
    let bc = p.assume(&implies(var("B"), implies(var("C"), var("D"))));
    let cd = p.modus_ponens(&bc, &b).unwrap();
    let d = p.modus_ponens(&cd, &c).unwrap();
    let proof = export_proof(&d);
    let a_rows: Vec<usize> =
        proof.steps().iter().filter(|s| s.judgment == a && s.rule == Rule::Assumption).map(|s| s.index).collect();
    assert_eq!(a_rows.len(), 1);
    for s in proof.steps() {
        assert!(s.requirements.iter().all(|&r| r > s.index));
        if s.requirements.contains(&a_rows[0]) {
            assert!(s.index < a_rows[0]);
        }
    }
    check(&d, &theory());
}

#[test]
fn root_requirement_shared_deeper_gets_a_reference_step() {
    let mut p = prover();
    let a = p.assume(&var("A"));
    let aa = p.deduce(&a, &var("A"));
    let again = p.modus_ponens(&aa, &a).unwrap();
    let proof = export_proof(&again);
    assert_eq!(proof.steps()[1].rule, Rule::Reference);
    assert!(proof.text_table().contains("reference"));
    check(&again, &theory());
}

fn toy() -> AdHocTheory {
    let (ka, kb) = (pvk_expr::Expr::literal("toy", "a"), pvk_expr::Expr::literal("toy", "b"));
    theory()
        .axiom("toy.axA", apply("A", vec![ka.clone()]))
        .axiom("toy.axB", apply("B", vec![kb.clone()]))
        .axiom("toy.axC", apply("C", vec![num(1)]))
        .theorem("toy.thm_a", apply("A", vec![ka]), Status::FullyProven, &["toy.axA"])
        .theorem("toy.open", apply("C", vec![num(2)]), Status::Conjecture, &[])
}

#[test]
fn literal_generalization_eliminates_axioms() {
    let toy = toy();
    let (ka, kb) = (pvk_expr::Expr::literal("toy", "a"), pvk_expr::Expr::literal("toy", "b"));
    let mut p = Prover::new(Arc::new(toy.clone()));
    let aj = p.invoke("toy.axA").unwrap();
    let g = p.literal_generalize(&aj, &[(ka.clone(), "a")]).unwrap();
    assert_eq!(g.consequent(), &forall(vec![var("a")], vec![apply("A", vec![var("a")])], apply("A", vec![var("a")])));
    check(&g, &toy);

    let pair = p.assume(&implies(apply("A", vec![ka.clone()]), implies(apply("B", vec![kb.clone()]), var("Z"))));
    let bj = p.invoke("toy.axB").unwrap();
    let cj = p.invoke("toy.axC").unwrap();
    let step = p.modus_ponens(&pair, &aj).unwrap();
    let z = p.modus_ponens(&step, &bj).unwrap();
    let z = p.deduce(&z, &implies(apply("A", vec![ka.clone()]), implies(apply("B", vec![kb.clone()]), var("Z"))));
    let before = pvk_kernel::Leaves::of(&z);
    assert_eq!(before.axioms.iter().cloned().collect::<Vec<_>>(), vec!["toy.axA", "toy.axB"]);
    let g = p.literal_generalize(&z, &[(ka.clone(), "a"), (kb.clone(), "b")]).unwrap();
    assert!(pvk_kernel::Leaves::of(&g).axioms.is_empty());
    match g.payload() {
        pvk_kernel::StepPayload::LiteralGeneralization { eliminated, .. } => {
            assert_eq!(eliminated, &vec!["toy.axA".to_string(), "toy.axB".to_string()])
        }
        other => panic!("{other:?}"),
    }
    check(&g, &toy);

    let vacuous = p.literal_generalize(&cj, &[(ka.clone(), "q")]).unwrap();
    assert_eq!(vacuous.consequent(), &forall(vec![var("q")], vec![], apply("C", vec![num(1)])));
    check(&vacuous, &toy);
}

#[test]
fn literal_generalization_errors() {
    let toy = toy();
    let ka = pvk_expr::Expr::literal("toy", "a");
    let mut p = Prover::new(Arc::new(toy));
    let open = p.invoke("toy.open").unwrap();
    assert_eq!(p.literal_generalize(&open, &[(ka.clone(), "a")]).unwrap_err().code(), "NotFullyProven");
    let thm = p.invoke("toy.thm_a").unwrap();
    assert_eq!(p.literal_generalize(&thm, &[(ka.clone(), "a")]).unwrap_err().code(), "LiteralStillRequired");
    let assumed = p.assume(&apply("A", vec![ka.clone()]));
    assert_eq!(p.literal_generalize(&assumed, &[(ka.clone(), "a")]).unwrap_err().code(), "LiteralStillRequired");
    let ax = p.invoke("toy.axA").unwrap();
    assert_eq!(p.literal_generalize(&ax, &[(ka, "A")]).unwrap_err().code(), "NotFresh");
}

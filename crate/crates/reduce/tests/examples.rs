use pvk_expr::vocab::dsl::*;
use pvk_expr::vocab::sym;
use pvk_expr::Expr;
use pvk_reduce::{
    apply_lambda, apply_lambda_with, expand_range, index_range, instantiate, reduce_range, relabel_for_capture,
    replace_operation, ObligationKind, Options, ReduceError, ReplacementMap,
};

fn minus_one(e: Expr) -> Expr {
    add(vec![e, neg(num(1))])
}

fn plus_one(e: Expr) -> Expr {
    add(vec![e, num(1)])
}

fn reqs(r: &[pvk_reduce::Obligation]) -> Vec<Expr> {
    r.iter().map(|o| o.expr.clone()).collect()
}

fn len_eq(slice: Vec<Expr>, s: Expr, e: Expr) -> Expr {
    eq(len(tuple(slice)), len(tuple(vec![index_range(&s, &e)])))
}

#[test]
fn simple_application() {
    // (x, y, z) ↦ ((x + y)·z) applied to (a + x, b·y, b + y + x)
    let f = lambda(vars(&["x", "y", "z"]), mult(vec![add(vars(&["x", "y"])), var("z")]));
    let ops = vec![add(vars(&["a", "x"])), mult(vars(&["b", "y"])), add(vars(&["b", "y", "x"]))];
    let r = apply_lambda(&f, &ops, &[], &Options::default()).unwrap();
    let expected = mult(vec![add(vec![ops[0].clone(), ops[1].clone()]), ops[2].clone()]);
    assert!(r.expr.same_labels(&expected), "{}", r.expr);
    assert!(r.requirements.is_empty());
    assert_eq!(r.fuel_used, 1);
}

fn dot_product() -> Expr {
    let n = var("n");
    lambda(
        vec![var_range("x", num(1), n.clone()), var_range("y", num(1), n.clone())],
        add(vec![range("k", mult(vec![idx("x", var("k")), idx("y", var("k"))]), num(1), n)]),
    )
}

#[test]
fn range_parameters_split_evenly() {
    let n = var("n");
    let squares = range("i", mult(vec![var("i"), var("i")]), num(1), n.clone());
    let doubles = range("i", add(vec![var("i"), var("i")]), num(1), n.clone());
    let assumption = in_(n.clone(), op(sym::natural(), vec![]));
    let r =
        apply_lambda(&dot_product(), &[squares.clone(), doubles.clone()], &[assumption], &Options::default()).unwrap();
    let expected = add(vec![range(
        "i",
        mult(vec![mult(vec![var("i"), var("i")]), add(vec![var("i"), var("i")])]),
        num(1),
        n.clone(),
    )]);
    assert_eq!(r.expr, expected, "{}", r.expr);
    assert_eq!(reqs(&r.requirements), vec![len_eq(vec![squares], num(1), n.clone()), len_eq(vec![doubles], num(1), n)]);
    assert!(r.requirements.iter().all(|o| o.kind == ObligationKind::Length));
    assert!(r.assumptions_used.is_empty());
}

#[test]
fn range_parameters_with_mixed_operands() {
    let (k, m, n) = (var("k"), var("m"), var("n"));
    let sq = range("i", mult(vec![var("i"), var("i")]), num(0), k.clone());
    let db = range("i", add(vec![var("i"), var("i")]), num(0), k.clone());
    let ones = range("i", var("i"), num(1), m.clone());
    let xs = vec![sq.clone(), var("x"), ones.clone()];
    let ys = vec![db.clone(), var("y"), ones.clone()];
    let ops: Vec<Expr> = xs.iter().chain(&ys).cloned().collect();
    let r = apply_lambda(&dot_product(), &ops, &[], &Options::default()).unwrap();
    let expected = add(vec![
        range("i", mult(vec![mult(vec![var("i"), var("i")]), add(vec![var("i"), var("i")])]), num(0), k),
        mult(vars(&["x", "y"])),
        range("i", mult(vec![var("i"), var("i")]), num(1), m),
    ]);
    assert_eq!(r.expr, expected, "{}", r.expr);
    assert_eq!(reqs(&r.requirements), vec![len_eq(xs, num(1), n.clone()), len_eq(ys, num(1), n)]);
}

#[test]
fn alternative_expansions_and_masking() {
    let (i, j, m) = (var("i"), var("j"), var("m"));
    let a_rng = |s: Expr, e: Expr| var_range("A", s, e);
    let inner = forall(vec![a_rng(i.clone(), j.clone())], vec![], or(vec![a_rng(i.clone(), j.clone())]));
    let f =
        lambda(vec![a_rng(num(1), m.clone())], and(vec![a_rng(num(1), j.clone()), inner.clone(), idx("A", m.clone())]));
    let not_b = range("k", not(idx("B", var("k"))), num(1), minus_one(i.clone()));
    let not_c = range("k", not(idx("C", var("k"))), num(1), i.clone());
    let a_or_d = or(vars(&["A", "D"]));
    let ops = vec![not_b.clone(), not_c.clone(), a_or_d.clone()];
    let alts = ReplacementMap::new()
        .with_alt(
            tuple(vec![a_rng(num(1), minus_one(i.clone())), a_rng(i.clone(), j.clone()), idx("A", m.clone())]),
            None,
        )
        .unwrap()
        .with_alt(tuple(vec![a_rng(num(1), j.clone()), idx("A", m.clone())]), None)
        .unwrap();
    let r = apply_lambda_with(&f, &ops, &alts, &[], &Options::default()).unwrap();
    let expected = and(vec![not_b.clone(), not_c.clone(), inner, a_or_d]);
    assert_eq!(r.expr, expected, "{}", r.expr);

    let one_to = |e: &Expr| index_range(&num(1), e);
    let expected_reqs = vec![
        len_eq(ops.clone(), num(1), m.clone()),
        len_eq(vec![not_b.clone()], num(1), minus_one(i.clone())),
        len_eq(vec![not_c.clone()], i.clone(), j.clone()),
        len_eq(vec![not_b, not_c], num(1), j.clone()),
        eq(tuple(vec![one_to(&minus_one(i.clone())), index_range(&i, &j), m.clone()]), tuple(vec![one_to(&m)])),
        eq(tuple(vec![one_to(&j), m.clone()]), tuple(vec![one_to(&m)])),
    ];
    let got = reqs(&r.requirements);
    assert_eq!(got.len(), 6, "{got:?}");
    for (g, e) in got.iter().zip(&expected_reqs) {
        assert_eq!(g, e, "{g} vs {e}");
    }
}

#[test]
fn capture_is_avoided_by_relabeling() {
    // a ↦ a + b with b : f(a)
    let inner = lambda(vec![var("a")], add(vars(&["a", "b"])));
    let outer = lambda(vec![var("b")], inner.clone());
    let fa = apply("f", vec![var("a")]);
    let r = apply_lambda(&outer, &[fa.clone()], &[], &Options::default()).unwrap();
    let expected = lambda(vec![var("_a")], add(vec![var("_a"), fa.clone()]));
    assert!(r.expr.same_labels(&expected), "{}", r.expr);

    let incoming = ["a".into()].into_iter().collect();
    let relabeled = relabel_for_capture(&inner, &incoming).unwrap();
    assert!(relabeled.same_labels(&lambda(vec![var("_a")], add(vars(&["_a", "b"])))));
}

#[test]
fn capture_of_non_relabelable_parameter_fails() {
    // (x_1, ..., x_n) ↦ (x_1 + ... + x_{n-1} + x_n) cannot be relabeled.
    let n = var("n");
    let inner = lambda(
        vec![var_range("x", num(1), n.clone())],
        add(vec![var_range("x", num(1), minus_one(n.clone())), idx("x", n.clone()), var("b")]),
    );
    let outer = lambda(vec![var("b")], inner);
    let err = apply_lambda(&outer, &[var("x")], &[], &Options::default()).unwrap_err();
    assert_eq!(err.code(), "RelabelForbidden", "{err}");
}

#[test]
fn operator_replacement_by_lambda_and_literal() {
    let pxy = apply("P", vars(&["x", "y"]));
    let plus = lambda(vars(&["a", "b"]), add(vars(&["a", "b"])));
    let r = replace_operation(&pxy, "P", &plus, &[], &Options::default()).unwrap();
    assert!(r.expr.same_labels(&add(vars(&["x", "y"]))));
    assert_eq!(r.fuel_used, 1);

    let r = replace_operation(&pxy, "P", &sym::add(), &[], &Options::default()).unwrap();
    assert!(r.expr.same_labels(&add(vars(&["x", "y"]))));
    assert!(r.expr.is_op(pvk_expr::vocab::pkg::ADDITION, "Add"));
    assert_eq!(r.fuel_used, 0);
}

#[test]
fn range_bodied_operator_replacement_is_rejected() {
    // |(f(a), b, c)| with f : x ↦ x_1, ..., x_4
    let e = len(tuple(vec![apply("f", vec![var("a")]), var("b"), var("c")]));
    let f = lambda(vec![var("x")], var_range("x", num(1), num(4)));
    let err = replace_operation(&e, "f", &f, &[], &Options::default()).unwrap_err();
    assert!(matches!(err, ReduceError::RangeBodyForbidden(_)), "{err}");
}

#[test]
fn self_application_runs_out_of_fuel() {
    // g(g) with g : P ↦ (P(P) ⇒ ⊥)
    let gg = apply("g", vec![var("g")]);
    let g = lambda(vec![var("P")], implies(apply("P", vec![var("P")]), f()));
    let err = replace_operation(&gg, "g", &g, &[], &Options::default().with_fuel(200)).unwrap_err();
    assert_eq!(err, ReduceError::FuelExhausted(200));
    let err = replace_operation(&gg, "g", &g, &[], &Options::default()).unwrap_err();
    assert_eq!(err, ReduceError::FuelExhausted(pvk_reduce::DEFAULT_FUEL));
}

#[test]
fn dependent_expansion_checks_indices() {
    let (j, n) = (var("j"), var("n"));
    let r = range("k", mult(vec![var("k"), idx("x", var("k"))]), num(1), n.clone());
    let a1 = var_range("a", num(1), j.clone());
    let a2 = var_range("a", plus_one(j.clone()), n.clone());
    let map = ReplacementMap::new()
        .with(tuple(vec![var_range("x", num(1), n.clone())]), tuple(vec![a1.clone(), a2.clone()]))
        .unwrap();
    let out = expand_range(&r, &map, &[], &Options::default()).unwrap();
    let expected = tuple(vec![
        range("k", mult(vec![var("k"), idx("a", var("k"))]), num(1), j.clone()),
        range("k", mult(vec![var("k"), idx("a", var("k"))]), plus_one(j.clone()), n.clone()),
    ]);
    assert_eq!(out.expr, expected, "{}", out.expr);
    let index_req = eq(
        tuple(vec![index_range(&num(1), &j), index_range(&plus_one(j.clone()), &n)]),
        tuple(vec![index_range(&num(1), &n)]),
    );
    assert_eq!(reqs(&out.requirements), vec![len_eq(vec![a1.clone(), a2], num(1), n.clone()), index_req]);

    let bad = ReplacementMap::new()
        .with(tuple(vec![var_range("x", num(1), n.clone())]), tuple(vec![a1, var_range("b", num(1), var("k2"))]))
        .unwrap();
    let err = expand_range(&r, &bad, &[], &Options::default()).unwrap_err();
    assert_eq!(err.code(), "IndexMismatch", "{err}");
}

#[test]
fn independent_expansion_aligns_by_length() {
    let (j, k, n) = (var("j"), var("k"), var("n"));
    let r = range("i", mult(vec![idx("x", var("i")), idx("y", var("i"))]), num(1), n.clone());
    let map = ReplacementMap::new()
        .with(
            tuple(vec![var_range("x", num(1), n.clone())]),
            tuple(vec![var_range("a", num(1), j.clone()), var_range("b", num(1), k.clone())]),
        )
        .unwrap()
        .with(
            tuple(vec![var_range("y", num(1), n.clone())]),
            tuple(vec![var_range("c", num(1), j.clone()), var_range("d", num(1), k.clone())]),
        )
        .unwrap();
    let out = expand_range(&r, &map, &[], &Options::default()).unwrap();
    let expected = tuple(vec![
        range("i", mult(vec![idx("a", var("i")), idx("c", var("i"))]), num(1), j),
        range("i", mult(vec![idx("b", var("i")), idx("d", var("i"))]), num(1), k),
    ]);
    assert_eq!(out.expr, expected, "{}", out.expr);
    assert!(out.requirements.iter().all(|o| o.kind == ObligationKind::Length));
}

#[test]
fn empty_and_singular_range_reductions() {
    // (a, b_1, ..., b_n, c) with n : 0 and n : 1
    let f = lambda(vec![var("n")], tuple(vec![var("a"), var_range("b", num(1), var("n")), var("c")]));
    let r0 = apply_lambda(&f, &[num(0)], &[], &Options::default()).unwrap();
    assert_eq!(r0.expr, tuple(vars(&["a", "c"])));
    assert_eq!(reqs(&r0.requirements), vec![eq(plus_one(num(0)), num(1))]);
    assert_eq!(r0.requirements[0].kind, ObligationKind::Extent);

    let r1 = apply_lambda(&f, &[num(1)], &[], &Options::default()).unwrap();
    assert_eq!(r1.expr, tuple(vec![var("a"), idx("b", num(1)), var("c")]));
    assert!(r1.requirements.is_empty());

    let kept = apply_lambda(&f, &[num(0)], &[], &Options::preserve_all()).unwrap();
    assert_eq!(kept.expr, tuple(vec![var("a"), var_range("b", num(1), num(0)), var("c")]));
}

#[test]
fn extent_from_assumptions() {
    let m = var("m");
    let r = var_range("b", num(1), m.clone());
    let err = reduce_range(&r, &[], &Options::default()).unwrap_err();
    assert_eq!(err.code(), "UnreducibleExtent");
    let empty = eq(plus_one(m.clone()), num(1));
    let out = reduce_range(&r, &[empty.clone()], &Options::default()).unwrap();
    assert_eq!(out.expr, tuple(vec![]));
    assert_eq!(out.assumptions_used, vec![empty]);
    let single = eq(m.clone(), num(1));
    let out = reduce_range(&r, &[single.clone()], &Options::default()).unwrap();
    assert_eq!(out.expr, tuple(vec![idx("b", num(1))]));
    assert_eq!(out.assumptions_used, vec![single]);
}

#[test]
fn unary_conjunction_is_reduced_during_instantiation() {
    let n = var("n");
    let xs = var_range("x", num(1), n.clone());
    let ys = var_range("y", num(1), n.clone());
    let inner = forall(
        vec![xs.clone(), ys.clone()],
        vec![and(vec![range("k", eq(idx("x", var("k")), idx("y", var("k"))), num(1), n.clone())])],
        eq(tuple(vec![xs]), tuple(vec![ys])),
    );
    let stmt = forall(vec![n.clone()], vec![in_(n, op(sym::natural_pos(), vec![]))], inner);
    let map = ReplacementMap::new().with(var("n"), num(1)).unwrap();
    let out = instantiate(&stmt, &map, 1, &[], &Options::default()).unwrap();
    let (x1, y1) = (idx("x", num(1)), idx("y", num(1)));
    let expected = forall(
        vec![x1.clone(), y1.clone()],
        vec![eq(x1.clone(), y1.clone())],
        eq(tuple(vec![x1.clone()]), tuple(vec![y1.clone()])),
    );
    assert_eq!(out.expr, expected, "{}", out.expr);
    assert_eq!(out.conditions.len(), 1);
    assert_eq!(out.conditions[0].expr, in_(num(1), op(sym::natural_pos(), vec![])));
    let eqs: Vec<_> = out.requirements.iter().filter(|o| o.is_eq_replacement()).collect();
    assert_eq!(eqs.len(), 1);
    assert_eq!(eqs[0].expr, eq(and(vec![eq(x1.clone(), y1.clone())]), eq(x1, y1)));
    assert_eq!(out.requirements.len(), 1);

    let mut no_eq = Options::default();
    no_eq.equality_reductions.clear();
    let out = instantiate(&stmt, &map, 1, &[], &no_eq).unwrap();
    let (x1, y1) = (idx("x", num(1)), idx("y", num(1)));
    let awkward = forall(
        vec![x1.clone(), y1.clone()],
        vec![and(vec![eq(x1.clone(), y1.clone())])],
        eq(tuple(vec![x1]), tuple(vec![y1])),
    );
    assert_eq!(out.expr, awkward, "{}", out.expr);
}

#[test]
fn instantiation_scopes_body_under_conditions() {
    // ∀_{x | Q(x)} P(x) with x : a, P : y ↦ (y = y)
    let stmt = forall(vec![var("x")], vec![apply("Q", vec![var("x")])], apply("P", vec![var("x")]));
    let map = ReplacementMap::new()
        .with(var("x"), var("a"))
        .unwrap()
        .with(apply("P", vec![var("y")]), eq(var("y"), var("y")))
        .unwrap();
    let out = instantiate(&stmt, &map, 1, &[], &Options::default());
    let err = out.unwrap_err();
    assert_eq!(err.code(), "BadMap", "P is not a parameter: {err}");

    let stmt = forall(vec![var("P"), var("x")], vec![apply("Q", vec![var("x")])], apply("P", vec![var("x")]));
    let out = instantiate(&stmt, &map, 1, &[], &Options::default()).unwrap();
    assert_eq!(out.expr, eq(var("a"), var("a")));
    assert_eq!(out.conditions[0].expr, apply("Q", vec![var("a")]));
    assert_eq!(out.fuel_used, 1);
}

#[test]
fn instantiating_a_non_universal_fails() {
    let err = instantiate(&t(), &ReplacementMap::new(), 1, &[], &Options::default()).unwrap_err();
    assert_eq!(err.code(), "NotUniversal");
}

#[test]
fn tuple_axiom_instance_keeps_empty_range() {
    // ∀_{f, i, j | (j+1) = i} ((f(i), ..., f(j)) = ()) with f : k ↦ b_k, i : 1, j : 0
    let fk = range("k", apply("f", vec![var("k")]), var("i"), var("j"));
    let stmt =
        forall(vars(&["f", "i", "j"]), vec![eq(plus_one(var("j")), var("i"))], eq(tuple(vec![fk]), tuple(vec![])));
    let map = ReplacementMap::new()
        .with(apply("f", vec![var("k")]), idx("b", var("k")))
        .unwrap()
        .with(var("i"), num(1))
        .unwrap()
        .with(var("j"), num(0))
        .unwrap();
    let out = instantiate(&stmt, &map, 1, &[], &Options::preserve_all()).unwrap();
    assert_eq!(out.expr, eq(tuple(vec![var_range("b", num(1), num(0))]), tuple(vec![])));
    assert_eq!(out.conditions[0].expr, eq(plus_one(num(0)), num(1)));
    assert!(out.requirements.is_empty());
    // The range body applies f once.
    assert_eq!(out.fuel_used, 1);
}

#[test]
fn extent_from_value_assumptions() {
    let n = var("n");
    let r = var_range("b", num(1), n.clone());
    let zero = eq(n.clone(), num(0));
    let out = reduce_range(&r, &[zero.clone()], &Options::default()).unwrap();
    assert_eq!(out.expr, tuple(vec![]));
    assert_eq!(reqs(&out.requirements), vec![zero.clone(), eq(plus_one(num(0)), num(1))]);
    assert_eq!(out.assumptions_used, vec![zero]);
    let one = eq(n, num(1));
    let out = reduce_range(&r, &[one.clone()], &Options::default()).unwrap();
    assert_eq!(out.expr, tuple(vec![idx("b", num(1))]));
    assert_eq!(reqs(&out.requirements), vec![one]);
}

#[test]
fn equality_reduction_registry() {
    let a_or = or(vec![var("A")]);
    let out = pvk_reduce::equality_reduce(&a_or, &Options::default());
    assert_eq!(out.expr, var("A"));
    assert_eq!(reqs(&out.requirements), vec![eq(a_or.clone(), var("A"))]);
    assert!(out.requirements[0].is_eq_replacement());
    let out = pvk_reduce::equality_reduce(&a_or, &Options::preserve_all());
    assert_eq!(out.expr, a_or);
    assert!(out.requirements.is_empty());
    let binary = and(vars(&["A", "B"]));
    assert_eq!(pvk_reduce::equality_reduce(&binary, &Options::default()).expr, binary);
}

use pvk_expr::vocab::dsl::*;
use pvk_expr::{canonical_form, dummy_name, free_vars, is_relabelable, Expr};

fn names(e: &Expr) -> Vec<String> {
    free_vars(e).iter().map(|n| n.to_string()).collect()
}

#[test]
fn dummy_alphabet() {
    assert_eq!(dummy_name(0), "_a");
    assert_eq!(dummy_name(25), "_z");
    assert_eq!(dummy_name(26), "_aa");
    assert_eq!(dummy_name(51), "_az");
    assert_eq!(dummy_name(52), "_ba");
    assert_eq!(dummy_name(26 + 26 * 26), "_aaa");
}

#[test]
fn inner_quantifier_takes_first_dummy() {
    // x ↦ ∃_y((x+y+z)=0)
    let e = lambda(vec![var("x")], exists(vec![var("y")], vec![], eq(add(vars(&["x", "y", "z"])), num(0))));
    let expected = lambda(vec![var("_b")], exists(vec![var("_a")], vec![], eq(add(vars(&["_b", "_a", "z"])), num(0))));
    let c = canonical_form(&e);
    assert!(c.same_labels(&expected), "{c}");
    assert_eq!(e.id(), expected.id());
}

fn dot(x: &str, y: &str, k: &str) -> Expr {
    let params = vec![range(k, idx(x, var(k)), num(1), var("n")), range(k, idx(y, var(k)), num(1), var("n"))];
    let body = add(vec![range(k, mult(vec![idx(x, var(k)), idx(y, var(k))]), num(1), var("n"))]);
    lambda(params, body)
}

#[test]
fn range_parameter_reserves_first_dummy() {
    let c = canonical_form(&dot("x", "y", "k"));
    assert!(c.same_labels(&dot("_c", "_b", "_a")), "{c}");
}

#[test]
fn alpha_variants_share_identity() {
    assert_eq!(dot("x", "y", "k").id(), dot("u", "v", "i").id());
    // Swapping both labels is a renaming, so the identity survives.
    assert_eq!(dot("x", "y", "k").id(), dot("y", "x", "k").id());
    let swapped_body = lambda(
        vec![range("k", idx("x", var("k")), num(1), var("n")), range("k", idx("y", var("k")), num(1), var("n"))],
        add(vec![range("k", mult(vec![idx("y", var("k")), idx("x", var("k"))]), num(1), var("n"))]),
    );
    assert_ne!(dot("x", "y", "k").id(), swapped_body.id());
}

#[test]
fn canonical_rebuild_is_pointer_shared() {
    let e = dot("x", "y", "k");
    let c = canonical_form(&e);
    let rebuilt = pvk_expr::parse(&c.to_string()).unwrap();
    assert!(Expr::ptr_eq(&rebuilt, &c));
    assert!(Expr::ptr_eq(&canonical_form(&c), &c));
}

#[test]
fn uncovered_range_is_not_relabelable() {
    // (x_1, ..., x_n) ↦ (x_1 + ... + x_{n-1} + x_n)
    let n = var("n");
    let nm1 = add(vec![n.clone(), neg(num(1))]);
    let params = vec![range("k", idx("x", var("k")), num(1), n.clone())];
    let body = add(vec![range("k", idx("x", var("k")), num(1), nm1), idx("x", n)]);
    let f = lambda(params.clone(), body.clone());
    assert!(!is_relabelable(&params, &body, &"x".into()));
    let c = canonical_form(&f);
    let (ps, _) = c.as_lambda().unwrap();
    assert_eq!(pvk_expr::param_base(&ps[0]).unwrap().as_ref(), "x");
}

#[test]
fn free_variable_examples() {
    assert_eq!(names(&lambda(vec![var("x")], add(vars(&["x", "b"])))), ["b"]);
    assert!(names(&t()).is_empty());
    // ∀_{A_1..A_m ∈ 𝔹}((A_1 ∨ ... ∨ A_m) ∈ 𝔹)
    let m = var("m");
    let e = forall(
        vec![range("k", idx("A", var("k")), num(1), m.clone())],
        vec![range("k", in_(idx("A", var("k")), bools()), num(1), m.clone())],
        in_(or(vec![range("k", idx("A", var("k")), num(1), m)]), bools()),
    );
    assert_eq!(names(&e), ["m"]);
}

#[test]
fn masked_parameter_is_left_alone() {
    // In x ↦ (x, x ↦ x) the inner binder masks the outer one and is
    // canonicalized first.
    let e = lambda(vec![var("x")], tuple(vec![var("x"), lambda(vec![var("x")], var("x"))]));
    let c = canonical_form(&e);
    let expected = lambda(vec![var("_b")], tuple(vec![var("_b"), lambda(vec![var("_a")], var("_a"))]));
    assert!(c.same_labels(&expected), "{c}");
}

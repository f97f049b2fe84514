use proptest::prelude::*;
use pvk_expr::vocab::dsl::*;
use pvk_style::{format, style_options, StyleError, Styled, Target};

#[test]
fn option_introspection() {
    let d = div(var("a"), var("b"));
    assert_eq!(
        style_options(&d),
        vec![("division".to_string(), vec!["inline".to_string(), "fraction".to_string()], "fraction".to_string())]
    );
    assert!(style_options(&var("x")).is_empty());
    let r = var_range("x", num(1), var("n"));
    assert!(style_options(&r).iter().any(|(n, _, cur)| n == "parameterization" && cur == "implicit"));
}

#[test]
fn reset_to_default_is_identity() {
    let d = Styled::new(div(var("a"), var("b")));
    let back = d.with_style(&[], "division", "inline").unwrap().with_style(&[], "division", "fraction").unwrap();
    assert_eq!(back.format(Target::Latex), d.format(Target::Latex));
    assert!(back.styles().is_empty());
}

#[test]
fn errors() {
    let d = Styled::new(div(var("a"), var("b")));
    assert!(matches!(d.with_style(&[], "nope", "x"), Err(StyleError::UnknownStyleOption { .. })));
    assert!(matches!(d.with_style(&[9], "division", "inline"), Err(StyleError::BadPath(_))));
    assert!(matches!(d.with_style(&[], "division", "sideways"), Err(StyleError::BadStyleValue { .. })));
    assert!(matches!(d.with_style_arg("division"), Err(StyleError::BadArgument(_))));
    assert!(matches!(
        Styled::new(var("x")).with_style_arg("division=inline"),
        Err(StyleError::UnknownStyleOption { .. })
    ));
}

#[test]
fn arguments_with_and_without_paths() {
    let e = add(vec![div(var("a"), var("b")), div(var("c"), var("d"))]);
    let all = Styled::new(e.clone()).with_style_arg("division=inline").unwrap();
    assert_eq!(all.format(Target::Text), "(a / b) + (c / d)");
    let one = Styled::new(e).with_style_arg("1.1:division=inline").unwrap();
    assert_eq!(one.format(Target::Latex), r"\frac{a}{b} + \left(c / d\right)");
}

fn arb_styled() -> impl Strategy<Value = pvk_expr::Expr> {
    let leaf = prop::sample::select(vec![var("a"), var("b"), num(2), t()]);
    leaf.prop_recursive(3, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| div(a, b)),
            prop::collection::vec(inner.clone(), 2..4).prop_map(add),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| less_eq(a, b)),
            inner.clone().prop_map(neg),
            inner.prop_map(|b| add(vec![range("k", mult(vec![idx("x", var("k")), b]), num(1), var("n"))])),
        ]
    })
}

proptest! {
    #[test]
    fn style_never_changes_identity(e in arb_styled(), pick in 0usize..4, v in 0usize..3) {
        let opts = [("division", ["inline", "fraction", "inline"]), ("subtraction", ["minus", "plus", "minus"]),
                    ("direction", ["reversed", "normal", "reversed"]), ("parameterization", ["explicit", "implicit", "explicit"])];
        let (name, values) = opts[pick];
        let base = Styled::new(e.clone());
        if let Ok(s) = base.with_style_arg(&format!("{name}={}", values[v])) {
            prop_assert_eq!(s.expr().id(), e.id());
            prop_assert_eq!(s.format(Target::Latex), s.format(Target::Latex));
        }
        prop_assert_eq!(format(&e, Target::Text), base.format(Target::Text));
    }
}

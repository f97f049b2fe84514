mod common;

use common::{arb_expr, relabel};
use proptest::prelude::*;
use pvk_expr::vocab::dsl::*;
use pvk_expr::{canonical_form, parse, to_sexpr, to_sexpr_pretty, Expr, ExprError};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn canonical_form_is_idempotent(e in arb_expr()) {
        let c = canonical_form(&e);
        let cc = canonical_form(&c);
        prop_assert!(Expr::ptr_eq(&c, &cc));
        prop_assert_eq!(c.id(), e.id());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn text_round_trip(e in arb_expr()) {
        let back = parse(&to_sexpr(&e)).unwrap();
        prop_assert!(Expr::ptr_eq(&back, &e));
        let pretty = parse(&to_sexpr_pretty(&e, 40)).unwrap();
        prop_assert_eq!(pretty.id(), e.id());
    }

    #[test]
    fn relabeling_preserves_identity(e in arb_expr()) {
        let r = relabel(&e, "_q");
        prop_assert_eq!(r.id(), e.id());
    }

    #[test]
    fn canonical_rebuild_shares_node(e in arb_expr()) {
        let c = canonical_form(&e);
        let rebuilt = parse(&to_sexpr(&c)).unwrap();
        prop_assert!(Expr::ptr_eq(&rebuilt, &c));
    }

    #[test]
    fn lambda_operator_always_rejected(body in arb_expr(), arg in arb_expr()) {
        let f = lambda(vec![var("P")], body);
        let err = Expr::operation(f, tuple(vec![arg])).unwrap_err();
        prop_assert!(matches!(err, ExprError::KindViolation(_)));
    }
}

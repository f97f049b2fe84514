use proptest::prelude::*;
use pvk_expr::vocab::dsl::*;
use pvk_expr::vocab::sym;
use pvk_expr::Expr;

const NAMES: &[&str] = &["x", "y", "z", "a", "b"];

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        prop::sample::select(NAMES).prop_map(var),
        prop::sample::select(vec![sym::true_(), sym::false_(), sym::booleans(), num(0), num(1)]),
    ]
}

fn operator() -> impl Strategy<Value = Expr> {
    prop::sample::select(vec![sym::and(), sym::or(), sym::add(), sym::equals(), var("f"), var("g")])
}

/// Random well-formed expressions over all nine kinds.
pub fn arb_expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 48, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 0..3).prop_map(tuple),
            (operator(), prop::collection::vec(inner.clone(), 1..3)).prop_map(|(o, es)| op(o, es)),
            (inner.clone(), inner.clone()).prop_map(|(v, c)| cond(v, c)),
            (prop::sample::subsequence(NAMES, 1..3), inner.clone()).prop_map(|(ps, body)| lambda(vars(&ps), body)),
            (prop::sample::select(NAMES), inner.clone(), inner.clone(), inner.clone())
                .prop_map(|(x, body, s, e)| range("k", tuple(vec![idx(x, var("k")), body]), s, e)),
            (prop::sample::select(NAMES), inner.clone()).prop_map(|(x, i)| idx(x, i)),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::named(vec![("lhs".into(), a), ("rhs".into(), b)]).unwrap()),
            (prop::sample::select(NAMES), prop::sample::select(NAMES), inner.clone(), inner).prop_map(
                |(x, n, extra, body)| lambda(
                    vec![var_range(x, num(1), var(n))],
                    tuple(vec![var_range(x, num(1), var(n)), extra, body])
                )
            ),
        ]
    })
}

/// Consistently renames every lambda parameter to a fresh label.
pub fn relabel(e: &Expr, suffix: &str) -> Expr {
    if let Some((ps, body)) = e.as_lambda() {
        let mut body = relabel(body, suffix);
        let mut new_ps = Vec::new();
        for p in ps {
            let base = pvk_expr::param_base(p).unwrap().clone();
            if !pvk_expr::is_relabelable(ps, e.as_lambda().unwrap().1, &base) {
                return e.map_children(|c| Ok(relabel(c, suffix))).unwrap_or(e.clone());
            }
            let to = format!("{base}{suffix}");
            body = pvk_expr::rename_free(&body, &base, &to);
            new_ps.push(rename_param(p, &to));
        }
        return lambda(new_ps, body);
    }
    e.map_children(|c| Ok(relabel(c, suffix))).unwrap()
}

fn rename_param(p: &Expr, to: &str) -> Expr {
    match p.kind() {
        pvk_expr::Kind::Variable(_) => var(to),
        pvk_expr::Kind::Indexed { indices, .. } => Expr::indexed(var(to), indices.clone()).unwrap(),
        pvk_expr::Kind::Range { .. } => {
            let (k, body, s, e) = p.as_range().unwrap();
            let (_, indices) = body.as_indexed().unwrap();
            range(k, Expr::indexed(var(to), indices.to_vec()).unwrap(), s.clone(), e.clone())
        }
        _ => unreachable!(),
    }
}

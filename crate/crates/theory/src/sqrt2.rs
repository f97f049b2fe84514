//! Leaves of the dependency graph of `sqrt2_is_not_rational`: the
//! conjectures it still rests on and the axioms it uses. Kept as data; the
//! proof itself is not reproduced.

use pvk_expr::vocab::dsl::*;
use pvk_expr::vocab::sym;
use pvk_expr::Expr;
use pvk_reduce::index_range;

pub const THEOREM: &str = "numbers.number_sets.real_numbers.sqrt2_is_not_rational";

/// `√2 ∉ ℚ`, written `2^(1/2) ∉ ℚ`.
pub fn statement() -> Expr {
    not_in(exp(num(2), div(num(1), num(2))), sym::rational())
}

fn v(n: &str) -> Expr {
    var(n)
}

fn within(names: &[&str], set: Expr) -> Vec<Expr> {
    names.iter().map(|n| in_(v(n), set.clone())).collect()
}

fn with(mut conds: Vec<Expr>, more: impl IntoIterator<Item = Expr>) -> Vec<Expr> {
    conds.extend(more);
    conds
}

fn bin(o: Expr, a: Expr, b: Expr) -> Expr {
    op(o, vec![a, b])
}

fn divides(a: Expr, b: Expr) -> Expr {
    bin(sym::divides(), a, b)
}

fn gcd(a: Expr, b: Expr) -> Expr {
    bin(sym::gcd(), a, b)
}

fn proper_subset(a: Expr, b: Expr) -> Expr {
    bin(sym::proper_subset(), a, b)
}

fn greater(a: Expr, b: Expr) -> Expr {
    bin(sym::greater(), a, b)
}

/// The 38 unproven conjectures, in listing order.
pub fn conjectures() -> Vec<Expr> {
    use sym::{complex, integer, natural, natural_pos, rational, rational_non_zero, rational_pos, real, real_pos};
    let (a, b, c, d, e) = (v("a"), v("b"), v("c"), v("d"), v("e"));
    let (k, n, p, q, x, y) = (v("k"), v("n"), v("p"), v("q"), v("x"), v("y"));
    let i = v("i");
    vec![
        forall(
            vec![i.clone()],
            vec![in_(i.clone(), natural())],
            forall(
                vec![v("f")],
                vec![],
                eq(
                    len(tuple(vec![range("k", apply("f", vec![v("k")]), num(1), i.clone())])),
                    len(tuple(vec![index_range(&num(1), &i)])),
                ),
            ),
        ),
        forall(vec![a.clone()], within(&["a"], rational_non_zero()), in_(abs(a.clone()), rational_pos())),
        forall(
            vars(&["a", "b"]),
            with(within(&["a", "b"], natural_pos()), [eq(gcd(a.clone(), b.clone()), num(1))]),
            forall(
                vec![p.clone()],
                vec![in_(p.clone(), natural_pos()), greater(p.clone(), num(1))],
                not(and(vec![divides(p.clone(), a.clone()), divides(p.clone(), b.clone())])),
            ),
        ),
        forall(
            vars(&["k", "a", "n"]),
            vec![
                in_(k.clone(), integer()),
                in_(a.clone(), integer()),
                in_(n.clone(), natural_pos()),
                divides(k.clone(), a.clone()),
            ],
            divides(exp(k.clone(), n.clone()), exp(a.clone(), n.clone())),
        ),
        forall(
            vars(&["a", "b", "k"]),
            with(
                within(&["a", "b", "k"], complex()),
                [divides(mult(vec![k.clone(), a.clone()]), mult(vec![k.clone(), b.clone()])), neq(k.clone(), num(0))],
            ),
            divides(a.clone(), b.clone()),
        ),
        forall(
            vars(&["a", "n"]),
            with(within(&["a", "n"], integer()), [divides(num(2), exp(a.clone(), n.clone()))]),
            divides(num(2), a.clone()),
        ),
        forall(
            vars(&["x", "y"]),
            vec![in_(x.clone(), complex()), in_(y.clone(), integer()), neq(x.clone(), num(0))],
            divides(x.clone(), mult(vec![x.clone(), y.clone()])),
        ),
        forall(
            vars(&["a", "b"]),
            within(&["a", "b"], rational_non_zero()),
            in_(div(a.clone(), b.clone()), rational_non_zero()),
        ),
        forall(vec![x.clone()], within(&["x"], complex()), eq(div(x.clone(), num(1)), x.clone())),
        forall(
            vars(&["a", "b", "c", "d", "e"]),
            with(within(&["a", "b", "c", "d", "e"], complex()), [neq(c.clone(), num(0))]),
            eq(
                mult(vec![
                    div(a.clone(), mult(vec![b.clone(), c.clone()])),
                    div(mult(vec![c.clone(), d.clone()]), e.clone()),
                ]),
                mult(vec![div(a.clone(), b.clone()), div(d.clone(), e.clone())]),
            ),
        ),
        forall(
            vars(&["a", "b"]),
            vec![in_(a.clone(), natural_pos()), in_(b.clone(), natural())],
            in_(exp(a.clone(), b.clone()), natural_pos()),
        ),
        forall(vars(&["a", "b"]), within(&["a", "b"], rational_non_zero()), neq(exp(a.clone(), b.clone()), num(0))),
        forall(
            vars(&["n", "x"]),
            vec![in_(n.clone(), natural_pos()), in_(x.clone(), real_pos())],
            eq(exp(exp(x.clone(), div(num(1), n.clone())), n.clone()), x.clone()),
        ),
        forall(
            vars(&["a", "b", "n"]),
            vec![in_(a.clone(), complex()), in_(b.clone(), complex()), in_(n.clone(), natural_pos())],
            eq(
                exp(mult(vec![a.clone(), b.clone()]), n.clone()),
                mult(vec![exp(a.clone(), n.clone()), exp(b.clone(), n.clone())]),
            ),
        ),
        forall(vec![a.clone()], within(&["a"], rational()), eq(exp(abs(a.clone()), num(2)), exp(a.clone(), num(2)))),
        forall(
            vec![x.clone()],
            within(&["x"], complex()),
            eq(exp(x.clone(), num(2)), mult(vec![x.clone(), x.clone()])),
        ),
        forall(vec![x.clone()], within(&["x"], complex()), eq(mult(vec![num(1), x.clone()]), x.clone())),
        forall(vec![x.clone()], within(&["x"], complex()), eq(mult(vec![x.clone(), num(1)]), x.clone())),
        forall(
            vars(&["a", "x", "y"]),
            with(within(&["a", "x", "y"], complex()), [eq(x.clone(), y.clone())]),
            eq(mult(vec![x.clone(), a.clone()]), mult(vec![y.clone(), a.clone()])),
        ),
        proper_subset(real(), complex()),
        proper_subset(natural(), integer()),
        proper_subset(natural_pos(), natural()),
        proper_subset(integer(), rational()),
        proper_subset(natural_pos(), rational_non_zero()),
        forall(
            vec![q.clone()],
            vec![in_(q.clone(), rational()), neq(q.clone(), num(0))],
            in_(q.clone(), rational_non_zero()),
        ),
        proper_subset(rational_pos(), rational()),
        forall(
            vec![q.clone()],
            within(&["q"], rational_pos()),
            exists(
                vars(&["a", "b"]),
                within(&["a", "b"], natural_pos()),
                and(vec![eq(q.clone(), div(a.clone(), b.clone())), eq(gcd(a.clone(), b.clone()), num(1))]),
            ),
        ),
        forall(vec![x.clone()], vec![], in_(in_(x, rational()), bools())),
        in_(num(0), rational()),
        proper_subset(natural_pos(), real_pos()),
        proper_subset(rational(), real()),
        proper_subset(real_pos(), real()),
        less(num(1), num(2)),
        in_(num(1), natural_pos()),
        in_(num(2), natural_pos()),
        forall(
            vars(&["a", "b"]),
            vec![],
            eq(len(tuple(vec![a.clone(), b.clone()])), len(tuple(vec![index_range(&num(1), &num(2))]))),
        ),
        forall(
            vars(&["a", "b"]),
            with(within(&["a", "b"], real()), [greater(a.clone(), b.clone())]),
            neq(a.clone(), b),
        ),
        forall(vec![a.clone()], within(&["a"], real_pos()), greater(a, num(0))),
    ]
}

/// The 21 axioms, by registered name, in listing order.
pub const AXIOMS: [&str; 21] = [
    "logic.booleans.conjunction.axiom1",
    "logic.booleans.axiom5",
    "logic.booleans.axiom4",
    "logic.booleans.implication.axiom2",
    "logic.booleans.implication.axiom3",
    "logic.booleans.negation.axiom2",
    "logic.booleans.negation.axiom1",
    "logic.booleans.quantification.existence.axiom1",
    "logic.equality.axiom1",
    "logic.equality.axiom2",
    "logic.equality.axiom3",
    "logic.equality.axiom4",
    "logic.equality.axiom6",
    "logic.sets.inclusion.axiom3",
    "logic.sets.inclusion.axiom1",
    "logic.sets.membership.axiom1",
    "numbers.number_sets.natural_numbers.axiom2",
    "numbers.number_sets.natural_numbers.axiom1",
    "numbers.numerals.axiom1",
    "numbers.numerals.axiom2",
    "numbers.ordering.axiom1",
];

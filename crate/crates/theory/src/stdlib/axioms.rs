//! The basic axiom lists, one function per package.

use pvk_expr::composite::quantifier;
use pvk_expr::vocab::dsl::*;
use pvk_expr::vocab::{pkg, sym};
use pvk_expr::Expr;

use crate::registry::Registry;

fn v(n: &str) -> Expr {
    var(n)
}

fn nat() -> Expr {
    sym::natural()
}

fn nat_pos() -> Expr {
    sym::natural_pos()
}

/// `x_1, ..., x_n`.
fn xs(x: &str, n: &str) -> Expr {
    var_range(x, num(1), v(n))
}

/// `f(x_1, ..., x_n)`.
fn app(f: &str, x: &str, n: &str) -> Expr {
    apply(f, vec![xs(x, n)])
}

/// `y_1 ∈ S_1, ..., y_n ∈ S_n`.
fn memberships(y: &str, s: &str, n: &str) -> Expr {
    range("_k", in_(idx(y, v("_k")), idx(s, v("_k"))), num(1), v(n))
}

/// `∀_{n ∈ domain} inner`.
fn over(n: &str, domain: Expr, inner: Expr) -> Expr {
    forall(vec![v(n)], vec![in_(v(n), domain)], inner)
}

fn all(names: &[&str], body: Expr) -> Expr {
    forall(vars(names), vec![], body)
}

fn bin(op_: Expr, a: Expr, b: Expr) -> Expr {
    op(op_, vec![a, b])
}

fn card(s: Expr) -> Expr {
    op(sym::card(), vec![s])
}

fn subset_eq(a: Expr, b: Expr) -> Expr {
    bin(sym::subset_eq(), a, b)
}

fn set_equiv(a: Expr, b: Expr) -> Expr {
    bin(sym::set_equiv(), a, b)
}

fn proper_subset(a: Expr, b: Expr) -> Expr {
    bin(sym::proper_subset(), a, b)
}

fn one() -> Expr {
    num(1)
}

fn succ(e: Expr) -> Expr {
    add(vec![e, one()])
}

fn register(r: &mut Registry, package: &str, axioms: Vec<Expr>) {
    for (i, a) in axioms.into_iter().enumerate() {
        r.register_axiom(package, &format!("axiom{}", i + 1), a).expect("stdlib axiom registers");
    }
}

fn operations() -> Vec<Expr> {
    vec![over(
        "n",
        nat(),
        forall(
            vec![v("f"), xs("x", "n"), xs("y", "n")],
            vec![eq(tuple(vec![xs("x", "n")]), tuple(vec![xs("y", "n")]))],
            eq(app("f", "x", "n"), app("f", "y", "n")),
        ),
    )]
}

fn conditionals() -> Vec<Expr> {
    let (a, b, q) = (v("a"), v("b"), v("Q"));
    vec![
        all(&["a"], eq(cond(a.clone(), t()), a.clone())),
        all(&["a", "Q"], eq(cond(a.clone(), q.clone()), cond(a.clone(), eq(q.clone(), t())))),
        forall(
            vars(&["a", "b", "Q"]),
            vec![implies(q.clone(), eq(a.clone(), b.clone()))],
            eq(cond(a, q.clone()), cond(b, q)),
        ),
    ]
}

fn lambda_maps() -> Vec<Expr> {
    let pointwise = forall(vec![xs("a", "i")], vec![], eq(app("f", "a", "i"), app("g", "a", "i")));
    vec![over(
        "i",
        nat_pos(),
        all(
            &["f", "g"],
            implies(
                pointwise,
                eq(lambda(vec![xs("b", "i")], app("f", "b", "i")), lambda(vec![xs("c", "i")], app("g", "c", "i"))),
            ),
        ),
    )]
}

fn tuples() -> Vec<Expr> {
    let (i, j) = (v("i"), v("j"));
    let fs = |end: Expr| range("k", apply("f", vec![v("k")]), i.clone(), end);
    vec![
        eq(len(tuple(vec![])), num(0)),
        over(
            "i",
            nat(),
            all_params(vec![xs("a", "i"), v("b")], eq(len(tuple(vec![xs("a", "i"), v("b")])), succ(i.clone()))),
        ),
        over(
            "i",
            nat(),
            all_params(
                vec![xs("a", "i"), v("b"), xs("c", "i"), v("d")],
                eq(
                    eq(tuple(vec![xs("a", "i"), v("b")]), tuple(vec![xs("c", "i"), v("d")])),
                    and(vec![eq(tuple(vec![xs("a", "i")]), tuple(vec![xs("c", "i")])), eq(v("b"), v("d"))]),
                ),
            ),
        ),
        forall(
            vars(&["f", "i", "j"]),
            vec![eq(succ(j.clone()), i.clone())],
            eq(tuple(vec![fs(j.clone())]), tuple(vec![])),
        ),
        forall(
            vars(&["f", "i", "j"]),
            vec![in_(len(tuple(vec![fs(j.clone())])), nat())],
            eq(tuple(vec![fs(succ(j.clone()))]), tuple(vec![fs(j.clone()), apply("f", vec![succ(j)])])),
        ),
    ]
}

fn all_params(params: Vec<Expr>, body: Expr) -> Expr {
    forall(params, vec![], body)
}

fn booleans() -> Vec<Expr> {
    let a = v("A");
    vec![
        t(),
        eq(bools(), set(vec![t(), f()])),
        neq(f(), t()),
        forall(vec![a.clone()], vec![a.clone()], eq(a.clone(), t())),
        forall(vec![a.clone()], vec![eq(a.clone(), t())], a),
    ]
}

fn implication() -> Vec<Expr> {
    let (a, b) = (v("A"), v("B"));
    let boolean = in_(a.clone(), bools());
    vec![
        eq(implies(t(), f()), f()),
        forall(vec![a.clone()], vec![boolean.clone(), implies(not(a.clone()), f())], a.clone()),
        forall(vec![a.clone()], vec![boolean, implies(a.clone(), f())], not(a.clone())),
        all(&["A", "B"], eq(iff(a.clone(), b.clone()), and(vec![implies(a.clone(), b.clone()), implies(b, a)]))),
    ]
}

fn negation() -> Vec<Expr> {
    let a = v("A");
    vec![
        eq(not(t()), f()),
        eq(not(f()), t()),
        forall(vec![a.clone()], vec![not(a.clone())], eq(a.clone(), f())),
        forall(vec![a.clone()], vec![in_(not(a.clone()), bools())], in_(a, bools())),
    ]
}

/// Shared shape of the conjunction and disjunction lists.
fn connective(join: fn(Vec<Expr>) -> Expr, table: [Expr; 4], empty: Expr) -> Vec<Expr> {
    let (a, b) = (v("A"), v("B"));
    let typed =
        |x: Expr| forall(vars(&["A", "B"]), vec![in_(join(vec![a.clone(), b.clone()]), bools())], in_(x, bools()));
    let [tt, tf, ft, ff] = table;
    vec![
        eq(join(vec![t(), t()]), tt),
        eq(join(vec![t(), f()]), tf),
        eq(join(vec![f(), t()]), ft),
        eq(join(vec![f(), f()]), ff),
        typed(a.clone()),
        typed(b.clone()),
        empty,
        over(
            "m",
            nat(),
            all_params(
                vec![xs("A", "m"), b.clone()],
                eq(join(vec![xs("A", "m"), b.clone()]), join(vec![join(vec![xs("A", "m")]), b])),
            ),
        ),
    ]
}

fn conjunction() -> Vec<Expr> {
    connective(and, [t(), f(), f(), f()], and(vec![]))
}

fn disjunction() -> Vec<Expr> {
    connective(or, [t(), t(), t(), f()], not(or(vec![])))
}

fn universality() -> Vec<Expr> {
    vec![over("n", nat_pos(), all(&["P"], in_(forall(vec![xs("x", "n")], vec![], app("P", "x", "n")), bools())))]
}

fn existence() -> Vec<Expr> {
    let some = |x: &str| exists(vec![xs(x, "n")], vec![app("Q", x, "n")], app("P", x, "n"));
    vec![
        over(
            "n",
            nat_pos(),
            all(
                &["P", "Q"],
                eq(some("x"), not(forall(vec![xs("y", "n")], vec![app("Q", "y", "n")], neq(app("P", "y", "n"), t())))),
            ),
        ),
        over(
            "n",
            nat_pos(),
            all(
                &["P", "Q"],
                eq(not_exists(vec![xs("x", "n")], vec![app("Q", "x", "n")], app("P", "x", "n")), not(some("y"))),
            ),
        ),
    ]
}

fn equality() -> Vec<Expr> {
    let (x, y, z) = (v("x"), v("y"), v("z"));
    vec![
        all(&["x", "y"], in_(eq(x.clone(), y.clone()), bools())),
        all(&["x", "y"], eq(eq(y.clone(), x.clone()), eq(x.clone(), y.clone()))),
        forall(vars(&["x", "y", "z"]), vec![eq(x.clone(), y.clone()), eq(y.clone(), z.clone())], eq(x.clone(), z)),
        all(&["x", "y"], eq(neq(x.clone(), y.clone()), not(eq(x.clone(), y.clone())))),
        all(&["x"], eq(x.clone(), x.clone())),
        forall(vars(&["f", "x", "y"]), vec![eq(x.clone(), y.clone())], eq(apply("f", vec![x]), apply("f", vec![y]))),
    ]
}

fn membership() -> Vec<Expr> {
    let (x, s) = (v("x"), v("S"));
    vec![all(&["x", "S"], eq(not_in(x.clone(), s.clone()), not(in_(x, s))))]
}

fn equivalence() -> Vec<Expr> {
    let (a, b, x) = (v("A"), v("B"), v("x"));
    vec![
        all(
            &["A", "B"],
            eq(set_equiv(a.clone(), b.clone()), all(&["x"], eq(in_(x.clone(), a.clone()), in_(x, b.clone())))),
        ),
        all(&["A", "B"], eq(bin(sym::set_not_equiv(), a.clone(), b.clone()), not(set_equiv(a, b)))),
    ]
}

fn enumeration() -> Vec<Expr> {
    let x = v("x");
    vec![over(
        "n",
        nat(),
        all_params(
            vec![x.clone(), xs("y", "n")],
            eq(
                in_(x.clone(), set(vec![xs("y", "n")])),
                or(vec![range("_k", eq(x, idx("y", v("_k"))), num(1), v("n"))]),
            ),
        ),
    )]
}

fn inclusion() -> Vec<Expr> {
    let (a, b, x) = (v("A"), v("B"), v("x"));
    vec![
        all(
            &["A", "B"],
            eq(
                subset_eq(a.clone(), b.clone()),
                forall(vec![x.clone()], vec![in_(x.clone(), a.clone())], in_(x, b.clone())),
            ),
        ),
        all(&["A", "B"], eq(bin(sym::not_subset_eq(), a.clone(), b.clone()), not(subset_eq(a.clone(), b.clone())))),
        all(
            &["A", "B"],
            eq(
                proper_subset(a.clone(), b.clone()),
                and(vec![subset_eq(a.clone(), b.clone()), bin(sym::set_not_equiv(), b.clone(), a.clone())]),
            ),
        ),
        all(&["A", "B"], eq(bin(sym::not_proper_subset(), a.clone(), b.clone()), not(proper_subset(a, b)))),
    ]
}

/// Element-wise membership over `A_1, ..., A_m` joined by `join`.
fn pointwise_sets(set_op: Expr, join: fn(Vec<Expr>) -> Expr) -> Expr {
    let x = v("x");
    over(
        "m",
        nat_pos(),
        all_params(
            vec![x.clone(), xs("A", "m")],
            eq(
                in_(x.clone(), op(set_op, vec![xs("A", "m")])),
                join(vec![range("_k", in_(x, idx("A", v("_k"))), num(1), v("m"))]),
            ),
        ),
    )
}

/// `⋃`/`⋂`/`{ : }` over `y_1 ∈ S_1, ..., y_n ∈ S_n | Q(y_1, ..., y_n)`.
fn over_family(binder: Expr, body: Expr) -> Expr {
    quantifier(binder, vec![xs("y", "n")], vec![memberships("y", "S", "n"), app("Q", "y", "n")], body)
        .expect("valid binder")
}

fn family_params(last: &str) -> Vec<Expr> {
    vec![xs("S", "n"), v("Q"), v(last), v("x")]
}

fn unification() -> Vec<Expr> {
    let x = v("x");
    let union_all = over_family(sym::union_all(), app("R", "y", "n"));
    vec![
        pointwise_sets(sym::union(), or),
        over(
            "n",
            nat_pos(),
            all_params(
                family_params("R"),
                eq(
                    in_(x.clone(), union_all),
                    exists(
                        vec![xs("y", "n")],
                        vec![memberships("y", "S", "n"), app("Q", "y", "n")],
                        in_(x, app("R", "y", "n")),
                    ),
                ),
            ),
        ),
    ]
}

fn intersection() -> Vec<Expr> {
    let x = v("x");
    let nonempty = exists(vec![xs("y", "n")], vec![memberships("y", "S", "n")], app("Q", "y", "n"));
    vec![
        pointwise_sets(sym::intersect(), and),
        over(
            "n",
            nat_pos(),
            forall(
                family_params("R"),
                vec![nonempty],
                eq(
                    in_(x.clone(), over_family(sym::intersect_all(), app("R", "y", "n"))),
                    forall(
                        vec![xs("y", "n")],
                        vec![memberships("y", "S", "n"), app("Q", "y", "n")],
                        in_(x, app("R", "y", "n")),
                    ),
                ),
            ),
        ),
    ]
}

fn subtraction() -> Vec<Expr> {
    let (x, a, b) = (v("x"), v("A"), v("B"));
    vec![all(
        &["x", "A", "B"],
        eq(in_(x.clone(), bin(sym::difference(), a.clone(), b.clone())), and(vec![in_(x.clone(), a), not_in(x, b)])),
    )]
}

fn comprehension() -> Vec<Expr> {
    let x = v("x");
    vec![over(
        "n",
        nat_pos(),
        all_params(
            family_params("f"),
            eq(
                in_(x.clone(), over_family(sym::set_of_all(), app("f", "y", "n"))),
                exists(
                    vec![xs("y", "n")],
                    vec![memberships("y", "S", "n"), app("Q", "y", "n")],
                    eq(x, app("f", "y", "n")),
                ),
            ),
        ),
    )]
}

fn power_sets() -> Vec<Expr> {
    let (x, s) = (v("x"), v("S"));
    vec![all(&["x", "S"], eq(in_(x.clone(), op(sym::power_set(), vec![s.clone()])), subset_eq(x, s)))]
}

fn cardinality() -> Vec<Expr> {
    let (x, s) = (v("x"), v("S"));
    vec![
        eq(card(sym::empty_set()), num(0)),
        forall(
            vars(&["x", "S"]),
            vec![in_(card(s.clone()), nat()), not_in(x.clone(), s.clone())],
            eq(card(op(sym::union(), vec![s.clone(), set(vec![x])])), succ(card(s))),
        ),
    ]
}

fn natural_numbers() -> Vec<Expr> {
    let (m, n, s, x) = (v("m"), v("n"), v("S"), v("x"));
    vec![
        in_(num(0), nat()),
        over("n", nat(), in_(succ(n.clone()), nat())),
        forall(
            vars(&["m", "n"]),
            vec![in_(m.clone(), nat()), in_(n.clone(), nat()), eq(succ(m.clone()), succ(n.clone()))],
            eq(n.clone(), m),
        ),
        over("n", nat(), neq(succ(n.clone()), num(0))),
        forall(
            vec![s.clone()],
            vec![subset_eq(s.clone(), nat())],
            implies(
                and(vec![
                    in_(num(0), s.clone()),
                    forall(vec![x.clone()], vec![in_(x.clone(), s.clone())], in_(succ(x.clone()), s.clone())),
                ]),
                set_equiv(s, nat()),
            ),
        ),
        all(&["x"], in_(in_(x, nat()), bools())),
        eq(
            nat_pos(),
            quantifier(
                sym::set_of_all(),
                vec![n.clone()],
                vec![in_(n.clone(), nat()), bin(sym::greater(), n.clone(), num(0))],
                n,
            )
            .expect("valid binder"),
        ),
    ]
}

/// `k = (k-1) + 1` for the digits 1 through 9.
fn numerals() -> Vec<Expr> {
    (1..=9).map(|k| eq(num(k), succ(num(k - 1)))).collect()
}

fn ordering() -> Vec<Expr> {
    let (x, y) = (v("x"), v("y"));
    vec![all(&["x", "y"], eq(bin(sym::greater(), y.clone(), x.clone()), less(x, y)))]
}

pub const CARDINALITY_NOTE: &str =
    "Cardinality is only defined for finite sets here; infinite sets would need ordinal numbers and more axioms.";

/// Every package with its axioms, in registration order.
pub fn packages() -> Vec<(&'static str, Vec<Expr>)> {
    vec![
        (pkg::OPERATIONS, operations()),
        (pkg::CONDITIONALS, conditionals()),
        (pkg::LAMBDA_MAPS, lambda_maps()),
        (pkg::TUPLES, tuples()),
        (pkg::BOOLEANS, booleans()),
        (pkg::IMPLICATION, implication()),
        (pkg::NEGATION, negation()),
        (pkg::CONJUNCTION, conjunction()),
        (pkg::DISJUNCTION, disjunction()),
        (pkg::UNIVERSALITY, universality()),
        (pkg::EXISTENCE, existence()),
        (pkg::EQUALITY, equality()),
        (pkg::MEMBERSHIP, membership()),
        (pkg::EQUIVALENCE, equivalence()),
        (pkg::ENUMERATION, enumeration()),
        (pkg::INCLUSION, inclusion()),
        (pkg::UNIFICATION, unification()),
        (pkg::INTERSECTION, intersection()),
        (pkg::SUBTRACTION, subtraction()),
        (pkg::COMPREHENSION, comprehension()),
        (pkg::POWER_SETS, power_sets()),
        (pkg::CARDINALITY, cardinality()),
        (pkg::NATURAL_NUMBERS, natural_numbers()),
        (pkg::NUMERALS, numerals()),
        (pkg::ORDERING, ordering()),
    ]
}

pub fn register_all(r: &mut Registry) {
    for (p, axioms) in packages() {
        register(r, p, axioms);
    }
    r.add_note(pkg::CARDINALITY, CARDINALITY_NOTE);
}

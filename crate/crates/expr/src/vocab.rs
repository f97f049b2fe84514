//! Literal vocabulary of the standard theories and a small builder DSL.
//!
//! Literals are identified by `(package, name)`; the same name in two
//! packages gives two distinct literals.
//!
//! The builders panic on malformed input, which keeps theory sources short.
//! Use [`Expr::operation`], [`Expr::lambda`] and friends for fallible
//! construction.

use crate::composite;
use crate::node::Expr;

pub mod pkg {
    pub const BOOLEANS: &str = "logic.booleans";
    pub const IMPLICATION: &str = "logic.booleans.implication";
    pub const NEGATION: &str = "logic.booleans.negation";
    pub const CONJUNCTION: &str = "logic.booleans.conjunction";
    pub const DISJUNCTION: &str = "logic.booleans.disjunction";
    pub const UNIVERSALITY: &str = "logic.booleans.quantification.universality";
    pub const EXISTENCE: &str = "logic.booleans.quantification.existence";
    pub const EQUALITY: &str = "logic.equality";
    pub const MEMBERSHIP: &str = "logic.sets.membership";
    pub const EQUIVALENCE: &str = "logic.sets.equivalence";
    pub const ENUMERATION: &str = "logic.sets.enumeration";
    pub const INCLUSION: &str = "logic.sets.inclusion";
    pub const UNIFICATION: &str = "logic.sets.unification";
    pub const INTERSECTION: &str = "logic.sets.intersection";
    pub const SUBTRACTION: &str = "logic.sets.subtraction";
    pub const COMPREHENSION: &str = "logic.sets.comprehension";
    pub const POWER_SETS: &str = "logic.sets.power_sets";
    pub const CARDINALITY: &str = "logic.sets.cardinality";
    pub const NUMBER_SETS: &str = "numbers.number_sets";
    pub const NATURAL_NUMBERS: &str = "numbers.number_sets.natural_numbers";
    pub const NUMERALS: &str = "numbers.numerals";
    pub const ADDITION: &str = "numbers.addition";
    pub const NEG: &str = "numbers.negation";
    pub const MULTIPLICATION: &str = "numbers.multiplication";
    pub const DIVISION: &str = "numbers.division";
    pub const EXPONENTIATION: &str = "numbers.exponentiation";
    pub const ORDERING: &str = "numbers.ordering";
    pub const ABSOLUTE_VALUE: &str = "numbers.absolute_value";
    pub const DIVISIBILITY: &str = "numbers.divisibility";
    pub const GCD: &str = "numbers.gcd";
    pub const TUPLES: &str = "core_expr_types.tuples";
    pub const CONDITIONALS: &str = "core_expr_types.conditionals";
    pub const OPERATIONS: &str = "core_expr_types.operations";
    pub const LAMBDA_MAPS: &str = "core_expr_types.lambda_maps";
}

macro_rules! literals {
    ($($f:ident => ($p:expr, $n:expr);)*) => {
        $(
            pub fn $f() -> Expr {
                Expr::literal($p, $n)
            }
        )*
    };
}

/// Literal constants, one function per symbol.
pub mod sym {
    use super::pkg;
    use crate::node::Expr;

    literals! {
        true_ => (pkg::BOOLEANS, "TRUE");
        false_ => (pkg::BOOLEANS, "FALSE");
        booleans => (pkg::BOOLEANS, "Boolean");
        implies => (pkg::IMPLICATION, "Implies");
        iff => (pkg::IMPLICATION, "Iff");
        not => (pkg::NEGATION, "Not");
        and => (pkg::CONJUNCTION, "And");
        or => (pkg::DISJUNCTION, "Or");
        forall => (pkg::UNIVERSALITY, "Forall");
        exists => (pkg::EXISTENCE, "Exists");
        not_exists => (pkg::EXISTENCE, "NotExists");
        equals => (pkg::EQUALITY, "Equals");
        not_equals => (pkg::EQUALITY, "NotEquals");
        in_ => (pkg::MEMBERSHIP, "In");
        not_in => (pkg::MEMBERSHIP, "NotIn");
        set_equiv => (pkg::EQUIVALENCE, "SetEquiv");
        set_not_equiv => (pkg::EQUIVALENCE, "SetNotEquiv");
        set => (pkg::ENUMERATION, "Set");
        empty_set => (pkg::ENUMERATION, "EmptySet");
        subset_eq => (pkg::INCLUSION, "SubsetEq");
        not_subset_eq => (pkg::INCLUSION, "NotSubsetEq");
        proper_subset => (pkg::INCLUSION, "ProperSubset");
        not_proper_subset => (pkg::INCLUSION, "NotProperSubset");
        union => (pkg::UNIFICATION, "Union");
        union_all => (pkg::UNIFICATION, "UnionAll");
        intersect => (pkg::INTERSECTION, "Intersect");
        intersect_all => (pkg::INTERSECTION, "IntersectAll");
        difference => (pkg::SUBTRACTION, "Difference");
        set_of_all => (pkg::COMPREHENSION, "SetOfAll");
        power_set => (pkg::POWER_SETS, "PowerSet");
        card => (pkg::CARDINALITY, "Card");
        natural => (pkg::NUMBER_SETS, "Natural");
        natural_pos => (pkg::NUMBER_SETS, "NaturalPos");
        integer => (pkg::NUMBER_SETS, "Integer");
        rational => (pkg::NUMBER_SETS, "Rational");
        rational_non_zero => (pkg::NUMBER_SETS, "RationalNonZero");
        rational_pos => (pkg::NUMBER_SETS, "RationalPos");
        real => (pkg::NUMBER_SETS, "Real");
        real_pos => (pkg::NUMBER_SETS, "RealPos");
        complex => (pkg::NUMBER_SETS, "Complex");
        add => (pkg::ADDITION, "Add");
        neg => (pkg::NEG, "Neg");
        mult => (pkg::MULTIPLICATION, "Mult");
        div => (pkg::DIVISION, "Div");
        exp => (pkg::EXPONENTIATION, "Exp");
        less => (pkg::ORDERING, "Less");
        less_eq => (pkg::ORDERING, "LessEq");
        greater => (pkg::ORDERING, "Greater");
        greater_eq => (pkg::ORDERING, "GreaterEq");
        abs => (pkg::ABSOLUTE_VALUE, "Abs");
        divides => (pkg::DIVISIBILITY, "Divides");
        gcd => (pkg::GCD, "GCD");
        len => (pkg::TUPLES, "Len");
        conditional_set => (pkg::CONDITIONALS, "ConditionalSet");
    }

    /// Decimal numeral literal.
    pub fn num(n: u64) -> Expr {
        Expr::literal(pkg::NUMERALS, &n.to_string())
    }
}

/// Numeric value of a numeral literal.
pub fn numeral_value(e: &Expr) -> Option<u64> {
    match e.as_literal() {
        Some((p, n)) if p == pkg::NUMERALS => n.parse().ok(),
        _ => None,
    }
}

/// Builders with panicking validation, for literate theory sources.
pub mod dsl {
    use super::sym;
    use crate::node::Expr;

    pub use super::sym::num;

    pub fn var(name: &str) -> Expr {
        Expr::var(name)
    }

    pub fn tuple(entries: Vec<Expr>) -> Expr {
        Expr::tuple(entries)
    }

    /// `operator(operands...)`, operands always wrapped in an ExprTuple.
    ///
    /// # Panics
    /// If `operator` is not a Variable, Literal or IndexedVar.
    pub fn op(operator: Expr, operands: Vec<Expr>) -> Expr {
        Expr::operation(operator, Expr::tuple(operands)).expect("valid operator")
    }

    /// Application of an operator variable, e.g. `f(x)`.
    pub fn apply(f: &str, args: Vec<Expr>) -> Expr {
        op(Expr::var(f), args)
    }

    /// `x_i`.
    pub fn idx(x: &str, i: Expr) -> Expr {
        Expr::indexed(Expr::var(x), vec![i]).expect("indexed variable")
    }

    /// `body[k:=start], ..., body[k:=end]`.
    pub fn range(k: &str, body: Expr, start: Expr, end: Expr) -> Expr {
        Expr::range_over(k, body, start, end)
    }

    /// `x_start, ..., x_end`, indexed by a fresh-looking parameter `_k`.
    pub fn var_range(x: &str, start: Expr, end: Expr) -> Expr {
        range("_k", idx(x, var("_k")), start, end)
    }

    /// # Panics
    /// If the parameters are malformed or repeated.
    pub fn lambda(params: Vec<Expr>, body: Expr) -> Expr {
        Expr::lambda(params, body).expect("valid lambda parameters")
    }

    pub fn cond(value: Expr, condition: Expr) -> Expr {
        Expr::conditional(value, condition)
    }

    pub fn t() -> Expr {
        sym::true_()
    }
    pub fn f() -> Expr {
        sym::false_()
    }
    pub fn bools() -> Expr {
        sym::booleans()
    }
    pub fn not(a: Expr) -> Expr {
        op(sym::not(), vec![a])
    }
    pub fn and(es: Vec<Expr>) -> Expr {
        op(sym::and(), es)
    }
    pub fn or(es: Vec<Expr>) -> Expr {
        op(sym::or(), es)
    }
    pub fn implies(a: Expr, b: Expr) -> Expr {
        op(sym::implies(), vec![a, b])
    }
    pub fn iff(a: Expr, b: Expr) -> Expr {
        op(sym::iff(), vec![a, b])
    }
    pub fn eq(a: Expr, b: Expr) -> Expr {
        op(sym::equals(), vec![a, b])
    }
    pub fn neq(a: Expr, b: Expr) -> Expr {
        op(sym::not_equals(), vec![a, b])
    }
    pub fn in_(a: Expr, s: Expr) -> Expr {
        op(sym::in_(), vec![a, s])
    }
    pub fn not_in(a: Expr, s: Expr) -> Expr {
        op(sym::not_in(), vec![a, s])
    }
    pub fn set(es: Vec<Expr>) -> Expr {
        op(sym::set(), es)
    }
    pub fn len(t: Expr) -> Expr {
        op(sym::len(), vec![t])
    }
    pub fn add(es: Vec<Expr>) -> Expr {
        op(sym::add(), es)
    }
    pub fn neg(a: Expr) -> Expr {
        op(sym::neg(), vec![a])
    }
    pub fn mult(es: Vec<Expr>) -> Expr {
        op(sym::mult(), es)
    }
    pub fn div(a: Expr, b: Expr) -> Expr {
        op(sym::div(), vec![a, b])
    }
    pub fn exp(a: Expr, b: Expr) -> Expr {
        op(sym::exp(), vec![a, b])
    }
    pub fn less(a: Expr, b: Expr) -> Expr {
        op(sym::less(), vec![a, b])
    }
    pub fn less_eq(a: Expr, b: Expr) -> Expr {
        op(sym::less_eq(), vec![a, b])
    }
    pub fn abs(a: Expr) -> Expr {
        op(sym::abs(), vec![a])
    }

    /// `∀_{params | conds} body`.
    ///
    /// # Panics
    /// If `params` is empty or malformed.
    pub fn forall(params: Vec<Expr>, conds: Vec<Expr>, body: Expr) -> Expr {
        crate::composite::quantifier(sym::forall(), params, conds, body).expect("valid quantifier")
    }

    /// `∃_{params | conds} body`.
    ///
    /// # Panics
    /// If `params` is empty or malformed.
    pub fn exists(params: Vec<Expr>, conds: Vec<Expr>, body: Expr) -> Expr {
        crate::composite::quantifier(sym::exists(), params, conds, body).expect("valid quantifier")
    }

    /// `∄_{params | conds} body`.
    ///
    /// # Panics
    /// If `params` is empty or malformed.
    pub fn not_exists(params: Vec<Expr>, conds: Vec<Expr>, body: Expr) -> Expr {
        crate::composite::quantifier(sym::not_exists(), params, conds, body).expect("valid quantifier")
    }

    /// Names as plain variables.
    pub fn vars(names: &[&str]) -> Vec<Expr> {
        names.iter().map(|n| var(n)).collect()
    }
}

pub use composite::{conditional_set, expr_array, quantifier};

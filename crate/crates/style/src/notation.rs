use pvk_expr::vocab::pkg;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Fixity {
    /// Joined between operands.
    Infix,
    /// Written before a single operand.
    Prefix,
    /// Subscripted parameters over a lambda operand.
    Binder,
    /// Rendered by a dedicated rule in the formatter.
    Special,
    /// A constant symbol; applied like a function if it has operands.
    Constant,
}

pub(crate) struct Symbol {
    pub text: &'static str,
    pub latex: &'static str,
    pub fixity: Fixity,
}

const fn s(text: &'static str, latex: &'static str, fixity: Fixity) -> Symbol {
    Symbol { text, latex, fixity }
}

use Fixity::*;

pub(crate) fn lookup(package: &str, name: &str) -> Option<Symbol> {
    let sym = match (package, name) {
        (pkg::BOOLEANS, "TRUE") => s("⊤", r"\top", Constant),
        (pkg::BOOLEANS, "FALSE") => s("⊥", r"\bot", Constant),
        (pkg::BOOLEANS, "Boolean") => s("𝔹", r"\mathbb{B}", Constant),
        (pkg::IMPLICATION, "Implies") => s("⇒", r"\Rightarrow", Infix),
        (pkg::IMPLICATION, "Iff") => s("⇔", r"\Leftrightarrow", Infix),
        (pkg::NEGATION, "Not") => s("¬", r"\lnot", Prefix),
        (pkg::CONJUNCTION, "And") => s("∧", r"\land", Infix),
        (pkg::DISJUNCTION, "Or") => s("∨", r"\lor", Infix),
        (pkg::UNIVERSALITY, "Forall") => s("∀", r"\forall", Binder),
        (pkg::EXISTENCE, "Exists") => s("∃", r"\exists", Binder),
        (pkg::EXISTENCE, "NotExists") => s("∄", r"\nexists", Binder),
        (pkg::EQUALITY, "Equals") => s("=", "=", Infix),
        (pkg::EQUALITY, "NotEquals") => s("≠", r"\neq", Infix),
        (pkg::MEMBERSHIP, "In") => s("∈", r"\in", Infix),
        (pkg::MEMBERSHIP, "NotIn") => s("∉", r"\notin", Infix),
        (pkg::EQUIVALENCE, "SetEquiv") => s("≅", r"\cong", Infix),
        (pkg::EQUIVALENCE, "SetNotEquiv") => s("≇", r"\ncong", Infix),
        (pkg::ENUMERATION, "Set") => s("{}", r"\{\}", Special),
        (pkg::ENUMERATION, "EmptySet") => s("∅", r"\emptyset", Constant),
        (pkg::INCLUSION, "SubsetEq") => s("⊆", r"\subseteq", Infix),
        (pkg::INCLUSION, "NotSubsetEq") => s("⊈", r"\nsubseteq", Infix),
        (pkg::INCLUSION, "ProperSubset") => s("⊂", r"\subset", Infix),
        (pkg::INCLUSION, "NotProperSubset") => s("⊄", r"\nsubset", Infix),
        (pkg::UNIFICATION, "Union") => s("∪", r"\cup", Infix),
        (pkg::UNIFICATION, "UnionAll") => s("⋃", r"\bigcup", Binder),
        (pkg::INTERSECTION, "Intersect") => s("∩", r"\cap", Infix),
        (pkg::INTERSECTION, "IntersectAll") => s("⋂", r"\bigcap", Binder),
        (pkg::SUBTRACTION, "Difference") => s("−", r"-", Infix),
        (pkg::COMPREHENSION, "SetOfAll") => s("{}", r"\{\}", Special),
        (pkg::POWER_SETS, "PowerSet") => s("𝒫", r"\mathcal{P}", Constant),
        (pkg::CARDINALITY, "Card") => s("||", "||", Special),
        (pkg::NUMBER_SETS, "Natural") => s("ℕ", r"\mathbb{N}", Constant),
        (pkg::NUMBER_SETS, "NaturalPos") => s("ℕ⁺", r"\mathbb{N}^+", Constant),
        (pkg::NUMBER_SETS, "Integer") => s("ℤ", r"\mathbb{Z}", Constant),
        (pkg::NUMBER_SETS, "Rational") => s("ℚ", r"\mathbb{Q}", Constant),
        (pkg::NUMBER_SETS, "RationalNonZero") => s("ℚ^≠0", r"\mathbb{Q}^{\neq 0}", Constant),
        (pkg::NUMBER_SETS, "RationalPos") => s("ℚ⁺", r"\mathbb{Q}^+", Constant),
        (pkg::NUMBER_SETS, "Real") => s("ℝ", r"\mathbb{R}", Constant),
        (pkg::NUMBER_SETS, "RealPos") => s("ℝ⁺", r"\mathbb{R}^+", Constant),
        (pkg::NUMBER_SETS, "Complex") => s("ℂ", r"\mathbb{C}", Constant),
        (pkg::ADDITION, "Add") => s("+", "+", Infix),
        (pkg::NEG, "Neg") => s("-", "-", Prefix),
        (pkg::MULTIPLICATION, "Mult") => s("·", r"\cdot", Infix),
        (pkg::DIVISION, "Div") => s("/", "/", Special),
        (pkg::EXPONENTIATION, "Exp") => s("^", "^", Special),
        (pkg::ORDERING, "Less") => s("<", "<", Infix),
        (pkg::ORDERING, "LessEq") => s("≤", r"\leq", Infix),
        (pkg::ORDERING, "Greater") => s(">", ">", Infix),
        (pkg::ORDERING, "GreaterEq") => s("≥", r"\geq", Infix),
        (pkg::ABSOLUTE_VALUE, "Abs") => s("||", "||", Special),
        (pkg::DIVISIBILITY, "Divides") => s("|", r"\rvert", Infix),
        (pkg::GCD, "GCD") => s("gcd", r"\textrm{gcd}", Constant),
        (pkg::TUPLES, "Len") => s("||", "||", Special),
        (pkg::CONDITIONALS, "ConditionalSet") => s("{}", r"\{\}", Special),
        _ => return None,
    };
    Some(sym)
}

/// The mirrored relation for the `direction` style, e.g. `≤` for `≥`.
pub(crate) fn reversed(package: &str, name: &str) -> Option<(&'static str, &'static str)> {
    Some(match (package, name) {
        (pkg::ORDERING, "Less") => (">", ">"),
        (pkg::ORDERING, "LessEq") => ("≥", r"\geq"),
        (pkg::ORDERING, "Greater") => ("<", "<"),
        (pkg::ORDERING, "GreaterEq") => ("≤", r"\leq"),
        (pkg::INCLUSION, "SubsetEq") => ("⊇", r"\supseteq"),
        (pkg::INCLUSION, "NotSubsetEq") => ("⊉", r"\nsupseteq"),
        (pkg::INCLUSION, "ProperSubset") => ("⊃", r"\supset"),
        (pkg::INCLUSION, "NotProperSubset") => ("⊅", r"\nsupset"),
        _ => return None,
    })
}

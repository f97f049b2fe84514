// Generated by pvk-gen-stdlib; do not edit.

pub const INDEX_DIGEST: &str = "e2a7d776f7588dcee49e0728b0d225aa5411c7585dac9cdefd0d8b026645f3c4";

pub const FILES: &[(&str, &str)] = &[
    ("core_expr_types.conditionals/axioms/axiom1.pvx", include_str!("../../../../theories/core_expr_types.conditionals/axioms/axiom1.pvx")),
    ("core_expr_types.conditionals/axioms/axiom2.pvx", include_str!("../../../../theories/core_expr_types.conditionals/axioms/axiom2.pvx")),
    ("core_expr_types.conditionals/axioms/axiom3.pvx", include_str!("../../../../theories/core_expr_types.conditionals/axioms/axiom3.pvx")),
    ("core_expr_types.lambda_maps/axioms/axiom1.pvx", include_str!("../../../../theories/core_expr_types.lambda_maps/axioms/axiom1.pvx")),
    ("core_expr_types.operations/axioms/axiom1.pvx", include_str!("../../../../theories/core_expr_types.operations/axioms/axiom1.pvx")),
    ("core_expr_types.tuples/axioms/axiom1.pvx", include_str!("../../../../theories/core_expr_types.tuples/axioms/axiom1.pvx")),
    ("core_expr_types.tuples/axioms/axiom2.pvx", include_str!("../../../../theories/core_expr_types.tuples/axioms/axiom2.pvx")),
    ("core_expr_types.tuples/axioms/axiom3.pvx", include_str!("../../../../theories/core_expr_types.tuples/axioms/axiom3.pvx")),
    ("core_expr_types.tuples/axioms/axiom4.pvx", include_str!("../../../../theories/core_expr_types.tuples/axioms/axiom4.pvx")),
    ("core_expr_types.tuples/axioms/axiom5.pvx", include_str!("../../../../theories/core_expr_types.tuples/axioms/axiom5.pvx")),
    ("logic.booleans/axioms/axiom1.pvx", include_str!("../../../../theories/logic.booleans/axioms/axiom1.pvx")),
    ("logic.booleans/axioms/axiom2.pvx", include_str!("../../../../theories/logic.booleans/axioms/axiom2.pvx")),
    ("logic.booleans/axioms/axiom3.pvx", include_str!("../../../../theories/logic.booleans/axioms/axiom3.pvx")),
    ("logic.booleans/axioms/axiom4.pvx", include_str!("../../../../theories/logic.booleans/axioms/axiom4.pvx")),
    ("logic.booleans/axioms/axiom5.pvx", include_str!("../../../../theories/logic.booleans/axioms/axiom5.pvx")),
    ("logic.booleans/theorems/excluded_middle.pvx", include_str!("../../../../theories/logic.booleans/theorems/excluded_middle.pvx")),
    ("logic.booleans/theorems/excluded_middle.pvp", include_str!("../../../../theories/logic.booleans/theorems/excluded_middle.pvp")),
    ("logic.booleans.conjunction/axioms/axiom1.pvx", include_str!("../../../../theories/logic.booleans.conjunction/axioms/axiom1.pvx")),
    ("logic.booleans.conjunction/axioms/axiom2.pvx", include_str!("../../../../theories/logic.booleans.conjunction/axioms/axiom2.pvx")),
    ("logic.booleans.conjunction/axioms/axiom3.pvx", include_str!("../../../../theories/logic.booleans.conjunction/axioms/axiom3.pvx")),
    ("logic.booleans.conjunction/axioms/axiom4.pvx", include_str!("../../../../theories/logic.booleans.conjunction/axioms/axiom4.pvx")),
    ("logic.booleans.conjunction/axioms/axiom5.pvx", include_str!("../../../../theories/logic.booleans.conjunction/axioms/axiom5.pvx")),
    ("logic.booleans.conjunction/axioms/axiom6.pvx", include_str!("../../../../theories/logic.booleans.conjunction/axioms/axiom6.pvx")),
    ("logic.booleans.conjunction/axioms/axiom7.pvx", include_str!("../../../../theories/logic.booleans.conjunction/axioms/axiom7.pvx")),
    ("logic.booleans.conjunction/axioms/axiom8.pvx", include_str!("../../../../theories/logic.booleans.conjunction/axioms/axiom8.pvx")),
    ("logic.booleans.disjunction/axioms/axiom1.pvx", include_str!("../../../../theories/logic.booleans.disjunction/axioms/axiom1.pvx")),
    ("logic.booleans.disjunction/axioms/axiom2.pvx", include_str!("../../../../theories/logic.booleans.disjunction/axioms/axiom2.pvx")),
    ("logic.booleans.disjunction/axioms/axiom3.pvx", include_str!("../../../../theories/logic.booleans.disjunction/axioms/axiom3.pvx")),
    ("logic.booleans.disjunction/axioms/axiom4.pvx", include_str!("../../../../theories/logic.booleans.disjunction/axioms/axiom4.pvx")),
    ("logic.booleans.disjunction/axioms/axiom5.pvx", include_str!("../../../../theories/logic.booleans.disjunction/axioms/axiom5.pvx")),
    ("logic.booleans.disjunction/axioms/axiom6.pvx", include_str!("../../../../theories/logic.booleans.disjunction/axioms/axiom6.pvx")),
    ("logic.booleans.disjunction/axioms/axiom7.pvx", include_str!("../../../../theories/logic.booleans.disjunction/axioms/axiom7.pvx")),
    ("logic.booleans.disjunction/axioms/axiom8.pvx", include_str!("../../../../theories/logic.booleans.disjunction/axioms/axiom8.pvx")),
    ("logic.booleans.implication/axioms/axiom1.pvx", include_str!("../../../../theories/logic.booleans.implication/axioms/axiom1.pvx")),
    ("logic.booleans.implication/axioms/axiom2.pvx", include_str!("../../../../theories/logic.booleans.implication/axioms/axiom2.pvx")),
    ("logic.booleans.implication/axioms/axiom3.pvx", include_str!("../../../../theories/logic.booleans.implication/axioms/axiom3.pvx")),
    ("logic.booleans.implication/axioms/axiom4.pvx", include_str!("../../../../theories/logic.booleans.implication/axioms/axiom4.pvx")),
    ("logic.booleans.negation/axioms/axiom1.pvx", include_str!("../../../../theories/logic.booleans.negation/axioms/axiom1.pvx")),
    ("logic.booleans.negation/axioms/axiom2.pvx", include_str!("../../../../theories/logic.booleans.negation/axioms/axiom2.pvx")),
    ("logic.booleans.negation/axioms/axiom3.pvx", include_str!("../../../../theories/logic.booleans.negation/axioms/axiom3.pvx")),
    ("logic.booleans.negation/axioms/axiom4.pvx", include_str!("../../../../theories/logic.booleans.negation/axioms/axiom4.pvx")),
    ("logic.booleans.quantification.existence/axioms/axiom1.pvx", include_str!("../../../../theories/logic.booleans.quantification.existence/axioms/axiom1.pvx")),
    ("logic.booleans.quantification.existence/axioms/axiom2.pvx", include_str!("../../../../theories/logic.booleans.quantification.existence/axioms/axiom2.pvx")),
    ("logic.booleans.quantification.universality/axioms/axiom1.pvx", include_str!("../../../../theories/logic.booleans.quantification.universality/axioms/axiom1.pvx")),
    ("logic.equality/axioms/axiom1.pvx", include_str!("../../../../theories/logic.equality/axioms/axiom1.pvx")),
    ("logic.equality/axioms/axiom2.pvx", include_str!("../../../../theories/logic.equality/axioms/axiom2.pvx")),
    ("logic.equality/axioms/axiom3.pvx", include_str!("../../../../theories/logic.equality/axioms/axiom3.pvx")),
    ("logic.equality/axioms/axiom4.pvx", include_str!("../../../../theories/logic.equality/axioms/axiom4.pvx")),
    ("logic.equality/axioms/axiom5.pvx", include_str!("../../../../theories/logic.equality/axioms/axiom5.pvx")),
    ("logic.equality/axioms/axiom6.pvx", include_str!("../../../../theories/logic.equality/axioms/axiom6.pvx")),
    ("logic.sets.cardinality/axioms/axiom1.pvx", include_str!("../../../../theories/logic.sets.cardinality/axioms/axiom1.pvx")),
    ("logic.sets.cardinality/axioms/axiom2.pvx", include_str!("../../../../theories/logic.sets.cardinality/axioms/axiom2.pvx")),
    ("logic.sets.comprehension/axioms/axiom1.pvx", include_str!("../../../../theories/logic.sets.comprehension/axioms/axiom1.pvx")),
    ("logic.sets.enumeration/axioms/axiom1.pvx", include_str!("../../../../theories/logic.sets.enumeration/axioms/axiom1.pvx")),
    ("logic.sets.equivalence/axioms/axiom1.pvx", include_str!("../../../../theories/logic.sets.equivalence/axioms/axiom1.pvx")),
    ("logic.sets.equivalence/axioms/axiom2.pvx", include_str!("../../../../theories/logic.sets.equivalence/axioms/axiom2.pvx")),
    ("logic.sets.inclusion/axioms/axiom1.pvx", include_str!("../../../../theories/logic.sets.inclusion/axioms/axiom1.pvx")),
    ("logic.sets.inclusion/axioms/axiom2.pvx", include_str!("../../../../theories/logic.sets.inclusion/axioms/axiom2.pvx")),
    ("logic.sets.inclusion/axioms/axiom3.pvx", include_str!("../../../../theories/logic.sets.inclusion/axioms/axiom3.pvx")),
    ("logic.sets.inclusion/axioms/axiom4.pvx", include_str!("../../../../theories/logic.sets.inclusion/axioms/axiom4.pvx")),
    ("logic.sets.intersection/axioms/axiom1.pvx", include_str!("../../../../theories/logic.sets.intersection/axioms/axiom1.pvx")),
    ("logic.sets.intersection/axioms/axiom2.pvx", include_str!("../../../../theories/logic.sets.intersection/axioms/axiom2.pvx")),
    ("logic.sets.membership/axioms/axiom1.pvx", include_str!("../../../../theories/logic.sets.membership/axioms/axiom1.pvx")),
    ("logic.sets.power_sets/axioms/axiom1.pvx", include_str!("../../../../theories/logic.sets.power_sets/axioms/axiom1.pvx")),
    ("logic.sets.subtraction/axioms/axiom1.pvx", include_str!("../../../../theories/logic.sets.subtraction/axioms/axiom1.pvx")),
    ("logic.sets.unification/axioms/axiom1.pvx", include_str!("../../../../theories/logic.sets.unification/axioms/axiom1.pvx")),
    ("logic.sets.unification/axioms/axiom2.pvx", include_str!("../../../../theories/logic.sets.unification/axioms/axiom2.pvx")),
    ("numbers.number_sets.natural_numbers/axioms/axiom1.pvx", include_str!("../../../../theories/numbers.number_sets.natural_numbers/axioms/axiom1.pvx")),
    ("numbers.number_sets.natural_numbers/axioms/axiom2.pvx", include_str!("../../../../theories/numbers.number_sets.natural_numbers/axioms/axiom2.pvx")),
    ("numbers.number_sets.natural_numbers/axioms/axiom3.pvx", include_str!("../../../../theories/numbers.number_sets.natural_numbers/axioms/axiom3.pvx")),
    ("numbers.number_sets.natural_numbers/axioms/axiom4.pvx", include_str!("../../../../theories/numbers.number_sets.natural_numbers/axioms/axiom4.pvx")),
    ("numbers.number_sets.natural_numbers/axioms/axiom5.pvx", include_str!("../../../../theories/numbers.number_sets.natural_numbers/axioms/axiom5.pvx")),
    ("numbers.number_sets.natural_numbers/axioms/axiom6.pvx", include_str!("../../../../theories/numbers.number_sets.natural_numbers/axioms/axiom6.pvx")),
    ("numbers.number_sets.natural_numbers/axioms/axiom7.pvx", include_str!("../../../../theories/numbers.number_sets.natural_numbers/axioms/axiom7.pvx")),
    ("numbers.number_sets.real_numbers/theorems/sqrt2_is_not_rational.pvx", include_str!("../../../../theories/numbers.number_sets.real_numbers/theorems/sqrt2_is_not_rational.pvx")),
    ("numbers.numerals/axioms/axiom1.pvx", include_str!("../../../../theories/numbers.numerals/axioms/axiom1.pvx")),
    ("numbers.numerals/axioms/axiom2.pvx", include_str!("../../../../theories/numbers.numerals/axioms/axiom2.pvx")),
    ("numbers.numerals/axioms/axiom3.pvx", include_str!("../../../../theories/numbers.numerals/axioms/axiom3.pvx")),
    ("numbers.numerals/axioms/axiom4.pvx", include_str!("../../../../theories/numbers.numerals/axioms/axiom4.pvx")),
    ("numbers.numerals/axioms/axiom5.pvx", include_str!("../../../../theories/numbers.numerals/axioms/axiom5.pvx")),
    ("numbers.numerals/axioms/axiom6.pvx", include_str!("../../../../theories/numbers.numerals/axioms/axiom6.pvx")),
    ("numbers.numerals/axioms/axiom7.pvx", include_str!("../../../../theories/numbers.numerals/axioms/axiom7.pvx")),
    ("numbers.numerals/axioms/axiom8.pvx", include_str!("../../../../theories/numbers.numerals/axioms/axiom8.pvx")),
    ("numbers.numerals/axioms/axiom9.pvx", include_str!("../../../../theories/numbers.numerals/axioms/axiom9.pvx")),
    ("numbers.ordering/axioms/axiom1.pvx", include_str!("../../../../theories/numbers.ordering/axioms/axiom1.pvx")),
    ("index.json", include_str!("../../../../theories/index.json")),
];

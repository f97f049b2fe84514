//! Acceptance suite. Prints one PASS or FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Expected values are built here from the expression DSL, independently of
//! the scripts and tables that produced the results under test.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use pvk_cert::layout::Section;
use pvk_cert::{Certificate, Payload, Status};
use pvk_checker::{verify_bytes, Outcome};
use pvk_expr::vocab::dsl::*;
use pvk_expr::vocab::sym;
use pvk_expr::{build, canonical_form, free_vars, parse, to_sexpr, Expr, ExprError, ExprKind, Part};
use pvk_kernel::{export_proof, Judgment, Presumptions, Prover, Rule};
use pvk_reduce::{
    apply_lambda, apply_lambda_with, index_range, replace_operation, ObligationKind, Options, ReduceError,
    ReplacementMap,
};
use pvk_theory::{load_stdlib, scripts, sqrt2, Registry, TheoryError};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Criterion = (&'static str, fn() -> String);

const CRITERIA: &[Criterion] = &[
    ("excluded middle", excluded_middle),
    ("garbage-tolerant judgments", garbage_tolerant),
    ("beta-reduction examples", beta_reduction_examples),
    ("range reductions", range_reductions),
    ("curry guards", curry_guards),
    ("exp_eq proof replay", exp_eq_replay),
    ("checker differential", checker_differential),
    ("dependency DAG", dependency_dag),
    ("stdlib integrity", stdlib_integrity),
    ("canonicalization", canonicalization),
    ("sqrt2 conjecture data", sqrt2_data),
];

fn main() {
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in CRITERIA {
        let start = Instant::now();
        match panic::catch_unwind(AssertUnwindSafe(check)) {
            Ok(detail) => println!("PASS {name} ({detail}; {:.2?})", start.elapsed()),
            Err(e) => {
                failed += 1;
                let reason = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panicked".into());
                println!("FAIL {name}: {}", reason.replace('\n', " "));
            }
        }
    }
    let _ = panic::take_hook();
    println!("{} passed, {failed} failed", CRITERIA.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

fn prover(r: &Registry, packages: &[&str]) -> Prover {
    Prover::new(Arc::new(r.clone())).with_presumptions(Presumptions::only(packages.iter().copied()))
}

fn certificate(j: &Judgment) -> Certificate {
    export_proof(j).to_certificate()
}

fn check_passes(cert: &Certificate, r: &Registry) {
    match verify_bytes(cert.to_json().as_bytes(), r) {
        Outcome::Verified(rep) => assert!(rep.pass, "checker rejected: {:?}", rep.first_error()),
        Outcome::ParseError(e) => panic!("checker could not parse: {e}"),
    }
}

fn id_set(es: &[Expr]) -> BTreeSet<String> {
    es.iter().map(|e| e.id().to_hex()).collect()
}

fn excluded_middle() -> String {
    let r = load_stdlib().unwrap();
    let start = Instant::now();
    let j = scripts::run(&scripts::excluded_middle(), r.prover_for(scripts::EXCLUDED_MIDDLE).unwrap()).unwrap();
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");

    let a = var("A");
    let want = forall(vec![a.clone()], vec![in_(a.clone(), bools())], or(vec![a.clone(), not(a)]));
    assert!(j.assumptions().is_empty(), "assumptions {:?}", j.assumptions());
    assert!(j.consequent().same_labels(&want), "{}", j.consequent());
    assert_eq!(j.to_string(), "⊢ ∀_{A ∈ 𝔹} (A ∨ ¬A)");
    let cert = certificate(&j);
    check_passes(&cert, &r);
    format!("{} steps, derived in {elapsed:.2?}", cert.steps.len())
}

fn garbage_tolerant() -> String {
    let r = load_stdlib().unwrap();
    let j = scripts::run(&scripts::garbage_tolerant(), prover(&r, &["logic.booleans", "logic.equality"])).unwrap();
    let x = var("x");
    let junk = or(vec![num(5), t()]);
    let want_assumptions = [eq(x.clone(), junk.clone()), add(vec![x, num(10)])];
    assert_eq!(id_set(j.assumptions()), id_set(&want_assumptions));
    assert_eq!(j.assumptions().len(), 2);
    assert!(j.consequent().same_labels(&add(vec![junk, num(10)])), "{}", j.consequent());
    let proof = export_proof(&j);
    for s in proof.steps() {
        assert!(
            matches!(
                s.rule,
                Rule::Assumption
                    | Rule::Deduction
                    | Rule::ModusPonens
                    | Rule::AxiomInvocation
                    | Rule::Instantiation
                    | Rule::Reference
            ),
            "unexpected rule {}",
            s.rule
        );
    }
    let cert = proof.to_certificate();
    for t in &cert.theory_refs {
        assert!(t.name.starts_with("logic.equality.") || t.name.starts_with("logic.booleans."), "{}", t.name);
    }
    check_passes(&cert, &r);

    let three = scripts::run(&scripts::three_implies_three(), prover(&r, &[])).unwrap();
    assert!(three.assumptions().is_empty());
    assert!(three.consequent().same_labels(&implies(num(3), num(3))));
    let rules: Vec<Rule> = export_proof(&three).steps().iter().map(|s| s.rule).collect();
    assert_eq!(rules, [Rule::Deduction, Rule::Assumption]);
    check_passes(&certificate(&three), &r);
    format!("{} and {}", j, three)
}

fn reqs(r: &[pvk_reduce::Obligation]) -> Vec<Expr> {
    r.iter().map(|o| o.expr.clone()).collect()
}

fn len_eq(slice: Vec<Expr>, s: Expr, e: Expr) -> Expr {
    eq(len(tuple(slice)), len(tuple(vec![index_range(&s, &e)])))
}

fn minus_one(e: Expr) -> Expr {
    add(vec![e, neg(num(1))])
}

fn beta_reduction_examples() -> String {
    // (x, y, z) ↦ ((x + y)·z) on (a + x, b·y, b + y + x)
    let f = lambda(vars(&["x", "y", "z"]), mult(vec![add(vars(&["x", "y"])), var("z")]));
    let ops = vec![add(vars(&["a", "x"])), mult(vars(&["b", "y"])), add(vars(&["b", "y", "x"]))];
    let r = apply_lambda(&f, &ops, &[], &Options::default()).unwrap();
    assert!(r.expr.same_labels(&mult(vec![add(vec![ops[0].clone(), ops[1].clone()]), ops[2].clone()])));
    assert!(r.requirements.is_empty());

    // Dot product of (1·1, ..., n·n) and (1+1, ..., n+n).
    let n = var("n");
    let dot = lambda(
        vec![var_range("x", num(1), n.clone()), var_range("y", num(1), n.clone())],
        add(vec![range("k", mult(vec![idx("x", var("k")), idx("y", var("k"))]), num(1), n.clone())]),
    );
    let squares = range("i", mult(vec![var("i"), var("i")]), num(1), n.clone());
    let doubles = range("i", add(vec![var("i"), var("i")]), num(1), n.clone());
    let r = apply_lambda(&dot, &[squares.clone(), doubles.clone()], &[], &Options::default()).unwrap();
    let body = mult(vec![mult(vec![var("i"), var("i")]), add(vec![var("i"), var("i")])]);
    assert_eq!(r.expr, add(vec![range("i", body, num(1), n.clone())]), "{}", r.expr);
    assert_eq!(reqs(&r.requirements), [len_eq(vec![squares], num(1), n.clone()), len_eq(vec![doubles], num(1), n)]);
    assert!(r.requirements.iter().all(|o| o.kind == ObligationKind::Length));

    // Alternative expansions, with the inner quantifier's A_i..A_j masked.
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
    assert_eq!(r.expr, and(vec![not_b.clone(), not_c.clone(), inner, a_or_d]), "{}", r.expr);
    let one_to = |e: &Expr| index_range(&num(1), e);
    let want = [
        len_eq(ops, num(1), m.clone()),
        len_eq(vec![not_b.clone()], num(1), minus_one(i.clone())),
        len_eq(vec![not_c.clone()], i.clone(), j.clone()),
        len_eq(vec![not_b, not_c], num(1), j.clone()),
        eq(tuple(vec![one_to(&minus_one(i.clone())), index_range(&i, &j), m.clone()]), tuple(vec![one_to(&m)])),
        eq(tuple(vec![one_to(&j), m.clone()]), tuple(vec![one_to(&m)])),
    ];
    assert_eq!(reqs(&r.requirements), want);
    "3 examples, 0 + 2 + 6 requirements".into()
}

fn range_reductions() -> String {
    // (a, b_1, ..., b_n, c)
    let f = lambda(vec![var("n")], tuple(vec![var("a"), var_range("b", num(1), var("n")), var("c")]));
    let r0 = apply_lambda(&f, &[num(0)], &[], &Options::default()).unwrap();
    assert_eq!(r0.expr, tuple(vars(&["a", "c"])), "{}", r0.expr);
    let r1 = apply_lambda(&f, &[num(1)], &[], &Options::default()).unwrap();
    assert_eq!(r1.expr, tuple(vec![var("a"), idx("b", num(1)), var("c")]), "{}", r1.expr);
    "n:0 and n:1".into()
}

fn curry_guards() -> String {
    let p = var("P");
    let g = lambda(vec![p.clone()], implies(apply("P", vec![p]), f()));
    let err = build(ExprKind::Operation, vec![Part::Expr(g.clone()), Part::Expr(tuple(vec![g.clone()]))]);
    assert!(matches!(err, Err(ExprError::KindViolation(_))), "{err:?}");

    assert_eq!(pvk_reduce::DEFAULT_FUEL, 10_000);
    let gg = apply("g", vec![var("g")]);
    let err = replace_operation(&gg, "g", &g, &[], &Options::default()).unwrap_err();
    assert_eq!(err, ReduceError::FuelExhausted(10_000));

    // |(f(a), b, c)| with f : x ↦ x_1, ..., x_4 would claim a length of 3 for six entries.
    let e = len(tuple(vec![apply("f", vec![var("a")]), var("b"), var("c")]));
    let four = lambda(vec![var("x")], var_range("x", num(1), num(4)));
    let err = replace_operation(&e, "f", &four, &[], &Options::default()).unwrap_err();
    assert!(matches!(err, ReduceError::RangeBodyForbidden(_)), "{err}");
    "3 rejections".into()
}

fn exp_eq_replay() -> String {
    let r = load_stdlib().unwrap();
    let j = scripts::run(&scripts::exp_eq(), prover(&r, &["logic.equality"])).unwrap();
    let proof = export_proof(&j);
    let shape: Vec<(Rule, Vec<usize>)> = proof.steps().iter().map(|s| (s.rule, s.requirements.clone())).collect();
    let want = [
        (Rule::Generalization, vec![1]),
        (Rule::Instantiation, vec![2, 3]),
        (Rule::AxiomInvocation, vec![]),
        (Rule::Assumption, vec![]),
    ];
    assert_eq!(shape, want);

    let (x, y) = (var("x"), var("y"));
    let (fx, fy) = (apply("f", vec![x.clone()]), apply("f", vec![y.clone()]));
    let substitution = forall(vars(&["f", "x", "y"]), vec![eq(x.clone(), y.clone())], eq(fx, fy));
    assert_eq!(proof.steps()[2].judgment.consequent(), &substitution);
    assert_eq!(proof.steps()[3].judgment.consequent(), &eq(x.clone(), y.clone()));
    let a = var("a");
    assert_eq!(proof.steps()[1].judgment.consequent(), &eq(exp(x, a.clone()), exp(y, a)));

    let table = proof.latex_table();
    let rows: Vec<&str> = table.lines().filter(|l| l.contains(" & $")).collect();
    let prefixes = ["0 & generalization & 1 &", "1 & instantiation & 2, 3 &", "2 & axiom: ", "3 & assumption &  &"];
    assert_eq!(rows.len(), 4, "{table}");
    for (row, p) in rows.iter().zip(prefixes) {
        assert!(row.starts_with(p), "{row}");
    }

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("exp_eq.json");
    std::fs::write(&path, proof.to_certificate().to_json()).unwrap();
    let out = pvk_cli::run_args(["pvk".as_ref(), "check".as_ref(), path.as_os_str()]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("PASS"), "{}", out.stdout);
    "4 rows, pvk check exit 0".into()
}

/// Every string, number and container in a JSON document, as pointers.
fn pointers(v: &Value, at: String, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, c) in m {
                let p = format!("{at}/{k}");
                out.push(p.clone());
                pointers(c, p, out);
            }
        }
        Value::Array(a) => {
            for (i, c) in a.iter().enumerate() {
                let p = format!("{at}/{i}");
                out.push(p.clone());
                pointers(c, p, out);
            }
        }
        _ => {}
    }
}

fn strings(v: &Value, sexprs: &mut Vec<String>, words: &mut Vec<String>) {
    match v {
        Value::String(s) if s.starts_with('(') => sexprs.push(s.clone()),
        Value::String(s) => words.push(s.clone()),
        Value::Array(a) => a.iter().for_each(|c| strings(c, sexprs, words)),
        Value::Object(m) => m.values().for_each(|c| strings(c, sexprs, words)),
        _ => {}
    }
}

struct Pools {
    sexprs: Vec<String>,
    words: Vec<String>,
}

fn mutate_string(s: &str, rng: &mut ChaCha8Rng, pools: &Pools) -> String {
    let hex = s.len() == 64 && s.bytes().all(|b| b.is_ascii_hexdigit());
    if hex {
        let i = rng.gen_range(0..s.len());
        let mut b = s.as_bytes().to_vec();
        b[i] = if b[i] == b'0' { b'1' } else { b'0' };
        return String::from_utf8(b).unwrap();
    }
    if s.starts_with('(') {
        let names: Vec<usize> = s.match_indices("(Variable \"").map(|(i, _)| i + 11).collect();
        match rng.gen_range(0..3) {
            0 if !names.is_empty() => {
                let at = *names.choose(rng).unwrap();
                let end = at + s[at..].find('"').unwrap();
                let fresh = ["x", "y", "A", "B", "z9"].choose(rng).unwrap();
                return format!("{}{fresh}{}", &s[..at], &s[end..]);
            }
            1 => return pools.sexprs.choose(rng).unwrap().clone(),
            _ => {
                let mut chars: Vec<char> = s.chars().collect();
                chars.remove(rng.gen_range(0..chars.len()));
                return chars.into_iter().collect();
            }
        }
    }
    if rng.gen_bool(0.8) {
        pools.words.choose(rng).unwrap().clone()
    } else {
        format!("{s}x")
    }
}

fn mutate(v: &mut Value, rng: &mut ChaCha8Rng, pools: &Pools) {
    match v {
        Value::String(s) => *s = mutate_string(s, rng, pools),
        Value::Number(n) => {
            let k = n.as_u64().unwrap_or(0);
            *v = match rng.gen_range(0..3) {
                0 => Value::from(k + 1),
                1 => Value::from(k.saturating_sub(1)),
                _ => Value::from(rng.gen_range(0..64u64)),
            };
        }
        Value::Bool(b) => *b = !*b,
        Value::Null => *v = Value::from(0),
        Value::Array(a) if a.is_empty() => a.push(Value::from(pools.sexprs.choose(rng).unwrap().clone())),
        Value::Array(a) => match rng.gen_range(0..3) {
            0 => {
                a.remove(rng.gen_range(0..a.len()));
            }
            1 => {
                let c = a[rng.gen_range(0..a.len())].clone();
                a.insert(rng.gen_range(0..=a.len()), c);
            }
            _ => {
                let (i, k) = (rng.gen_range(0..a.len()), rng.gen_range(0..a.len()));
                a.swap(i, k);
            }
        },
        Value::Object(m) => {
            let keys: Vec<String> = m.keys().cloned().collect();
            if let Some(k) = keys.choose(rng) {
                m.remove(k);
            }
        }
    }
}

fn checker_differential() -> String {
    let start = Instant::now();
    let r = load_stdlib().unwrap();
    let everything = ["logic.booleans", "logic.equality", "core_expr_types.tuples", "numbers.numerals"];
    let runs = [
        scripts::run(&scripts::excluded_middle(), r.prover_for(scripts::EXCLUDED_MIDDLE).unwrap()),
        scripts::run(&scripts::garbage_tolerant(), prover(&r, &everything)),
        scripts::run(&scripts::three_implies_three(), prover(&r, &[])),
        scripts::run(&scripts::exp_eq(), prover(&r, &everything)),
        scripts::run(&scripts::empty_tuple_instance(), prover(&r, &everything)),
    ];
    let mut corpus: Vec<Certificate> = runs.into_iter().map(|j| certificate(&j.unwrap())).collect();
    corpus.push(r.get(scripts::EXCLUDED_MIDDLE).unwrap().proof.clone().expect("stored proof"));

    let mut docs = Vec::new();
    let (mut sexprs, mut words) = (Vec::new(), Vec::new());
    for c in &corpus {
        let text = c.to_json();
        let Outcome::Verified(rep) = verify_bytes(text.as_bytes(), &r) else { panic!("corpus certificate unparsable") };
        assert!(rep.pass, "corpus certificate rejected: {:?}", rep.first_error());
        let v: Value = serde_json::from_str(&text).unwrap();
        strings(&v, &mut sexprs, &mut words);
        let mut ps = Vec::new();
        pointers(&v, String::new(), &mut ps);
        docs.push((v, ps, rep.root));
    }
    sexprs.sort();
    sexprs.dedup();
    words.sort();
    words.dedup();
    let pools = Pools { sexprs, words };

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut rejected, mut preserved) = (0, 0);
    for i in 0..1000 {
        let (doc, ps, root) = &docs[i % docs.len()];
        let mut m = doc.clone();
        let p = ps.choose(&mut rng).unwrap();
        while m == *doc {
            mutate(m.pointer_mut(p).unwrap(), &mut rng, &pools);
        }
        match verify_bytes(m.to_string().as_bytes(), &r) {
            Outcome::Verified(rep) if rep.pass => {
                assert_eq!(&rep.root, root, "mutation {i} at {p} accepted with a different root");
                preserved += 1;
            }
            _ => rejected += 1,
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    format!("{} certificates pass; 1000 mutations: {rejected} rejected, {preserved} digest-preserving", corpus.len())
}

/// `⊢ ⊤` through each of `uses`, all of which state `⊤`.
fn proof_using(r: &Registry, uses: &[&str]) -> Certificate {
    let mut p = r.prover().with_presumptions(Presumptions::all());
    let mut j = p.invoke(uses[0]).unwrap();
    for u in &uses[1..] {
        let imp = p.deduce(&j, &t());
        let next = p.invoke(u).unwrap();
        j = p.modus_ponens(&imp, &next).unwrap();
    }
    certificate(&j)
}

fn toy(theorems: &[&str]) -> Registry {
    let mut r = Registry::new();
    for a in ["ax1", "ax2", "ax3"] {
        r.register_axiom("toy", a, t()).unwrap();
    }
    for th in theorems {
        r.register_theorem("toy", th, t()).unwrap();
    }
    r
}

/// Axiom and open-conjecture leaves, found by walking stored certificates.
fn dfs_oracle(r: &Registry, name: &str) -> (BTreeSet<String>, BTreeSet<String>) {
    let (mut axioms, mut open, mut seen) = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
    let mut stack = vec![name.to_string()];
    while let Some(n) = stack.pop() {
        if !seen.insert(n.clone()) {
            continue;
        }
        let item = r.get(&n).unwrap();
        if item.section == Section::Axioms {
            axioms.insert(n);
            continue;
        }
        match &item.proof {
            None => {
                open.insert(n);
            }
            Some(cert) => {
                for s in cert.decode().unwrap() {
                    if let Payload::Invocation { name } = s.payload {
                        stack.push(name);
                    }
                }
            }
        }
    }
    (axioms, open)
}

fn dependency_dag() -> String {
    let mut r = toy(&["a", "b"]);
    r.attach_proof("toy.a", &proof_using(&r, &["toy.b"]), None).unwrap();
    let back = proof_using(&r, &["toy.a"]);
    let err = r.attach_proof("toy.b", &back, None).unwrap_err();
    assert_eq!(err, TheoryError::CircularDependency { theorem: "toy.b".into(), via: "toy.a".into() });
    assert!(r.get("toy.b").unwrap().proof.is_none());

    let mut r = toy(&["t1", "t2", "t3", "t4", "t5", "t6"]);
    let plan: &[(&str, &[&str])] = &[
        ("toy.t1", &["toy.ax1"]),
        ("toy.t2", &["toy.t1", "toy.ax2"]),
        ("toy.t3", &["toy.t2", "toy.t4"]),
        ("toy.t5", &["toy.t3", "toy.t1", "toy.ax3"]),
        ("toy.t6", &["toy.t5", "toy.t2"]),
    ];
    for (thm, uses) in plan {
        r.attach_proof(thm, &proof_using(&r, uses), None).unwrap();
    }
    for i in 1..=6 {
        let n = format!("toy.t{i}");
        let rep = r.dependency_report(&n).unwrap();
        let (axioms, open) = dfs_oracle(&r, &n);
        assert_eq!(rep.axioms.iter().cloned().collect::<BTreeSet<_>>(), axioms, "{n}");
        assert_eq!(rep.unproven_conjectures.iter().cloned().collect::<BTreeSet<_>>(), open, "{n}");
        let expected = if open.is_empty() { Status::FullyProven } else { Status::ProvenWithConjectures };
        if r.get(&n).unwrap().proof.is_some() {
            assert_eq!(r.get(&n).unwrap().status, expected, "{n}");
        }
    }
    "cycle rejected, 6 reports match the oracle".into()
}

/// Expected axiom counts per package.
const COUNTS: [(&str, usize); 23] = [
    ("core_expr_types.operations", 1),
    ("core_expr_types.conditionals", 3),
    ("core_expr_types.lambda_maps", 1),
    ("core_expr_types.tuples", 5),
    ("logic.booleans", 5),
    ("logic.booleans.implication", 4),
    ("logic.booleans.negation", 4),
    ("logic.booleans.conjunction", 8),
    ("logic.booleans.disjunction", 8),
    ("logic.booleans.quantification.universality", 1),
    ("logic.booleans.quantification.existence", 2),
    ("logic.equality", 6),
    ("logic.sets.membership", 1),
    ("logic.sets.equivalence", 2),
    ("logic.sets.enumeration", 1),
    ("logic.sets.inclusion", 4),
    ("logic.sets.unification", 2),
    ("logic.sets.intersection", 2),
    ("logic.sets.subtraction", 1),
    ("logic.sets.comprehension", 1),
    ("logic.sets.power_sets", 1),
    ("logic.sets.cardinality", 2),
    ("numbers.number_sets.natural_numbers", 7),
];

fn stdlib_integrity() -> String {
    let r = load_stdlib().unwrap();
    let axioms: Vec<_> = r.items().filter(|i| i.section == Section::Axioms).collect();
    for (p, n) in COUNTS {
        let got = axioms.iter().filter(|i| i.package == p).count();
        assert_eq!(got, n, "{p}");
    }
    for i in &axioms {
        assert!(free_vars(&i.statement).is_empty(), "{} is open", i.full_name());
        let text = to_sexpr(&i.statement);
        let again = parse(&text).unwrap();
        assert_eq!(again.id(), i.statement.id(), "{}", i.full_name());
        assert_eq!(to_sexpr(&again), text, "{}", i.full_name());
        assert_eq!(parse(&to_sexpr(&again)).unwrap().id(), again.id());
    }
    format!("{} axioms in {} packages", axioms.len(), COUNTS.len())
}

const NAMES: &[&str] = &["x", "y", "z", "a", "b"];

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => t(),
            1 => f(),
            2 => bools(),
            3 => num(rng.gen_range(0..3)),
            _ => var(NAMES.choose(rng).unwrap()),
        };
    }
    let d = depth - 1;
    let name = *NAMES.choose(rng).unwrap();
    match rng.gen_range(0..8) {
        0 => {
            let k = rng.gen_range(0..3);
            tuple((0..k).map(|_| random_expr(rng, d)).collect())
        }
        1 => {
            let o = [sym::and(), sym::or(), sym::add(), sym::equals(), var("f"), var("g")].choose(rng).unwrap().clone();
            let k = rng.gen_range(1..3);
            op(o, (0..k).map(|_| random_expr(rng, d)).collect())
        }
        2 => cond(random_expr(rng, d), random_expr(rng, d)),
        3 => {
            let k = rng.gen_range(1..3);
            let ps: Vec<&str> = NAMES.choose_multiple(rng, k).copied().collect();
            lambda(vars(&ps), random_expr(rng, d))
        }
        4 => {
            let body = tuple(vec![idx(name, var("k")), random_expr(rng, d)]);
            range("k", body, random_expr(rng, d), random_expr(rng, d))
        }
        5 => idx(name, random_expr(rng, d)),
        6 => Expr::named(vec![("lhs".into(), random_expr(rng, d)), ("rhs".into(), random_expr(rng, d))]).unwrap(),
        _ => {
            let n = *NAMES.choose(rng).unwrap();
            lambda(
                vec![var_range(name, num(1), var(n))],
                tuple(vec![var_range(name, num(1), var(n)), random_expr(rng, d), random_expr(rng, d)]),
            )
        }
    }
}

fn dot(x: &str, y: &str, k: &str) -> Expr {
    let params = vec![range(k, idx(x, var(k)), num(1), var("n")), range(k, idx(y, var(k)), num(1), var("n"))];
    let body = add(vec![range(k, mult(vec![idx(x, var(k)), idx(y, var(k))]), num(1), var("n"))]);
    lambda(params, body)
}

fn canonicalization() -> String {
    // x ↦ ∃_y((x + y + z) = 0)
    let e = lambda(vec![var("x")], exists(vec![var("y")], vec![], eq(add(vars(&["x", "y", "z"])), num(0))));
    let want = lambda(vec![var("_b")], exists(vec![var("_a")], vec![], eq(add(vars(&["_b", "_a", "z"])), num(0))));
    let c = canonical_form(&e);
    assert!(c.same_labels(&want), "{c}");
    let c = canonical_form(&dot("x", "y", "k"));
    assert!(c.same_labels(&dot("_c", "_b", "_a")), "{c}");

    let mut rng = ChaCha8Rng::seed_from_u64(10_000);
    let mut with_lambdas = 0;
    for i in 0..10_000 {
        let e = random_expr(&mut rng, 4);
        let c = canonical_form(&e);
        let cc = canonical_form(&c);
        assert!(Expr::ptr_eq(&c, &cc), "case {i}: {e}");
        assert_eq!(c.id(), e.id(), "case {i}: {e}");
        assert_eq!(cc.id(), c.id(), "case {i}: {e}");
        if !c.same_labels(&e) {
            with_lambdas += 1;
        }
    }
    format!("2 fixed examples; 10000 random expressions, {with_lambdas} relabeled")
}

fn sqrt2_data() -> String {
    let cs = sqrt2::conjectures();
    assert_eq!(cs.len(), 38);
    for c in &cs {
        assert!(free_vars(c).is_empty(), "{c}");
        assert_eq!(parse(&to_sexpr(c)).unwrap().id(), c.id());
    }
    let r = load_stdlib().unwrap();
    assert_eq!(sqrt2::AXIOMS.len(), 21);
    for a in sqrt2::AXIOMS {
        assert_eq!(r.get(a).map(|i| i.section), Some(Section::Axioms), "{a}");
    }
    assert_eq!(r.get(sqrt2::THEOREM).unwrap().status, Status::Conjecture);
    "38 conjectures closed, 21 axioms registered".into()
}

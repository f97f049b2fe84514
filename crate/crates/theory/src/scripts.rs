//! Scripted derivations over the standard library.
//!
//! Each function returns a [`Script`]: plain rule requests that a
//! [`Session`] replays. The same scripts back the stored proofs, the CLI
//! demos and the service's replay tests.

use pvk_expr::vocab::dsl::*;
use pvk_expr::vocab::sym;
use pvk_expr::{to_sexpr, Expr};
use pvk_kernel::session::InstantiateRequest;
use pvk_kernel::{options_payload, Judgment, KernelError, Prover, Script, Session, StepRequest};
use pvk_reduce::Options;

const BOOL4: &str = "logic.booleans.axiom4";
const BOOL5: &str = "logic.booleans.axiom5";
const IMPL2: &str = "logic.booleans.implication.axiom2";
const IMPL3: &str = "logic.booleans.implication.axiom3";
const NEG1: &str = "logic.booleans.negation.axiom1";
const NEG2: &str = "logic.booleans.negation.axiom2";
const NEG3: &str = "logic.booleans.negation.axiom3";
const DISJ2: &str = "logic.booleans.disjunction.axiom2";
const DISJ3: &str = "logic.booleans.disjunction.axiom3";
const EQ1: &str = "logic.equality.axiom1";
const EQ2: &str = "logic.equality.axiom2";
const EQ3: &str = "logic.equality.axiom3";
const EQ6: &str = "logic.equality.axiom6";
const TUPLE4: &str = "core_expr_types.tuples.axiom4";
const NUMERAL1: &str = "numbers.numerals.axiom1";

pub const EXCLUDED_MIDDLE: &str = "logic.booleans.excluded_middle";

/// Items the excluded-middle derivation invokes.
pub const EXCLUDED_MIDDLE_USES: [&str; 13] =
    [BOOL4, BOOL5, IMPL2, IMPL3, NEG1, NEG2, NEG3, DISJ2, DISJ3, EQ1, EQ2, EQ3, EQ6];

/// Script builder with the equational helpers used below. Every helper
/// takes the assumptions its conditions may rest on.
struct Builder {
    s: Script,
}

impl Builder {
    fn new() -> Self {
        Builder { s: Script::new() }
    }

    fn inst(&mut self, axiom: &str, map: &[(Expr, Expr)], ctx: &[Expr]) -> usize {
        let ax = self.s.invoke(axiom);
        self.s.instantiate(ax, map, ctx)
    }

    /// `P ⊢ P = ⊤`.
    fn to_true(&mut self, p: &Expr, ctx: &[Expr]) -> usize {
        self.inst(BOOL4, &[(var("A"), p.clone())], ctx)
    }

    /// `P = ⊤ ⊢ P`.
    fn from_true(&mut self, p: &Expr, ctx: &[Expr]) -> usize {
        self.inst(BOOL5, &[(var("A"), p.clone())], ctx)
    }

    fn trans(&mut self, x: &Expr, y: &Expr, z: &Expr, ctx: &[Expr]) -> usize {
        self.inst(EQ3, &[(var("x"), x.clone()), (var("y"), y.clone()), (var("z"), z.clone())], ctx)
    }

    /// `x = y ⊢ body[x] = body[y]`, where `body` is written over `x`.
    fn subst(&mut self, body: &Expr, x: &Expr, y: &Expr, ctx: &[Expr]) -> usize {
        let map = [(apply("f", vec![var("x")]), body.clone()), (var("x"), x.clone()), (var("y"), y.clone())];
        self.inst(EQ6, &map, ctx)
    }

    /// From `R` and `R = S`, derives `S`.
    fn eq_mp(&mut self, r: &Expr, s: &Expr, ctx: &[Expr]) -> usize {
        self.to_true(r, ctx);
        let (sr, rs) = (eq(s.clone(), r.clone()), eq(r.clone(), s.clone()));
        self.inst(EQ2, &[(var("x"), r.clone()), (var("y"), s.clone())], ctx);
        self.to_true(&rs, ctx);
        self.trans(&sr, &rs, &t(), ctx);
        self.from_true(&sr, ctx);
        self.trans(s, r, &t(), ctx);
        self.from_true(s, ctx)
    }

    fn chain(&mut self, steps: &[Expr], ctx: &[Expr]) -> usize {
        let mut last = 0;
        for w in steps.windows(2).skip(1) {
            last = self.trans(&steps[0], &w[0], &w[1], ctx);
        }
        last
    }
}

/// `⊢ ∀_{A | A ∈ 𝔹} (A ∨ ¬A)`.
pub fn excluded_middle_statement() -> Expr {
    let a = var("A");
    forall(vec![a.clone()], vec![in_(a.clone(), bools())], or(vec![a.clone(), not(a)]))
}

/// Case analysis on `A`, then generalization over `A`.
pub fn excluded_middle() -> Script {
    let a = var("A");
    let x = or(vec![a.clone(), not(a.clone())]);
    let truth = eq(x.clone(), t());
    let denied = not(truth.clone());
    let boolean = in_(a.clone(), bools());
    let z = var("x");
    let mut b = Builder::new();

    // A true: (A ∨ ¬A) = (⊤ ∨ ¬⊤) = (⊤ ∨ ⊥) = ⊤.
    let ctx_a = [a.clone()];
    b.s.assume(&a);
    b.to_true(&a, &ctx_a);
    b.subst(&or(vec![z.clone(), not(z.clone())]), &a, &t(), &ctx_a);
    b.s.invoke(NEG1);
    b.subst(&or(vec![t(), z.clone()]), &not(t()), &f(), &[]);
    b.s.invoke(DISJ2);
    b.chain(&[x.clone(), or(vec![t(), not(t())]), or(vec![t(), f()]), t()], &ctx_a);

    // A and the denial together give ⊥, so the denial gives ¬A.
    let ctx_an = [a.clone(), denied.clone()];
    b.s.assume(&denied);
    b.inst(NEG3, &[(var("A"), truth.clone())], &[denied.clone()]);
    let absurd = b.eq_mp(&truth, &f(), &ctx_an);
    b.s.deduce(absurd, &a);
    let ctx_bn = [boolean.clone(), denied.clone()];
    b.inst(IMPL3, &[(var("A"), a.clone())], &ctx_bn);

    // ¬A: (A ∨ ¬A) = (⊥ ∨ ¬⊥) = (⊥ ∨ ⊤) = ⊤, contradicting the denial.
    b.inst(NEG3, &[(var("A"), a.clone())], &ctx_bn);
    b.subst(&or(vec![z.clone(), not(z.clone())]), &a, &f(), &ctx_bn);
    b.s.invoke(NEG2);
    b.subst(&or(vec![f(), z.clone()]), &not(f()), &t(), &[]);
    b.s.invoke(DISJ3);
    b.chain(&[x.clone(), or(vec![f(), not(f())]), or(vec![f(), t()]), t()], &ctx_bn);
    let absurd = b.eq_mp(&truth, &f(), &ctx_bn);
    b.s.deduce(absurd, &denied);

    // Excluding the denial of a Boolean leaves the claim.
    let ctx_b = [boolean.clone()];
    b.inst(EQ1, &[(var("x"), x.clone()), (var("y"), t())], &[]);
    b.inst(IMPL2, &[(var("A"), truth)], &ctx_b);
    let claim = b.from_true(&x, &ctx_b);
    b.s.generalize(claim, &[a], &[]);
    b.s
}

/// `{x = (5 ∨ ⊤), x + 10} ⊢ (5 ∨ ⊤) + 10`: the nonsense operand does not
/// matter to substitution.
pub fn garbage_tolerant() -> Script {
    let x = var("x");
    let junk = or(vec![num(5), t()]);
    let plus_ten = |e: Expr| add(vec![e, num(10)]);
    let ctx = [eq(x.clone(), junk.clone()), plus_ten(x.clone())];
    let mut b = Builder::new();
    b.s.assume(&ctx[0]);
    b.s.assume(&ctx[1]);
    b.subst(&plus_ten(x.clone()), &x, &junk, &ctx);
    b.eq_mp(&plus_ten(x), &plus_ten(junk), &ctx);
    b.s
}

pub fn garbage_tolerant_expected() -> (Vec<Expr>, Expr) {
    let x = var("x");
    let junk = or(vec![num(5), t()]);
    (vec![eq(x.clone(), junk.clone()), add(vec![x, num(10)])], add(vec![junk, num(10)]))
}

/// `⊢ 3 ⇒ 3`.
pub fn three_implies_three() -> Script {
    let mut s = Script::new();
    let a = s.assume(&num(3));
    s.deduce(a, &num(3));
    s
}

/// The substitution instance generalized over complex numbers:
/// `⊢ ∀_{a, x, y | x = y, a ∈ ℂ, x ∈ ℂ, y ∈ ℂ} (x^a = y^a)`.
pub fn exp_eq() -> Script {
    let (a, x, y) = (var("a"), var("x"), var("y"));
    let mut s = Script::new();
    let sub = s.invoke(EQ6);
    let inst = s.instantiate(
        sub,
        &[(apply("f", vec![x.clone()]), exp(x.clone(), a.clone())), (x.clone(), x.clone()), (y.clone(), y.clone())],
        &[eq(x.clone(), y.clone())],
    );
    let complex = |v: &Expr| in_(v.clone(), sym::complex());
    s.generalize(inst, &[a.clone(), x.clone(), y.clone()], &[complex(&a), complex(&x), complex(&y)]);
    s
}

/// `⊢ (b_1, ..., b_0) = ()` from the empty-range tuple axiom, with
/// reductions off so the empty range stays visible.
pub fn empty_tuple_instance() -> Script {
    let (zero, one) = (num(0), num(1));
    let succ = add(vec![zero.clone(), one.clone()]);
    let mut b = Builder::new();
    b.s.invoke(NUMERAL1);
    b.inst(EQ2, &[(var("x"), succ.clone()), (var("y"), one.clone())], &[]);
    b.eq_mp(&eq(one.clone(), succ.clone()), &eq(succ, one.clone()), &[]);
    let ax = b.s.invoke(TUPLE4);
    let map = [(apply("f", vec![var("k")]), idx("b", var("k"))), (var("i"), one), (var("j"), zero)];
    b.s.push(StepRequest::Instantiate(InstantiateRequest {
        target: ax,
        map: map.iter().map(|(k, v)| [to_sexpr(k), to_sexpr(v)]).collect(),
        alternatives: vec![],
        assumptions: vec![],
        layers: 1,
        options: Some(options_payload(&Options::preserve_all())),
    }));
    b.s
}

/// Replays `script` and returns its last judgment.
pub fn run(script: &Script, prover: Prover) -> Result<Judgment, KernelError> {
    let mut session = Session::new(prover);
    let last = session.apply_all(script.steps())?.ok_or_else(|| KernelError::BadArgument("empty script".into()))?;
    Ok(session.judgment(last)?.clone())
}

use proptest::prelude::*;
use pvk_cert::Certificate;
use pvk_expr::vocab::dsl::t;
use pvk_kernel::{export_proof, Presumptions};
use pvk_theory::Registry;

const AXIOMS: usize = 3;
const THEOREMS: usize = 7;

fn name(i: usize) -> String {
    if i < AXIOMS {
        format!("toy.ax{i}")
    } else {
        format!("toy.t{}", i - AXIOMS)
    }
}

fn registry() -> Registry {
    let mut r = Registry::new();
    for i in 0..AXIOMS {
        r.register_axiom("toy", &format!("ax{i}"), t()).unwrap();
    }
    for i in 0..THEOREMS {
        r.register_theorem("toy", &format!("t{i}"), t()).unwrap();
    }
    r
}

fn proof_using(r: &Registry, uses: &[String]) -> Certificate {
    let mut p = r.prover().with_presumptions(Presumptions::all());
    let mut j = p.invoke(&uses[0]).unwrap();
    for u in &uses[1..] {
        let imp = p.deduce(&j, &t());
        let next = p.invoke(u).unwrap();
        j = p.modus_ponens(&imp, &next).unwrap();
    }
    export_proof(&j).to_certificate()
}

fn has_cycle(r: &Registry) -> bool {
    (0..THEOREMS).any(|i| {
        let n = name(AXIOMS + i);
        r.dependents(&n).contains(&n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Random attach sequences: statuses maintained incrementally always
    /// equal a recomputation, and the graph never acquires a cycle.
    #[test]
    fn incremental_status_equals_scratch(
        plan in prop::collection::vec(
            (0..THEOREMS, prop::collection::vec(0..AXIOMS + THEOREMS, 1..4)),
            1..16,
        )
    ) {
        let mut r = registry();
        for (thm, uses) in plan {
            let thm = name(AXIOMS + thm);
            let uses: Vec<String> = uses.into_iter().map(name).collect();
            let cert = proof_using(&r, &uses);
            let outcome = r.attach_proof(&thm, &cert, None);
            let circular = uses.iter().any(|u| *u == thm || r.dependents(&thm).contains(u));
            match outcome {
                Ok(_) => prop_assert!(!circular),
                Err(e) => {
                    prop_assert!(circular, "{e}");
                    prop_assert_eq!(e.code(), "CircularDependency");
                }
            }
            prop_assert!(!has_cycle(&r));
            prop_assert_eq!(r.statuses(), r.statuses_from_scratch());
        }
    }
}

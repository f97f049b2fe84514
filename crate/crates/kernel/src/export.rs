use std::collections::{BTreeMap, HashMap};

use pvk_cert::{
    Alternative, Certificate, InstantiationPayload, LiteralMapping, Payload, ReductionOptions, Rule, Step, TheoryRef,
};
use pvk_expr::to_sexpr;
use pvk_reduce::Options;
use pvk_style::Target;
use sha2::{Digest as _, Sha256};

use crate::judgment::{Judgment, StepPayload};

/// One numbered step of an exported proof.
#[derive(Clone, Debug)]
pub struct ProofStep {
    pub index: usize,
    pub rule: Rule,
    pub judgment: Judgment,
    pub requirements: Vec<usize>,
}

/// A proof DAG laid out as a list: root at 0, every requirement later than
/// the step that needs it.
#[derive(Clone, Debug)]
pub struct Proof {
    steps: Vec<ProofStep>,
}

pub fn options_payload(o: &Options) -> ReductionOptions {
    ReductionOptions {
        fuel: o.fuel,
        equality_reductions: o.equality_reductions.iter().map(|r| r.name().to_string()).collect(),
        range_reductions: o.range_reductions,
    }
}

pub fn payload_of(p: &StepPayload) -> Payload {
    match p {
        StepPayload::None => Payload::None,
        StepPayload::Invocation { name } => Payload::Invocation { name: name.clone() },
        StepPayload::Instantiation { map, layers, assumptions, options } => {
            Payload::Instantiation(InstantiationPayload {
                map: map.entries().iter().map(|(k, v)| [to_sexpr(k), to_sexpr(v)]).collect(),
                alternatives: map
                    .alternatives()
                    .iter()
                    .map(|(k, v)| Alternative { key: to_sexpr(k), value: v.as_ref().map(to_sexpr) })
                    .collect(),
                layers: *layers,
                assumptions: assumptions.iter().map(to_sexpr).collect(),
                options: options_payload(options),
            })
        }
        StepPayload::Generalization { params, extra_conditions } => Payload::Generalization {
            params: params.iter().map(to_sexpr).collect(),
            extra_conditions: extra_conditions.iter().map(to_sexpr).collect(),
        },
        StepPayload::LiteralGeneralization { mapping, eliminated } => Payload::LiteralGeneralization {
            mapping: mapping
                .iter()
                .map(|(l, v)| LiteralMapping { literal: to_sexpr(l), variable: v.to_string() })
                .collect(),
            eliminated: eliminated.clone(),
        },
    }
}

/// Structural key of a proof node: equal keys mean the same judgment
/// derived the same way from the same requirements.
struct Keys {
    memo: HashMap<usize, [u8; 32]>,
}

impl Keys {
    fn key(&mut self, j: &Judgment) -> [u8; 32] {
        // Iterative post-order so deep proofs do not exhaust the stack.
        let mut stack = vec![(j.clone(), false)];
        while let Some((n, expanded)) = stack.pop() {
            if self.memo.contains_key(&n.addr()) {
                continue;
            }
            if !expanded {
                stack.push((n.clone(), true));
                for r in n.requirements() {
                    if !self.memo.contains_key(&r.addr()) {
                        stack.push((r.clone(), false));
                    }
                }
                continue;
            }
            let mut h = Sha256::new();
            h.update(n.rule().name().as_bytes());
            h.update(n.digest().as_bytes());
            h.update(serde_json::to_vec(&payload_of(n.payload())).expect("payload serializes"));
            for r in n.requirements() {
                h.update(self.memo[&r.addr()]);
            }
            self.memo.insert(n.addr(), h.finalize().into());
        }
        self.memo[&j.addr()]
    }
}

/// Lays out the proof of `j`.
///
/// Structurally identical sub-proofs are merged, so a shared requirement
/// appears once, after every step that needs it. Root requirements that are
/// shared with deeper steps get a `reference` proxy right after the root.
pub fn export_proof(j: &Judgment) -> Proof {
    let mut keys = Keys { memo: HashMap::new() };
    let mut node_of: BTreeMap<[u8; 32], usize> = BTreeMap::new();
    let mut nodes: Vec<Judgment> = Vec::new();
    let mut children: Vec<Vec<usize>> = Vec::new();

    // Number the distinct nodes.
    let mut id_of = |n: &Judgment, nodes: &mut Vec<Judgment>, children: &mut Vec<Vec<usize>>| -> (usize, bool) {
        let k = keys.key(n);
        match node_of.get(&k) {
            Some(&i) => (i, false),
            None => {
                let i = nodes.len();
                node_of.insert(k, i);
                nodes.push(n.clone());
                children.push(Vec::new());
                (i, true)
            }
        }
    };
    let (root, _) = id_of(j, &mut nodes, &mut children);
    let mut work = vec![root];
    while let Some(i) = work.pop() {
        let reqs: Vec<Judgment> = nodes[i].requirements().to_vec();
        for r in &reqs {
            let (c, fresh) = id_of(r, &mut nodes, &mut children);
            children[i].push(c);
            if fresh {
                work.push(c);
            }
        }
    }

    // Reverse post-order, visiting requirements last to first so the final
    // order lists them first to last.
    let mut post = Vec::with_capacity(nodes.len());
    let mut done = vec![false; nodes.len()];
    let mut stack = vec![(root, 0usize)];
    done[root] = true;
    while let Some((n, pos)) = stack.pop() {
        let cs = &children[n];
        if pos < cs.len() {
            stack.push((n, pos + 1));
            let c = cs[cs.len() - 1 - pos];
            if !done[c] {
                done[c] = true;
                stack.push((c, 0));
            }
        } else {
            post.push(n);
        }
    }
    post.reverse();

    let mut shared = vec![false; nodes.len()];
    for (n, cs) in children.iter().enumerate() {
        if n != root {
            for &c in cs {
                shared[c] = true;
            }
        }
    }
    let mut proxied: Vec<usize> = Vec::new();
    for &c in &children[root] {
        if shared[c] && !proxied.contains(&c) {
            proxied.push(c);
        }
    }
    let offset = proxied.len();
    let mut position = vec![0usize; nodes.len()];
    for (p, &n) in post.iter().enumerate() {
        position[n] = if p == 0 { 0 } else { p + offset };
    }

    let mut steps = Vec::with_capacity(post.len() + offset);
    for (p, &n) in post.iter().enumerate() {
        let requirements: Vec<usize> = if p == 0 {
            children[n]
                .iter()
                .map(|c| match proxied.iter().position(|x| x == c) {
                    Some(k) => 1 + k,
                    None => position[*c],
                })
                .collect()
        } else {
            children[n].iter().map(|c| position[*c]).collect()
        };
        steps.push(ProofStep { index: position[n], rule: nodes[n].rule(), judgment: nodes[n].clone(), requirements });
        if p == 0 {
            for (k, &c) in proxied.iter().enumerate() {
                steps.push(ProofStep {
                    index: 1 + k,
                    rule: Rule::Reference,
                    judgment: nodes[c].clone(),
                    requirements: vec![position[c]],
                });
            }
        }
    }
    Proof { steps }
}

impl Proof {
    pub fn steps(&self) -> &[ProofStep] {
        &self.steps
    }

    pub fn root(&self) -> &Judgment {
        &self.steps[0].judgment
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn to_certificate(&self) -> Certificate {
        let mut refs: BTreeMap<String, String> = BTreeMap::new();
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let payload = if s.rule == Rule::Reference { Payload::None } else { payload_of(s.judgment.payload()) };
                if let Payload::Invocation { name } = &payload {
                    refs.insert(name.clone(), s.judgment.consequent().id().to_hex());
                }
                Step {
                    index: s.index,
                    rule: s.rule,
                    assumptions: s.judgment.assumptions().iter().map(to_sexpr).collect(),
                    consequent: to_sexpr(s.judgment.consequent()),
                    requirements: s.requirements.clone(),
                    payload,
                    digest: s.judgment.digest(),
                }
            })
            .collect();
        let theory_refs = refs.into_iter().map(|(name, digest)| TheoryRef { name, digest }).collect();
        Certificate::new(theory_refs, steps)
    }

    fn step_label(s: &ProofStep) -> String {
        match s.judgment.payload() {
            StepPayload::Invocation { name } if s.rule != Rule::Reference => format!("{}: {name}", s.rule.label()),
            _ => s.rule.label().to_string(),
        }
    }

    /// Plain-text table: step, type, requirements, judgment.
    pub fn text_table(&self) -> String {
        let rows: Vec<[String; 4]> = self
            .steps
            .iter()
            .map(|s| {
                [
                    s.index.to_string(),
                    Self::step_label(s),
                    s.requirements.iter().map(usize::to_string).collect::<Vec<_>>().join(", "),
                    s.judgment.render(Target::Text),
                ]
            })
            .collect();
        let head = ["step", "type", "requirements", "statement"].map(String::from);
        let mut width = [0usize; 3];
        for r in std::iter::once(&head).chain(&rows) {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for r in std::iter::once(&head).chain(&rows) {
            for (w, c) in width.iter().zip(r) {
                out.push_str(c);
                out.push_str(&" ".repeat(w - c.chars().count() + 2));
            }
            out.push_str(&r[3]);
            out.push('\n');
        }
        out
    }

    /// LaTeX `tabular` with the same columns as [`Proof::text_table`].
    pub fn latex_table(&self) -> String {
        let mut out = String::from("\\begin{tabular}{rlll}\n");
        out.push_str("step & type & requirements & statement \\\\\n\\hline\n");
        for s in &self.steps {
            let reqs: Vec<String> = s.requirements.iter().map(usize::to_string).collect();
            let label = Self::step_label(s).replace('_', "\\_");
            out.push_str(&format!(
                "{} & {} & {} & ${}$ \\\\\n",
                s.index,
                label,
                reqs.join(", "),
                s.judgment.render(Target::Latex)
            ));
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

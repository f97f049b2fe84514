//! Scripted proving: rule requests that refer to earlier results by index.

use pvk_cert::{Alternative, ReductionOptions};
use pvk_expr::{parse, to_sexpr, Expr};
use pvk_reduce::{EqReduction, Options, ReplacementMap};
use serde::{Deserialize, Serialize};

use crate::error::{KernelError, Result};
use crate::judgment::Judgment;
use crate::prover::Prover;

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstantiateRequest {
    pub target: usize,
    /// `[key, value]` pairs as s-expressions.
    pub map: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alternatives: Vec<Alternative>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assumptions: Vec<String>,
    #[serde(default = "one")]
    pub layers: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<ReductionOptions>,
}

/// One rule application. Expressions are s-expression text; judgments are
/// indices into the session's result list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepRequest {
    Assume {
        expr: String,
    },
    Invoke {
        name: String,
    },
    ModusPonens {
        implication: usize,
        antecedent: usize,
    },
    Deduce {
        judgment: usize,
        antecedent: String,
    },
    Instantiate(InstantiateRequest),
    Generalize {
        judgment: usize,
        params: Vec<String>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        conditions: Vec<String>,
    },
    LiteralGeneralize {
        judgment: usize,
        mapping: Vec<[String; 2]>,
    },
}

impl StepRequest {
    pub fn rule_name(&self) -> &'static str {
        match self {
            StepRequest::Assume { .. } => "assume",
            StepRequest::Invoke { .. } => "invoke",
            StepRequest::ModusPonens { .. } => "modus_ponens",
            StepRequest::Deduce { .. } => "deduce",
            StepRequest::Instantiate(_) => "instantiate",
            StepRequest::Generalize { .. } => "generalize",
            StepRequest::LiteralGeneralize { .. } => "literal_generalize",
        }
    }
}

fn expr(src: &str) -> Result<Expr> {
    Ok(parse(src)?)
}

fn exprs(srcs: &[String]) -> Result<Vec<Expr>> {
    srcs.iter().map(|s| expr(s)).collect()
}

pub fn options_from(o: &ReductionOptions) -> Result<Options> {
    let mut eq = std::collections::BTreeSet::new();
    for n in &o.equality_reductions {
        eq.insert(
            EqReduction::from_name(n)
                .ok_or_else(|| KernelError::BadArgument(format!("unknown equality reduction {n}")))?,
        );
    }
    Ok(Options { fuel: o.fuel, equality_reductions: eq, range_reductions: o.range_reductions })
}

pub fn map_from(pairs: &[[String; 2]], alternatives: &[Alternative]) -> Result<ReplacementMap> {
    let mut m = ReplacementMap::new();
    for [k, v] in pairs {
        m.insert(expr(k)?, expr(v)?)?;
    }
    for a in alternatives {
        let value = a.value.as_deref().map(expr).transpose()?;
        m = m.with_alt(expr(&a.key)?, value)?;
    }
    Ok(m)
}

/// A prover plus the append-only list of judgments its requests produced.
pub struct Session {
    prover: Prover,
    judgments: Vec<Judgment>,
    log: Vec<StepRequest>,
}

impl Session {
    pub fn new(prover: Prover) -> Self {
        Session { prover, judgments: Vec::new(), log: Vec::new() }
    }

    pub fn prover(&self) -> &Prover {
        &self.prover
    }

    pub fn judgments(&self) -> &[Judgment] {
        &self.judgments
    }

    pub fn judgment(&self, n: usize) -> Result<&Judgment> {
        self.judgments.get(n).ok_or(KernelError::UnknownIndex(n))
    }

    /// Requests applied successfully, in order.
    pub fn log(&self) -> &[StepRequest] {
        &self.log
    }

    /// Applies one request. On error nothing is appended.
    pub fn apply(&mut self, req: &StepRequest) -> Result<usize> {
        let j = self.run(req)?;
        self.judgments.push(j);
        self.log.push(req.clone());
        Ok(self.judgments.len() - 1)
    }

    /// Applies requests in order, stopping at the first failure.
    pub fn apply_all<'a>(&mut self, reqs: impl IntoIterator<Item = &'a StepRequest>) -> Result<Option<usize>> {
        let mut last = None;
        for r in reqs {
            last = Some(self.apply(r)?);
        }
        Ok(last)
    }

    fn run(&mut self, req: &StepRequest) -> Result<Judgment> {
        let get = |n: usize| self.judgment(n).cloned();
        match req {
            StepRequest::Assume { expr: e } => Ok(self.prover.assume(&expr(e)?)),
            StepRequest::Invoke { name } => self.prover.invoke(name),
            StepRequest::ModusPonens { implication, antecedent } => {
                let (i, a) = (get(*implication)?, get(*antecedent)?);
                self.prover.modus_ponens(&i, &a)
            }
            StepRequest::Deduce { judgment, antecedent } => {
                let j = get(*judgment)?;
                Ok(self.prover.deduce(&j, &expr(antecedent)?))
            }
            StepRequest::Instantiate(r) => {
                let target = get(r.target)?;
                let map = map_from(&r.map, &r.alternatives)?;
                let opts = match &r.options {
                    Some(o) => options_from(o)?,
                    None => Options::default(),
                };
                self.prover.instantiate_with(&target, &map, &exprs(&r.assumptions)?, r.layers, &opts)
            }
            StepRequest::Generalize { judgment, params, conditions } => {
                let j = get(*judgment)?;
                self.prover.generalize(&j, &exprs(params)?, &exprs(conditions)?)
            }
            StepRequest::LiteralGeneralize { judgment, mapping } => {
                let j = get(*judgment)?;
                let pairs: Vec<(Expr, &str)> =
                    mapping.iter().map(|[l, v]| Ok((expr(l)?, v.as_str()))).collect::<Result<_>>()?;
                self.prover.literal_generalize(&j, &pairs)
            }
        }
    }
}

/// Builds a request list, handing out the index each request will occupy.
#[derive(Clone, Debug, Default)]
pub struct Script {
    steps: Vec<StepRequest>,
}

impl Script {
    pub fn new() -> Self {
        Script::default()
    }

    pub fn steps(&self) -> &[StepRequest] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<StepRequest> {
        self.steps
    }

    pub fn push(&mut self, r: StepRequest) -> usize {
        self.steps.push(r);
        self.steps.len() - 1
    }

    pub fn assume(&mut self, e: &Expr) -> usize {
        self.push(StepRequest::Assume { expr: to_sexpr(e) })
    }

    pub fn invoke(&mut self, name: &str) -> usize {
        self.push(StepRequest::Invoke { name: name.to_string() })
    }

    pub fn modus_ponens(&mut self, implication: usize, antecedent: usize) -> usize {
        self.push(StepRequest::ModusPonens { implication, antecedent })
    }

    pub fn deduce(&mut self, judgment: usize, antecedent: &Expr) -> usize {
        self.push(StepRequest::Deduce { judgment, antecedent: to_sexpr(antecedent) })
    }

    /// One-layer instantiation with default options.
    pub fn instantiate(&mut self, target: usize, map: &[(Expr, Expr)], assumptions: &[Expr]) -> usize {
        self.push(StepRequest::Instantiate(InstantiateRequest {
            target,
            map: map.iter().map(|(k, v)| [to_sexpr(k), to_sexpr(v)]).collect(),
            alternatives: vec![],
            assumptions: assumptions.iter().map(to_sexpr).collect(),
            layers: 1,
            options: None,
        }))
    }

    pub fn generalize(&mut self, judgment: usize, params: &[Expr], conditions: &[Expr]) -> usize {
        self.push(StepRequest::Generalize {
            judgment,
            params: params.iter().map(to_sexpr).collect(),
            conditions: conditions.iter().map(to_sexpr).collect(),
        })
    }
}

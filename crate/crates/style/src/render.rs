use pvk_expr::composite::as_quantified;
use pvk_expr::vocab::pkg;
use pvk_expr::{Expr, Kind, Name};

use crate::notation::{self, Fixity};
use crate::{StyleMap, Target};

/// Renders `e` honoring `styles`. Total and deterministic.
pub fn format_with(e: &Expr, styles: &StyleMap, target: Target) -> String {
    let mut r = Renderer { styles, target, env: Vec::new() };
    r.expr(e, &mut Vec::new())
}

struct Renderer<'a> {
    styles: &'a StyleMap,
    target: Target,
    /// Range parameters currently standing for a boundary expression.
    env: Vec<(Name, Option<(Expr, Vec<usize>)>)>,
}

/// An operand together with its path.
type Entry = (Expr, Vec<usize>);

impl Renderer<'_> {
    fn latex(&self) -> bool {
        self.target == Target::Latex
    }

    fn pick<'s>(&self, text: &'s str, latex: &'s str) -> &'s str {
        if self.latex() {
            latex
        } else {
            text
        }
    }

    fn style(&self, path: &[usize], option: &str) -> Option<&str> {
        self.styles.get(path, option)
    }

    fn group(&self, inner: String) -> String {
        if self.latex() {
            format!(r"\left({inner}\right)")
        } else {
            format!("({inner})")
        }
    }

    fn expr(&mut self, e: &Expr, path: &mut Vec<usize>) -> String {
        stacker::maybe_grow(64 * 1024, 1024 * 1024, || self.expr_inner(e, path))
    }

    fn at(&mut self, e: &Expr, path: &mut Vec<usize>, child: &[usize]) -> String {
        let n = path.len();
        path.extend_from_slice(child);
        let s = self.expr(e, path);
        path.truncate(n);
        s
    }

    fn expr_inner(&mut self, e: &Expr, path: &mut Vec<usize>) -> String {
        match e.kind() {
            Kind::Variable(n) => {
                if let Some((_, bound)) = self.env.iter().rev().find(|(k, _)| k == n) {
                    if let Some((sub, sub_path)) = bound.clone() {
                        let mut p = sub_path;
                        return self.expr(&sub, &mut p);
                    }
                }
                self.var_name(n)
            }
            Kind::Literal { package, name } => self.literal(package, name),
            Kind::Tuple(es) => {
                let entries: Vec<Entry> = es.iter().enumerate().map(|(i, c)| (c.clone(), vec![i])).collect();
                let inner = self.list(&entries, path, ", ");
                self.group(inner)
            }
            Kind::Operation { .. } => self.operation(e, path),
            Kind::Conditional { value, condition } => {
                let v = self.at(value, path, &[0]);
                let c = self.at(condition, path, &[1]);
                if self.latex() {
                    format!(r"\left\{{{v} \textrm{{ if }} {c}\right.")
                } else {
                    format!("{{{v} if {c}.")
                }
            }
            Kind::Lambda { params, body } => {
                let ps = params.entries().expect("tuple params");
                let entries: Vec<Entry> = ps.iter().enumerate().map(|(i, c)| (c.clone(), vec![0, i])).collect();
                let plist = self.list(&entries, path, ", ");
                let head = if ps.len() == 1 && ps[0].as_var().is_some() { plist } else { self.group(plist) };
                let shadow = ps.iter().filter_map(pvk_expr::param_base).cloned();
                let n = self.env.len();
                self.env.extend(shadow.map(|b| (b, None)));
                let b = self.operand(body, path, &[1]);
                self.env.truncate(n);
                format!("{head} {} {b}", self.pick("↦", r"\mapsto"))
            }
            Kind::Named(items) => {
                let mut parts = Vec::new();
                for (i, (k, v)) in items.iter().enumerate() {
                    let s = self.at(v, path, &[i]);
                    parts.push(format!("{k}: {s}"));
                }
                let inner = parts.join(", ");
                if self.latex() {
                    format!(r"\{{{inner}\}}")
                } else {
                    format!("{{{inner}}}")
                }
            }
            Kind::Range { .. } => self.range(e, path, ", "),
            Kind::Indexed { var, indices } => {
                let base = self.at(var, path, &[0]);
                let idx: Vec<String> = indices.iter().enumerate().map(|(i, x)| self.at(x, path, &[i + 1])).collect();
                let joined = idx.join(",");
                if !self.latex() && indices.len() == 1 && !joined.contains(' ') && joined.chars().count() == 1 {
                    format!("{base}_{joined}")
                } else {
                    format!("{base}_{{{joined}}}")
                }
            }
        }
    }

    fn var_name(&self, n: &str) -> String {
        if self.latex() {
            if let Some(rest) = n.strip_prefix('_') {
                if !rest.is_empty() {
                    return format!("{{_{{-}}{rest}}}");
                }
            }
        }
        n.to_string()
    }

    fn literal(&self, package: &str, name: &str) -> String {
        if package == pkg::NUMERALS {
            return name.to_string();
        }
        match notation::lookup(package, name) {
            Some(sym) => self.pick(sym.text, sym.latex).to_string(),
            None if self.latex() => format!(r"\mathsf{{{name}}}"),
            None => name.to_string(),
        }
    }

    /// Renders a range as `first sep ... sep last`, or with the explicit
    /// middle entry `..body..`.
    fn range(&mut self, e: &Expr, path: &mut Vec<usize>, sep: &str) -> String {
        let (k, body, start, end) = e.as_range().expect("range");
        let explicit = self.style(path, "parameterization") == Some("explicit");
        let mut start_path = path.clone();
        start_path.push(1);
        let mut end_path = path.clone();
        end_path.push(2);
        self.env.push((k.clone(), Some((start.clone(), start_path))));
        let first = self.operand_in_range(body, path, sep);
        self.env.pop();
        self.env.push((k.clone(), Some((end.clone(), end_path))));
        let last = self.operand_in_range(body, path, sep);
        self.env.pop();
        let dots = self.pick("...", r"\ldots");
        if explicit {
            self.env.push((k.clone(), None));
            let mid = self.operand_in_range(body, path, sep);
            self.env.pop();
            format!("{first}{sep}..{mid}..{sep}{last}")
        } else {
            format!("{first}{sep}{dots}{sep}{last}")
        }
    }

    fn operand_in_range(&mut self, body: &Expr, path: &mut Vec<usize>, sep: &str) -> String {
        if sep == ", " {
            self.at(body, path, &[0, 1])
        } else {
            self.operand(body, path, &[0, 1])
        }
    }

    /// Entries joined by `sep`, ranges expanded inline.
    fn list(&mut self, entries: &[Entry], path: &mut Vec<usize>, sep: &str) -> String {
        let mut parts = Vec::new();
        for (e, rel) in entries {
            if let Kind::Range { .. } = e.kind() {
                let n = path.len();
                path.extend_from_slice(rel);
                parts.push(self.range(e, path, sep));
                path.truncate(n);
            } else if sep == ", " {
                parts.push(self.at(e, path, rel));
            } else {
                parts.push(self.operand(e, path, rel));
            }
        }
        parts.join(sep)
    }

    /// A child rendered with grouping if it would otherwise be ambiguous.
    fn operand(&mut self, e: &Expr, path: &mut Vec<usize>, rel: &[usize]) -> String {
        let s = self.at(e, path, rel);
        let n = path.len();
        path.extend_from_slice(rel);
        let stacked_fraction =
            self.latex() && e.is_op(pkg::DIVISION, "Div") && self.style(path, "division") != Some("inline");
        path.truncate(n);
        if needs_group(e) && !stacked_fraction {
            self.group(s)
        } else {
            s
        }
    }

    fn entries_of(e: &Expr) -> Vec<Entry> {
        let (_, operands) = e.as_operation().expect("operation");
        match operands.entries() {
            Some(es) => es.iter().enumerate().map(|(i, c)| (c.clone(), vec![1, i])).collect(),
            None => vec![(operands.clone(), vec![1])],
        }
    }

    fn operation(&mut self, e: &Expr, path: &mut Vec<usize>) -> String {
        let (operator, _) = e.as_operation().expect("operation");
        let entries = Self::entries_of(e);
        let lit = operator.as_literal();
        let sym = lit.and_then(|(p, n)| notation::lookup(p, n));
        let Some(sym) = sym else {
            return self.application(operator, &entries, path);
        };
        let (package, name) = lit.expect("literal operator");
        match sym.fixity {
            Fixity::Infix => self.infix(package, name, &sym, &entries, path),
            Fixity::Prefix if entries.len() == 1 && !is_range(&entries[0].0) => {
                let (x, rel) = &entries[0];
                let s = self.operand(x, path, rel);
                let head = self.pick(sym.text, sym.latex);
                if self.latex() && head.starts_with('\\') {
                    format!("{head} {s}")
                } else {
                    format!("{head}{s}")
                }
            }
            Fixity::Binder => match as_quantified(e) {
                Some(q) if entries.len() == 1 => self.binder(&sym, &q, path),
                _ => self.application(operator, &entries, path),
            },
            Fixity::Special => self.special(name, operator, &entries, path),
            _ => self.application(operator, &entries, path),
        }
    }

    fn application(&mut self, operator: &Expr, entries: &[Entry], path: &mut Vec<usize>) -> String {
        let head = self.at(operator, path, &[0]);
        let args = self.list(entries, path, ", ");
        format!("{head}({args})")
    }

    fn infix(
        &mut self,
        package: &str,
        name: &str,
        sym: &notation::Symbol,
        entries: &[Entry],
        path: &mut Vec<usize>,
    ) -> String {
        let mut op = self.pick(sym.text, sym.latex).to_string();
        if entries.len() < 2 && !(entries.len() == 1 && is_range(&entries[0].0)) {
            let args = self.list(entries, path, ", ");
            return format!("[{op}]({args})");
        }
        let mut entries = entries.to_vec();
        if self.style(path, "direction") == Some("reversed") && entries.len() == 2 {
            if let Some((t, l)) = notation::reversed(package, name) {
                op = self.pick(t, l).to_string();
                entries.reverse();
            }
        }
        let sep = match self.style(path, "wrap") {
            Some("before_operator") => format!("\n{op} "),
            Some("after_operator") => format!(" {op}\n"),
            _ => format!(" {op} "),
        };
        if name == "Add" && self.style(path, "subtraction") == Some("minus") {
            let minus = self.pick("−", "-").to_string();
            let mut out = String::new();
            for (i, (x, rel)) in entries.iter().enumerate() {
                let negated = x.is_op(pkg::NEG, "Neg") && x.operand_entries().is_some_and(|v| v.len() == 1);
                if negated {
                    let inner = x.operand_entries().expect("neg operand").remove(0);
                    let mut inner_rel = rel.clone();
                    inner_rel.extend([1, 0]);
                    let s = self.operand(&inner, path, &inner_rel);
                    if i == 0 {
                        out.push_str(&format!("{minus}{s}"));
                    } else {
                        out.push_str(&format!(" {minus} {s}"));
                    }
                } else {
                    let s = if is_range(x) {
                        let n = path.len();
                        path.extend_from_slice(rel);
                        let s = self.range(x, path, &sep);
                        path.truncate(n);
                        s
                    } else {
                        self.operand(x, path, rel)
                    };
                    if i > 0 {
                        out.push_str(&sep);
                    }
                    out.push_str(&s);
                }
            }
            return out;
        }
        self.list(&entries, path, &sep)
    }

    fn binder(&mut self, sym: &notation::Symbol, q: &pvk_expr::composite::Quantified, path: &mut Vec<usize>) -> String {
        // Paths: operation -> operands [1] -> lambda [0] -> params [0] / body [1].
        let lam = [1usize, 0];
        let conds = q.conditions();
        let has_cond = q.condition.is_some();
        let folded = fold_domain(&q.params, &conds);
        let params: Vec<Entry> =
            q.params.iter().enumerate().map(|(i, p)| (p.clone(), vec![lam[0], lam[1], 0, i])).collect();
        let shadow: Vec<Name> = q.params.iter().filter_map(pvk_expr::param_base).cloned().collect();
        let n = self.env.len();
        self.env.extend(shadow.into_iter().map(|b| (b, None)));

        let mut head = self.list(&params, path, ", ");
        let body_rel: Vec<usize> = if has_cond { vec![1, 0, 1, 0] } else { vec![1, 0, 1] };
        let cond_rel: Vec<usize> = vec![1, 0, 1, 1];
        let conj_split = q.condition.as_ref().is_some_and(|c| c.is_op(pkg::CONJUNCTION, "And"));
        let cond_entry = |i: usize| -> Vec<usize> {
            if conj_split {
                let mut r = cond_rel.clone();
                r.extend([1, i]);
                r
            } else {
                cond_rel.clone()
            }
        };
        let mut rest_from = 0;
        if let Some(domain_at) = folded {
            let dom = domain_of(&conds[0]).expect("folded domain");
            let mut rel = cond_entry(0);
            rel.extend(domain_rel(&conds[0]));
            let d = self.at(&dom, path, &rel);
            head = format!("{head} {} {d}", self.pick("∈", r"\in"));
            rest_from = domain_at;
        }
        let rest: Vec<usize> = (rest_from..conds.len()).collect();
        if !rest.is_empty() {
            let comma = self.style(path, "conditions") == Some("comma");
            let parts: String = if rest_from == 0 && !comma {
                self.at(q.condition.as_ref().expect("condition"), path, &cond_rel)
            } else {
                let joiner = if comma { ", ".to_string() } else { format!(" {} ", self.pick("∧", r"\land")) };
                let items: Vec<String> = rest
                    .iter()
                    .map(|&i| {
                        let rel = cond_entry(i);
                        if is_range(&conds[i]) {
                            let n = path.len();
                            path.extend_from_slice(&rel);
                            let s = self.range(&conds[i], path, &joiner);
                            path.truncate(n);
                            s
                        } else if comma || rest.len() == 1 {
                            self.at(&conds[i], path, &rel)
                        } else {
                            self.operand(&conds[i], path, &rel)
                        }
                    })
                    .collect();
                items.join(&joiner)
            };
            head = format!("{head}{}{parts}", self.pick(" | ", "~|~"));
        }
        let body = self.operand(&q.body, path, &body_rel);
        self.env.truncate(n);
        if self.latex() {
            format!("{}_{{{head}}}~{body}", sym.latex)
        } else {
            format!("{}_{{{head}}} {body}", sym.text)
        }
    }

    fn special(&mut self, name: &str, operator: &Expr, entries: &[Entry], path: &mut Vec<usize>) -> String {
        let bar = |s: String| format!("|{s}|");
        match (name, entries) {
            ("Div", [(a, ra), (b, rb)]) => {
                let fraction = self.style(path, "division") != Some("inline");
                if fraction && self.latex() {
                    let a = self.at(a, path, ra);
                    let b = self.at(b, path, rb);
                    format!(r"\frac{{{a}}}{{{b}}}")
                } else {
                    let a = self.operand(a, path, ra);
                    let b = self.operand(b, path, rb);
                    if fraction {
                        format!("{a}/{b}")
                    } else {
                        format!("{a} / {b}")
                    }
                }
            }
            ("Exp", [(a, ra), (b, rb)]) => {
                let a = self.operand(a, path, ra);
                let b = self.at(b, path, rb);
                if self.latex() || b.chars().count() > 1 {
                    format!("{a}^{{{b}}}")
                } else {
                    format!("{a}^{b}")
                }
            }
            ("Abs" | "Card" | "Len", [(a, ra)]) if !is_range(a) => bar(self.at(a, path, ra)),
            ("Set", _) => {
                if entries.is_empty() && self.style(path, "empty_set") == Some("symbol") {
                    return self.pick("∅", r"\emptyset").to_string();
                }
                let inner = self.list(entries, path, ", ");
                if self.latex() {
                    format!(r"\left\{{{inner}\right\}}")
                } else {
                    format!("{{{inner}}}")
                }
            }
            ("ConditionalSet", _) if entries.iter().all(|(c, _)| c.as_conditional().is_some()) => {
                let mut rows = Vec::new();
                for (c, rel) in entries {
                    let (v, cond) = c.as_conditional().expect("conditional");
                    let mut vr = rel.clone();
                    vr.push(0);
                    let mut cr = rel.clone();
                    cr.push(1);
                    let v = self.at(v, path, &vr);
                    let cond = self.at(cond, path, &cr);
                    rows.push(if self.latex() {
                        format!(r"{v} & \textrm{{if}}~{cond}")
                    } else {
                        format!("{v} if {cond}")
                    });
                }
                if self.latex() {
                    format!(r"\begin{{cases}} {} \end{{cases}}", rows.join(r" \\ "))
                } else {
                    format!("{{{}}}", rows.join("; "))
                }
            }
            _ => self.application(operator, entries, path),
        }
    }
}

fn is_range(e: &Expr) -> bool {
    matches!(e.kind(), Kind::Range { .. })
}

fn needs_group(e: &Expr) -> bool {
    match e.kind() {
        Kind::Lambda { .. } | Kind::Conditional { .. } => true,
        Kind::Operation { operator, .. } => {
            let Some((p, n)) = operator.as_literal() else { return false };
            match notation::lookup(p, n).map(|s| s.fixity) {
                Some(Fixity::Infix) => {
                    let entries = e.operand_entries().unwrap_or_default();
                    entries.len() >= 2 || entries.iter().any(is_range)
                }
                Some(Fixity::Binder) => as_quantified(e).is_some(),
                Some(Fixity::Prefix) => (p, n) == (pkg::NEG, "Neg"),
                Some(Fixity::Special) => n == "Div",
                _ => false,
            }
        }
        _ => false,
    }
}

/// The set `D` in `x ∈ D`, or in a range of such memberships.
fn domain_of(c: &Expr) -> Option<Expr> {
    let membership = match c.as_range() {
        Some((_, body, _, _)) => body.clone(),
        None => c.clone(),
    };
    if !membership.is_op(pkg::MEMBERSHIP, "In") {
        return None;
    }
    let es = membership.operand_entries()?;
    (es.len() == 2).then(|| es[1].clone())
}

fn domain_rel(c: &Expr) -> Vec<usize> {
    match c.kind() {
        Kind::Range { .. } => vec![0, 1, 1, 1],
        _ => vec![1, 1],
    }
}

/// If the leading conditions state `p ∈ D` for every parameter in order with
/// one common `D`, the number of such conditions.
fn fold_domain(params: &[Expr], conds: &[Expr]) -> Option<usize> {
    if conds.len() < params.len() || params.is_empty() {
        return None;
    }
    let dom = domain_of(&conds[0])?;
    for (p, c) in params.iter().zip(conds) {
        if domain_of(c)?.id() != dom.id() {
            return None;
        }
        let expected = match (p.kind(), c.as_range()) {
            (Kind::Range { .. }, Some((_, _, _, _))) => {
                let (k, body, s, e) = p.as_range()?;
                let m = pvk_expr::vocab::dsl::in_(body.clone(), dom.clone());
                Expr::range_over(k, m, s.clone(), e.clone())
            }
            (Kind::Range { .. }, None) => return None,
            _ => pvk_expr::vocab::dsl::in_(p.clone(), dom.clone()),
        };
        if expected.id() != c.id() {
            return None;
        }
    }
    Some(params.len())
}

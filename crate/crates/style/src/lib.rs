//! Presentation-only styles and rendering.
//!
//! Styles live beside the expression in a [`StyleMap`] keyed by node path, so
//! no style choice can reach an expression's identity. A path is the list of
//! child positions from the root, in [`pvk_expr::Kind::children`] order.
//!
//! ```
//! use pvk_expr::vocab::dsl::*;
//! use pvk_style::{Styled, Target};
//!
//! let q = div(var("a"), var("b"));
//! let inline = Styled::new(q.clone()).with_style(&[], "division", "inline").unwrap();
//! assert_eq!(Styled::new(q.clone()).format(Target::Latex), r"\frac{a}{b}");
//! assert_eq!(inline.format(Target::Latex), "a / b");
//! assert_eq!(inline.expr().id(), q.id());
//! ```

mod notation;
mod render;

use std::collections::BTreeMap;

use pvk_expr::{Expr, Kind};
use thiserror::Error;

pub use render::format_with;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Text,
    Latex,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StyleError {
    #[error("unknown style option {option:?} for {class}")]
    UnknownStyleOption { option: String, class: String },
    #[error("style option {option:?} does not accept {value:?}; allowed: {allowed:?}")]
    BadStyleValue { option: String, value: String, allowed: Vec<String> },
    #[error("no node at path {0:?}")]
    BadPath(Vec<usize>),
    #[error("malformed style argument {0:?}")]
    BadArgument(String),
}

/// A registered option: its name, allowed values and default.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OptionSpec {
    pub name: &'static str,
    pub allowed: &'static [&'static str],
    pub default: &'static str,
}

const DIVISION: OptionSpec = OptionSpec { name: "division", allowed: &["inline", "fraction"], default: "fraction" };
const PARAMETERIZATION: OptionSpec =
    OptionSpec { name: "parameterization", allowed: &["implicit", "explicit"], default: "implicit" };
const SUBTRACTION: OptionSpec = OptionSpec { name: "subtraction", allowed: &["plus", "minus"], default: "plus" };
const CONDITIONS: OptionSpec =
    OptionSpec { name: "conditions", allowed: &["conjunction", "comma"], default: "conjunction" };
const DIRECTION: OptionSpec = OptionSpec { name: "direction", allowed: &["normal", "reversed"], default: "normal" };
const EMPTY_SET: OptionSpec = OptionSpec { name: "empty_set", allowed: &["braces", "symbol"], default: "braces" };
const WRAP: OptionSpec =
    OptionSpec { name: "wrap", allowed: &["none", "before_operator", "after_operator"], default: "none" };

/// Display name of a node's class: the operator literal's name for literal
/// operations, the kind name otherwise.
pub fn class_name(e: &Expr) -> String {
    match e.as_operation().and_then(|(op, _)| op.as_literal()) {
        Some((_, name)) => name.to_string(),
        None => e.tag().name().to_string(),
    }
}

/// Options registered for this node's class, in a stable order.
pub fn option_specs(e: &Expr) -> Vec<OptionSpec> {
    if let Kind::Range { .. } = e.kind() {
        return vec![PARAMETERIZATION];
    }
    let Some((package, name)) = e.as_operation().and_then(|(op, _)| op.as_literal()) else {
        return vec![];
    };
    let Some(sym) = notation::lookup(package, name) else { return vec![] };
    let mut out = Vec::new();
    match name {
        "Div" => out.push(DIVISION),
        "Add" => out.push(SUBTRACTION),
        "Set" => out.push(EMPTY_SET),
        _ => {}
    }
    if sym.fixity == notation::Fixity::Binder {
        out.push(CONDITIONS);
    }
    if notation::reversed(package, name).is_some() {
        out.push(DIRECTION);
    }
    if sym.fixity == notation::Fixity::Infix {
        out.push(WRAP);
    }
    out
}

/// `(name, allowed values, current value)` for each option of the root node.
pub fn style_options(e: &Expr) -> Vec<(String, Vec<String>, String)> {
    Styled::new(e.clone()).options_at(&[]).unwrap_or_default()
}

/// Per-node option table: path, then option name, then value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StyleMap(BTreeMap<Vec<usize>, BTreeMap<String, String>>);

impl StyleMap {
    pub fn get(&self, path: &[usize], option: &str) -> Option<&str> {
        self.0.get(path).and_then(|m| m.get(option)).map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &str, &str)> {
        self.0.iter().flat_map(|(p, m)| m.iter().map(move |(k, v)| (p.as_slice(), k.as_str(), v.as_str())))
    }
}

/// An expression together with its presentation choices.
#[derive(Clone, Debug)]
pub struct Styled {
    expr: Expr,
    styles: StyleMap,
}

/// Resolves a child path.
pub fn node_at(e: &Expr, path: &[usize]) -> Option<Expr> {
    let mut cur = e.clone();
    for &i in path {
        let next = cur.children().get(i).map(|c| (*c).clone())?;
        cur = next;
    }
    Some(cur)
}

/// Parses `1.0.2` (or the empty string for the root) into a path.
pub fn parse_path(s: &str) -> Result<Vec<usize>, StyleError> {
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split('.').map(|p| p.parse().map_err(|_| StyleError::BadArgument(s.to_string()))).collect()
}

impl Styled {
    pub fn new(expr: Expr) -> Self {
        Styled { expr, styles: StyleMap::default() }
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    pub fn styles(&self) -> &StyleMap {
        &self.styles
    }

    /// Sets one option on the node at `path`. Setting an option to its default
    /// removes the entry.
    pub fn with_style(&self, path: &[usize], option: &str, value: &str) -> Result<Styled, StyleError> {
        let node = node_at(&self.expr, path).ok_or_else(|| StyleError::BadPath(path.to_vec()))?;
        let spec = option_specs(&node)
            .into_iter()
            .find(|s| s.name == option)
            .ok_or_else(|| StyleError::UnknownStyleOption { option: option.to_string(), class: class_name(&node) })?;
        if !spec.allowed.contains(&value) {
            return Err(StyleError::BadStyleValue {
                option: option.to_string(),
                value: value.to_string(),
                allowed: spec.allowed.iter().map(|s| s.to_string()).collect(),
            });
        }
        let mut out = self.clone();
        let slot = out.styles.0.entry(path.to_vec()).or_default();
        if value == spec.default {
            slot.remove(option);
        } else {
            slot.insert(option.to_string(), value.to_string());
        }
        if slot.is_empty() {
            out.styles.0.remove(path);
        }
        Ok(out)
    }

    /// Sets `option` on every node whose class supports it.
    pub fn with_style_everywhere(&self, option: &str, value: &str) -> Result<Styled, StyleError> {
        let mut paths = Vec::new();
        collect_paths(&self.expr, &mut vec![], option, &mut paths);
        if paths.is_empty() {
            return Err(StyleError::UnknownStyleOption { option: option.to_string(), class: class_name(&self.expr) });
        }
        let mut out = self.clone();
        for p in paths {
            out = out.with_style(&p, option, value)?;
        }
        Ok(out)
    }

    /// Applies a command-line style argument: `key=value` or `path:key=value`.
    pub fn with_style_arg(&self, arg: &str) -> Result<Styled, StyleError> {
        let bad = || StyleError::BadArgument(arg.to_string());
        let (path, kv) = match arg.split_once(':') {
            Some((p, kv)) => (Some(parse_path(p)?), kv),
            None => (None, arg),
        };
        let (k, v) = kv.split_once('=').ok_or_else(bad)?;
        match path {
            Some(p) => self.with_style(&p, k.trim(), v.trim()),
            None => self.with_style_everywhere(k.trim(), v.trim()),
        }
    }

    pub fn options_at(&self, path: &[usize]) -> Result<Vec<(String, Vec<String>, String)>, StyleError> {
        let node = node_at(&self.expr, path).ok_or_else(|| StyleError::BadPath(path.to_vec()))?;
        Ok(option_specs(&node)
            .into_iter()
            .map(|s| {
                let current = self.styles.get(path, s.name).unwrap_or(s.default);
                (s.name.to_string(), s.allowed.iter().map(|a| a.to_string()).collect(), current.to_string())
            })
            .collect())
    }

    pub fn format(&self, target: Target) -> String {
        format_with(&self.expr, &self.styles, target)
    }
}

fn collect_paths(e: &Expr, path: &mut Vec<usize>, option: &str, out: &mut Vec<Vec<usize>>) {
    if option_specs(e).iter().any(|s| s.name == option) {
        out.push(path.clone());
    }
    for (i, c) in e.children().into_iter().enumerate() {
        path.push(i);
        collect_paths(c, path, option, out);
        path.pop();
    }
}

/// Renders with default styles.
pub fn format(e: &Expr, target: Target) -> String {
    format_with(e, &StyleMap::default(), target)
}

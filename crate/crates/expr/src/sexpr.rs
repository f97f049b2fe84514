//! S-expression text form, one parenthesized form per node kind:
//!
//! ```text
//! (Variable "x")
//! (Literal "logic.booleans.disjunction" "Or")
//! (ExprTuple e ...)
//! (Operation operator operands)
//! (Conditional value condition)
//! (Lambda (ExprTuple param ...) body)
//! (NamedExprs ("key" e) ...)
//! (ExprRange lambda_map start end)
//! (IndexedVar (Variable "x") index ...)
//! ```
//!
//! Whitespace only separates tokens and `;` starts a line comment. Printing
//! keeps parameter labels exactly as built.

use std::fmt::Write as _;

use crate::error::{ExprError, Result};
use crate::node::{build, Expr, ExprKind, Kind, Part};

/// Compact single-line text.
pub fn to_sexpr(e: &Expr) -> String {
    let mut out = String::new();
    write_compact(e, &mut out);
    out
}

/// Multi-line text; forms longer than `width` are broken one child per line.
pub fn to_sexpr_pretty(e: &Expr, width: usize) -> String {
    let mut out = String::new();
    write_pretty(e, 0, width, &mut out);
    out.push('\n');
    out
}

fn quote(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if c.is_control() => {
                let _ = write!(out, "\\u{{{:x}}}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

fn head(e: &Expr) -> &'static str {
    e.tag().name()
}

fn write_compact(e: &Expr, out: &mut String) {
    stacker::maybe_grow(64 * 1024, 1024 * 1024, || {
        out.push('(');
        out.push_str(head(e));
        match e.kind() {
            Kind::Variable(n) => {
                out.push(' ');
                quote(n, out);
            }
            Kind::Literal { package, name } => {
                out.push(' ');
                quote(package, out);
                out.push(' ');
                quote(name, out);
            }
            Kind::Named(items) => {
                for (k, v) in items {
                    out.push_str(" (");
                    quote(k, out);
                    out.push(' ');
                    write_compact(v, out);
                    out.push(')');
                }
            }
            _ => {
                for c in e.children() {
                    out.push(' ');
                    write_compact(c, out);
                }
            }
        }
        out.push(')');
    })
}

fn write_pretty(e: &Expr, indent: usize, width: usize, out: &mut String) {
    let flat = to_sexpr(e);
    if indent + flat.len() <= width || matches!(e.kind(), Kind::Variable(_) | Kind::Literal { .. }) {
        out.push_str(&flat);
        return;
    }
    stacker::maybe_grow(64 * 1024, 1024 * 1024, || {
        out.push('(');
        out.push_str(head(e));
        let pad = " ".repeat(indent + 2);
        match e.kind() {
            Kind::Named(items) => {
                for (k, v) in items {
                    out.push('\n');
                    out.push_str(&pad);
                    out.push('(');
                    quote(k, out);
                    out.push(' ');
                    write_pretty(v, indent + 3 + k.len() + 2, width, out);
                    out.push(')');
                }
            }
            _ => {
                for c in e.children() {
                    out.push('\n');
                    out.push_str(&pad);
                    write_pretty(c, indent + 2, width, out);
                }
            }
        }
        out.push(')');
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Atom(String),
    Str(String),
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { chars: src.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err<T>(&self, line: usize, col: usize, message: impl Into<String>) -> Result<T> {
        Err(ExprError::Syntax { line, col, message: message.into() })
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>> {
        let mut out = Vec::new();
        while let Some(&c) = self.chars.peek() {
            let (line, col) = (self.line, self.col);
            match c {
                c if c.is_whitespace() => {
                    self.bump();
                }
                ';' => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                '(' => {
                    self.bump();
                    out.push((Tok::Open, line, col));
                }
                ')' => {
                    self.bump();
                    out.push((Tok::Close, line, col));
                }
                '"' => {
                    self.bump();
                    let s = self.string(line, col)?;
                    out.push((Tok::Str(s), line, col));
                }
                _ => {
                    let mut s = String::new();
                    while let Some(&c) = self.chars.peek() {
                        if c.is_whitespace() || matches!(c, '(' | ')' | '"' | ';') {
                            break;
                        }
                        s.push(c);
                        self.bump();
                    }
                    out.push((Tok::Atom(s), line, col));
                }
            }
        }
        Ok(out)
    }

    fn string(&mut self, line: usize, col: usize) -> Result<String> {
        let mut s = String::new();
        loop {
            let (l, c) = (self.line, self.col);
            match self.bump() {
                None => return self.err(line, col, "unterminated string"),
                Some('"') => return Ok(s),
                Some('\\') => match self.bump() {
                    Some('"') => s.push('"'),
                    Some('\\') => s.push('\\'),
                    Some('n') => s.push('\n'),
                    Some('t') => s.push('\t'),
                    Some('u') => {
                        if self.bump() != Some('{') {
                            return self.err(l, c, "expected '{' after \\u");
                        }
                        let mut hex = String::new();
                        loop {
                            match self.bump() {
                                Some('}') => break,
                                Some(h) if h.is_ascii_hexdigit() => hex.push(h),
                                _ => return self.err(l, c, "bad \\u{...} escape"),
                            }
                        }
                        match u32::from_str_radix(&hex, 16).ok().and_then(char::from_u32) {
                            Some(ch) => s.push(ch),
                            None => return self.err(l, c, "bad \\u{...} escape"),
                        }
                    }
                    _ => return self.err(l, c, "unknown escape"),
                },
                Some(ch) => s.push(ch),
            }
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |t| (t.1, t.2))
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(ExprError::Syntax { line, col, message: message.into() })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn expect_close(&mut self) -> Result<()> {
        match self.peek() {
            Some(Tok::Close) => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => self.err("expected ')'"),
            None => self.err("unexpected end of input, expected ')'"),
        }
    }

    fn string(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Str(_)) => match self.next() {
                Some(Tok::Str(s)) => Ok(s),
                _ => unreachable!(),
            },
            Some(_) => self.err("expected a string"),
            None => self.err("unexpected end of input, expected a string"),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        stacker::maybe_grow(64 * 1024, 1024 * 1024, || self.expr_inner())
    }

    fn expr_inner(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Open) => self.pos += 1,
            Some(_) => return self.err("expected '('"),
            None => return self.err("unexpected end of input"),
        }
        let (hl, hc) = self.here();
        let kind = match self.next() {
            Some(Tok::Atom(a)) => match ExprKind::from_name(&a) {
                Some(k) => k,
                None => return Err(ExprError::Syntax { line: hl, col: hc, message: format!("unknown form {a:?}") }),
            },
            _ => return Err(ExprError::Syntax { line: hl, col: hc, message: "expected a form name".into() }),
        };
        let mut parts = Vec::new();
        match kind {
            ExprKind::Variable => parts.push(Part::Str(self.string()?)),
            ExprKind::Literal => {
                parts.push(Part::Str(self.string()?));
                parts.push(Part::Str(self.string()?));
            }
            ExprKind::NamedExprs => {
                while let Some(Tok::Open) = self.peek() {
                    self.pos += 1;
                    let k = self.string()?;
                    let v = self.expr()?;
                    self.expect_close()?;
                    parts.push(Part::Named(k, v));
                }
            }
            _ => {
                while let Some(Tok::Open) = self.peek() {
                    parts.push(Part::Expr(self.expr()?));
                }
            }
        }
        self.expect_close()?;
        build(kind, parts)
    }
}

/// Parses exactly one expression.
pub fn parse(src: &str) -> Result<Expr> {
    let mut all = parse_all(src)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(ExprError::Syntax { line: 1, col: 1, message: "empty input".into() }),
        _ => {
            let mut p = parser(src)?;
            p.expr()?;
            p.err("trailing input after expression")
        }
    }
}

/// Parses a whitespace-separated sequence of expressions.
pub fn parse_all(src: &str) -> Result<Vec<Expr>> {
    let mut p = parser(src)?;
    let mut out = Vec::new();
    while p.peek().is_some() {
        out.push(p.expr()?);
    }
    Ok(out)
}

fn parser(src: &str) -> Result<Parser> {
    let lx = Lexer::new(src);
    let toks = lx.tokens()?;
    let end = src.lines().enumerate().last().map_or((1, 1), |(i, l)| {
        if src.ends_with('\n') {
            (i + 2, 1)
        } else {
            (i + 1, l.chars().count() + 1)
        }
    });
    Ok(Parser { toks, pos: 0, end })
}

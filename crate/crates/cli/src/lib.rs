//! The `pvk` command line: checks proof certificates and theory
//! directories, reports dependency leaves, and formats or hashes expression
//! files. [`run_args`] is the whole program; the binary only prints what it
//! returns.
//!
//! Exit codes: 0 on success, 1 when verification fails, 2 when the input
//! could not be read or parsed.
//!
//! ```
//! let o = pvk_cli::run_args(["pvk", "deps", "logic.booleans.excluded_middle"]);
//! assert_eq!(o.code, 0);
//! assert!(o.stdout.contains("axioms (13):"));
//! ```

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use pvk_cert::layout::TheoryDir;
use pvk_cert::TheoryLookup;
use pvk_checker::theory::verify_theory_dir;
use pvk_checker::{verify_certificate, Outcome, Verdict};
use pvk_expr::Expr;
use pvk_style::{Styled, Target};
use pvk_theory::{load_stdlib, Registry};
use serde_json::json;

#[derive(Parser)]
#[command(name = "pvk", version, about = "Proof certificate checker")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a proof certificate (.pvp).
    Check {
        cert: PathBuf,
        /// Theory directory to resolve invocations against; the bundled
        /// standard library when omitted.
        #[arg(long)]
        theory: Option<PathBuf>,
    },
    /// Verify every stored proof of a theory directory and its recorded statuses.
    VerifyTheory { dir: PathBuf },
    /// List the axioms and unproven conjectures a theorem rests on.
    Deps {
        item: String,
        #[arg(long)]
        theory: Option<PathBuf>,
    },
    /// Render an expression file (.pvx).
    Fmt {
        file: PathBuf,
        #[arg(long)]
        latex: bool,
        /// `option=value` for every node that has it, or `path:option=value`
        /// with a dotted child path such as `0.1`.
        #[arg(long = "style", value_name = "K=V")]
        styles: Vec<String>,
    },
    /// Print the identity digest of an expression file.
    Hash { file: PathBuf },
}

/// Failure before any verdict: bad input, unreadable files.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// What one invocation printed, and its exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).expect("writing to a String")
    };
}

/// Runs `pvk` with `args` (program name first) and collects its output.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut o = Output::default();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            o.code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                o.stderr = text;
            } else {
                o.stdout = text;
            }
            return o;
        }
    };
    match run(&cli, &mut o.stdout) {
        Ok(code) => o.code = code,
        Err(InputError(message)) => {
            if cli.json {
                say!(o.stdout, "{}", json!({ "error": message }));
            } else {
                say!(o.stderr, "pvk: {message}");
            }
            o.code = 2;
        }
    }
    o
}

fn run(cli: &Cli, out: &mut String) -> Result<u8, InputError> {
    match &cli.command {
        Command::Check { cert, theory } => {
            let lookup = lookup(theory.as_deref())?;
            Ok(check(cert, lookup.as_ref(), cli.json, out))
        }
        Command::VerifyTheory { dir } => {
            let loaded = TheoryDir::load(dir)?;
            let report = verify_theory_dir(&loaded);
            if cli.json {
                say!(out, "{}", serde_json::to_string_pretty(&report)?);
            } else {
                for t in &report.theorems {
                    let mark = if t.errors.is_empty() { "ok" } else { "FAIL" };
                    say!(out, "{mark:4} {} [{}]", t.name, t.computed);
                    print_errors(out, &t.errors);
                }
                say!(out, "{}", if report.pass { "PASS" } else { "FAIL" });
            }
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Deps { item, theory } => {
            let registry = match theory {
                Some(dir) => Registry::from_dir(&TheoryDir::load(dir)?)?,
                None => load_stdlib()?,
            };
            let report = registry.dependency_report(item)?;
            let status = registry.get(item).map(|i| i.status.to_string()).unwrap_or_default();
            if cli.json {
                let value = json!({
                    "item": item,
                    "status": status,
                    "axioms": report.axioms,
                    "unproven_conjectures": report.unproven_conjectures,
                    "dependents": report.dependents,
                });
                say!(out, "{}", serde_json::to_string_pretty(&value)?);
            } else {
                say!(out, "{item} [{status}]");
                print_list(out, "axioms", &report.axioms);
                print_list(out, "unproven conjectures", &report.unproven_conjectures);
            }
            Ok(0)
        }
        Command::Fmt { file, latex, styles } => {
            let mut styled = Styled::new(read_expr(file)?);
            for s in styles {
                styled = styled.with_style_arg(s)?;
            }
            let target = if *latex { Target::Latex } else { Target::Text };
            let text = styled.format(target);
            if cli.json {
                say!(out, "{}", json!({ "target": if *latex { "latex" } else { "text" }, "output": text }));
            } else {
                say!(out, "{text}");
            }
            Ok(0)
        }
        Command::Hash { file } => {
            let id = read_expr(file)?.id().to_hex();
            if cli.json {
                say!(out, "{}", json!({ "id": id }));
            } else {
                say!(out, "{id}");
            }
            Ok(0)
        }
    }
}

fn lookup(theory: Option<&Path>) -> Result<Box<dyn TheoryLookup>, InputError> {
    Ok(match theory {
        Some(dir) => Box::new(TheoryDir::load(dir)?),
        None => Box::new(load_stdlib()?),
    })
}

fn read_expr(path: &Path) -> Result<Expr, InputError> {
    let src = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(pvk_expr::parse(&src)?)
}

fn check(path: &Path, theory: &dyn TheoryLookup, as_json: bool, out: &mut String) -> u8 {
    let outcome = verify_certificate(path, theory);
    let code = outcome.exit_code() as u8;
    match (&outcome, as_json) {
        (Outcome::Verified(report), true) => {
            say!(out, "{}", serde_json::to_string_pretty(report).expect("report serializes"));
        }
        (Outcome::ParseError(e), true) => {
            say!(out, "{}", json!({ "pass": false, "error": { "kind": e.code(), "message": e.to_string() } }));
        }
        (Outcome::Verified(report), false) => {
            for s in &report.steps {
                if let Verdict::Error { kind, message, .. } = &s.verdict {
                    say!(out, "step {} ({}): {kind}: {message}", s.index, s.rule);
                }
            }
            print_errors(out, &report.errors);
            let verdict = if report.pass { "PASS" } else { "FAIL" };
            say!(out, "{verdict} {} ({} steps)", path.display(), report.steps.len());
            print_list(out, "axioms", &report.axioms);
            print_list(out, "theorems", &report.theorems);
            print_list(out, "conjectures", &report.conjectures);
        }
        (Outcome::ParseError(e), false) => {
            say!(out, "FAIL {}: {}: {e}", path.display(), e.code());
        }
    }
    code
}

fn print_errors(out: &mut String, errors: &[Verdict]) {
    for v in errors {
        if let Verdict::Error { kind, message, .. } = v {
            say!(out, "  {kind}: {message}");
        }
    }
}

fn print_list(out: &mut String, title: &str, items: &[String]) {
    say!(out, "{title} ({}):", items.len());
    for i in items {
        say!(out, "  {i}");
    }
}

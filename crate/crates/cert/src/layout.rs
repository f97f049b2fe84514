//! Theory directory layout.
//!
//! ```text
//! <root>/index.json
//! <root>/<dotted.package>/common/<name>.pvx
//! <root>/<dotted.package>/axioms/<name>.pvx
//! <root>/<dotted.package>/theorems/<name>.pvx
//! <root>/<dotted.package>/theorems/<name>.pvp     proof certificate, if any
//! ```
//!
//! `index.json` pins the SHA-256 of every file together with the identity of
//! the expression it holds, and records theorem statuses and direct
//! dependencies.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use pvk_expr::{parse, to_sexpr_pretty, Expr};
use serde::{Deserialize, Serialize};
use sha2::{Digest as _, Sha256};
use thiserror::Error;

use crate::lookup::{ItemKind, ItemRef, Status, TheoryLookup};
use crate::Certificate;

pub const INDEX_FILE: &str = "index.json";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("fixture {path} is corrupt: expected {expected}, found {actual}")]
    FixtureCorrupt { path: String, expected: String, actual: String },
    #[error("missing file {0}")]
    Missing(String),
    #[error("{path}: {message}")]
    Syntax { path: String, message: String },
    #[error("{0}")]
    Io(String),
}

impl LayoutError {
    pub fn code(&self) -> &'static str {
        match self {
            LayoutError::FixtureCorrupt { .. } => "FixtureCorrupt",
            LayoutError::Missing(_) => "FixtureCorrupt",
            LayoutError::Syntax { .. } => "SyntaxError",
            LayoutError::Io(_) => "IoError",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileEntry {
    /// SHA-256 of the file bytes.
    pub file_digest: String,
    /// Identity of the expression in the file.
    pub expr_id: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremEntry {
    pub file_digest: String,
    pub expr_id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub proof_digest: Option<String>,
    /// Items invoked directly by the proof.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dependencies: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackageIndex {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub common: BTreeMap<String, FileEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub axioms: BTreeMap<String, FileEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub theorems: BTreeMap<String, TheoremEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoryIndex {
    pub version: u32,
    pub packages: BTreeMap<String, PackageIndex>,
}

impl TheoryIndex {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("index serializes");
        s.push('\n');
        s
    }
}

pub fn file_digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// File text for an expression: pretty s-expression, newline terminated.
pub fn expr_file(e: &Expr) -> String {
    to_sexpr_pretty(e, 96)
}

/// Where theory files come from.
pub trait FileSource {
    fn read(&self, rel: &str) -> Result<Vec<u8>, LayoutError>;
}

impl FileSource for Path {
    fn read(&self, rel: &str) -> Result<Vec<u8>, LayoutError> {
        let p = self.join(rel);
        std::fs::read(&p).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => LayoutError::Missing(rel.to_string()),
            _ => LayoutError::Io(format!("{}: {e}", p.display())),
        })
    }
}

impl FileSource for PathBuf {
    fn read(&self, rel: &str) -> Result<Vec<u8>, LayoutError> {
        self.as_path().read(rel)
    }
}

impl FileSource for BTreeMap<&str, &str> {
    fn read(&self, rel: &str) -> Result<Vec<u8>, LayoutError> {
        self.get(rel).map(|s| s.as_bytes().to_vec()).ok_or_else(|| LayoutError::Missing(rel.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Section {
    Common,
    Axioms,
    Theorems,
}

impl Section {
    pub fn dir(self) -> &'static str {
        match self {
            Section::Common => "common",
            Section::Axioms => "axioms",
            Section::Theorems => "theorems",
        }
    }
}

pub fn item_path(package: &str, section: Section, name: &str) -> String {
    format!("{package}/{}/{name}.pvx", section.dir())
}

pub fn proof_path(package: &str, name: &str) -> String {
    format!("{package}/theorems/{name}.pvp")
}

#[derive(Clone, Debug)]
pub struct LoadedItem {
    pub package: String,
    pub name: String,
    pub section: Section,
    pub statement: Expr,
    pub status: Status,
    pub proof: Option<Certificate>,
    pub dependencies: Vec<String>,
}

impl LoadedItem {
    pub fn full_name(&self) -> String {
        format!("{}.{}", self.package, self.name)
    }
}

/// A theory directory with every file checked against the index.
#[derive(Clone, Debug, Default)]
pub struct TheoryDir {
    pub index: TheoryIndex,
    /// Keyed by full dotted name.
    pub items: BTreeMap<String, LoadedItem>,
}

fn load_expr<S: FileSource + ?Sized>(
    src: &S,
    rel: &str,
    entry_digest: &str,
    entry_id: &str,
) -> Result<Expr, LayoutError> {
    let bytes = src.read(rel)?;
    let actual = file_digest(&bytes);
    if actual != entry_digest {
        return Err(LayoutError::FixtureCorrupt { path: rel.to_string(), expected: entry_digest.to_string(), actual });
    }
    let text =
        String::from_utf8(bytes).map_err(|e| LayoutError::Syntax { path: rel.to_string(), message: e.to_string() })?;
    let e = parse(&text).map_err(|e| LayoutError::Syntax { path: rel.to_string(), message: e.to_string() })?;
    let id = e.id().to_hex();
    if id != entry_id {
        return Err(LayoutError::FixtureCorrupt { path: rel.to_string(), expected: entry_id.to_string(), actual: id });
    }
    Ok(e)
}

impl TheoryDir {
    pub fn load(root: &Path) -> Result<TheoryDir, LayoutError> {
        TheoryDir::load_from(root)
    }

    pub fn load_from<S: FileSource + ?Sized>(src: &S) -> Result<TheoryDir, LayoutError> {
        let raw = src.read(INDEX_FILE)?;
        let index: TheoryIndex = serde_json::from_slice(&raw)
            .map_err(|e| LayoutError::Syntax { path: INDEX_FILE.to_string(), message: e.to_string() })?;
        let mut items = BTreeMap::new();
        for (pkg, p) in &index.packages {
            let mut add = |name: &str, item: LoadedItem| {
                items.insert(format!("{pkg}.{name}"), item);
            };
            for (name, f) in &p.common {
                let e = load_expr(src, &item_path(pkg, Section::Common, name), &f.file_digest, &f.expr_id)?;
                add(
                    name,
                    LoadedItem {
                        package: pkg.clone(),
                        name: name.clone(),
                        section: Section::Common,
                        statement: e,
                        status: Status::FullyProven,
                        proof: None,
                        dependencies: vec![],
                    },
                );
            }
            for (name, f) in &p.axioms {
                let e = load_expr(src, &item_path(pkg, Section::Axioms, name), &f.file_digest, &f.expr_id)?;
                add(
                    name,
                    LoadedItem {
                        package: pkg.clone(),
                        name: name.clone(),
                        section: Section::Axioms,
                        statement: e,
                        status: Status::FullyProven,
                        proof: None,
                        dependencies: vec![],
                    },
                );
            }
            for (name, t) in &p.theorems {
                let e = load_expr(src, &item_path(pkg, Section::Theorems, name), &t.file_digest, &t.expr_id)?;
                let proof = match &t.proof_digest {
                    None => None,
                    Some(d) => {
                        let rel = proof_path(pkg, name);
                        let bytes = src.read(&rel)?;
                        let actual = file_digest(&bytes);
                        if &actual != d {
                            return Err(LayoutError::FixtureCorrupt { path: rel, expected: d.clone(), actual });
                        }
                        Some(
                            Certificate::from_bytes(&bytes)
                                .map_err(|e| LayoutError::Syntax { path: rel, message: e.to_string() })?,
                        )
                    }
                };
                add(
                    name,
                    LoadedItem {
                        package: pkg.clone(),
                        name: name.clone(),
                        section: Section::Theorems,
                        statement: e,
                        status: t.status,
                        proof,
                        dependencies: t.dependencies.clone(),
                    },
                );
            }
        }
        Ok(TheoryDir { index, items })
    }

    /// Items of one section, in name order.
    pub fn section<'a>(&'a self, section: Section) -> impl Iterator<Item = &'a LoadedItem> + 'a {
        self.items.values().filter(move |i| i.section == section)
    }
}

impl TheoryLookup for TheoryDir {
    fn item(&self, name: &str) -> Option<ItemRef> {
        let i = self.items.get(name)?;
        let kind = match i.section {
            Section::Common => return None,
            Section::Axioms => ItemKind::Axiom,
            Section::Theorems => ItemKind::Theorem,
        };
        Some(ItemRef { name: name.to_string(), kind, statement: i.statement.clone(), status: i.status })
    }

    fn axioms_required(&self, name: &str) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = BTreeSet::new();
        let mut stack = vec![name.to_string()];
        while let Some(n) = stack.pop() {
            if !seen.insert(n.clone()) {
                continue;
            }
            match self.items.get(&n) {
                Some(i) if i.section == Section::Axioms => {
                    out.insert(n);
                }
                Some(i) => stack.extend(i.dependencies.iter().cloned()),
                None => {}
            }
        }
        out.into_iter().collect()
    }
}

/// One theorem to be written out.
#[derive(Clone, Debug)]
pub struct TheoremData {
    pub name: String,
    pub statement: Expr,
    pub status: Status,
    pub proof: Option<Certificate>,
    pub dependencies: Vec<String>,
}

/// One package to be written out.
#[derive(Clone, Debug, Default)]
pub struct PackageData {
    pub path: String,
    pub common: Vec<(String, Expr)>,
    pub axioms: Vec<(String, Expr)>,
    pub theorems: Vec<TheoremData>,
    pub notes: Vec<String>,
}

/// Renders packages to `(relative path, contents)` pairs, index last.
pub fn render_files(packages: &[PackageData]) -> Vec<(String, String)> {
    let mut files = Vec::new();
    let mut index = TheoryIndex { version: 1, packages: BTreeMap::new() };
    for p in packages {
        let mut pi = PackageIndex { notes: p.notes.clone(), ..PackageIndex::default() };
        let entry = |files: &mut Vec<(String, String)>, section: Section, name: &str, e: &Expr| {
            let text = expr_file(e);
            let f = FileEntry { file_digest: file_digest(text.as_bytes()), expr_id: e.id().to_hex() };
            files.push((item_path(&p.path, section, name), text));
            f
        };
        for (name, e) in &p.common {
            pi.common.insert(name.clone(), entry(&mut files, Section::Common, name, e));
        }
        for (name, e) in &p.axioms {
            pi.axioms.insert(name.clone(), entry(&mut files, Section::Axioms, name, e));
        }
        for t in &p.theorems {
            let f = entry(&mut files, Section::Theorems, &t.name, &t.statement);
            let proof_digest = t.proof.as_ref().map(|c| {
                let mut json = c.to_json();
                json.push('\n');
                let d = file_digest(json.as_bytes());
                files.push((proof_path(&p.path, &t.name), json));
                d
            });
            pi.theorems.insert(
                t.name.clone(),
                TheoremEntry {
                    file_digest: f.file_digest,
                    expr_id: f.expr_id,
                    status: t.status,
                    proof_digest,
                    dependencies: t.dependencies.clone(),
                },
            );
        }
        index.packages.insert(p.path.clone(), pi);
    }
    files.push((INDEX_FILE.to_string(), index.to_json()));
    files
}

/// Writes packages under `root`, creating directories as needed.
pub fn write_dir(root: &Path, packages: &[PackageData]) -> Result<(), LayoutError> {
    for (rel, text) in render_files(packages) {
        let p = root.join(&rel);
        if let Some(parent) = p.parent() {
            std::fs::create_dir_all(parent).map_err(|e| LayoutError::Io(format!("{}: {e}", parent.display())))?;
        }
        std::fs::write(&p, text).map_err(|e| LayoutError::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

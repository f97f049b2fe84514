use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use pvk_cert::layout::{PackageData, Section, TheoremData, TheoryDir};
use pvk_cert::{Certificate, ItemKind, ItemRef, Payload, Status, TheoryLookup};
use pvk_checker::{verify_proof, ParsedProof};
use pvk_expr::{free_vars, Expr};
use pvk_kernel::{Presumptions, Prover};

use crate::error::{Result, TheoryError};

/// One registered expression: a common expression, an axiom or a theorem.
#[derive(Clone, Debug)]
pub struct Item {
    pub package: String,
    pub name: String,
    pub section: Section,
    pub statement: Expr,
    pub proof: Option<Certificate>,
    /// Axioms and theorems the proof rests on directly.
    pub dependencies: Vec<String>,
    pub status: Status,
}

impl Item {
    pub fn full_name(&self) -> String {
        format!("{}.{}", self.package, self.name)
    }

    pub fn kind_name(&self) -> &'static str {
        match (self.section, self.status) {
            (Section::Common, _) => "common",
            (Section::Axioms, _) => "axiom",
            (Section::Theorems, Status::Conjecture) => "conjecture",
            (Section::Theorems, _) => "theorem",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DependencyReport {
    pub axioms: Vec<String>,
    pub unproven_conjectures: Vec<String>,
    /// Theorems whose proofs rely on this item, directly or indirectly.
    pub dependents: Vec<String>,
}

/// Packages of named expressions with their proofs and statuses.
///
/// Cloning is cheap enough for snapshotting; see [`crate::TheoryStore`].
#[derive(Clone, Debug, Default)]
pub struct Registry {
    items: BTreeMap<String, Item>,
    notes: BTreeMap<String, Vec<String>>,
}

fn valid_segment(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn valid_package(p: &str) -> bool {
    p.split('.').all(valid_segment)
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    fn register(&mut self, package: &str, name: &str, section: Section, statement: Expr) -> Result<String> {
        if !valid_package(package) || !valid_segment(name) {
            return Err(TheoryError::BadName(format!("{package}.{name}")));
        }
        let full = format!("{package}.{name}");
        if self.items.contains_key(&full) {
            return Err(TheoryError::DuplicateName(full));
        }
        if section != Section::Common {
            let free = free_vars(&statement);
            if !free.is_empty() {
                return Err(TheoryError::NotClosed { name: full, free: free.iter().map(|n| n.to_string()).collect() });
            }
        }
        let status = if section == Section::Theorems { Status::Conjecture } else { Status::FullyProven };
        self.notes.entry(package.to_string()).or_default();
        self.items.insert(
            full.clone(),
            Item {
                package: package.to_string(),
                name: name.to_string(),
                section,
                statement,
                proof: None,
                dependencies: vec![],
                status,
            },
        );
        Ok(full)
    }

    /// Registers a named expression for reuse; it need not be closed.
    pub fn register_common(&mut self, package: &str, name: &str, e: Expr) -> Result<String> {
        self.register(package, name, Section::Common, e)
    }

    pub fn register_axiom(&mut self, package: &str, name: &str, statement: Expr) -> Result<String> {
        self.register(package, name, Section::Axioms, statement)
    }

    /// Registers a theorem statement. Until a proof is attached it is a
    /// conjecture, usable by other proofs.
    pub fn register_theorem(&mut self, package: &str, name: &str, statement: Expr) -> Result<String> {
        self.register(package, name, Section::Theorems, statement)
    }

    pub fn add_note(&mut self, package: &str, note: &str) {
        self.notes.entry(package.to_string()).or_default().push(note.to_string());
    }

    pub fn get(&self, name: &str) -> Option<&Item> {
        self.items.get(name)
    }

    pub fn items(&self) -> impl Iterator<Item = &Item> {
        self.items.values()
    }

    pub fn packages(&self) -> impl Iterator<Item = &str> {
        self.notes.keys().map(String::as_str)
    }

    pub fn notes(&self, package: &str) -> &[String] {
        self.notes.get(package).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Items directly in `package`, plus the names of packages one level
    /// below it. An empty path lists the top level.
    pub fn list(&self, package: &str) -> Result<(Vec<&Item>, Vec<String>)> {
        let below = |p: &str| -> Option<String> {
            let rest = if package.is_empty() { Some(p) } else { p.strip_prefix(package)?.strip_prefix('.') }?;
            let head = rest.split('.').next()?;
            Some(if package.is_empty() { head.to_string() } else { format!("{package}.{head}") })
        };
        let subs: BTreeSet<String> = self.notes.keys().filter_map(|p| below(p)).collect();
        let items: Vec<&Item> = self.items.values().filter(|i| i.package == package).collect();
        if items.is_empty() && subs.is_empty() && !self.notes.contains_key(package) {
            return Err(TheoryError::UnknownPath(package.to_string()));
        }
        Ok((items, subs.into_iter().collect()))
    }

    fn theorem(&self, name: &str) -> Result<&Item> {
        match self.items.get(name) {
            Some(i) if i.section == Section::Theorems => Ok(i),
            _ => Err(TheoryError::UnknownTheoryItem(name.to_string())),
        }
    }

    /// Theorems whose proofs reach `name`, in name order.
    pub fn dependents(&self, name: &str) -> BTreeSet<String> {
        let mut users: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for i in self.items.values() {
            for d in &i.dependencies {
                users.entry(d.as_str()).or_default().push(self.key_of(i));
            }
        }
        let mut out = BTreeSet::new();
        let mut stack = vec![name];
        while let Some(n) = stack.pop() {
            for &u in users.get(n).map(Vec::as_slice).unwrap_or(&[]) {
                if out.insert(u.to_string()) {
                    stack.push(u);
                }
            }
        }
        out
    }

    fn key_of<'a>(&'a self, i: &Item) -> &'a str {
        self.items.get_key_value(&i.full_name()).expect("registered item").0
    }

    /// Everything registered, minus the theorem and whatever depends on it.
    pub fn default_presumptions(&self, theorem: &str) -> Presumptions {
        let mut out: Vec<String> = self.dependents(theorem).into_iter().collect();
        out.push(theorem.to_string());
        Presumptions::all().excluding(out)
    }

    /// A prover over a snapshot of this registry.
    pub fn prover(&self) -> Prover {
        Prover::new(Arc::new(self.clone()))
    }

    /// A prover for `theorem` under its default presumptions.
    pub fn prover_for(&self, theorem: &str) -> Result<Prover> {
        self.theorem(theorem)?;
        Ok(self.prover().with_presumptions(self.default_presumptions(theorem)))
    }

    /// Verifies `proof` as a proof of `theorem` and records it, updating
    /// the status of the theorem and everything depending on it.
    pub fn attach_proof(
        &mut self,
        theorem: &str,
        proof: &Certificate,
        presumptions: Option<&Presumptions>,
    ) -> Result<Status> {
        let statement = self.theorem(theorem)?.statement.clone();
        let failed = |message: String| TheoryError::VerificationFailed { theorem: theorem.to_string(), message };
        let steps = proof.decode().map_err(|e| failed(e.to_string()))?;
        if steps.is_empty() {
            return Err(failed("empty proof".into()));
        }
        let invoked: BTreeSet<&str> = steps
            .iter()
            .filter_map(|s| match &s.payload {
                Payload::Invocation { name } => Some(name.as_str()),
                _ => None,
            })
            .collect();
        let dependents = self.dependents(theorem);
        for &n in &invoked {
            if n == theorem || dependents.contains(n) {
                return Err(TheoryError::CircularDependency { theorem: theorem.to_string(), via: n.to_string() });
            }
        }
        let default = self.default_presumptions(theorem);
        let presumptions = presumptions.unwrap_or(&default);
        if let Some(n) = invoked.iter().find(|n| !presumptions.allows(n)) {
            return Err(TheoryError::PresumptionViolation { theorem: theorem.to_string(), item: n.to_string() });
        }
        let parsed = ParsedProof { certificate: proof.clone(), steps };
        let report = verify_proof(&parsed, &*self);
        if let Some(e) = report.first_error() {
            return Err(failed(format!("{e:?}")));
        }
        let root = &parsed.steps[0];
        if !root.assumptions.is_empty() || root.consequent != statement {
            return Err(failed(format!("the proof concludes {}", root.consequent)));
        }
        let mut deps: Vec<String> = report.axioms.iter().chain(&report.theorems).cloned().collect();
        deps.sort();
        let item = self.items.get_mut(theorem).expect("checked above");
        item.proof = Some(proof.clone());
        item.dependencies = deps;
        self.refresh(theorem);
        Ok(self.items[theorem].status)
    }

    fn status_from(&self, i: &Item, statuses: &BTreeMap<String, Status>) -> Status {
        if i.section != Section::Theorems {
            return Status::FullyProven;
        }
        if i.proof.is_none() {
            return Status::Conjecture;
        }
        let all_full = i.dependencies.iter().all(|d| match self.items.get(d) {
            Some(x) if x.section == Section::Theorems => {
                statuses.get(d).copied().unwrap_or(x.status) == Status::FullyProven
            }
            _ => true,
        });
        if all_full {
            Status::FullyProven
        } else {
            Status::ProvenWithConjectures
        }
    }

    /// Recomputes `theorem` and its dependents, dependencies first.
    fn refresh(&mut self, theorem: &str) {
        let mut affected: BTreeSet<String> = self.dependents(theorem);
        affected.insert(theorem.to_string());
        let mut done: BTreeMap<String, Status> = BTreeMap::new();
        for n in &affected {
            self.visit(n, &affected, &mut done);
        }
        for (n, s) in done {
            self.items.get_mut(&n).expect("affected item").status = s;
        }
    }

    fn visit(&self, n: &str, affected: &BTreeSet<String>, done: &mut BTreeMap<String, Status>) {
        if done.contains_key(n) {
            return;
        }
        let item = &self.items[n];
        for d in &item.dependencies {
            if affected.contains(d) {
                self.visit(d, affected, done);
            }
        }
        let s = self.status_from(item, done);
        done.insert(n.to_string(), s);
    }

    /// Every status recomputed from nothing but the proofs present.
    pub fn statuses_from_scratch(&self) -> BTreeMap<String, Status> {
        let all: BTreeSet<String> = self.items.keys().cloned().collect();
        let mut done = BTreeMap::new();
        for n in &all {
            self.visit_scratch(n, &mut done);
        }
        done
    }

    fn visit_scratch(&self, n: &str, done: &mut BTreeMap<String, Status>) {
        if done.contains_key(n) {
            return;
        }
        let item = &self.items[n];
        for d in &item.dependencies {
            if self.items.contains_key(d) {
                self.visit_scratch(d, done);
            }
        }
        let s = self.status_from(item, done);
        done.insert(n.to_string(), s);
    }

    pub fn statuses(&self) -> BTreeMap<String, Status> {
        self.items.iter().map(|(n, i)| (n.clone(), i.status)).collect()
    }

    /// Leaves of the dependency graph below `name`: axioms, and theorems
    /// that have no proof yet.
    pub fn dependency_report(&self, name: &str) -> Result<DependencyReport> {
        let root = self.items.get(name).ok_or_else(|| TheoryError::UnknownTheoryItem(name.to_string()))?;
        if root.section == Section::Common {
            return Err(TheoryError::UnknownTheoryItem(name.to_string()));
        }
        let mut axioms = BTreeSet::new();
        let mut conjectures = BTreeSet::new();
        let mut seen = BTreeSet::new();
        let mut stack = vec![name.to_string()];
        while let Some(n) = stack.pop() {
            if !seen.insert(n.clone()) {
                continue;
            }
            let Some(i) = self.items.get(&n) else { continue };
            match i.section {
                Section::Axioms => {
                    axioms.insert(n);
                }
                Section::Theorems if i.proof.is_none() => {
                    conjectures.insert(n);
                }
                Section::Theorems => stack.extend(i.dependencies.iter().cloned()),
                Section::Common => {}
            }
        }
        Ok(DependencyReport {
            axioms: axioms.into_iter().collect(),
            unproven_conjectures: conjectures.into_iter().collect(),
            dependents: self.dependents(name).into_iter().collect(),
        })
    }

    /// Packages ready to be written with [`pvk_cert::layout::write_dir`].
    pub fn to_packages(&self) -> Vec<PackageData> {
        let mut out: BTreeMap<&str, PackageData> = BTreeMap::new();
        for (p, notes) in &self.notes {
            out.insert(p, PackageData { path: p.clone(), notes: notes.clone(), ..PackageData::default() });
        }
        for i in self.items.values() {
            let p = out.get_mut(i.package.as_str()).expect("package of a registered item");
            match i.section {
                Section::Common => p.common.push((i.name.clone(), i.statement.clone())),
                Section::Axioms => p.axioms.push((i.name.clone(), i.statement.clone())),
                Section::Theorems => p.theorems.push(TheoremData {
                    name: i.name.clone(),
                    statement: i.statement.clone(),
                    status: i.status,
                    proof: i.proof.clone(),
                    dependencies: i.dependencies.clone(),
                }),
            }
        }
        out.into_values().collect()
    }

    /// Rebuilds a registry from a loaded directory. Statuses are recomputed
    /// and must agree with the index.
    pub fn from_dir(dir: &TheoryDir) -> Result<Registry> {
        let mut r = Registry::new();
        for (p, pi) in &dir.index.packages {
            r.notes.insert(p.clone(), pi.notes.clone());
        }
        for (full, i) in &dir.items {
            r.items.insert(
                full.clone(),
                Item {
                    package: i.package.clone(),
                    name: i.name.clone(),
                    section: i.section,
                    statement: i.statement.clone(),
                    proof: i.proof.clone(),
                    dependencies: i.dependencies.clone(),
                    status: i.status,
                },
            );
        }
        for (n, s) in r.statuses_from_scratch() {
            if r.items[&n].status != s {
                return Err(TheoryError::FixtureCorrupt(format!(
                    "{n} is recorded as {} but its proofs make it {s}",
                    r.items[&n].status
                )));
            }
        }
        Ok(r)
    }
}

impl TheoryLookup for Registry {
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
        self.dependency_report(name).map(|r| r.axioms).unwrap_or_default()
    }
}

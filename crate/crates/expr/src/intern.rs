//! Global hash-consing table.
//!
//! Nodes are keyed by their exact-structure digest and held weakly, so an
//! expression lives exactly as long as something outside the table refers to
//! it. Dead entries are swept when the table has doubled since the last sweep.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, Weak};

use parking_lot::Mutex;

use crate::canon;
use crate::digest::{node_key, ExprId};
use crate::node::{Expr, Kind, Node};

struct Table {
    map: HashMap<[u8; 32], Weak<Node>>,
    sweep_at: usize,
}

fn table() -> &'static Mutex<Table> {
    static TABLE: OnceLock<Mutex<Table>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(Table { map: HashMap::new(), sweep_at: 1024 }))
}

fn lookup(key: &[u8; 32]) -> Option<Expr> {
    table().lock().map.get(key).and_then(Weak::upgrade).map(Expr)
}

fn insert(node: Node) -> Expr {
    let mut t = table().lock();
    if let Some(existing) = t.map.get(&node.key).and_then(Weak::upgrade) {
        return Expr(existing);
    }
    if t.map.len() >= t.sweep_at {
        t.map.retain(|_, w| w.strong_count() > 0);
        t.sweep_at = (t.map.len() * 2).max(1024);
    }
    let arc = Arc::new(node);
    t.map.insert(arc.key, Arc::downgrade(&arc));
    Expr(arc)
}

fn depth_of(kind: &Kind) -> u32 {
    kind.children().iter().map(|c| c.depth()).max().map_or(1, |d| d + 1)
}

fn new_node(kind: Kind, key: [u8; 32], id: ExprId, canon: Option<Expr>) -> Node {
    Node { depth: depth_of(&kind), kind, key, id, canon, free: OnceLock::new(), names: OnceLock::new() }
}

/// Interns a validated node, computing its canonical twin if it has one.
pub(crate) fn make(kind: Kind) -> Expr {
    let key = node_key(&kind);
    if let Some(e) = lookup(&key) {
        return e;
    }
    // The canonical form is computed without holding the lock: it may intern
    // further nodes.
    let canon = canon::canonical_twin(&kind).filter(|c| *c.key() != key);
    let id = canon.as_ref().map_or(ExprId(key), |c| c.id());
    insert(new_node(kind, key, id, canon))
}

/// Interns a node the caller guarantees to be in canonical form.
pub(crate) fn make_canonical(kind: Kind) -> Expr {
    let key = node_key(&kind);
    if let Some(e) = lookup(&key) {
        return e;
    }
    insert(new_node(kind, key, ExprId(key), None))
}

/// Number of live interned nodes (sweeps first).
pub fn live_nodes() -> usize {
    let mut t = table().lock();
    t.map.retain(|_, w| w.strong_count() > 0);
    t.map.len()
}

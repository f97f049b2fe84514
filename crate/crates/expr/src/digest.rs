use std::fmt;
use std::str::FromStr;

use sha2::{Digest as _, Sha256};

use crate::node::Kind;

/// Structural identity of an expression: SHA-256 over the node encoding of its
/// alpha-canonical form. Style never participates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExprId(pub(crate) [u8; 32]);

impl ExprId {
    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }

    pub fn from_bytes(bytes: [u8; 32]) -> Self {
        ExprId(bytes)
    }
}

impl fmt::Display for ExprId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for ExprId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExprId({})", &self.to_hex()[..12])
    }
}

impl FromStr for ExprId {
    type Err = hex::FromHexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = [0u8; 32];
        hex::decode_to_slice(s, &mut out)?;
        Ok(ExprId(out))
    }
}

const DOMAIN: &[u8] = b"pvk-expr-v1";

fn put_str(h: &mut Sha256, s: &str) {
    h.update((s.len() as u64).to_be_bytes());
    h.update(s.as_bytes());
}

fn put_count(h: &mut Sha256, n: usize) {
    h.update((n as u64).to_be_bytes());
}

/// Preorder, length-prefixed encoding of one node. Children contribute their
/// own 32-byte keys, so the digest of a DAG is computed in linear time.
pub(crate) fn node_key(kind: &Kind) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(DOMAIN);
    h.update([kind.tag() as u8]);
    match kind {
        Kind::Variable(name) => put_str(&mut h, name),
        Kind::Literal { package, name } => {
            put_str(&mut h, package);
            put_str(&mut h, name);
        }
        Kind::Tuple(entries) => {
            put_count(&mut h, entries.len());
            for e in entries {
                h.update(e.key());
            }
        }
        Kind::Operation { operator, operands } => {
            put_count(&mut h, 2);
            h.update(operator.key());
            h.update(operands.key());
        }
        Kind::Conditional { value, condition } => {
            put_count(&mut h, 2);
            h.update(value.key());
            h.update(condition.key());
        }
        Kind::Lambda { params, body } => {
            put_count(&mut h, 2);
            h.update(params.key());
            h.update(body.key());
        }
        Kind::Named(items) => {
            put_count(&mut h, items.len());
            for (k, v) in items {
                put_str(&mut h, k);
                h.update(v.key());
            }
        }
        Kind::Range { lambda, start, end } => {
            put_count(&mut h, 3);
            h.update(lambda.key());
            h.update(start.key());
            h.update(end.key());
        }
        Kind::Indexed { var, indices } => {
            put_count(&mut h, 1 + indices.len());
            h.update(var.key());
            for i in indices {
                h.update(i.key());
            }
        }
    }
    h.finalize().into()
}

use std::sync::Arc;

use parking_lot::RwLock;

use crate::error::Result;
use crate::registry::Registry;

/// Shared registry with copy-on-write updates. Readers hold an `Arc` to a
/// snapshot that later updates never touch.
#[derive(Clone, Debug, Default)]
pub struct TheoryStore {
    current: Arc<RwLock<Arc<Registry>>>,
}

impl TheoryStore {
    pub fn new(r: Registry) -> Self {
        TheoryStore { current: Arc::new(RwLock::new(Arc::new(r))) }
    }

    pub fn snapshot(&self) -> Arc<Registry> {
        self.current.read().clone()
    }

    /// Applies `f` to a copy and publishes it only if `f` succeeds.
    pub fn update<T>(&self, f: impl FnOnce(&mut Registry) -> Result<T>) -> Result<T> {
        let mut guard = self.current.write();
        let mut next = (**guard).clone();
        let out = f(&mut next)?;
        *guard = Arc::new(next);
        Ok(out)
    }
}

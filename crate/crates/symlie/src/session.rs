//! Per-process cache of `L_n` and character tables.
//!
//! Each degree has its own `OnceLock`, so concurrent readers of the same
//! `n` block on one computation and different degrees never wait on each
//! other.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use symlie_core::lie::lie_basis;
use symlie_core::rep::{irreducible_characters, CharacterTable};
use symlie_core::{Result, Subspace};

type Slot<T> = Arc<OnceLock<Result<Arc<T>>>>;

#[derive(Default)]
pub struct Session {
    lie: Mutex<HashMap<usize, Slot<Subspace>>>,
    tables: Mutex<HashMap<usize, Slot<CharacterTable>>>,
}

fn cached<T>(
    map: &Mutex<HashMap<usize, Slot<T>>>,
    n: usize,
    compute: impl FnOnce() -> Result<T>,
) -> Result<Arc<T>> {
    let slot = map
        .lock()
        .expect("cache lock poisoned")
        .entry(n)
        .or_default()
        .clone();
    slot.get_or_init(|| compute().map(Arc::new)).clone()
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lie_basis(&self, n: usize) -> Result<Arc<Subspace>> {
        cached(&self.lie, n, || lie_basis(n))
    }

    pub fn character_table(&self, n: usize) -> Result<Arc<CharacterTable>> {
        cached(&self.tables, n, || irreducible_characters(n))
    }
}

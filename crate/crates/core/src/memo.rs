use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;
use num_bigint::BigInt;

use crate::partitions::Partition;

/// Concurrent memo table keyed by `(λ, α)`.
///
/// Insertion is idempotent: racing workers may compute the same entry twice,
/// but a second insert must carry the identical value.
#[derive(Debug, Default)]
pub struct MemoStore {
    map: DashMap<(Partition, Partition), BigInt>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, lambda: &Partition, alpha: &Partition) -> Option<BigInt> {
        let found = self.map.get(&(lambda.clone(), alpha.clone())).map(|v| v.clone());
        match found {
            Some(_) => self.hits.fetch_add(1, Ordering::Relaxed),
            None => self.misses.fetch_add(1, Ordering::Relaxed),
        };
        found
    }

    /// Inserts a value; panics if the key is already present with a different value.
    pub fn insert(&self, lambda: Partition, alpha: Partition, value: BigInt) {
        match self.map.entry((lambda, alpha)) {
            dashmap::Entry::Occupied(e) => {
                assert_eq!(
                    e.get(),
                    &value,
                    "divergent memo values for ({:?}, {:?})",
                    e.key().0,
                    e.key().1
                );
            }
            dashmap::Entry::Vacant(e) => {
                e.insert(value);
            }
        }
    }

    /// Like [`insert`](Self::insert) but reports a conflict instead of panicking.
    pub fn try_insert(&self, lambda: Partition, alpha: Partition, value: BigInt) -> bool {
        match self.map.entry((lambda, alpha)) {
            dashmap::Entry::Occupied(e) => e.get() == &value,
            dashmap::Entry::Vacant(e) => {
                e.insert(value);
                true
            }
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn clear(&self) {
        self.map.clear();
        self.hits.store(0, Ordering::Relaxed);
        self.misses.store(0, Ordering::Relaxed);
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    /// Snapshot of every entry, sorted for deterministic output.
    pub fn entries(&self) -> Vec<(Partition, Partition, BigInt)> {
        let mut v: Vec<_> = self
            .map
            .iter()
            .map(|e| (e.key().0.clone(), e.key().1.clone(), e.value().clone()))
            .collect();
        v.sort_by(|a, b| (a.1.n(), &a.1, &a.0).cmp(&(b.1.n(), &b.1, &b.0)));
        v
    }

    pub fn contains(&self, lambda: &Partition, alpha: &Partition) -> bool {
        self.map.contains_key(&(lambda.clone(), alpha.clone()))
    }
}

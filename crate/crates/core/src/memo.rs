use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

/// Process-wide memo table. Values are computed outside the lock; the first
/// insert for a key wins and later computations of the same key are dropped.
pub(crate) struct Memo<K, V> {
    map: OnceLock<RwLock<HashMap<K, V>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Self { map: OnceLock::new() }
    }

    fn table(&self) -> &RwLock<HashMap<K, V>> {
        self.map.get_or_init(|| RwLock::new(HashMap::new()))
    }

    pub(crate) fn get_or_try_insert<E>(&self, key: &K, build: impl FnOnce() -> Result<V, E>) -> Result<V, E> {
        if let Some(v) = self.table().read().expect("memo lock poisoned").get(key) {
            return Ok(v.clone());
        }
        let value = build()?;
        let mut guard = self.table().write().expect("memo lock poisoned");
        Ok(guard.entry(key.clone()).or_insert(value).clone())
    }
}

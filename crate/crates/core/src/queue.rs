//! Addressable min-priority queue and a totally ordered length key.

use std::cmp::Ordering;
use std::collections::BTreeSet;

/// A length usable as an ordered key. `f64::INFINITY` sorts above every finite value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Len(pub f64);

impl Eq for Len {}

impl PartialOrd for Len {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Len {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Min-queue over dense ids with decrease/increase-key by id.
///
/// Entries with equal keys pop in ascending id order.
#[derive(Debug, Clone)]
pub struct KeyedQueue<K: Ord + Copy> {
    set: BTreeSet<(K, usize)>,
    keys: Vec<Option<K>>,
}

impl<K: Ord + Copy> Default for KeyedQueue<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Copy> KeyedQueue<K> {
    pub fn new() -> Self {
        KeyedQueue {
            set: BTreeSet::new(),
            keys: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.keys.get(id).is_some_and(|k| k.is_some())
    }

    pub fn key(&self, id: usize) -> Option<K> {
        self.keys.get(id).copied().flatten()
    }

    /// Inserts `id` or moves it to `key` if already queued.
    pub fn push_or_update(&mut self, id: usize, key: K) {
        if id >= self.keys.len() {
            self.keys.resize(id + 1, None);
        }
        if let Some(old) = self.keys[id] {
            self.set.remove(&(old, id));
        }
        self.keys[id] = Some(key);
        self.set.insert((key, id));
    }

    /// Updates the key of `id` only if it is already queued.
    pub fn update_if_present(&mut self, id: usize, key: K) -> bool {
        if self.contains(id) {
            self.push_or_update(id, key);
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, id: usize) -> Option<K> {
        let old = self.keys.get_mut(id)?.take()?;
        self.set.remove(&(old, id));
        Some(old)
    }

    pub fn peek(&self) -> Option<(K, usize)> {
        self.set.first().copied()
    }

    pub fn pop(&mut self) -> Option<(K, usize)> {
        let (k, id) = self.set.pop_first()?;
        self.keys[id] = None;
        Some((k, id))
    }

    pub fn clear(&mut self) {
        for (_, id) in std::mem::take(&mut self.set) {
            self.keys[id] = None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pops_in_key_then_id_order() {
        let mut q = KeyedQueue::new();
        q.push_or_update(3, Len(1.0));
        q.push_or_update(1, Len(1.0));
        q.push_or_update(2, Len(0.5));
        assert_eq!(q.pop(), Some((Len(0.5), 2)));
        assert_eq!(q.pop(), Some((Len(1.0), 1)));
        assert_eq!(q.pop(), Some((Len(1.0), 3)));
        assert!(q.is_empty());
    }

    #[test]
    fn update_moves_entry_both_ways() {
        let mut q = KeyedQueue::new();
        q.push_or_update(0, Len(5.0));
        q.push_or_update(1, Len(3.0));
        q.push_or_update(0, Len(1.0));
        assert_eq!(q.peek(), Some((Len(1.0), 0)));
        q.push_or_update(0, Len(f64::INFINITY));
        assert_eq!(q.peek(), Some((Len(3.0), 1)));
        assert!(!q.update_if_present(7, Len(0.0)));
        assert_eq!(q.len(), 2);
        assert_eq!(q.remove(1), Some(Len(3.0)));
        assert_eq!(q.pop(), Some((Len(f64::INFINITY), 0)));
    }
}

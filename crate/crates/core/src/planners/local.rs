use crate::cspace::{motion_check, Configuration, Scenario};
use rustc_hash::FxHashMap;

/// Outcome of certifying a motion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeState {
    Free,
    Blocked,
}

/// Local-planner results keyed by unordered vertex pair. Entries never change.
#[derive(Debug, Clone, Default)]
pub struct EdgeCache {
    map: FxHashMap<(usize, usize), EdgeState>,
}

#[inline]
fn key(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl EdgeCache {
    pub fn new() -> EdgeCache {
        EdgeCache::default()
    }

    pub fn get(&self, u: usize, v: usize) -> Option<EdgeState> {
        self.map.get(&key(u, v)).copied()
    }

    pub fn is_free(&self, u: usize, v: usize) -> bool {
        self.get(u, v) == Some(EdgeState::Free)
    }

    pub fn is_blocked(&self, u: usize, v: usize) -> bool {
        self.get(u, v) == Some(EdgeState::Blocked)
    }

    /// Records a result. Panics if the pair already holds a different value.
    pub fn record(&mut self, u: usize, v: usize, state: EdgeState) {
        let old = self.map.insert(key(u, v), state);
        assert!(old.is_none() || old == Some(state), "edge cache entry ({u}, {v}) changed");
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Motion validation with call accounting and a per-run cache.
#[derive(Debug, Clone)]
pub struct LocalPlanner<'a> {
    scenario: &'a Scenario,
    delta: f64,
    cache: EdgeCache,
    calls: u64,
    checks: u64,
}

impl<'a> LocalPlanner<'a> {
    pub fn new(scenario: &'a Scenario, delta: f64) -> LocalPlanner<'a> {
        LocalPlanner {
            scenario,
            delta,
            cache: EdgeCache::new(),
            calls: 0,
            checks: 0,
        }
    }

    /// Uncached check between two configurations; always counts as a call.
    pub fn check(&mut self, a: &Configuration, b: &Configuration) -> bool {
        self.calls += 1;
        motion_check(self.scenario, a, b, self.delta, &mut self.checks)
    }

    /// Cached check of the motion between vertices `u` and `v`.
    pub fn certify(&mut self, u: usize, v: usize, a: &Configuration, b: &Configuration) -> bool {
        if let Some(s) = self.cache.get(u, v) {
            return s == EdgeState::Free;
        }
        let free = self.check(a, b);
        self.cache.record(u, v, if free { EdgeState::Free } else { EdgeState::Blocked });
        free
    }

    pub fn cache(&self) -> &EdgeCache {
        &self.cache
    }

    pub fn clear_cache(&mut self) {
        self.cache = EdgeCache::new();
    }

    pub fn cache_mut(&mut self) -> &mut EdgeCache {
        &mut self.cache
    }

    /// Local-planner invocations so far.
    pub fn calls(&self) -> u64 {
        self.calls
    }

    /// Configuration collision checks spent inside the local planner.
    pub fn checks(&self) -> u64 {
        self.checks
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_is_unordered() {
        let mut c = EdgeCache::new();
        c.record(3, 1, EdgeState::Blocked);
        assert!(c.is_blocked(1, 3));
        assert_eq!(c.get(2, 3), None);
        c.record(1, 3, EdgeState::Blocked);
        assert_eq!(c.len(), 1);
    }

    #[test]
    #[should_panic]
    fn cache_entries_are_immutable() {
        let mut c = EdgeCache::new();
        c.record(0, 1, EdgeState::Free);
        c.record(1, 0, EdgeState::Blocked);
    }
}

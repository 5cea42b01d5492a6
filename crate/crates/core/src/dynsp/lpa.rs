use super::{DynamicGraph, INF};
use crate::error::{Error, Result};
use crate::queue::{KeyedQueue, Len};

type Key = (Len, Len);

/// Queue slot of the virtual sink joined to every goal vertex by a zero-weight edge.
const SINK: usize = 0;

#[inline]
fn slot(v: usize) -> usize {
    v + 1
}

/// Lifelong Planning A* from one source to a set of goal vertices.
///
/// Goal vertices feed a virtual sink, so a single query returns the cheapest goal.
/// Mutations only touch `rhs` values and queue keys; the search runs when
/// [`shortest_path`](Lpa::shortest_path) is called. The heuristic must be
/// consistent: `h(u) ≤ w(u, v) + h(v)` and `h(goal) = 0`.
#[derive(Debug, Clone)]
pub struct Lpa {
    graph: DynamicGraph,
    source: usize,
    g: Vec<f64>,
    rhs: Vec<f64>,
    back: Vec<Option<usize>>,
    h: Vec<f64>,
    is_goal: Vec<bool>,
    goals: Vec<usize>,
    sink_g: f64,
    sink_rhs: f64,
    sink_back: Option<usize>,
    queue: KeyedQueue<Key>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    fresh: bool,
    expansions: u64,
}

impl Lpa {
    /// Graph with the single vertex `0` as source.
    pub fn new(source_h: f64, source_is_goal: bool) -> Lpa {
        let mut lpa = Lpa {
            graph: DynamicGraph::new(),
            source: 0,
            g: Vec::new(),
            rhs: Vec::new(),
            back: Vec::new(),
            h: Vec::new(),
            is_goal: Vec::new(),
            goals: Vec::new(),
            sink_g: INF,
            sink_rhs: INF,
            sink_back: None,
            queue: KeyedQueue::new(),
            on_path: Vec::new(),
            path: Vec::new(),
            fresh: false,
            expansions: 0,
        };
        lpa.add_vertex(source_h, source_is_goal);
        lpa.rhs[0] = 0.0;
        lpa.requeue(0);
        lpa
    }

    /// Appends a vertex with heuristic value `h` (distance-to-goal estimate).
    pub fn add_vertex(&mut self, h: f64, is_goal: bool) -> usize {
        let v = self.graph.add_vertex();
        self.g.push(INF);
        self.rhs.push(INF);
        self.back.push(None);
        self.h.push(h);
        self.is_goal.push(is_goal);
        self.on_path.push(false);
        if is_goal {
            self.goals.push(v);
        }
        v
    }

    pub fn graph(&self) -> &DynamicGraph {
        &self.graph
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn heuristic(&self, v: usize) -> f64 {
        self.h[v]
    }

    pub fn is_goal(&self, v: usize) -> bool {
        self.is_goal[v]
    }

    /// Current `g` value; exact only for vertices settled by the last query.
    pub fn g_value(&self, v: usize) -> f64 {
        self.g[v]
    }

    /// Vertex expansions performed so far.
    pub fn expansions(&self) -> u64 {
        self.expansions
    }

    fn key(&self, v: usize) -> Key {
        let m = self.g[v].min(self.rhs[v]);
        (Len(m + self.h[v]), Len(m))
    }

    fn sink_key(&self) -> Key {
        let m = self.sink_g.min(self.sink_rhs);
        (Len(m), Len(m))
    }

    fn requeue(&mut self, v: usize) {
        if self.g[v] != self.rhs[v] {
            let k = self.key(v);
            self.queue.push_or_update(slot(v), k);
        } else {
            self.queue.remove(slot(v));
        }
    }

    fn recompute_rhs(&mut self, v: usize) {
        if v == self.source {
            return;
        }
        let mut best = (INF, None);
        for &(p, w) in self.graph.in_edges(v) {
            let c = self.g[p] + w;
            if c < best.0 || (c == best.0 && best.1.is_some_and(|b| p < b)) {
                best = (c, Some(p));
            }
        }
        self.rhs[v] = best.0;
        self.back[v] = if best.0 < INF { best.1 } else { None };
        self.requeue(v);
    }

    fn update_sink(&mut self) {
        let mut best = (INF, None);
        for &v in &self.goals {
            if self.g[v] < best.0 {
                best = (self.g[v], Some(v));
            }
        }
        self.sink_rhs = best.0;
        self.sink_back = best.1;
        if self.sink_g != self.sink_rhs {
            let k = self.sink_key();
            self.queue.push_or_update(SINK, k);
        } else {
            self.queue.remove(SINK);
        }
    }

    /// Lazily inserts `(u, v)`; no search happens until the next query.
    pub fn insert_edge(&mut self, u: usize, v: usize, w: f64) -> Result<()> {
        self.graph.insert_edge(u, v, w)?;
        self.fresh = false;
        if v != self.source {
            let c = self.g[u] + w;
            if c < self.rhs[v] {
                self.rhs[v] = c;
                self.back[v] = Some(u);
                self.requeue(v);
            }
        }
        Ok(())
    }

    /// Lazily deletes `(u, v)`.
    pub fn delete_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.graph.remove_edge(u, v)?;
        self.fresh = false;
        if v != self.source && self.back[v] == Some(u) {
            self.recompute_rhs(v);
        }
        Ok(())
    }

    fn top_key(&self) -> Option<Key> {
        self.queue.peek().map(|(k, _)| k)
    }

    /// Runs the search until the cheapest goal vertex is locally consistent.
    /// Returns that vertex, or `None` if no goal vertex is reachable.
    pub fn shortest_path(&mut self) -> Option<usize> {
        loop {
            let Some(top) = self.top_key() else { break };
            // Ties are expanded too: goal vertices reach the sink over zero-weight edges.
            if !(top <= self.sink_key() || self.sink_rhs != self.sink_g) {
                break;
            }
            let (_, s) = self.queue.pop().expect("nonempty queue");
            self.expansions += 1;
            if s == SINK {
                if self.sink_g > self.sink_rhs {
                    self.sink_g = self.sink_rhs;
                } else {
                    self.sink_g = INF;
                    self.update_sink();
                }
                continue;
            }
            let u = s - 1;
            if self.g[u] > self.rhs[u] {
                self.g[u] = self.rhs[u];
                let gu = self.g[u];
                for i in 0..self.graph.out_edges(u).len() {
                    let (v, w) = self.graph.out_edges(u)[i];
                    if v == self.source {
                        continue;
                    }
                    let c = gu + w;
                    if c < self.rhs[v] || (c == self.rhs[v] && self.back[v].is_some_and(|b| u < b)) {
                        self.rhs[v] = c;
                        self.back[v] = Some(u);
                        self.requeue(v);
                    }
                }
            } else {
                self.g[u] = INF;
                self.recompute_rhs(u);
                for i in 0..self.graph.out_edges(u).len() {
                    let v = self.graph.out_edges(u)[i].0;
                    if self.back[v] == Some(u) {
                        self.recompute_rhs(v);
                    }
                }
            }
            if self.is_goal[u] {
                self.update_sink();
            }
        }
        self.mark_path();
        self.fresh = true;
        self.best_goal()
    }

    fn best_goal(&self) -> Option<usize> {
        if self.sink_g < INF {
            self.sink_back
        } else {
            None
        }
    }

    fn mark_path(&mut self) {
        for &v in &self.path {
            self.on_path[v] = false;
        }
        self.path.clear();
        let Some(mut v) = self.best_goal() else { return };
        let n = self.graph.num_vertices();
        loop {
            self.path.push(v);
            self.on_path[v] = true;
            if v == self.source {
                break;
            }
            v = self.back[v].expect("settled vertex has a predecessor");
            assert!(self.path.len() <= n, "predecessor chain does not reach the source");
        }
        self.path.reverse();
    }

    /// Minimal cost from the source to the goal set, `INF` if unreachable.
    pub fn cost(&self) -> f64 {
        self.sink_g
    }

    /// Predecessor of `x` on the reported path (`None` for the source).
    pub fn parent(&self, x: usize) -> Result<Option<usize>> {
        if !self.fresh || !self.on_path.get(x).copied().unwrap_or(false) {
            return Err(Error::NotOnPath(x));
        }
        Ok(if x == self.source { None } else { self.back[x] })
    }

    /// Vertices of the reported path from the source to the best goal.
    pub fn path(&self) -> &[usize] {
        &self.path
    }

    /// True if no mutation happened since the last query.
    pub fn is_fresh(&self) -> bool {
        self.fresh
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn source_in_goal() {
        let mut l = Lpa::new(0.0, true);
        assert_eq!(l.shortest_path(), Some(0));
        assert_eq!(l.cost(), 0.0);
        assert_eq!(l.parent(0).unwrap(), None);
    }

    #[test]
    fn unreachable_goal() {
        let mut l = Lpa::new(0.0, false);
        l.add_vertex(0.0, true);
        assert_eq!(l.shortest_path(), None);
        assert_eq!(l.cost(), INF);
        assert!(l.parent(1).is_err());
    }

    #[test]
    fn chain_parents() {
        let mut l = Lpa::new(3.0, false);
        for i in 1..=3 {
            l.add_vertex(3.0 - i as f64, i == 3);
            l.insert_edge(i - 1, i, 1.0).unwrap();
        }
        assert_eq!(l.shortest_path(), Some(3));
        assert_eq!(l.cost(), 3.0);
        assert_eq!(l.parent(3).unwrap(), Some(2));
        assert_eq!(l.parent(2).unwrap(), Some(1));
        assert_eq!(l.parent(1).unwrap(), Some(0));
        assert_eq!(l.path(), &[0, 1, 2, 3]);
    }

    #[test]
    fn insert_delete_inverse() {
        let mut l = Lpa::new(0.0, false);
        l.add_vertex(0.0, false);
        l.add_vertex(0.0, true);
        l.insert_edge(0, 1, 2.0).unwrap();
        l.insert_edge(1, 2, 2.0).unwrap();
        l.shortest_path();
        assert_eq!(l.cost(), 4.0);
        l.insert_edge(0, 2, 1.0).unwrap();
        assert!(!l.is_fresh());
        assert!(l.parent(2).is_err(), "stale query");
        l.shortest_path();
        assert_eq!(l.cost(), 1.0);
        assert_eq!(l.parent(2).unwrap(), Some(0));
        l.delete_edge(0, 2).unwrap();
        l.shortest_path();
        assert_eq!(l.cost(), 4.0);
        assert!(l.parent(2).is_ok());
        assert!(matches!(l.delete_edge(0, 2), Err(Error::MissingEdge(0, 2))));
    }

    #[test]
    fn off_path_parent_is_error() {
        let mut l = Lpa::new(0.0, false);
        l.add_vertex(0.0, true);
        l.add_vertex(0.0, false);
        l.insert_edge(0, 1, 1.0).unwrap();
        l.insert_edge(0, 2, 1.0).unwrap();
        l.shortest_path();
        assert!(matches!(l.parent(2), Err(Error::NotOnPath(2))));
    }
}

use super::{DynamicGraph, INF};
use crate::error::{Error, Result};
use crate::queue::{KeyedQueue, Len};
use std::fmt::Write as _;

/// Fully dynamic single-source shortest paths.
///
/// Insertions propagate decreases with a Dijkstra-ordered sweep from the edge
/// head. Deletions of a shortest-path-tree edge first identify the affected
/// vertices (tree descendants that lose every equal-cost alternative), then
/// repair them with a Dijkstra seeded from their unaffected predecessors. Work
/// is proportional to the affected region, not to the graph.
#[derive(Debug, Clone)]
pub struct Sssp {
    graph: DynamicGraph,
    source: usize,
    cost: Vec<f64>,
    parent: Vec<Option<usize>>,
    queue: KeyedQueue<Len>,
    mark: Vec<bool>,
    delta_hat: usize,
}

impl Sssp {
    /// Empty graph with `n ≥ 1` vertices rooted at `source`.
    pub fn new(n: usize, source: usize) -> Result<Sssp> {
        if source >= n {
            return Err(Error::UnknownVertex(source));
        }
        let mut cost = vec![INF; n];
        cost[source] = 0.0;
        Ok(Sssp {
            graph: DynamicGraph::with_vertices(n),
            source,
            cost,
            parent: vec![None; n],
            queue: KeyedQueue::new(),
            mark: vec![false; n],
            delta_hat: 0,
        })
    }

    pub fn add_vertex(&mut self) -> usize {
        self.cost.push(INF);
        self.parent.push(None);
        self.mark.push(false);
        self.graph.add_vertex()
    }

    pub fn graph(&self) -> &DynamicGraph {
        &self.graph
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn cost(&self, x: usize) -> f64 {
        self.cost[x]
    }

    pub fn costs(&self) -> &[f64] {
        &self.cost
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.parent[x]
    }

    /// Largest changed-vertex set returned by any mutation so far.
    pub fn delta_hat(&self) -> usize {
        self.delta_hat
    }

    /// Inserts `(u, v)` and returns the vertices whose cost decreased, sorted by id.
    pub fn insert_edge(&mut self, u: usize, v: usize, w: f64) -> Result<Vec<usize>> {
        self.graph.insert_edge(u, v, w)?;
        let through = self.cost[u] + w;
        if !(through < self.cost[v]) {
            return Ok(Vec::new());
        }
        self.cost[v] = through;
        self.parent[v] = Some(u);
        let mut changed = vec![v];
        self.mark[v] = true;
        self.queue.push_or_update(v, Len(through));
        while let Some((_, x)) = self.queue.pop() {
            let cx = self.cost[x];
            for &(y, wy) in self.graph.out_edges(x) {
                let c = cx + wy;
                if c < self.cost[y] {
                    self.cost[y] = c;
                    self.parent[y] = Some(x);
                    if !self.mark[y] {
                        self.mark[y] = true;
                        changed.push(y);
                    }
                    self.queue.push_or_update(y, Len(c));
                }
            }
        }
        for &x in &changed {
            self.mark[x] = false;
        }
        changed.sort_unstable();
        self.delta_hat = self.delta_hat.max(changed.len());
        Ok(changed)
    }

    /// Deletes `(u, v)` and returns the vertices whose cost increased, sorted by id.
    pub fn delete_edge(&mut self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.graph.remove_edge(u, v)?;
        if self.parent[v] != Some(u) {
            return Ok(Vec::new());
        }

        // Identify: walk the subtree of v in cost order; a vertex keeps its cost
        // if some unaffected predecessor reaches it at exactly that cost.
        let mut affected = Vec::new();
        self.queue.push_or_update(v, Len(self.cost[v]));
        while let Some((_, x)) = self.queue.pop() {
            let cx = self.cost[x];
            let alt = self
                .graph
                .in_edges(x)
                .iter()
                .filter(|(p, _)| !self.mark[*p] && !self.queue.contains(*p))
                .find(|(p, wp)| self.cost[*p] + wp == cx)
                .map(|(p, _)| *p);
            if let Some(p) = alt {
                self.parent[x] = Some(p);
                continue;
            }
            self.mark[x] = true;
            affected.push(x);
            for &(y, _) in self.graph.out_edges(x) {
                if self.parent[y] == Some(x) && !self.mark[y] {
                    self.queue.push_or_update(y, Len(self.cost[y]));
                }
            }
        }

        // Repair: seed from unaffected predecessors, then Dijkstra inside the region.
        let old: Vec<f64> = affected.iter().map(|&x| self.cost[x]).collect();
        for &x in &affected {
            self.cost[x] = INF;
            self.parent[x] = None;
        }
        for &x in &affected {
            let mut best = (INF, None);
            for &(p, wp) in self.graph.in_edges(x) {
                if self.mark[p] {
                    continue;
                }
                let c = self.cost[p] + wp;
                if c < best.0 {
                    best = (c, Some(p));
                }
            }
            if best.1.is_some() {
                self.cost[x] = best.0;
                self.parent[x] = best.1;
                self.queue.push_or_update(x, Len(best.0));
            }
        }
        while let Some((_, x)) = self.queue.pop() {
            let cx = self.cost[x];
            for &(y, wy) in self.graph.out_edges(x) {
                if !self.mark[y] {
                    continue;
                }
                let c = cx + wy;
                if c < self.cost[y] {
                    self.cost[y] = c;
                    self.parent[y] = Some(x);
                    self.queue.push_or_update(y, Len(c));
                }
            }
        }
        let mut changed: Vec<usize> = affected
            .iter()
            .zip(&old)
            .filter(|(&x, &c)| self.cost[x] != c)
            .map(|(&x, _)| x)
            .collect();
        for &x in &affected {
            self.mark[x] = false;
        }
        changed.sort_unstable();
        self.delta_hat = self.delta_hat.max(changed.len());
        Ok(changed)
    }

    /// One `id cost parent` line per vertex; `inf` and `-` for unreachable.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (x, (c, p)) in self.cost.iter().zip(&self.parent).enumerate() {
            match p {
                Some(p) => writeln!(s, "{x} {c} {p}").unwrap(),
                None => writeln!(s, "{x} {c} -").unwrap(),
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn source_and_unreachable() {
        let s = Sssp::new(3, 0).unwrap();
        assert_eq!(s.cost(0), 0.0);
        assert_eq!(s.parent(0), None);
        assert_eq!(s.cost(2), INF);
        assert_eq!(s.parent(2), None);
        assert!(Sssp::new(2, 5).is_err());
    }

    #[test]
    fn reachability_extension() {
        let mut s = Sssp::new(3, 0).unwrap();
        assert_eq!(s.insert_edge(0, 1, 1.0).unwrap(), vec![1]);
        assert!(matches!(s.insert_edge(0, 1, 2.0), Err(Error::DuplicateEdge(0, 1))));
        assert_eq!(s.insert_edge(1, 2, 1.0).unwrap(), vec![2]);
        assert_eq!(s.cost(2), 2.0);
    }

    #[test]
    fn non_improving_insertion() {
        let mut s = Sssp::new(3, 0).unwrap();
        s.insert_edge(0, 1, 1.0).unwrap();
        s.insert_edge(1, 2, 1.0).unwrap();
        assert!(s.insert_edge(0, 2, 5.0).unwrap().is_empty());
        assert!(matches!(s.insert_edge(0, 2, 1.0), Err(Error::DuplicateEdge(..))));
        assert!(matches!(s.insert_edge(2, 0, -1.0), Err(Error::BadWeight(_))));
    }

    #[test]
    fn triangle() {
        let mut s = Sssp::new(3, 0).unwrap();
        s.insert_edge(0, 1, 1.0).unwrap();
        s.insert_edge(0, 2, 3.0).unwrap();
        assert_eq!(s.insert_edge(1, 2, 1.0).unwrap(), vec![2]);
        assert_eq!(s.cost(2), 2.0);
        assert_eq!(s.parent(2), Some(1));
    }

    #[test]
    fn delete_non_tree_edge() {
        let mut s = Sssp::new(3, 0).unwrap();
        s.insert_edge(0, 1, 1.0).unwrap();
        s.insert_edge(0, 2, 3.0).unwrap();
        s.insert_edge(1, 2, 1.0).unwrap();
        assert!(s.delete_edge(0, 2).unwrap().is_empty());
        assert!(matches!(s.delete_edge(0, 2), Err(Error::MissingEdge(0, 2))));
        assert_eq!(s.cost(2), 2.0);
    }

    #[test]
    fn delete_disconnects_subtree() {
        let mut s = Sssp::new(4, 0).unwrap();
        s.insert_edge(0, 1, 1.0).unwrap();
        s.insert_edge(1, 2, 1.0).unwrap();
        s.insert_edge(2, 3, 1.0).unwrap();
        assert_eq!(s.delete_edge(0, 1).unwrap(), vec![1, 2, 3]);
        assert!(s.costs()[1..].iter().all(|c| *c == INF));
        assert!(s.parent(3).is_none());
        assert_eq!(s.delta_hat(), 3);
    }

    #[test]
    fn delete_reroutes() {
        let mut s = Sssp::new(4, 0).unwrap();
        s.insert_edge(0, 1, 1.0).unwrap();
        s.insert_edge(1, 3, 1.0).unwrap();
        s.insert_edge(0, 2, 2.0).unwrap();
        s.insert_edge(2, 3, 2.0).unwrap();
        assert_eq!(s.delete_edge(1, 3).unwrap(), vec![3]);
        assert_eq!(s.cost(3), 4.0);
        assert_eq!(s.parent(3), Some(2));
    }

    #[test]
    fn equal_cost_alternative_keeps_cost() {
        let mut s = Sssp::new(4, 0).unwrap();
        s.insert_edge(0, 1, 1.0).unwrap();
        s.insert_edge(0, 2, 1.0).unwrap();
        s.insert_edge(1, 3, 1.0).unwrap();
        s.insert_edge(2, 3, 1.0).unwrap();
        assert_eq!(s.parent(3), Some(1));
        assert!(s.delete_edge(1, 3).unwrap().is_empty());
        assert_eq!(s.parent(3), Some(2));
        assert_eq!(s.cost(3), 2.0);
    }

    #[test]
    fn dump_format() {
        let mut s = Sssp::new(3, 0).unwrap();
        s.insert_edge(0, 1, 0.5).unwrap();
        assert_eq!(s.dump(), "0 0 -\n1 0.5 0\n2 inf -\n");
    }
}

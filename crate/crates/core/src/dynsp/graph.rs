use crate::error::{Error, Result};

/// Directed weighted graph with forward and reverse adjacency and no parallel edges.
#[derive(Debug, Clone, Default)]
pub struct DynamicGraph {
    out: Vec<Vec<(usize, f64)>>,
    inc: Vec<Vec<(usize, f64)>>,
    edges: usize,
}

impl DynamicGraph {
    pub fn new() -> DynamicGraph {
        DynamicGraph::default()
    }

    pub fn with_vertices(n: usize) -> DynamicGraph {
        DynamicGraph {
            out: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
            edges: 0,
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.out.push(Vec::new());
        self.inc.push(Vec::new());
        self.out.len() - 1
    }

    pub fn num_vertices(&self) -> usize {
        self.out.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < self.out.len()
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        self.out.get(u)?.iter().find(|(x, _)| *x == v).map(|(_, w)| *w)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weight(u, v).is_some()
    }

    pub fn out_edges(&self, u: usize) -> &[(usize, f64)] {
        &self.out[u]
    }

    pub fn in_edges(&self, v: usize) -> &[(usize, f64)] {
        &self.inc[v]
    }

    /// All edges `(u, v, w)` ordered by `u`, then insertion order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, es)| es.iter().map(move |(v, w)| (u, *v, *w)))
    }

    fn check_vertices(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if !self.contains_vertex(x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        Ok(())
    }

    pub fn insert_edge(&mut self, u: usize, v: usize, w: f64) -> Result<()> {
        self.check_vertices(u, v)?;
        super::check_weight(w)?;
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.out[u].push((v, w));
        self.inc[v].push((u, w));
        self.edges += 1;
        Ok(())
    }

    /// Removes the edge and returns its weight.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<f64> {
        self.check_vertices(u, v)?;
        let i = self.out[u]
            .iter()
            .position(|(x, _)| *x == v)
            .ok_or(Error::MissingEdge(u, v))?;
        let (_, w) = self.out[u].remove(i);
        let j = self.inc[v].iter().position(|(x, _)| *x == u).expect("reverse adjacency in sync");
        self.inc[v].remove(j);
        self.edges -= 1;
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove() {
        let mut g = DynamicGraph::with_vertices(3);
        g.insert_edge(0, 1, 1.5).unwrap();
        g.insert_edge(1, 2, 0.0).unwrap();
        assert!(matches!(g.insert_edge(0, 1, 2.0), Err(Error::DuplicateEdge(0, 1))));
        assert!(matches!(g.insert_edge(0, 2, -1.0), Err(Error::BadWeight(_))));
        assert!(matches!(g.insert_edge(0, 9, 1.0), Err(Error::UnknownVertex(9))));
        assert_eq!(g.num_edges(), 2);
        assert_eq!(g.in_edges(1), &[(0, 1.5)]);
        assert_eq!(g.remove_edge(0, 1).unwrap(), 1.5);
        assert!(matches!(g.remove_edge(0, 1), Err(Error::MissingEdge(0, 1))));
        assert!(g.in_edges(1).is_empty());
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2, 0.0)]);
    }
}

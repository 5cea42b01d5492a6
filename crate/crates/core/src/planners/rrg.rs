use super::{Counters, Extender, Planner, PlannerParams, Roadmap};
use crate::cspace::{Path, Scenario};
use crate::dynsp::Sssp;
use crate::error::Result;

/// Rapidly-exploring random graph with incrementally maintained shortest paths.
#[derive(Debug, Clone)]
pub struct Rrg<'a> {
    ext: Extender<'a>,
    graph: Sssp,
}

impl<'a> Rrg<'a> {
    pub fn new(scenario: &'a Scenario, params: &PlannerParams) -> Result<Rrg<'a>> {
        Ok(Rrg {
            ext: Extender::new(scenario, params)?,
            graph: Sssp::new(1, 0)?,
        })
    }

    pub fn sssp(&self) -> &Sssp {
        &self.graph
    }

    pub fn cost(&self, x: usize) -> f64 {
        self.graph.cost(x)
    }

    pub(crate) fn extender(&self) -> &Extender<'a> {
        &self.ext
    }

    /// One iteration; returns the vertex it added.
    pub(crate) fn step_detail(&mut self) -> Result<Option<usize>> {
        let Some(e) = self.ext.extend()? else { return Ok(None) };
        let v = self.graph.add_vertex();
        debug_assert_eq!(v, e.new);
        self.graph.insert_edge(e.nearest, v, e.dist)?;
        self.graph.insert_edge(v, e.nearest, e.dist)?;
        for x in self.ext.near(v) {
            if x == e.nearest {
                continue;
            }
            let (a, b) = (self.ext.config(x).clone(), self.ext.config(v).clone());
            if self.ext.lp.certify(x, v, &a, &b) {
                let d = self.ext.dist(x, v);
                self.graph.insert_edge(x, v, d)?;
                self.graph.insert_edge(v, x, d)?;
            }
        }
        Ok(Some(v))
    }
}

impl Planner for Rrg<'_> {
    fn name(&self) -> String {
        "rrg".into()
    }

    fn step(&mut self) -> Result<()> {
        self.step_detail().map(|_| ())
    }

    fn iterations(&self) -> u64 {
        self.ext.iterations
    }

    fn best_cost(&self) -> f64 {
        self.ext.best_goal(|g| self.graph.cost(g)).map_or(f64::INFINITY, |b| b.1)
    }

    fn solution(&self) -> Option<Path> {
        let (mut g, _) = self.ext.best_goal(|g| self.graph.cost(g))?;
        let mut ids = vec![g];
        while let Some(p) = self.graph.parent(g) {
            ids.push(p);
            g = p;
        }
        ids.reverse();
        Some(self.ext.path(&ids))
    }

    fn counters(&self) -> Counters {
        self.ext.counters(self.graph.delta_hat() as u64, self.graph.graph().num_edges() as u64)
    }

    fn roadmap(&self) -> Roadmap {
        let n = self.graph.graph().num_vertices();
        Roadmap {
            vertices: self.ext.index.configs().to_vec(),
            costs: self.graph.costs().to_vec(),
            parent: (0..n).map(|x| self.graph.parent(x)).collect(),
            edges: self.graph.graph().edges().collect(),
        }
    }
}

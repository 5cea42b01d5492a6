use super::{Counters, Extender, Planner, PlannerParams, Roadmap, Tree};
use crate::cspace::{Path, Scenario};
use crate::dynsp::Sssp;
use crate::error::Result;
use crate::queue::{KeyedQueue, Len};

/// LBT-RRT: a lower-bound graph `G_lb` of lazily inserted edges and an
/// approximation tree `T_apx` of certified edges over the same vertices.
///
/// After every iteration `cost_Tapx(x) ≤ (1 + ε) · cost_Glb(x)` for every vertex.
#[derive(Debug, Clone)]
pub struct LbtRrt<'a> {
    ext: Extender<'a>,
    epsilon: f64,
    glb: Sssp,
    tapx: Tree,
    queue: KeyedQueue<Len>,
}

impl<'a> LbtRrt<'a> {
    pub fn new(scenario: &'a Scenario, params: &PlannerParams) -> Result<LbtRrt<'a>> {
        Ok(LbtRrt {
            ext: Extender::new(scenario, params)?,
            epsilon: params.epsilon,
            glb: Sssp::new(1, 0)?,
            tapx: Tree::new(),
            queue: KeyedQueue::new(),
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn lower_bound(&self) -> &Sssp {
        &self.glb
    }

    pub fn approximation(&self) -> &Tree {
        &self.tapx
    }

    pub(crate) fn extender(&self) -> &Extender<'a> {
        &self.ext
    }

    /// `G_lb` as a roadmap.
    pub fn lower_bound_roadmap(&self) -> Roadmap {
        let n = self.glb.graph().num_vertices();
        Roadmap {
            vertices: self.ext.index.configs().to_vec(),
            costs: self.glb.costs().to_vec(),
            parent: (0..n).map(|x| self.glb.parent(x)).collect(),
            edges: self.glb.graph().edges().collect(),
        }
    }

    #[inline]
    fn violates(&self, x: usize) -> bool {
        self.tapx.cost(x) > (1.0 + self.epsilon) * self.glb.cost(x)
    }

    /// Adds `(x1, x2)` to `G_lb` and repairs `T_apx` where the bound breaks.
    pub(crate) fn consider_edge(&mut self, x1: usize, x2: usize) -> Result<()> {
        if self.glb.graph().has_edge(x1, x2) || self.ext.lp.cache().is_blocked(x1, x2) {
            return Ok(());
        }
        let w = self.ext.dist(x1, x2);
        let through = self.glb.cost(x1) + w;
        // Certify up front when the insertion would break the bound at x2.
        if through < self.glb.cost(x2) && self.tapx.cost(x2) > (1.0 + self.epsilon) * through {
            let (a, b) = (self.ext.config(x1).clone(), self.ext.config(x2).clone());
            if !self.ext.lp.certify(x1, x2, &a, &b) {
                return Ok(());
            }
        }
        for x in self.glb.insert_edge(x1, x2, w)? {
            if self.violates(x) {
                self.queue.push_or_update(x, Len(self.glb.cost(x)));
            }
        }
        while let Some((_, x)) = self.queue.pop() {
            if !self.violates(x) {
                continue;
            }
            let p = self.glb.parent(x).expect("violating vertex is reachable in G_lb");
            let (a, b) = (self.ext.config(p).clone(), self.ext.config(x).clone());
            if self.ext.lp.certify(p, x, &a, &b) {
                let w = self.glb.graph().weight(p, x).expect("parent edge");
                self.tapx.set_parent(x, p, w);
            } else {
                for y in self.glb.delete_edge(p, x)? {
                    let c = Len(self.glb.cost(y));
                    self.queue.update_if_present(y, c);
                }
                self.queue.push_or_update(x, Len(self.glb.cost(x)));
            }
        }
        Ok(())
    }

    pub(crate) fn step_detail(&mut self) -> Result<Option<usize>> {
        let Some(e) = self.ext.extend()? else { return Ok(None) };
        let v = self.glb.add_vertex();
        let t = self.tapx.add(e.nearest, e.dist);
        debug_assert!(v == e.new && t == e.new);
        self.consider_edge(e.nearest, v)?;
        self.consider_edge(v, e.nearest)?;
        let mut near: Vec<(f64, usize)> = self
            .ext
            .near(v)
            .into_iter()
            .map(|x| (self.glb.cost(x) + self.ext.dist(x, v), x))
            .collect();
        near.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        for &(_, x) in &near {
            self.consider_edge(x, v)?;
        }
        for &(_, x) in &near {
            self.consider_edge(v, x)?;
        }
        Ok(Some(v))
    }

    #[cfg(test)]
    pub(crate) fn corrupt_tapx_cost(&mut self, x: usize, c: f64) {
        self.tapx.corrupt_cost(x, c);
    }
}

impl Planner for LbtRrt<'_> {
    fn name(&self) -> String {
        format!("lbt_rrt({})", self.epsilon)
    }

    fn step(&mut self) -> Result<()> {
        self.step_detail().map(|_| ())
    }

    fn iterations(&self) -> u64 {
        self.ext.iterations
    }

    fn best_cost(&self) -> f64 {
        self.ext.best_goal(|g| self.tapx.cost(g)).map_or(f64::INFINITY, |b| b.1)
    }

    fn solution(&self) -> Option<Path> {
        let (g, _) = self.ext.best_goal(|g| self.tapx.cost(g))?;
        Some(self.ext.path(&self.tapx.path_to(g)))
    }

    fn counters(&self) -> Counters {
        self.ext.counters(self.glb.delta_hat() as u64, self.glb.graph().num_edges() as u64)
    }

    fn roadmap(&self) -> Roadmap {
        Roadmap::from_tree(self.ext.index.configs(), self.tapx.costs(), self.tapx.parents(), |v| self.tapx.weight(v))
    }
}

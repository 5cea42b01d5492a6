use super::{Counters, Extender, Planner, PlannerParams, Roadmap};
use crate::cspace::{in_goal, Configuration, Path, Scenario};
use crate::dynsp::Lpa;
use crate::error::Result;

/// Lazy, goal-biased LBT-RRT.
///
/// The bound is kept only for the goal: the cheapest certified route to the goal
/// region costs at most `(1 + ε)` times the cheapest lazy one. Until `G_lb`
/// reaches the goal, no neighbor edge is ever checked.
#[derive(Debug, Clone)]
pub struct LazyLbtRrt<'a> {
    ext: Extender<'a>,
    epsilon: f64,
    glb: Lpa,
    tapx: Lpa,
}

fn heuristic(scenario: &Scenario, q: &Configuration) -> f64 {
    let g = scenario.goal();
    (scenario.space().dist(q, &g.center) - g.radius).max(0.0)
}

impl<'a> LazyLbtRrt<'a> {
    pub fn new(scenario: &'a Scenario, params: &PlannerParams) -> Result<LazyLbtRrt<'a>> {
        let ext = Extender::new(scenario, params)?;
        let h = heuristic(scenario, scenario.start());
        let g = in_goal(scenario, scenario.start());
        let mut tapx = Lpa::new(h, g);
        tapx.shortest_path();
        Ok(LazyLbtRrt {
            ext,
            epsilon: params.epsilon,
            glb: Lpa::new(h, g),
            tapx,
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Lazy lower-bound graph.
    pub fn lower_bound(&self) -> &Lpa {
        &self.glb
    }

    /// Graph of certified edges.
    pub fn approximation(&self) -> &Lpa {
        &self.tapx
    }

    pub(crate) fn extender(&self) -> &Extender<'a> {
        &self.ext
    }

    /// Cheapest lazy route to the goal, refreshed on demand.
    pub fn lower_bound_cost(&mut self) -> f64 {
        if !self.glb.is_fresh() {
            self.glb.shortest_path();
        }
        self.glb.cost()
    }

    fn apx_cost(&mut self) -> f64 {
        if !self.tapx.is_fresh() {
            self.tapx.shortest_path();
        }
        self.tapx.cost()
    }

    fn consider_edge(&mut self, x1: usize, x2: usize) -> Result<()> {
        if self.glb.graph().has_edge(x1, x2) || self.ext.lp.cache().is_blocked(x1, x2) {
            return Ok(());
        }
        let bound = 1.0 + self.epsilon;
        let mut c_apx = self.apx_cost();
        self.glb.insert_edge(x1, x2, self.ext.dist(x1, x2))?;
        'search: loop {
            let goal = self.glb.shortest_path();
            let c_lb = self.glb.cost();
            if !(c_apx > bound * c_lb) {
                break;
            }
            // Certify the lazy route backward from the goal.
            let mut x = goal.expect("finite lower bound has a goal vertex");
            while let Some(p) = self.glb.parent(x)? {
                let (a, b) = (self.ext.config(p).clone(), self.ext.config(x).clone());
                if self.ext.lp.certify(p, x, &a, &b) {
                    if !self.tapx.graph().has_edge(p, x) {
                        let w = self.glb.graph().weight(p, x).expect("path edge");
                        self.tapx.insert_edge(p, x, w)?;
                    }
                    c_apx = self.apx_cost();
                    if !(c_apx > bound * c_lb) {
                        break 'search;
                    }
                    x = p;
                } else {
                    self.glb.delete_edge(p, x)?;
                    continue 'search;
                }
            }
            unreachable!("a fully certified lazy route meets the bound");
        }
        Ok(())
    }

    pub(crate) fn step_detail(&mut self) -> Result<Option<usize>> {
        let Some(e) = self.ext.extend()? else { return Ok(None) };
        let q = self.ext.config(e.new).clone();
        let (h, g) = (heuristic(self.ext.scenario, &q), in_goal(self.ext.scenario, &q));
        let v = self.glb.add_vertex(h, g);
        let t = self.tapx.add_vertex(h, g);
        debug_assert!(v == e.new && t == e.new);
        self.tapx.insert_edge(e.nearest, v, e.dist)?;
        self.tapx.insert_edge(v, e.nearest, e.dist)?;
        self.consider_edge(e.nearest, v)?;
        self.consider_edge(v, e.nearest)?;
        let near = self.ext.near(v);
        for &x in &near {
            self.consider_edge(x, v)?;
        }
        for &x in &near {
            self.consider_edge(v, x)?;
        }
        self.apx_cost();
        Ok(Some(v))
    }
}

impl Planner for LazyLbtRrt<'_> {
    fn name(&self) -> String {
        format!("lazy_lbt_rrt({})", self.epsilon)
    }

    fn step(&mut self) -> Result<()> {
        self.step_detail().map(|_| ())
    }

    fn iterations(&self) -> u64 {
        self.ext.iterations
    }

    fn best_cost(&self) -> f64 {
        debug_assert!(self.tapx.is_fresh());
        self.tapx.cost()
    }

    fn solution(&self) -> Option<Path> {
        if self.tapx.path().is_empty() {
            return None;
        }
        Some(self.ext.path(self.tapx.path()))
    }

    fn counters(&self) -> Counters {
        self.ext.counters(0, self.glb.graph().num_edges() as u64)
    }

    fn roadmap(&self) -> Roadmap {
        let n = self.tapx.graph().num_vertices();
        Roadmap {
            vertices: self.ext.index.configs().to_vec(),
            costs: (0..n).map(|x| self.tapx.g_value(x)).collect(),
            parent: Vec::new(),
            edges: self.tapx.graph().edges().collect(),
        }
    }
}

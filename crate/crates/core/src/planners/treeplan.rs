use super::{Counters, Extender, Planner, PlannerParams, Roadmap, Tree};
use crate::cspace::{Path, Scenario};
use crate::error::Result;

/// RRT, or RRT* when rewiring is on.
///
/// RRT* visits the neighbors in order of `cost(x) + d(x, x_new)`, so the first
/// collision-free candidate is the best parent and the rest are skipped.
#[derive(Debug, Clone)]
pub struct TreePlanner<'a> {
    ext: Extender<'a>,
    tree: Tree,
    rewire: bool,
}

impl<'a> TreePlanner<'a> {
    pub fn rrt(scenario: &'a Scenario, params: &PlannerParams) -> Result<TreePlanner<'a>> {
        Ok(TreePlanner {
            ext: Extender::new(scenario, params)?,
            tree: Tree::new(),
            rewire: false,
        })
    }

    pub fn rrt_star(scenario: &'a Scenario, params: &PlannerParams) -> Result<TreePlanner<'a>> {
        let mut p = TreePlanner::rrt(scenario, params)?;
        p.rewire = true;
        Ok(p)
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn set_rewire(&mut self, on: bool) {
        self.rewire = on;
    }

    pub fn rewires(&self) -> bool {
        self.rewire
    }

    pub(crate) fn extender(&self) -> &Extender<'a> {
        &self.ext
    }

    /// Drops the roadmap but keeps the random stream and the counters.
    pub(crate) fn restart(&mut self) {
        self.ext.reset_roadmap();
        self.tree = Tree::new();
    }

    fn improve(&mut self, new: usize, nearest: usize) {
        let mut cand: Vec<(f64, usize, f64)> = self
            .ext
            .near(new)
            .into_iter()
            .map(|x| {
                let d = self.ext.dist(x, new);
                (self.tree.cost(x) + d, x, d)
            })
            .collect();
        cand.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        for &(c, x, d) in &cand {
            if x == nearest || c >= self.tree.cost(new) {
                break;
            }
            let (a, b) = (self.ext.config(x).clone(), self.ext.config(new).clone());
            if self.ext.lp.certify(x, new, &a, &b) {
                self.tree.set_parent(new, x, d);
                break;
            }
        }
        for &(_, x, d) in &cand {
            if Some(x) == self.tree.parent(new) {
                continue;
            }
            if self.tree.cost(new) + d < self.tree.cost(x) {
                let (a, b) = (self.ext.config(new).clone(), self.ext.config(x).clone());
                if self.ext.lp.certify(new, x, &a, &b) {
                    self.tree.set_parent(x, new, d);
                }
            }
        }
    }
}

impl Planner for TreePlanner<'_> {
    fn name(&self) -> String {
        if self.rewire { "rrt_star" } else { "rrt" }.into()
    }

    fn step(&mut self) -> Result<()> {
        self.step_detail().map(|_| ())
    }

    fn iterations(&self) -> u64 {
        self.ext.iterations
    }

    fn best_cost(&self) -> f64 {
        self.ext.best_goal(|g| self.tree.cost(g)).map_or(f64::INFINITY, |b| b.1)
    }

    fn solution(&self) -> Option<Path> {
        let (g, _) = self.ext.best_goal(|g| self.tree.cost(g))?;
        Some(self.ext.path(&self.tree.path_to(g)))
    }

    fn counters(&self) -> Counters {
        self.ext.counters(0, self.tree.len() as u64 - 1)
    }

    fn roadmap(&self) -> Roadmap {
        Roadmap::from_tree(self.ext.index.configs(), self.tree.costs(), self.tree.parents(), |v| self.tree.weight(v))
    }
}

/// RRT until a solution exists, then RRT*.
///
/// With `reuse` the RRT tree becomes the initial RRT* tree; otherwise RRT*
/// starts over from the start configuration and the RRT solution is kept as a
/// fallback until it is beaten.
#[derive(Debug, Clone)]
pub struct RrtThenRrtStar<'a> {
    inner: TreePlanner<'a>,
    reuse: bool,
    fallback: Option<(f64, Path)>,
}

impl<'a> RrtThenRrtStar<'a> {
    pub fn new(scenario: &'a Scenario, params: &PlannerParams, reuse: bool) -> Result<RrtThenRrtStar<'a>> {
        Ok(RrtThenRrtStar {
            inner: TreePlanner::rrt(scenario, params)?,
            reuse,
            fallback: None,
        })
    }

    pub fn switched(&self) -> bool {
        self.inner.rewires()
    }
}

impl Planner for RrtThenRrtStar<'_> {
    fn name(&self) -> String {
        if self.reuse { "rrt_rrt_star" } else { "rrt_rrt_star_fresh" }.into()
    }

    fn step(&mut self) -> Result<()> {
        self.inner.step()?;
        if !self.inner.rewires() && self.inner.best_cost() < f64::INFINITY {
            if !self.reuse {
                self.fallback = Some((self.inner.best_cost(), self.inner.solution().expect("solved")));
                self.inner.restart();
            }
            self.inner.set_rewire(true);
        }
        Ok(())
    }

    fn iterations(&self) -> u64 {
        self.inner.iterations()
    }

    fn best_cost(&self) -> f64 {
        let c = self.inner.best_cost();
        self.fallback.as_ref().map_or(c, |f| f.0.min(c))
    }

    fn solution(&self) -> Option<Path> {
        match &self.fallback {
            Some((c, p)) if *c <= self.inner.best_cost() => Some(p.clone()),
            _ => self.inner.solution(),
        }
    }

    fn counters(&self) -> Counters {
        self.inner.counters()
    }

    fn roadmap(&self) -> Roadmap {
        self.inner.roadmap()
    }
}

impl TreePlanner<'_> {
    pub(crate) fn step_detail(&mut self) -> Result<Option<usize>> {
        let Some(e) = self.ext.extend()? else { return Ok(None) };
        let id = self.tree.add(e.nearest, e.dist);
        debug_assert_eq!(id, e.new);
        if self.rewire {
            self.improve(e.new, e.nearest);
        }
        Ok(Some(id))
    }
}

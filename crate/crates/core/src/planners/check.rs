//! Lockstep comparison against a shadow RRG fed the same random stream.

use super::{drive, LazyLbtRrt, LbtRrt, Planner, PlannerKind, PlannerParams, Roadmap, Rrg, RunOutput, TreePlanner, WallClock};
use crate::cspace::{Path, Scenario};
use crate::error::{Error, Result};
use std::fmt::Write as _;

const SLACK: f64 = 1e-9;
const KEEP: usize = 50;

#[inline]
fn le(a: f64, b: f64) -> bool {
    a <= b || a - b <= SLACK * (1.0 + b.abs())
}

/// Findings of an instrumented run. Empty means every check passed.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ViolationReport {
    pub iterations_checked: u64,
    pub violation_count: u64,
    /// First violations, in order of detection.
    pub violations: Vec<String>,
    /// Largest `|cost(x) − cost_RRG(x)| / (1 + cost_RRG(x))` over checked vertices.
    pub max_rrg_gap: f64,
}

impl ViolationReport {
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }

    fn flag(&mut self, it: u64, msg: impl FnOnce() -> String) {
        self.violation_count += 1;
        if self.violations.len() < KEEP {
            self.violations.push(format!("iteration {it}: {}", msg()));
        }
    }

    /// `#` comment lines for the trace footer.
    pub fn footer(&self) -> String {
        let mut s = format!(
            "# check iterations {}\n# check violations {}\n# check max_rrg_gap {:e}\n",
            self.iterations_checked, self.violation_count, self.max_rrg_gap
        );
        for v in &self.violations {
            writeln!(s, "# violation {v}").unwrap();
        }
        s
    }
}

trait Audited: Planner {
    fn advance(&mut self) -> Result<Option<usize>>;
    fn audit(&mut self, shadow: &Rrg, added: Option<usize>, it: u64, report: &mut ViolationReport);
}

fn same_vertices(configs: &[crate::cspace::Configuration], shadow: &Rrg, it: u64, r: &mut ViolationReport) {
    let s = shadow.extender().index.configs();
    if configs.len() != s.len() {
        r.flag(it, || format!("vertex count {} vs shadow {}", configs.len(), s.len()));
    } else if configs.last() != s.last() {
        r.flag(it, || format!("vertex {} differs from shadow", configs.len() - 1));
    }
}

impl Audited for LbtRrt<'_> {
    fn advance(&mut self) -> Result<Option<usize>> {
        self.step_detail()
    }

    fn audit(&mut self, shadow: &Rrg, added: Option<usize>, it: u64, r: &mut ViolationReport) {
        let ext = self.extender();
        same_vertices(ext.index.configs(), shadow, it, r);
        let glb = self.lower_bound();
        if let Some(v) = added {
            let g = shadow.sssp().graph();
            for &(y, _) in g.out_edges(v) {
                if !glb.graph().has_edge(v, y) {
                    r.flag(it, || format!("RRG edge ({v}, {y}) missing from G_lb"));
                }
            }
            for &(y, _) in g.in_edges(v) {
                if !glb.graph().has_edge(y, v) {
                    r.flag(it, || format!("RRG edge ({y}, {v}) missing from G_lb"));
                }
            }
        }
        let tapx = self.approximation();
        let bound = 1.0 + self.epsilon();
        let n = tapx.len().min(shadow.sssp().graph().num_vertices());
        for x in 0..n {
            let (ct, cl, cr) = (tapx.cost(x), glb.cost(x), shadow.cost(x));
            if !le(ct, bound * cl) {
                r.flag(it, || format!("bounded approximation broken at {x}: {ct} > (1+ε)·{cl}"));
            }
            if !le(cl, cr) {
                r.flag(it, || format!("lower bound broken at {x}: {cl} > RRG {cr}"));
            }
            if let Some(p) = tapx.parent(x) {
                if !ext.lp.cache().is_free(p, x) {
                    r.flag(it, || format!("T_apx edge ({p}, {x}) not certified"));
                }
                let want = tapx.cost(p) + ext.dist(p, x);
                if (ct - want).abs() > SLACK * (1.0 + want) {
                    r.flag(it, || format!("T_apx cost at {x} is {ct}, path sums to {want}"));
                }
            }
            if cr.is_finite() {
                r.max_rrg_gap = r.max_rrg_gap.max((ct - cr).abs() / (1.0 + cr));
            }
        }
        if self.epsilon() == 0.0 && r.max_rrg_gap > SLACK {
            let g = r.max_rrg_gap;
            r.flag(it, || format!("ε = 0 but T_apx deviates from RRG by {g:e}"));
        }
    }
}

impl Audited for LazyLbtRrt<'_> {
    fn advance(&mut self) -> Result<Option<usize>> {
        self.step_detail()
    }

    fn audit(&mut self, shadow: &Rrg, added: Option<usize>, it: u64, r: &mut ViolationReport) {
        same_vertices(self.extender().index.configs(), shadow, it, r);
        let c_lb = self.lower_bound_cost();
        let c_apx = self.best_cost();
        let c_rrg = shadow.best_cost();
        let glb = self.lower_bound().graph();
        if let Some(v) = added {
            let g = shadow.sssp().graph();
            for &(y, _) in g.out_edges(v) {
                if !glb.has_edge(v, y) {
                    r.flag(it, || format!("RRG edge ({v}, {y}) missing from G_lb"));
                }
            }
            for &(y, _) in g.in_edges(v) {
                if !glb.has_edge(y, v) {
                    r.flag(it, || format!("RRG edge ({y}, {v}) missing from G_lb"));
                }
            }
        }
        if !le(c_apx, (1.0 + self.epsilon()) * c_lb) {
            r.flag(it, || format!("goal bound broken: {c_apx} > (1+ε)·{c_lb}"));
        }
        if !le(c_lb, c_rrg) {
            r.flag(it, || format!("lower bound broken at the goal: {c_lb} > RRG {c_rrg}"));
        }
        let cache = self.extender().lp.cache();
        for (u, v, _) in self.approximation().graph().edges() {
            if !cache.is_free(u, v) {
                r.flag(it, || format!("T_apx edge ({u}, {v}) not certified"));
            }
        }
        if c_rrg.is_finite() && c_apx.is_finite() {
            r.max_rrg_gap = r.max_rrg_gap.max((c_apx - c_rrg).abs() / (1.0 + c_rrg));
        }
    }
}

impl Audited for TreePlanner<'_> {
    fn advance(&mut self) -> Result<Option<usize>> {
        self.step_detail()
    }

    fn audit(&mut self, shadow: &Rrg, _added: Option<usize>, it: u64, r: &mut ViolationReport) {
        let ext = self.extender();
        same_vertices(ext.index.configs(), shadow, it, r);
        let tree = self.tree();
        let n = tree.len().min(shadow.sssp().graph().num_vertices());
        for x in 0..n {
            let (ct, cr) = (tree.cost(x), shadow.cost(x));
            if !le(cr, ct) {
                r.flag(it, || format!("tree cost {ct} at {x} beats RRG {cr}"));
            }
            if let Some(p) = tree.parent(x) {
                if !ext.lp.cache().is_free(p, x) {
                    r.flag(it, || format!("tree edge ({p}, {x}) not certified"));
                }
                if !shadow.sssp().graph().has_edge(p, x) {
                    r.flag(it, || format!("tree edge ({p}, {x}) not in the RRG"));
                }
            }
            if cr.is_finite() {
                r.max_rrg_gap = r.max_rrg_gap.max((ct - cr).abs() / (1.0 + cr));
            }
        }
    }
}

struct Lockstep<'a, P> {
    subject: P,
    shadow: Rrg<'a>,
    report: ViolationReport,
}

impl<P: Audited> Planner for Lockstep<'_, P> {
    fn name(&self) -> String {
        self.subject.name()
    }

    fn step(&mut self) -> Result<()> {
        let added = self.subject.advance()?;
        let shadow_added = self.shadow.step_detail()?;
        let it = self.subject.iterations();
        if added != shadow_added {
            self.report.flag(it, || format!("added {added:?}, shadow added {shadow_added:?}"));
        }
        self.subject.audit(&self.shadow, added, it, &mut self.report);
        self.report.iterations_checked += 1;
        Ok(())
    }

    fn iterations(&self) -> u64 {
        self.subject.iterations()
    }

    fn best_cost(&self) -> f64 {
        self.subject.best_cost()
    }

    fn solution(&self) -> Option<Path> {
        self.subject.solution()
    }

    fn counters(&self) -> super::Counters {
        self.subject.counters()
    }

    fn roadmap(&self) -> Roadmap {
        self.subject.roadmap()
    }
}

fn lockstep<'a, P: Audited>(subject: P, scenario: &'a Scenario, params: &PlannerParams) -> Result<(RunOutput, ViolationReport)> {
    let mut l = Lockstep {
        subject,
        shadow: Rrg::new(scenario, params)?,
        report: ViolationReport::default(),
    };
    let trace = drive(&mut l, &params.stop, &WallClock::start())?;
    let out = RunOutput {
        trace,
        roadmap: l.roadmap(),
        path: l.solution(),
    };
    Ok((out, l.report))
}

/// Runs `kind` next to a shadow RRG and audits both after every iteration.
///
/// Supported: RRT, RRT*, LBT-RRT and lazy LBT-RRT.
pub fn run_checked(kind: PlannerKind, scenario: &Scenario, params: &PlannerParams) -> Result<(RunOutput, ViolationReport)> {
    let mut p = params.clone();
    if let Some(e) = kind.epsilon() {
        p.epsilon = e;
    }
    p.validate()?;
    match kind {
        PlannerKind::Rrt => lockstep(TreePlanner::rrt(scenario, &p)?, scenario, &p),
        PlannerKind::RrtStar => lockstep(TreePlanner::rrt_star(scenario, &p)?, scenario, &p),
        PlannerKind::Lbt { .. } => lockstep(LbtRrt::new(scenario, &p)?, scenario, &p),
        PlannerKind::LazyLbt { .. } => lockstep(LazyLbtRrt::new(scenario, &p)?, scenario, &p),
        other => Err(Error::Unsupported(format!("instrumented mode is not available for {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cspace::{geometry::Polygon, GoalRegion, RobotModel, SpaceDefinition};
    use crate::cspace::Configuration;

    fn box_world() -> Scenario {
        let space = SpaceDefinition::euclidean(vec![[0.0, 10.0], [0.0, 10.0]]).unwrap();
        Scenario::new(
            "box",
            space,
            RobotModel::Point,
            vec![Polygon::rect(4.0, 2.0, 6.0, 8.0)],
            Configuration::new(vec![1.0, 5.0]),
            GoalRegion {
                center: Configuration::new(vec![9.0, 5.0]),
                radius: 0.5,
            },
        )
        .unwrap()
    }

    #[test]
    fn clean_run_has_empty_report() {
        let s = box_world();
        let p = PlannerParams::for_scenario(&s).with_stop(super::super::StopCondition::iterations(300));
        for kind in [PlannerKind::Lbt { epsilon: 0.2 }, PlannerKind::LazyLbt { epsilon: 0.2 }, PlannerKind::RrtStar] {
            let (_, r) = run_checked(kind, &s, &p).unwrap();
            assert!(r.is_clean(), "{kind}: {:?}", r.violations);
            assert_eq!(r.iterations_checked, 300);
        }
    }

    #[test]
    fn corrupted_tapx_is_detected() {
        let s = box_world();
        let p = PlannerParams::for_scenario(&s).with_epsilon(0.1);
        let mut l = Lockstep {
            subject: LbtRrt::new(&s, &p).unwrap(),
            shadow: Rrg::new(&s, &p).unwrap(),
            report: ViolationReport::default(),
        };
        for _ in 0..50 {
            l.step().unwrap();
        }
        assert!(l.report.is_clean());
        let n = l.subject.approximation().len();
        l.subject.corrupt_tapx_cost(n - 1, 1e6);
        l.subject.audit(&l.shadow, None, 51, &mut l.report);
        assert!(!l.report.is_clean());
        assert!(l.report.footer().contains("# violation "));
    }
}

//! Tree and graph planners over a shared sample, nearest, steer, check skeleton.
//!
//! Every planner consumes its random stream only for sampling (one goal-bias
//! coin, then the sample), so runs with the same seed see the same sample
//! sequence and, because the nearest-edge test is identical, build the same
//! vertex set.

mod check;
mod lazy;
mod lbt;
mod local;
mod rrg;
mod roadmap;
mod trace;
mod tree;
mod treeplan;

pub use check::{run_checked, ViolationReport};
pub use lazy::LazyLbtRrt;
pub use lbt::LbtRrt;
pub use local::{EdgeCache, EdgeState, LocalPlanner};
pub use rrg::Rrg;
pub use roadmap::Roadmap;
pub use trace::{AnytimeTrace, Clock, Counters, Status, TickClock, TraceEvent, WallClock};
pub use tree::Tree;
pub use treeplan::{RrtThenRrtStar, TreePlanner};

use crate::cspace::{in_goal, sample_free_capped, sample_goal, steer_unchecked, Configuration, Path, Scenario, DEFAULT_SAMPLE_CAP};
use crate::error::{Error, Result};
use crate::nn::{rrg_neighbor_count, NeighborIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// When a run stops. All set limits apply; the first one reached wins.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StopCondition {
    pub max_iterations: Option<u64>,
    pub time_budget: Option<f64>,
    pub first_solution: bool,
}

impl StopCondition {
    pub fn iterations(n: u64) -> StopCondition {
        StopCondition {
            max_iterations: Some(n),
            ..Default::default()
        }
    }

    pub fn time(seconds: f64) -> StopCondition {
        StopCondition {
            time_budget: Some(seconds),
            ..Default::default()
        }
    }

    /// Stops at the first solution, or after `cap` iterations.
    pub fn first_solution(cap: u64) -> StopCondition {
        StopCondition {
            max_iterations: Some(cap),
            first_solution: true,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_iterations.is_none() && self.time_budget.is_none() {
            return Err(Error::InvalidArgument("stop condition needs an iteration or time limit".into()));
        }
        if let Some(t) = self.time_budget {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(Error::InvalidArgument(format!("bad time budget {t}")));
            }
        }
        Ok(())
    }
}

/// Parameters shared by the incremental planners.
#[derive(Debug, Clone, PartialEq)]
pub struct PlannerParams {
    /// Steering step.
    pub eta: f64,
    /// Probability of sampling the goal region instead of the whole space.
    pub goal_bias: f64,
    /// Approximation slack for the LBT variants.
    pub epsilon: f64,
    pub stop: StopCondition,
    pub seed: u64,
    /// Motion-check resolution.
    pub delta: f64,
}

impl PlannerParams {
    /// Defaults for `scenario`: step of 1/20 of the box diagonal, 5% goal bias,
    /// motion resolution from the scenario, 1000 iterations.
    pub fn for_scenario(scenario: &Scenario) -> PlannerParams {
        PlannerParams {
            eta: scenario.space().euclidean_diagonal() / 20.0,
            goal_bias: 0.05,
            epsilon: 0.4,
            stop: StopCondition::iterations(1000),
            seed: 0,
            delta: scenario.default_delta(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> PlannerParams {
        self.seed = seed;
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> PlannerParams {
        self.epsilon = epsilon;
        self
    }

    pub fn with_stop(mut self, stop: StopCondition) -> PlannerParams {
        self.stop = stop;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eta > 0.0 && self.eta.is_finite()) {
            return Err(Error::InvalidArgument(format!("eta must be positive, got {}", self.eta)));
        }
        if !(0.0..1.0).contains(&self.goal_bias) {
            return Err(Error::InvalidArgument(format!("goal bias must be in [0, 1), got {}", self.goal_bias)));
        }
        if !(self.epsilon >= 0.0) {
            return Err(Error::InvalidArgument(format!("epsilon must be nonnegative, got {}", self.epsilon)));
        }
        if !(self.delta > 0.0 && self.delta.is_finite()) {
            return Err(Error::InvalidArgument(format!("delta must be positive, got {}", self.delta)));
        }
        self.stop.validate()
    }
}

/// A planner that advances one iteration at a time.
pub trait Planner {
    fn name(&self) -> String;
    /// Runs one iteration.
    fn step(&mut self) -> Result<()>;
    fn iterations(&self) -> u64;
    /// Cost of the current best solution, `INF` if none.
    fn best_cost(&self) -> f64;
    fn solution(&self) -> Option<Path>;
    fn counters(&self) -> Counters;
    /// The roadmap solutions are read from.
    fn roadmap(&self) -> Roadmap;
}

/// Planner variants selectable by name.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlannerKind {
    Rrt,
    Rrg,
    RrtStar,
    /// RRT until the first solution, then RRT*; `reuse` keeps the RRT tree.
    RrtThenRrtStar { reuse: bool },
    Lbt { epsilon: f64 },
    LazyLbt { epsilon: f64 },
    /// Anytime FMT*: each iteration doubles the sample count.
    Afmt { n0: usize },
    LbtAfmt { epsilon: f64, n0: usize },
}

impl PlannerKind {
    /// Parses `rrt`, `rrg`, `rrt_star`, `rrt_rrt_star`, `lbt_rrt`, `lazy_lbt_rrt`,
    /// `afmt`, `lbt_afmt`; `epsilon` applies to the LBT variants.
    pub fn parse(name: &str, epsilon: f64) -> Result<PlannerKind> {
        Ok(match name {
            "rrt" => PlannerKind::Rrt,
            "rrg" => PlannerKind::Rrg,
            "rrt_star" | "rrtstar" => PlannerKind::RrtStar,
            "rrt_rrt_star" | "rrt+rrt_star" => PlannerKind::RrtThenRrtStar { reuse: true },
            "rrt_rrt_star_fresh" => PlannerKind::RrtThenRrtStar { reuse: false },
            "lbt_rrt" | "lbt" => PlannerKind::Lbt { epsilon },
            "lazy_lbt_rrt" | "lazy_lbt" => PlannerKind::LazyLbt { epsilon },
            "afmt" => PlannerKind::Afmt { n0: crate::fmt::DEFAULT_N0 },
            "lbt_afmt" => PlannerKind::LbtAfmt {
                epsilon,
                n0: crate::fmt::DEFAULT_N0,
            },
            other => return Err(Error::InvalidArgument(format!("unknown planner {other:?}"))),
        })
    }

    pub fn label(&self) -> &'static str {
        match self {
            PlannerKind::Rrt => "rrt",
            PlannerKind::Rrg => "rrg",
            PlannerKind::RrtStar => "rrt_star",
            PlannerKind::RrtThenRrtStar { reuse: true } => "rrt_rrt_star",
            PlannerKind::RrtThenRrtStar { reuse: false } => "rrt_rrt_star_fresh",
            PlannerKind::Lbt { .. } => "lbt_rrt",
            PlannerKind::LazyLbt { .. } => "lazy_lbt_rrt",
            PlannerKind::Afmt { .. } => "afmt",
            PlannerKind::LbtAfmt { .. } => "lbt_afmt",
        }
    }

    pub fn epsilon(&self) -> Option<f64> {
        match self {
            PlannerKind::Lbt { epsilon } | PlannerKind::LazyLbt { epsilon } | PlannerKind::LbtAfmt { epsilon, .. } => Some(*epsilon),
            _ => None,
        }
    }

    /// Builds the planner. The epsilon stored in the kind overrides `params.epsilon`.
    pub fn build<'a>(&self, scenario: &'a Scenario, params: &PlannerParams) -> Result<Box<dyn Planner + 'a>> {
        let mut p = params.clone();
        if let Some(e) = self.epsilon() {
            p.epsilon = e;
        }
        p.validate()?;
        Ok(match *self {
            PlannerKind::Rrt => Box::new(TreePlanner::rrt(scenario, &p)?),
            PlannerKind::RrtStar => Box::new(TreePlanner::rrt_star(scenario, &p)?),
            PlannerKind::RrtThenRrtStar { reuse } => Box::new(RrtThenRrtStar::new(scenario, &p, reuse)?),
            PlannerKind::Rrg => Box::new(Rrg::new(scenario, &p)?),
            PlannerKind::Lbt { .. } => Box::new(LbtRrt::new(scenario, &p)?),
            PlannerKind::LazyLbt { .. } => Box::new(LazyLbtRrt::new(scenario, &p)?),
            PlannerKind::Afmt { n0 } => Box::new(crate::fmt::Afmt::new(scenario, &p, n0, None)?),
            PlannerKind::LbtAfmt { epsilon, n0 } => Box::new(crate::fmt::Afmt::new(scenario, &p, n0, Some(epsilon))?),
        })
    }
}

impl fmt::Display for PlannerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.epsilon() {
            Some(e) => write!(f, "{}({e})", self.label()),
            None => f.write_str(self.label()),
        }
    }
}

/// Result of a finished run.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub trace: AnytimeTrace,
    pub roadmap: Roadmap,
    pub path: Option<Path>,
}

/// Steps `planner` until `stop` holds, recording each cost improvement.
pub fn drive(planner: &mut dyn Planner, stop: &StopCondition, clock: &dyn Clock) -> Result<AnytimeTrace> {
    stop.validate()?;
    let mut events: Vec<TraceEvent> = Vec::new();
    let mut best = f64::INFINITY;
    let record = |planner: &dyn Planner, best: &mut f64, events: &mut Vec<TraceEvent>, t: f64| {
        let c = planner.best_cost();
        if c < *best {
            *best = c;
            events.push(TraceEvent {
                elapsed: t,
                iteration: planner.iterations(),
                cost: c,
            });
        }
    };
    record(planner, &mut best, &mut events, clock.elapsed());
    let mut elapsed;
    loop {
        elapsed = clock.elapsed();
        if stop.max_iterations.is_some_and(|n| planner.iterations() >= n)
            || stop.time_budget.is_some_and(|t| elapsed >= t)
            || (stop.first_solution && best < f64::INFINITY)
        {
            break;
        }
        planner.step()?;
        let t = clock.elapsed();
        record(planner, &mut best, &mut events, t);
    }
    Ok(AnytimeTrace {
        status: if best < f64::INFINITY { Status::Solved } else { Status::NoSolution },
        events,
        counters: planner.counters(),
        iterations: planner.iterations(),
        elapsed,
    })
}

/// Builds and runs `kind` on a wall clock.
pub fn run(kind: PlannerKind, scenario: &Scenario, params: &PlannerParams) -> Result<RunOutput> {
    run_with_clock(kind, scenario, params, &WallClock::start())
}

pub fn run_with_clock(kind: PlannerKind, scenario: &Scenario, params: &PlannerParams, clock: &dyn Clock) -> Result<RunOutput> {
    let mut p = kind.build(scenario, params)?;
    let trace = drive(p.as_mut(), &params.stop, clock)?;
    Ok(RunOutput {
        trace,
        roadmap: p.roadmap(),
        path: p.solution(),
    })
}

pub fn run_rrt(scenario: &Scenario, params: &PlannerParams) -> Result<RunOutput> {
    run(PlannerKind::Rrt, scenario, params)
}

pub fn run_rrg(scenario: &Scenario, params: &PlannerParams) -> Result<RunOutput> {
    run(PlannerKind::Rrg, scenario, params)
}

pub fn run_rrt_star(scenario: &Scenario, params: &PlannerParams) -> Result<RunOutput> {
    run(PlannerKind::RrtStar, scenario, params)
}

pub fn run_lbt_rrt(scenario: &Scenario, params: &PlannerParams) -> Result<RunOutput> {
    run(PlannerKind::Lbt { epsilon: params.epsilon }, scenario, params)
}

pub fn run_lazy_lbt_rrt(scenario: &Scenario, params: &PlannerParams) -> Result<RunOutput> {
    run(PlannerKind::LazyLbt { epsilon: params.epsilon }, scenario, params)
}

/// The shared iteration skeleton: sampling, nearest vertex, steering and the
/// nearest-edge check.
#[derive(Debug, Clone)]
pub(crate) struct Extender<'a> {
    pub scenario: &'a Scenario,
    pub eta: f64,
    pub goal_bias: f64,
    rng: ChaCha8Rng,
    pub index: NeighborIndex,
    pub lp: LocalPlanner<'a>,
    pub samples: u64,
    sample_checks: u64,
    pub iterations: u64,
    /// Vertices inside the goal region, in insertion order.
    pub goal_vertices: Vec<usize>,
}

/// A vertex added by [`Extender::extend`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct Extension {
    pub nearest: usize,
    pub new: usize,
    pub dist: f64,
}

impl<'a> Extender<'a> {
    pub fn new(scenario: &'a Scenario, params: &PlannerParams) -> Result<Extender<'a>> {
        params.validate()?;
        let mut index = NeighborIndex::new(scenario.space().clone());
        index.insert(scenario.start().clone());
        let goal_vertices = if in_goal(scenario, scenario.start()) { vec![0] } else { Vec::new() };
        Ok(Extender {
            scenario,
            eta: params.eta,
            goal_bias: params.goal_bias,
            rng: ChaCha8Rng::seed_from_u64(params.seed),
            index,
            lp: LocalPlanner::new(scenario, params.delta),
            samples: 0,
            sample_checks: 0,
            iterations: 0,
            goal_vertices,
        })
    }

    pub fn config(&self, id: usize) -> &Configuration {
        self.index.get(id)
    }

    pub fn dist(&self, u: usize, v: usize) -> f64 {
        self.scenario.space().dist(self.index.get(u), self.index.get(v))
    }

    /// One iteration's sampling and extension; `None` if no vertex was added.
    pub fn extend(&mut self) -> Result<Option<Extension>> {
        self.iterations += 1;
        let goal = self.goal_bias > 0.0 && self.rng.gen::<f64>() < self.goal_bias;
        self.samples += 1;
        let x_rand = if goal {
            sample_goal(self.scenario, &mut self.rng, DEFAULT_SAMPLE_CAP, &mut self.sample_checks)?
        } else {
            sample_free_capped(self.scenario, &mut self.rng, DEFAULT_SAMPLE_CAP, &mut self.sample_checks)?
        };
        let nearest = self.index.nearest(&x_rand)?;
        let x_near = self.index.get(nearest);
        let x_new = steer_unchecked(self.scenario.space(), x_near, &x_rand, self.eta);
        if &x_new == x_near {
            return Ok(None);
        }
        let x_near = x_near.clone();
        if !self.lp.check(&x_near, &x_new) {
            return Ok(None);
        }
        let dist = self.scenario.space().dist(&x_near, &x_new);
        let is_goal = in_goal(self.scenario, &x_new);
        let new = self.index.insert(x_new);
        self.lp.cache_mut().record(nearest, new, EdgeState::Free);
        if is_goal {
            self.goal_vertices.push(new);
        }
        Ok(Some(Extension { nearest, new, dist }))
    }

    /// `k_RRG log |V|` nearest neighbors of `v`, excluding `v`.
    pub fn near(&self, v: usize) -> Vec<usize> {
        let k = rrg_neighbor_count(self.index.len());
        self.index.k_nearest(self.index.get(v), k, Some(v))
    }

    /// Cheapest goal vertex under `cost`; ties go to the smaller id.
    pub fn best_goal(&self, cost: impl Fn(usize) -> f64) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64)> = None;
        for &g in &self.goal_vertices {
            let c = cost(g);
            if c < f64::INFINITY && best.is_none_or(|(b, bc)| c < bc || (c == bc && g < b)) {
                best = Some((g, c));
            }
        }
        best
    }

    pub fn path(&self, ids: &[usize]) -> Path {
        Path::new(ids.iter().map(|&i| self.index.get(i).clone()).collect())
    }

    pub fn counters(&self, delta_hat: u64, edges: u64) -> Counters {
        Counters {
            samples: self.samples,
            lp_calls: self.lp.calls(),
            cc_calls: self.sample_checks + self.lp.checks(),
            delta_hat,
            vertices: self.index.len() as u64,
            edges,
        }
    }
}

impl Extender<'_> {
    pub(crate) fn reset_roadmap(&mut self) {
        let mut index = NeighborIndex::new(self.scenario.space().clone());
        index.insert(self.scenario.start().clone());
        self.index = index;
        self.lp.clear_cache();
        self.goal_vertices = if in_goal(self.scenario, self.scenario.start()) { vec![0] } else { Vec::new() };
    }
}

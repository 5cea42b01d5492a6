//! LBT-RRT on the bundled maze: prints each cost improvement and the counters.
//!
//!     cargo run --release --example plan_maze -- [EPSILON] [ITERATIONS] [SEED]

use lbt_planner::bench::scenarios;
use lbt_planner::planners::{run, PlannerKind, PlannerParams, StopCondition};

fn main() -> lbt_planner::Result<()> {
    let mut args = std::env::args().skip(1);
    let epsilon: f64 = args.next().map_or(0.4, |a| a.parse().expect("epsilon"));
    let iterations: u64 = args.next().map_or(20_000, |a| a.parse().expect("iterations"));
    let seed: u64 = args.next().map_or(1, |a| a.parse().expect("seed"));

    let maze = scenarios::bundled("maze").expect("bundled");
    let params = PlannerParams::for_scenario(&maze).with_seed(seed).with_stop(StopCondition::iterations(iterations));
    let out = run(PlannerKind::Lbt { epsilon }, &maze, &params)?;

    let best = maze.best_known().map(|b| b.cost).unwrap_or(f64::NAN);
    println!("maze, lbt_rrt({epsilon}), seed {seed}; best known {best:.3}");
    for e in &out.trace.events {
        println!("  iteration {:>6}  {:>8.4} s  cost {:.4}  ({:.3}x best)", e.iteration, e.elapsed, e.cost, e.cost / best);
    }
    if out.trace.events.is_empty() {
        println!("  no solution in {iterations} iterations");
    }
    let c = out.trace.counters;
    println!("vertices {}  edges {}  local planner calls {}  collision checks {}", c.vertices, c.edges, c.lp_calls, c.cc_calls);
    Ok(())
}

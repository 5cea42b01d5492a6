//! Lazy LBT-RRT defers collision checks until a goal is reachable in the
//! lower-bound graph, so before the first solution it makes exactly the calls
//! RRT makes.

use lbt_planner::bench::scenarios;
use lbt_planner::planners::{run, PlannerKind, PlannerParams, StopCondition};

fn main() -> lbt_planner::Result<()> {
    let s = scenarios::bundled("alternating_gaps").expect("bundled");
    println!("{:>4} {:>5} | {:>6} {:>10} | {:>6} {:>10} | {:>6} {:>10}", "seed", "iters", "rrt", "", "lbt", "", "lazy", "");
    for seed in 0..8 {
        for iterations in [500, 3000] {
            let p = PlannerParams::for_scenario(&s).with_seed(seed).with_stop(StopCondition::iterations(iterations));
            let mut cells = Vec::new();
            for kind in [PlannerKind::Rrt, PlannerKind::Lbt { epsilon: 0.4 }, PlannerKind::LazyLbt { epsilon: 0.4 }] {
                let out = run(kind, &s, &p)?;
                let cost = out.trace.best_cost().map_or("unsolved".into(), |c| format!("{c:.3}"));
                cells.push(format!("{:>6} {:>10}", out.trace.counters.lp_calls, cost));
            }
            println!("{seed:>4} {iterations:>5} | {}", cells.join(" | "));
        }
    }
    Ok(())
}

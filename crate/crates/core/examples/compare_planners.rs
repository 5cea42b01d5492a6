//! Every incremental planner on one scenario under the same iteration budget,
//! with shortcut costs normalised by the scenario's best-known cost.
//!
//!     cargo run --release --example compare_planners -- [SCENARIO] [ITERATIONS] [RUNS]

use lbt_planner::bench::{execute_run, median, scenarios};
use lbt_planner::planners::{PlannerKind, PlannerParams, StopCondition};

fn main() -> lbt_planner::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "alternating_gaps".into());
    let budget: u64 = args.next().map_or(2000, |a| a.parse().expect("iterations"));
    let runs: u64 = args.next().map_or(20, |a| a.parse().expect("runs"));
    let scenario = scenarios::bundled(&name).expect("bundled scenario name");

    let kinds = [
        PlannerKind::Rrt,
        PlannerKind::RrtStar,
        PlannerKind::Rrg,
        PlannerKind::RrtThenRrtStar { reuse: true },
        PlannerKind::Lbt { epsilon: 0.1 },
        PlannerKind::Lbt { epsilon: 0.4 },
        PlannerKind::LazyLbt { epsilon: 0.4 },
    ];
    println!("{name}, {budget} iterations, {runs} seeds");
    println!("{:<22} {:>8} {:>12} {:>12}", "planner", "success", "median norm", "median calls");
    for kind in kinds {
        let mut costs = Vec::new();
        let mut calls = Vec::new();
        for seed in 0..runs {
            let params = PlannerParams::for_scenario(&scenario).with_seed(seed).with_stop(StopCondition::iterations(budget));
            let row = execute_run(kind, &scenario, &params, 100, budget as f64)?;
            calls.push(row.lp_calls as f64);
            if let Some(c) = row.cost_norm {
                costs.push(c);
            }
        }
        let m = median(&costs).map_or("-".to_string(), |m| format!("{m:.4}"));
        println!("{:<22} {:>7}/{runs} {:>12} {:>12.0}", kind.to_string(), costs.len(), m, median(&calls).unwrap());
    }
    Ok(())
}

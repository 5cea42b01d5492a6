//! How epsilon trades path quality for local-planner calls in LBT-RRT.
//! Epsilon 0 behaves like RRG, a huge epsilon like RRT.

use lbt_planner::bench::{median, scenarios};
use lbt_planner::planners::{run, PlannerKind, PlannerParams, StopCondition};

fn main() -> lbt_planner::Result<()> {
    let s = scenarios::bundled("alternating_gaps").expect("bundled");
    let best = s.best_known().expect("annotated").cost;
    println!("{:>8} {:>10} {:>12} {:>10}", "epsilon", "solved", "median cost", "lp calls");
    for epsilon in [0.0, 0.05, 0.1, 0.2, 0.4, 0.8, 1.6, 1e9] {
        let (mut costs, mut calls) = (Vec::new(), Vec::new());
        for seed in 0..10 {
            let p = PlannerParams::for_scenario(&s).with_seed(seed).with_stop(StopCondition::iterations(3000));
            let out = run(PlannerKind::Lbt { epsilon }, &s, &p)?;
            calls.push(out.trace.counters.lp_calls as f64);
            if let Some(c) = out.trace.best_cost() {
                costs.push(c / best);
            }
        }
        println!(
            "{epsilon:>8} {:>9}/10 {:>12} {:>10.0}",
            costs.len(),
            median(&costs).map_or("-".into(), |m| format!("{m:.4}")),
            median(&calls).unwrap()
        );
    }
    Ok(())
}

//! Instrumented run: LBT-RRT in lockstep with a shadow RRG on the same random
//! stream, auditing the lower-bound and approximation invariants each iteration.

use lbt_planner::bench::scenarios;
use lbt_planner::planners::{run_checked, PlannerKind, PlannerParams, StopCondition};

fn main() -> lbt_planner::Result<()> {
    let s = scenarios::bundled("alternating_gaps").expect("bundled");
    for kind in [
        PlannerKind::Lbt { epsilon: 0.0 },
        PlannerKind::Lbt { epsilon: 0.4 },
        PlannerKind::LazyLbt { epsilon: 0.4 },
        PlannerKind::RrtStar,
    ] {
        let p = PlannerParams::for_scenario(&s).with_seed(7).with_stop(StopCondition::iterations(2000));
        let (out, report) = run_checked(kind, &s, &p)?;
        println!(
            "{:<20} iterations {}  violations {}  max gap to RRG {:.3e}  cost {}",
            kind.to_string(),
            report.iterations_checked,
            report.violation_count,
            report.max_rrg_gap,
            out.trace.best_cost().map_or("-".into(), |c| format!("{c:.4}"))
        );
    }
    Ok(())
}

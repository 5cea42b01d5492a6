//! Draws the roadmap and solution of one planner run on a bundled scenario.
//!
//!     cargo run --release --example render_svg -- [SCENARIO] [PLANNER] [OUT.svg]

use lbt_planner::bench::{emit_svg, scenarios};
use lbt_planner::planners::{run, PlannerKind, PlannerParams, StopCondition};

fn main() -> lbt_planner::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "home".into());
    let planner = args.next().unwrap_or_else(|| "lbt_rrt".into());
    let out_file = args.next().map_or_else(|| std::env::temp_dir().join(format!("{name}_{planner}.svg")), Into::into);

    let s = scenarios::bundled(&name).expect("bundled scenario name");
    let kind = PlannerKind::parse(&planner, 0.4)?;
    let iterations = if matches!(kind, PlannerKind::Afmt { .. } | PlannerKind::LbtAfmt { .. }) { 6 } else { 3000 };
    let p = PlannerParams::for_scenario(&s).with_seed(0).with_stop(StopCondition::iterations(iterations));
    let out = run(kind, &s, &p)?;
    std::fs::write(&out_file, emit_svg(&out.roadmap, &s, out.path.as_ref())?)?;
    println!(
        "{kind} on {name}: {} edges, cost {}; wrote {}",
        out.roadmap.edges.len(),
        out.trace.best_cost().map_or("-".into(), |c| format!("{c:.3}")),
        out_file.display()
    );
    Ok(())
}

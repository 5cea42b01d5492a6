//! A rectangular robot that must turn to pass a slot, built in code, planned
//! with LBT-RRT and drawn to SVG.
//!
//!     cargo run --release --example se2_polygon_robot -- [OUT.svg]

use lbt_planner::bench::emit_svg;
use lbt_planner::cspace::geometry::Polygon;
use lbt_planner::cspace::{Configuration, GoalRegion, RobotModel, Scenario, SpaceDefinition};
use lbt_planner::planners::{run, PlannerKind, PlannerParams, StopCondition};
use std::f64::consts::FRAC_PI_2;

fn main() -> lbt_planner::Result<()> {
    let out_file = std::env::args().nth(1).map_or_else(|| std::env::temp_dir().join("se2_robot.svg"), Into::into);
    // 1.2 x 0.3 body; the slot in the wall is 0.5 wide, so the robot must
    // pass it lengthwise.
    let body = Polygon::rect(-0.6, -0.15, 0.6, 0.15);
    let walls = vec![Polygon::rect(0.0, 2.8, 2.75, 3.2), Polygon::rect(3.25, 2.8, 6.0, 3.2)];
    let scenario = Scenario::new(
        "slot",
        SpaceDefinition::se2([0.0, 6.0], [0.0, 6.0], 0.6)?,
        RobotModel::Polygon(body),
        walls,
        Configuration::new(vec![1.0, 1.0, 0.0]),
        GoalRegion {
            center: Configuration::new(vec![5.0, 5.0, 0.0]),
            radius: 0.4,
        },
    )?;
    let params = PlannerParams::for_scenario(&scenario).with_seed(2).with_stop(StopCondition::iterations(6000));
    let out = run(PlannerKind::Lbt { epsilon: 0.2 }, &scenario, &params)?;
    match &out.path {
        Some(path) => {
            let turned = path.waypoints.iter().any(|q| (q.coords()[2] - FRAC_PI_2).abs() < 0.6 || (q.coords()[2] - 3.0 * FRAC_PI_2).abs() < 0.6);
            println!("cost {:.3}, {} waypoints, turned to pass the slot: {turned}", out.trace.best_cost().unwrap(), path.len());
        }
        None => println!("no solution"),
    }
    std::fs::write(&out_file, emit_svg(&out.roadmap, &scenario, out.path.as_ref())?)?;
    println!("wrote {}", out_file.display());
    Ok(())
}

//! aFMT* and LBT-aFMT* on the corridors scenario (a hexagon robot in SE(2)).
//! Each iteration doubles the batch. The wide route around the block is found
//! early; the tunnel needs dense batches.

use lbt_planner::bench::scenarios;
use lbt_planner::planners::{PlannerKind, PlannerParams, StopCondition};
use std::time::Instant;

fn main() -> lbt_planner::Result<()> {
    let seed: u64 = std::env::args().nth(1).map_or(0, |a| a.parse().expect("seed"));
    let s = scenarios::bundled("corridors").expect("bundled");
    let wide = s.reference_routes()["wide"];
    println!("corridors, seed {seed}; no wide-route path is cheaper than {wide:.3}");
    for kind in [PlannerKind::Afmt { n0: 64 }, PlannerKind::LbtAfmt { epsilon: 0.5, n0: 64 }] {
        let p = PlannerParams::for_scenario(&s).with_seed(seed).with_stop(StopCondition::iterations(9));
        let start = Instant::now();
        let mut planner = kind.build(&s, &p)?;
        println!("{kind}");
        for _ in 0..9 {
            planner.step()?;
            let c = planner.counters();
            let cost = planner.best_cost();
            let route = if cost < wide { "tunnel" } else if cost.is_finite() { "wide" } else { "-" };
            println!(
                "  batch {:>2}  n {:>6}  cost {:>8.4} {:<6}  lp calls {:>7}  {:>7.3} s",
                planner.iterations(),
                c.vertices,
                cost,
                route,
                c.lp_calls,
                start.elapsed().as_secs_f64()
            );
        }
    }
    Ok(())
}

//! Shortcutting an RRT path: cost after increasing numbers of rounds.

use lbt_planner::bench::scenarios;
use lbt_planner::planners::{run, PlannerKind, PlannerParams, StopCondition};
use lbt_planner::postprocess::{path_cost, shortcut};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> lbt_planner::Result<()> {
    let s = scenarios::bundled("home").expect("bundled");
    let p = PlannerParams::for_scenario(&s).with_seed(4).with_stop(StopCondition::first_solution(50_000));
    let out = run(PlannerKind::Rrt, &s, &p)?;
    let Some(path) = out.path else {
        println!("RRT found no path");
        return Ok(());
    };
    let best = s.best_known().expect("annotated").cost;
    println!("rrt path: {} waypoints, cost {:.3} (best known {best:.3})", path.len(), path_cost(s.space(), &path));
    for rounds in [10, 50, 100, 400, 1600] {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let short = shortcut(&s, &path, rounds, p.delta, &mut rng);
        println!("{rounds:>5} rounds: {:>3} waypoints, cost {:.3}", short.len(), path_cost(s.space(), &short));
    }
    Ok(())
}

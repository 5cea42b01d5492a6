//! Writes a scenario to JSON, reads it back and checks a few configurations.

use lbt_planner::cspace::geometry::Polygon;
use lbt_planner::cspace::{collision_free_config, Configuration, GoalRegion, RobotModel, Scenario, SpaceDefinition};

fn main() -> lbt_planner::Result<()> {
    let s = Scenario::new(
        "two_pillars",
        SpaceDefinition::euclidean(vec![[0.0, 5.0], [0.0, 5.0]])?,
        RobotModel::Disc { radius: 0.25 },
        vec![Polygon::rect(1.5, 0.0, 2.0, 3.5), Polygon::rect(3.0, 1.5, 3.5, 5.0)],
        Configuration::new(vec![0.5, 0.5]),
        GoalRegion {
            center: Configuration::new(vec![4.5, 4.5]),
            radius: 0.3,
        },
    )?;
    let json = s.to_json();
    println!("{json}");
    let back = Scenario::from_json(&json)?;
    assert_eq!(back.obstacles(), s.obstacles());
    for xy in [[0.5, 0.5], [1.6, 1.0], [2.2, 1.0], [2.3, 1.0]] {
        let q = Configuration::new(xy.to_vec());
        println!("{xy:?} free: {}", collision_free_config(&back, &q));
    }
    println!("default motion resolution {}", back.default_delta());
    Ok(())
}

//! Bundled planar scenarios and their generators.
//!
//! All worlds live in `[0, 10]²`; corridors is SE(2), the rest are planar.
//! The shipped JSON files are produced by [`annotate`], which attaches
//! grid-oracle costs.

use super::oracle::{grid_shortest_path, grid_shortest_path_with, planar_proxy, ExactChecker, ProxyDisc, DEFAULT_RESOLUTION};
use crate::cspace::geometry::Polygon;
use crate::cspace::{BestKnown, Configuration, GoalRegion, RobotModel, Scenario, SpaceDefinition};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Names of the bundled scenarios, in the order [`bundled_scenarios`] returns them.
pub const BUNDLED: [&str; 5] = ["maze", "alternating_gaps", "corridors", "home", "empty"];

const FILES: [(&str, &str); 5] = [
    ("maze", include_str!("../../scenarios/maze.json")),
    ("alternating_gaps", include_str!("../../scenarios/alternating_gaps.json")),
    ("corridors", include_str!("../../scenarios/corridors.json")),
    ("home", include_str!("../../scenarios/home.json")),
    ("empty", include_str!("../../scenarios/empty.json")),
];

/// The shipped scenarios with their recorded best-known costs.
pub fn bundled_scenarios() -> Vec<Scenario> {
    FILES
        .iter()
        .map(|(name, text)| Scenario::from_json(text).unwrap_or_else(|e| panic!("bundled scenario {name}: {e}")))
        .collect()
}

/// One shipped scenario by name.
pub fn bundled(name: &str) -> Option<Scenario> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| Scenario::from_json(text).expect("bundled scenario parses"))
}

/// The JSON text of a shipped scenario.
pub fn bundled_json(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

fn plane() -> SpaceDefinition {
    SpaceDefinition::euclidean(vec![[0.0, 10.0], [0.0, 10.0]]).expect("valid bounds")
}

fn q(x: f64, y: f64) -> Configuration {
    Configuration::new(vec![x, y])
}

fn goal(x: f64, y: f64, radius: f64) -> GoalRegion {
    GoalRegion { center: q(x, y), radius }
}

/// Three nested square rings around the start; the exits alternate east,
/// west, east, so the way out spirals.
pub fn maze() -> Result<Scenario> {
    let (c, t, gap) = (5.0, 0.1, 0.5);
    let mut obs = Vec::new();
    for (k, h) in [1.5, 2.75, 4.0].into_iter().enumerate() {
        let (lo, hi) = (c - h, c + h);
        obs.push(Polygon::rect(lo - t, hi - t, hi + t, hi + t));
        obs.push(Polygon::rect(lo - t, lo - t, hi + t, lo + t));
        let (open, closed) = if k % 2 == 0 { (hi, lo) } else { (lo, hi) };
        obs.push(Polygon::rect(closed - t, lo - t, closed + t, hi + t));
        obs.push(Polygon::rect(open - t, lo - t, open + t, c - gap / 2.0));
        obs.push(Polygon::rect(open - t, c + gap / 2.0, open + t, hi + t));
    }
    Scenario::new("maze", plane(), RobotModel::Point, obs, q(c, c), goal(9.55, 9.55, 0.35))
}

const BARRIERS: [f64; 4] = [2.0, 4.0, 6.0, 8.0];
const SMALL_GAP_Y: [f64; 4] = [4.6, 5.4, 4.6, 5.4];
const SMALL_GAP: f64 = 0.25;

/// Four barriers, each with a large hole at alternating ends and a small hole
/// near the middle.
pub fn alternating_gaps() -> Result<Scenario> {
    let t = 0.1;
    let mut obs = Vec::new();
    for (i, (&x, &yc)) in BARRIERS.iter().zip(&SMALL_GAP_Y).enumerate() {
        let (a, b) = (yc - SMALL_GAP / 2.0, yc + SMALL_GAP / 2.0);
        if i % 2 == 0 {
            obs.push(Polygon::rect(x - t, 0.0, x + t, a));
            obs.push(Polygon::rect(x - t, b, x + t, 8.4));
            obs.push(Polygon::rect(x - t, 9.6, x + t, 10.0));
        } else {
            obs.push(Polygon::rect(x - t, 0.0, x + t, 0.4));
            obs.push(Polygon::rect(x - t, 1.6, x + t, a));
            obs.push(Polygon::rect(x - t, b, x + t, 10.0));
        }
    }
    Scenario::new("alternating_gaps", plane(), RobotModel::Point, obs, q(1.0, 5.0), goal(9.0, 5.0, 0.5))
}

const TUNNEL: [f64; 2] = [2.78, 3.22];

fn rock(c: [f64; 2], r: f64) -> Polygon {
    Polygon::new(
        (0..16)
            .map(|i| {
                let a = i as f64 * std::f64::consts::TAU / 16.0;
                [c[0] + r * a.cos(), c[1] + r * a.sin()]
            })
            .collect(),
    )
}

const HEX_RADIUS: f64 = 0.2;

/// Hexagonal robot that translates and rotates amid scattered rocks. A long
/// tunnel through a block gives the short route; it is barely wider than the
/// robot, so only dense sample sets thread it. The detour over the block is
/// easy but more than twice as long.
pub fn corridors() -> Result<Scenario> {
    let mut obs = vec![Polygon::rect(2.0, 0.0, 8.0, TUNNEL[0]), Polygon::rect(2.0, TUNNEL[1], 8.0, 8.5)];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut centers: Vec<[f64; 2]> = Vec::new();
    let near = |c: [f64; 2], p: [f64; 2], d: f64| (c[0] - p[0]).hypot(c[1] - p[1]) < d;
    while centers.len() < 40 {
        let c = [rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)];
        let by_block = c[0] > 1.6 && c[0] < 8.4 && c[1] < 8.9;
        let on_top_route = c[1] > 8.5 && c[1] < 9.6 && c[0] > 1.0 && c[0] < 9.0;
        if by_block
            || on_top_route
            || near(c, [1.0, 3.0], 0.9)
            || near(c, [9.0, 3.0], 0.9)
            || centers.iter().any(|&p| near(c, p, 0.9))
        {
            continue;
        }
        centers.push(c);
    }
    obs.extend(centers.into_iter().map(|c| rock(c, 0.2)));
    let hexagon = Polygon::new(
        (0..6)
            .map(|i| {
                let a = i as f64 * std::f64::consts::TAU / 6.0;
                [HEX_RADIUS * a.cos(), HEX_RADIUS * a.sin()]
            })
            .collect(),
    );
    // Angular weight = circumradius: one radian weighs the arc swept by a corner.
    let space = SpaceDefinition::se2([0.0, 10.0], [0.0, 10.0], HEX_RADIUS).expect("valid bounds");
    Scenario::new(
        "corridors",
        space,
        RobotModel::Polygon(hexagon),
        obs,
        Configuration::new(vec![1.0, 3.0, 0.0]),
        GoalRegion {
            center: Configuration::new(vec![9.0, 3.0, 0.0]),
            radius: 0.4,
        },
    )
}

/// Two rooms split by a wall with a narrow door near the start; the wall is
/// open at its far end, which gives an easy but long route.
pub fn home() -> Result<Scenario> {
    let obs = vec![
        Polygon::rect(0.0, 4.9, 1.85, 5.1),
        Polygon::rect(2.15, 4.9, 8.5, 5.1),
        Polygon::rect(4.0, 1.5, 6.0, 3.0),
        Polygon::rect(0.0, 2.5, 1.0, 3.5),
        Polygon::rect(2.6, 3.6, 3.2, 4.4),
        Polygon::rect(6.5, 6.5, 9.0, 7.5),
        Polygon::rect(3.5, 7.0, 5.5, 9.5),
        Polygon::rect(0.5, 6.0, 1.2, 6.8),
    ];
    Scenario::new("home", plane(), RobotModel::Point, obs, q(2.0, 1.0), goal(2.0, 9.0, 0.4))
}

pub fn empty() -> Result<Scenario> {
    Scenario::new("empty", plane(), RobotModel::Point, vec![], q(1.0, 1.0), goal(9.0, 9.0, 0.5))
}

/// The goal sits inside a closed ring: no solution exists.
pub fn enclosed() -> Result<Scenario> {
    let obs = vec![
        Polygon::rect(6.8, 6.8, 9.2, 7.0),
        Polygon::rect(6.8, 9.0, 9.2, 9.2),
        Polygon::rect(6.8, 6.8, 7.0, 9.2),
        Polygon::rect(9.0, 6.8, 9.2, 9.2),
    ];
    Scenario::new("enclosed", plane(), RobotModel::Point, obs, q(2.0, 2.0), goal(8.0, 8.0, 0.3))
}

/// Generator for a bundled scenario name.
pub fn generate(name: &str) -> Result<Scenario> {
    match name {
        "maze" => maze(),
        "alternating_gaps" => alternating_gaps(),
        "corridors" => corridors(),
        "home" => home(),
        "empty" => empty(),
        "enclosed" => enclosed(),
        other => Err(Error::InvalidArgument(format!("unknown scenario {other:?}"))),
    }
}

/// Obstacles that close the short passages, leaving only the wide route.
pub fn wide_route_plugs(name: &str) -> Vec<Polygon> {
    match name {
        "corridors" => vec![Polygon::rect(2.0, TUNNEL[0], 8.0, TUNNEL[1])],
        "alternating_gaps" => BARRIERS
            .iter()
            .zip(&SMALL_GAP_Y)
            .map(|(&x, &y)| Polygon::rect(x - 0.1, y - SMALL_GAP, x + 0.1, y + SMALL_GAP))
            .collect(),
        "home" => vec![Polygon::rect(1.8, 4.9, 2.2, 5.1)],
        _ => Vec::new(),
    }
}

/// Description stored with oracle costs.
pub fn oracle_method(n: usize) -> String {
    format!("grid dijkstra {n}x{n}, 16-connected, exact edge checks, string-pulled")
}

/// Attaches the grid-oracle best-known cost and, where the scenario has
/// passages to plug, the cost of the wide route.
///
/// For polygon robots the best-known cost comes from the circumscribed-disc
/// proxy, so it is achievable. The wide-route cost comes from the inscribed
/// disc, so no path through the wide route is cheaper.
pub fn annotate(scenario: Scenario, n: usize) -> Result<Scenario> {
    let polygon = matches!(scenario.robot(), RobotModel::Polygon(_));
    let outer = planar_proxy(&scenario, ProxyDisc::Circumscribed)?;
    let best = grid_shortest_path(&outer, n)?
        .ok_or_else(|| Error::Scenario(format!("{}: grid oracle found no path", scenario.name())))?;
    let mut method = oracle_method(n);
    if polygon {
        method.push_str(", circumscribed-disc proxy at fixed heading");
    }
    let plugs = wide_route_plugs(scenario.name());
    let mut s = scenario.with_best_known(BestKnown { cost: best.cost, method });
    if !plugs.is_empty() {
        let inner = planar_proxy(&s, ProxyDisc::Inscribed)?;
        let mut obs = inner.obstacles().to_vec();
        obs.extend(plugs);
        let chk = ExactChecker::with_obstacles(&inner, obs)?;
        if let Some(wide) = grid_shortest_path_with(&inner, &chk, n)? {
            s = s.with_reference_route("wide", wide.cost);
        }
    }
    Ok(s)
}

/// [`annotate`] at the default resolution.
pub fn annotate_default(scenario: Scenario) -> Result<Scenario> {
    annotate(scenario, DEFAULT_RESOLUTION)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cspace::collision_free_config;

    #[test]
    fn bundled_files_parse_and_are_annotated() {
        let all = bundled_scenarios();
        assert_eq!(all.len(), BUNDLED.len());
        for (s, name) in all.iter().zip(BUNDLED) {
            assert_eq!(s.name(), name);
            assert!(collision_free_config(s, s.start()), "{name}: start in collision");
            let best = s.best_known().unwrap_or_else(|| panic!("{name}: no best-known cost"));
            assert!(best.cost > 0.0 && best.cost.is_finite());
        }
    }

    #[test]
    fn bundled_files_match_generators() {
        for name in BUNDLED {
            let shipped = bundled(name).unwrap();
            let fresh = generate(name).unwrap();
            assert_eq!(shipped.obstacles(), fresh.obstacles(), "{name}");
            assert_eq!(shipped.start(), fresh.start(), "{name}");
            assert_eq!(shipped.goal(), fresh.goal(), "{name}");
        }
    }

    #[test]
    fn stored_costs_match_oracle() {
        for name in BUNDLED {
            let shipped = bundled(name).unwrap();
            let again = annotate(generate(name).unwrap(), DEFAULT_RESOLUTION).unwrap();
            assert_eq!(shipped.best_known(), again.best_known(), "{name}");
            assert_eq!(shipped.reference_routes(), again.reference_routes(), "{name}");
        }
    }

    #[test]
    fn empty_world_cost_is_exact() {
        let s = bundled("empty").unwrap();
        let exact = 8.0 * 2f64.sqrt() - 0.5;
        assert!((s.best_known().unwrap().cost - exact).abs() < 1e-9);
    }

    #[test]
    fn narrow_passages_are_shorter() {
        for name in ["alternating_gaps", "corridors", "home"] {
            let s = bundled(name).unwrap();
            let best = s.best_known().unwrap().cost;
            let wide = s.reference_routes()["wide"];
            assert!(wide > best, "{name}: wide {wide} vs best {best}");
        }
    }

    #[test]
    fn hexagon_threads_tunnel_at_any_heading() {
        let s = corridors().unwrap();
        for k in 0..12 {
            let q = Configuration::new(vec![5.0, 3.0, k as f64 * 0.5]);
            assert!(collision_free_config(&s, &q), "heading {}", k as f64 * 0.5);
        }
        assert!(!collision_free_config(&s, &Configuration::new(vec![5.0, 2.7, 0.0])));
    }

    #[test]
    fn enclosed_goal_is_unreachable() {
        let s = enclosed().unwrap();
        assert!(grid_shortest_path(&s, 101).unwrap().is_none());
    }
}

use super::geometry::{Point2, Polygon};
use super::{normalize_angle, CoordKind, Configuration, SpaceDefinition};
use crate::error::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::path::Path as FsPath;

/// Rejection-sampling cap used by [`sample_free`].
pub const DEFAULT_SAMPLE_CAP: u64 = 1_000_000;

/// Robot geometry in its body frame.
#[derive(Debug, Clone, PartialEq)]
pub enum RobotModel {
    Point,
    Disc { radius: f64 },
    /// Counterclockwise, simple.
    Polygon(Polygon),
}

impl RobotModel {
    pub fn circumradius(&self) -> f64 {
        match self {
            RobotModel::Point => 0.0,
            RobotModel::Disc { radius } => *radius,
            RobotModel::Polygon(p) => p.circumradius(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            RobotModel::Point => Ok(()),
            RobotModel::Disc { radius } if *radius > 0.0 && radius.is_finite() => Ok(()),
            RobotModel::Disc { radius } => Err(Error::Scenario(format!("robot.radius must be positive, got {radius}"))),
            RobotModel::Polygon(p) if p.is_simple() => Ok(()),
            RobotModel::Polygon(_) => Err(Error::Scenario("robot.vertices must form a simple polygon".into())),
        }
    }
}

/// Metric ball around `center`.
#[derive(Debug, Clone, PartialEq)]
pub struct GoalRegion {
    pub center: Configuration,
    pub radius: f64,
}

/// Reference cost recorded with a scenario.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BestKnown {
    pub cost: f64,
    /// How the value was obtained.
    pub method: String,
}

/// A motion-planning query: free space, start, and goal region.
#[derive(Debug, Clone)]
pub struct Scenario {
    name: String,
    space: SpaceDefinition,
    robot: RobotModel,
    obstacles: Vec<Polygon>,
    start: Configuration,
    goal: GoalRegion,
    best_known: Option<BestKnown>,
    reference_routes: BTreeMap<String, f64>,
}

impl Scenario {
    pub fn new(
        name: impl Into<String>,
        space: SpaceDefinition,
        robot: RobotModel,
        obstacles: Vec<Polygon>,
        start: Configuration,
        goal: GoalRegion,
    ) -> Result<Scenario> {
        robot.validate()?;
        for (i, o) in obstacles.iter().enumerate() {
            if !o.is_simple() {
                return Err(Error::Scenario(format!("obstacles[{i}] is not a simple polygon")));
            }
        }
        space
            .validate(&start)
            .map_err(|e| Error::Scenario(format!("start: {e}")))?;
        space
            .validate(&goal.center)
            .map_err(|e| Error::Scenario(format!("goal.center: {e}")))?;
        if !(goal.radius > 0.0 && goal.radius.is_finite()) {
            return Err(Error::Scenario(format!("goal.radius must be positive, got {}", goal.radius)));
        }
        // Goal ball must reach the box.
        let gap2: f64 = space
            .kinds()
            .iter()
            .zip(space.bounds())
            .zip(goal.center.coords())
            .filter(|((k, _), _)| **k == CoordKind::Euclidean)
            .map(|((_, [lo, hi]), c)| {
                let d = if c < lo { lo - c } else if c > hi { c - hi } else { 0.0 };
                d * d
            })
            .sum();
        if gap2.sqrt() > goal.radius {
            return Err(Error::Scenario("goal region does not intersect the bounding box".into()));
        }
        let s = Scenario {
            name: name.into(),
            space,
            robot,
            obstacles,
            start,
            goal,
            best_known: None,
            reference_routes: BTreeMap::new(),
        };
        if !collision_free_config(&s, &s.start) {
            return Err(Error::Scenario("start configuration is in collision".into()));
        }
        Ok(s)
    }

    pub fn with_best_known(mut self, best: BestKnown) -> Scenario {
        self.best_known = Some(best);
        self
    }

    pub fn with_reference_route(mut self, name: impl Into<String>, cost: f64) -> Scenario {
        self.reference_routes.insert(name.into(), cost);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn space(&self) -> &SpaceDefinition {
        &self.space
    }
    pub fn robot(&self) -> &RobotModel {
        &self.robot
    }
    pub fn obstacles(&self) -> &[Polygon] {
        &self.obstacles
    }
    pub fn start(&self) -> &Configuration {
        &self.start
    }
    pub fn goal(&self) -> &GoalRegion {
        &self.goal
    }
    pub fn best_known(&self) -> Option<&BestKnown> {
        self.best_known.as_ref()
    }
    pub fn reference_routes(&self) -> &BTreeMap<String, f64> {
        &self.reference_routes
    }

    /// Motion-validation resolution: 1% of the bounding-box diagonal, and at
    /// most a tenth of the robot's circumradius so thin walls cannot slip
    /// between samples.
    pub fn default_delta(&self) -> f64 {
        let coarse = 0.01 * self.space.euclidean_diagonal();
        match self.robot.circumradius() {
            r if r > 0.0 => coarse.min(0.1 * r),
            _ => coarse,
        }
    }

    /// Same scenario with a different goal region.
    pub fn with_goal(&self, goal: GoalRegion) -> Result<Scenario> {
        let mut s = Scenario::new(
            self.name.clone(),
            self.space.clone(),
            self.robot.clone(),
            self.obstacles.clone(),
            self.start.clone(),
            goal,
        )?;
        s.best_known = None;
        s.reference_routes = BTreeMap::new();
        Ok(s)
    }

    /// Parses the JSON scenario format.
    pub fn from_json(text: &str) -> Result<Scenario> {
        let file: ScenarioFile = serde_json::from_str(text).map_err(|e| {
            Error::Scenario(format!("line {} column {}: {e}", e.line(), e.column()))
        })?;
        file.into_scenario()
    }

    pub fn load(path: impl AsRef<FsPath>) -> Result<Scenario> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Scenario::from_json(&text).map_err(|e| Error::Scenario(format!("{}: {e}", path.display())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ScenarioFile::from(self)).expect("scenario serializes")
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceFile {
    dimension: usize,
    tags: Vec<String>,
    bounds: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    w_theta: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RobotFile {
    #[serde(rename = "type")]
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Point2>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GoalFile {
    center: Vec<f64>,
    radius: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    name: String,
    space: SpaceFile,
    robot: RobotFile,
    obstacles: Vec<Vec<Point2>>,
    start: Vec<f64>,
    goal: GoalFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    best_known: Option<BestKnown>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    reference_routes: BTreeMap<String, f64>,
}

impl ScenarioFile {
    fn into_scenario(self) -> Result<Scenario> {
        let kinds = self
            .space
            .tags
            .iter()
            .enumerate()
            .map(|(i, t)| match t.as_str() {
                "e" => Ok(CoordKind::Euclidean),
                "a" => Ok(CoordKind::Angular),
                other => Err(Error::Scenario(format!("space.tags[{i}]: unknown tag {other:?}, expected \"e\" or \"a\""))),
            })
            .collect::<Result<Vec<_>>>()?;
        if kinds.len() != self.space.dimension {
            return Err(Error::Scenario(format!(
                "space.tags: {} tags for dimension {}",
                kinds.len(),
                self.space.dimension
            )));
        }
        // Bounds may list every coordinate or only the Euclidean ones.
        let n_euclid = kinds.iter().filter(|k| **k == CoordKind::Euclidean).count();
        let bounds = if self.space.bounds.len() == kinds.len() {
            self.space.bounds.clone()
        } else if self.space.bounds.len() == n_euclid {
            let mut it = self.space.bounds.iter();
            kinds
                .iter()
                .map(|k| match k {
                    CoordKind::Euclidean => *it.next().unwrap(),
                    CoordKind::Angular => [0.0, TAU],
                })
                .collect()
        } else {
            return Err(Error::Scenario(format!(
                "space.bounds: {} entries for dimension {}",
                self.space.bounds.len(),
                self.space.dimension
            )));
        };
        let robot = match self.robot.kind.as_str() {
            "point" => RobotModel::Point,
            "disc" => RobotModel::Disc {
                radius: self
                    .robot
                    .radius
                    .ok_or_else(|| Error::Scenario("robot.radius is required for a disc robot".into()))?,
            },
            "polygon" => RobotModel::Polygon(Polygon::new(
                self.robot
                    .vertices
                    .ok_or_else(|| Error::Scenario("robot.vertices is required for a polygon robot".into()))?,
            )),
            other => return Err(Error::Scenario(format!("robot.type: unknown robot {other:?}"))),
        };
        let w_theta = match self.space.w_theta {
            Some(w) => w,
            None => {
                let r = robot.circumradius();
                if r > 0.0 {
                    r
                } else {
                    1.0
                }
            }
        };
        let space = SpaceDefinition::new(kinds, bounds, w_theta).map_err(|e| Error::Scenario(format!("space: {e}")))?;
        let start = space.config(self.start).map_err(|e| Error::Scenario(format!("start: {e}")))?;
        let center = space
            .config(self.goal.center)
            .map_err(|e| Error::Scenario(format!("goal.center: {e}")))?;
        let obstacles = self.obstacles.into_iter().map(Polygon::new).collect();
        let mut s = Scenario::new(
            self.name,
            space,
            robot,
            obstacles,
            start,
            GoalRegion {
                center,
                radius: self.goal.radius,
            },
        )?;
        if let Some(b) = &self.best_known {
            if !(b.cost > 0.0 && b.cost.is_finite()) {
                return Err(Error::Scenario(format!("best_known.cost must be positive, got {}", b.cost)));
            }
        }
        s.best_known = self.best_known;
        s.reference_routes = self.reference_routes;
        Ok(s)
    }
}

impl From<&Scenario> for ScenarioFile {
    fn from(s: &Scenario) -> Self {
        let (kind, radius, vertices) = match &s.robot {
            RobotModel::Point => ("point", None, None),
            RobotModel::Disc { radius } => ("disc", Some(*radius), None),
            RobotModel::Polygon(p) => ("polygon", None, Some(p.vertices().to_vec())),
        };
        ScenarioFile {
            name: s.name.clone(),
            space: SpaceFile {
                dimension: s.space.dimension(),
                tags: s
                    .space
                    .kinds()
                    .iter()
                    .map(|k| if *k == CoordKind::Angular { "a" } else { "e" }.to_string())
                    .collect(),
                bounds: s.space.bounds().to_vec(),
                w_theta: Some(s.space.w_theta()),
            },
            robot: RobotFile {
                kind: kind.into(),
                radius,
                vertices,
            },
            obstacles: s.obstacles.iter().map(|o| o.vertices().to_vec()).collect(),
            start: s.start.coords().to_vec(),
            goal: GoalFile {
                center: s.goal.center.coords().to_vec(),
                radius: s.goal.radius,
            },
            best_known: s.best_known.clone(),
            reference_routes: s.reference_routes.clone(),
        }
    }
}

/// True if `q` places the robot inside the bounds and away from every obstacle.
/// Boundary contact with an obstacle is a collision.
pub fn collision_free_config(scenario: &Scenario, q: &Configuration) -> bool {
    let space = &scenario.space;
    if !space.in_bounds(q) {
        return false;
    }
    let p = q.position();
    match &scenario.robot {
        RobotModel::Point => !scenario.obstacles.iter().any(|o| o.contains(p)),
        RobotModel::Disc { radius } => {
            let b = space.bounds();
            if p[0] - radius < b[0][0] || p[0] + radius > b[0][1] || p[1] - radius < b[1][0] || p[1] + radius > b[1][1] {
                return false;
            }
            scenario.obstacles.iter().all(|o| {
                !o.bbox().inflate(*radius).contains(p) || o.distance_to(p) > *radius
            })
        }
        RobotModel::Polygon(body) => {
            let theta = space.angular_index().map_or(0.0, |i| q.coords()[i]);
            let placed = body.transformed(p[0], p[1], theta);
            let b = space.bounds();
            let inside = placed
                .vertices()
                .iter()
                .all(|v| v[0] >= b[0][0] && v[0] <= b[0][1] && v[1] >= b[1][0] && v[1] <= b[1][1]);
            inside && !scenario.obstacles.iter().any(|o| o.intersects_polygon(&placed))
        }
    }
}

/// Motion validation, counting configuration checks into `checks`.
///
/// Point robots use an exact segment test. Other robots are checked at both
/// endpoints and then by breadth-first bisection of the geodesic until adjacent
/// samples are at most `delta` apart.
pub fn motion_check(scenario: &Scenario, a: &Configuration, b: &Configuration, delta: f64, checks: &mut u64) -> bool {
    let space = &scenario.space;
    if let RobotModel::Point = scenario.robot {
        *checks += 2;
        if !space.in_bounds(a) || !space.in_bounds(b) {
            return false;
        }
        let (pa, pb) = (a.position(), b.position());
        return !scenario.obstacles.iter().any(|o| o.intersects_segment(pa, pb));
    }
    *checks += 1;
    if !collision_free_config(scenario, a) {
        return false;
    }
    if a == b {
        return true;
    }
    *checks += 1;
    if !collision_free_config(scenario, b) {
        return false;
    }
    let d = space.dist(a, b);
    if d <= delta {
        return true;
    }
    let levels = ((d / delta).log2().ceil() as u32).clamp(1, 30);
    let n = 1u64 << levels;
    for level in 1..=levels {
        let stride = n >> level;
        let mut i = stride;
        while i < n {
            *checks += 1;
            if !collision_free_config(scenario, &space.lerp(a, b, i as f64 / n as f64)) {
                return false;
            }
            i += 2 * stride;
        }
    }
    true
}

/// True if the geodesic from `a` to `b` stays in free space (see [`motion_check`]).
pub fn collision_free_motion(scenario: &Scenario, a: &Configuration, b: &Configuration, delta: f64) -> bool {
    let mut n = 0;
    motion_check(scenario, a, b, delta, &mut n)
}

fn uniform_config<R: Rng + ?Sized>(space: &SpaceDefinition, rng: &mut R) -> Configuration {
    Configuration::new(
        space
            .kinds()
            .iter()
            .zip(space.bounds())
            .map(|(k, [lo, hi])| match k {
                CoordKind::Euclidean => rng.gen_range(*lo..=*hi),
                CoordKind::Angular => normalize_angle(rng.gen_range(0.0..TAU)),
            })
            .collect(),
    )
}

/// Uniform rejection sampling of a free configuration.
pub fn sample_free<R: Rng + ?Sized>(scenario: &Scenario, rng: &mut R) -> Result<Configuration> {
    sample_free_capped(scenario, rng, DEFAULT_SAMPLE_CAP, &mut 0)
}

/// [`sample_free`] with an explicit rejection cap; counts configuration checks.
pub fn sample_free_capped<R: Rng + ?Sized>(scenario: &Scenario, rng: &mut R, cap: u64, checks: &mut u64) -> Result<Configuration> {
    for _ in 0..cap {
        let q = uniform_config(&scenario.space, rng);
        *checks += 1;
        if collision_free_config(scenario, &q) {
            return Ok(q);
        }
    }
    Err(Error::NoFreeSpace(cap))
}

/// Uniform sample from the free part of the goal ball.
pub fn sample_goal<R: Rng + ?Sized>(scenario: &Scenario, rng: &mut R, cap: u64, checks: &mut u64) -> Result<Configuration> {
    let space = &scenario.space;
    let GoalRegion { center, radius } = &scenario.goal;
    for _ in 0..cap {
        let q = Configuration::new(
            space
                .kinds()
                .iter()
                .zip(center.coords())
                .map(|(k, c)| match k {
                    CoordKind::Euclidean => rng.gen_range(c - radius..=c + radius),
                    CoordKind::Angular => {
                        let half = (radius / space.w_theta()).min(std::f64::consts::PI);
                        normalize_angle(c + rng.gen_range(-half..=half))
                    }
                })
                .collect(),
        );
        if space.dist(&q, center) > *radius {
            continue;
        }
        *checks += 1;
        if collision_free_config(scenario, &q) {
            return Ok(q);
        }
    }
    Err(Error::NoFreeSpace(cap))
}

/// Closed metric-ball membership.
pub fn in_goal(scenario: &Scenario, q: &Configuration) -> bool {
    scenario.space.dist(q, &scenario.goal.center) <= scenario.goal.radius
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn square_world(robot: RobotModel) -> Scenario {
        let space = SpaceDefinition::euclidean(vec![[-5.0, 10.0], [-5.0, 10.0]]).unwrap();
        Scenario::new(
            "square",
            space,
            robot,
            vec![Polygon::rect(0.0, 0.0, 1.0, 1.0)],
            Configuration::new(vec![5.0, 5.0]),
            GoalRegion {
                center: Configuration::new(vec![8.0, 8.0]),
                radius: 0.5,
            },
        )
        .unwrap()
    }

    fn q(v: &[f64]) -> Configuration {
        Configuration::new(v.to_vec())
    }

    #[test]
    fn point_config_examples() {
        let s = square_world(RobotModel::Point);
        assert!(collision_free_config(&s, &q(&[5.0, 5.0])));
        assert!(!collision_free_config(&s, &q(&[0.5, 0.5])));
        assert!(!collision_free_config(&s, &q(&[1.0, 0.5])));
        assert!(!collision_free_config(&s, &q(&[11.0, 0.5])));
    }

    #[test]
    fn disc_contact_is_collision() {
        let s = square_world(RobotModel::Disc { radius: 1.0 });
        assert!(!collision_free_config(&s, &q(&[2.0, 0.5])));
        assert!(collision_free_config(&s, &q(&[2.0 + 1e-9, 0.5])));
        // Brute force: the closest sampled boundary point is at distance 1.
        let sq = &s.obstacles()[0];
        let mut best = f64::INFINITY;
        for (a, b) in sq.edges() {
            for i in 0..=1000 {
                let t = i as f64 / 1000.0;
                let p = [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
                best = best.min((p[0] - 2.0).hypot(p[1] - 0.5));
            }
        }
        assert_eq!(best, 1.0);
        assert!(!collision_free_config(&s, &q(&[9.5, 5.0])), "disc must stay within bounds");
    }

    #[test]
    fn polygon_robot_rotation_matters() {
        let space = SpaceDefinition::se2([0.0, 10.0], [0.0, 10.0], 1.0).unwrap();
        let bar = Polygon::rect(-1.5, -0.1, 1.5, 0.1);
        // Two posts with a vertical slot between them.
        let obstacles = vec![Polygon::rect(3.0, 4.0, 4.8, 6.0), Polygon::rect(5.2, 4.0, 7.0, 6.0)];
        let s = Scenario::new(
            "slot",
            space,
            RobotModel::Polygon(bar),
            obstacles,
            Configuration::new(vec![5.0, 2.0, 0.0]),
            GoalRegion {
                center: Configuration::new(vec![5.0, 8.0, 0.0]),
                radius: 0.5,
            },
        )
        .unwrap();
        assert!(!collision_free_config(&s, &q(&[5.0, 5.0, 0.0])));
        assert!(collision_free_config(&s, &q(&[5.0, 5.0, std::f64::consts::FRAC_PI_2])));
        assert!(!collision_free_config(&s, &q(&[0.5, 5.0, 0.0])), "bar sticks out of the box");
        let up = std::f64::consts::FRAC_PI_2;
        assert!(collision_free_motion(&s, &q(&[5.0, 2.0, up]), &q(&[5.0, 8.0, up]), 0.05));
        assert!(!collision_free_motion(&s, &q(&[5.0, 2.0, 0.0]), &q(&[5.0, 8.0, 0.0]), 0.05));
    }

    #[test]
    fn point_motion_examples() {
        let s = square_world(RobotModel::Point);
        assert!(!collision_free_motion(&s, &q(&[-1.0, 0.5]), &q(&[2.0, 0.5]), 0.1));
        assert!(collision_free_motion(&s, &q(&[-1.0, 2.0]), &q(&[2.0, 2.0]), 0.1));
        assert!(collision_free_motion(&s, &q(&[3.0, 3.0]), &q(&[3.0, 3.0]), 0.1));
        // Grazing a corner counts as contact.
        assert!(!collision_free_motion(&s, &q(&[-1.0, 2.0]), &q(&[2.0, -1.0]), 0.1));
    }

    #[test]
    fn disc_motion_zero_length() {
        let s = square_world(RobotModel::Disc { radius: 0.3 });
        assert!(collision_free_motion(&s, &q(&[3.0, 3.0]), &q(&[3.0, 3.0]), 0.1));
        assert!(!collision_free_motion(&s, &q(&[-2.0, 0.5]), &q(&[3.0, 0.5]), 0.1));
    }

    #[test]
    fn sampling_is_deterministic_and_in_bounds() {
        let s = square_world(RobotModel::Point);
        let a = sample_free(&s, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = sample_free(&s, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        assert!(s.space().in_bounds(&a));
        let g = sample_goal(&s, &mut ChaCha8Rng::seed_from_u64(3), 1000, &mut 0).unwrap();
        assert!(in_goal(&s, &g));
    }

    #[test]
    fn no_free_space_error() {
        let space = SpaceDefinition::euclidean(vec![[0.0, 1.0], [0.0, 1.0]]).unwrap();
        let mut s = Scenario::new(
            "empty",
            space,
            RobotModel::Point,
            vec![],
            Configuration::new(vec![0.5, 0.5]),
            GoalRegion {
                center: Configuration::new(vec![0.9, 0.9]),
                radius: 0.05,
            },
        )
        .unwrap();
        s.obstacles.push(Polygon::rect(-1.0, -1.0, 2.0, 2.0));
        let r = sample_free_capped(&s, &mut ChaCha8Rng::seed_from_u64(1), 1000, &mut 0);
        assert!(matches!(r, Err(Error::NoFreeSpace(1000))));
    }

    #[test]
    fn goal_membership_is_closed() {
        let s = square_world(RobotModel::Point);
        assert!(in_goal(&s, &q(&[8.0, 8.0])));
        assert!(in_goal(&s, &q(&[8.5, 8.0])));
        assert!(!in_goal(&s, &q(&[8.5 + 1e-9, 8.0])));
    }

    #[test]
    fn json_round_trip_and_diagnostics() {
        let s = square_world(RobotModel::Disc { radius: 0.25 }).with_best_known(BestKnown {
            cost: 4.5,
            method: "test".into(),
        });
        let back = Scenario::from_json(&s.to_json()).unwrap();
        assert_eq!(back.to_json(), s.to_json());
        let err = Scenario::from_json("{\n \"name\": 3\n}").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let bad_tag = s.to_json().replace("\"e\"", "\"x\"");
        let err = Scenario::from_json(&bad_tag).unwrap_err().to_string();
        assert!(err.contains("space.tags"), "{err}");
    }

    #[test]
    fn start_in_collision_rejected() {
        let space = SpaceDefinition::euclidean(vec![[0.0, 4.0], [0.0, 4.0]]).unwrap();
        let r = Scenario::new(
            "bad",
            space,
            RobotModel::Point,
            vec![Polygon::rect(0.0, 0.0, 1.0, 1.0)],
            Configuration::new(vec![0.5, 0.5]),
            GoalRegion {
                center: Configuration::new(vec![3.0, 3.0]),
                radius: 0.5,
            },
        );
        assert!(r.is_err());
    }
}

//! Fine-grid shortest paths for planar point and disc robots.
//!
//! Grid points are joined to their 16 nearest lattice directions, every edge is
//! validated exactly, and the resulting path is string-pulled against the same
//! exact test. The cost is that of a feasible continuous path, so it is an
//! upper bound on the optimum that is typically within a fraction of a percent.
//!
//! Polygon robots in SE(2) go through [`planar_proxy`].

use crate::cspace::geometry::{point_segment_distance, segments_intersect, Point2, Polygon};
use crate::cspace::{CoordKind, Configuration, GoalRegion, RobotModel, Scenario, SpaceDefinition};
use crate::error::{Error, Result};
use crate::queue::{KeyedQueue, Len};

/// Grid points per axis used for bundled best-known costs.
pub const DEFAULT_RESOLUTION: usize = 401;

const OFFSETS: [(i64, i64); 16] = [
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (1, -1),
    (-1, 1),
    (-1, -1),
    (2, 1),
    (2, -1),
    (-2, 1),
    (-2, -1),
    (1, 2),
    (1, -2),
    (-1, 2),
    (-1, -2),
];

/// Oracle answer: the raw grid cost and the shortened continuous path.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub grid_cost: f64,
    pub cost: f64,
    pub path: Vec<Point2>,
}

/// Which disc stands in for a polygon robot in [`planar_proxy`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProxyDisc {
    /// Covers the body at every heading. Proxy paths are feasible for the
    /// polygon held at the start heading, so proxy costs are upper bounds.
    Circumscribed,
    /// Inside the body at every heading. Every polygon path projects onto a
    /// feasible proxy path, so proxy costs are lower bounds.
    Inscribed,
}

/// Reduces an SE(2) polygon-robot scenario to a planar disc robot over the
/// translational coordinates. Planar point and disc scenarios come back as is.
///
/// The upper-bound reading needs the start and goal headings to agree, which
/// is checked for [`ProxyDisc::Circumscribed`].
pub fn planar_proxy(scenario: &Scenario, disc: ProxyDisc) -> Result<Scenario> {
    let space = scenario.space();
    let kinds = space.kinds();
    let body = match scenario.robot() {
        RobotModel::Polygon(body) if kinds == [CoordKind::Euclidean, CoordKind::Euclidean, CoordKind::Angular] => body,
        _ if kinds.len() == 2 => return Ok(scenario.clone()),
        _ => return Err(Error::Unsupported("grid oracle needs a planar scenario or an SE(2) polygon robot".into())),
    };
    if disc == ProxyDisc::Circumscribed && scenario.start().coords()[2] != scenario.goal().center.coords()[2] {
        return Err(Error::Unsupported("circumscribed proxy needs equal start and goal headings".into()));
    }
    let radius = match disc {
        ProxyDisc::Circumscribed => body.circumradius(),
        ProxyDisc::Inscribed => body.inradius(),
    };
    let b = space.bounds();
    let planar = |q: &Configuration| Configuration::new(q.position().to_vec());
    Scenario::new(
        scenario.name(),
        SpaceDefinition::euclidean(vec![b[0], b[1]])?,
        RobotModel::Disc { radius },
        scenario.obstacles().to_vec(),
        planar(scenario.start()),
        GoalRegion {
            center: planar(&scenario.goal().center),
            radius: scenario.goal().radius,
        },
    )
}

fn seg_seg_distance(a: Point2, b: Point2, p: Point2, q: Point2) -> f64 {
    if segments_intersect(a, b, p, q) {
        return 0.0;
    }
    point_segment_distance(a, p, q)
        .min(point_segment_distance(b, p, q))
        .min(point_segment_distance(p, a, b))
        .min(point_segment_distance(q, a, b))
}

/// Exact straight-line validity for a translating point or disc.
#[derive(Debug, Clone)]
pub struct ExactChecker {
    obstacles: Vec<Polygon>,
    radius: f64,
    lo: Point2,
    hi: Point2,
}

impl ExactChecker {
    pub fn new(scenario: &Scenario) -> Result<ExactChecker> {
        ExactChecker::with_obstacles(scenario, scenario.obstacles().to_vec())
    }

    /// Same robot and bounds, different obstacle set.
    pub fn with_obstacles(scenario: &Scenario, obstacles: Vec<Polygon>) -> Result<ExactChecker> {
        let space = scenario.space();
        if space.dimension() != 2 || space.kinds().iter().any(|k| *k != CoordKind::Euclidean) {
            return Err(Error::Unsupported("grid oracle needs a 2-D Euclidean space".into()));
        }
        let radius = match scenario.robot() {
            RobotModel::Point => 0.0,
            RobotModel::Disc { radius } => *radius,
            RobotModel::Polygon(_) => return Err(Error::Unsupported("grid oracle needs a point or disc robot".into())),
        };
        let b = space.bounds();
        Ok(ExactChecker {
            obstacles,
            radius,
            lo: [b[0][0] + radius, b[1][0] + radius],
            hi: [b[0][1] - radius, b[1][1] - radius],
        })
    }

    fn in_box(&self, p: Point2) -> bool {
        p[0] >= self.lo[0] && p[0] <= self.hi[0] && p[1] >= self.lo[1] && p[1] <= self.hi[1]
    }

    pub fn point_free(&self, p: Point2) -> bool {
        self.segment_free(p, p)
    }

    /// Closed segment test; contact counts as collision, matching the planners.
    pub fn segment_free(&self, a: Point2, b: Point2) -> bool {
        if !self.in_box(a) || !self.in_box(b) {
            return false;
        }
        let r = self.radius;
        let (x0, x1) = (a[0].min(b[0]) - r, a[0].max(b[0]) + r);
        let (y0, y1) = (a[1].min(b[1]) - r, a[1].max(b[1]) + r);
        self.obstacles.iter().all(|o| {
            let bb = o.bbox();
            if bb.max[0] < x0 || bb.min[0] > x1 || bb.max[1] < y0 || bb.min[1] > y1 {
                return true;
            }
            if r == 0.0 {
                return !o.intersects_segment(a, b);
            }
            if o.intersects_segment(a, b) {
                return false;
            }
            o.edges().all(|(p, q)| seg_seg_distance(a, b, p, q) > r)
        })
    }
}

fn project_to_ball(p: Point2, c: Point2, r: f64) -> Point2 {
    let d = (p[0] - c[0]).hypot(p[1] - c[1]);
    if d <= r {
        return p;
    }
    // Stay a hair inside so the endpoint passes the closed membership test.
    let t = (r * (1.0 - 1e-12)) / d;
    [c[0] + (p[0] - c[0]) * t, c[1] + (p[1] - c[1]) * t]
}

fn dist(a: Point2, b: Point2) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

fn polyline_cost(path: &[Point2]) -> f64 {
    path.windows(2).map(|w| dist(w[0], w[1])).sum()
}

/// Greedy visibility shortening: from each kept vertex jump to the farthest
/// later vertex that is directly reachable.
fn string_pull(chk: &ExactChecker, path: &[Point2]) -> Vec<Point2> {
    let mut out = vec![path[0]];
    let mut i = 0;
    while i + 1 < path.len() {
        let mut j = path.len() - 1;
        while j > i + 1 && !chk.segment_free(path[i], path[j]) {
            j -= 1;
        }
        out.push(path[j]);
        i = j;
    }
    out
}

/// Shortest start-to-goal-ball path for `scenario` on an `n × n` grid.
pub fn grid_shortest_path(scenario: &Scenario, n: usize) -> Result<Option<OracleResult>> {
    let chk = ExactChecker::new(scenario)?;
    grid_shortest_path_with(scenario, &chk, n)
}

/// As [`grid_shortest_path`], with a custom checker (e.g. extra blocking obstacles).
pub fn grid_shortest_path_with(scenario: &Scenario, chk: &ExactChecker, n: usize) -> Result<Option<OracleResult>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("grid needs at least 3 points per axis, got {n}")));
    }
    let b = scenario.space().bounds();
    let hx = (b[0][1] - b[0][0]) / (n - 1) as f64;
    let hy = (b[1][1] - b[1][0]) / (n - 1) as f64;
    let pos = |i: usize| -> Point2 { [b[0][0] + (i % n) as f64 * hx, b[1][0] + (i / n) as f64 * hy] };
    let start = scenario.start().position();
    let gc = scenario.goal().center.position();
    let gr = scenario.goal().radius;

    let free: Vec<bool> = (0..n * n).map(|i| chk.point_free(pos(i))).collect();
    // Vertex n*n is the start; it links to grid points within two cells.
    let s = n * n;
    let mut cost = vec![f64::INFINITY; n * n + 1];
    let mut parent = vec![usize::MAX; n * n + 1];
    let mut done = vec![false; n * n + 1];
    let mut queue: KeyedQueue<Len> = KeyedQueue::new();
    cost[s] = 0.0;
    queue.push_or_update(s, Len(0.0));

    let reach = 2.5 * hx.max(hy);
    let mut best_goal = (f64::INFINITY, usize::MAX, start);
    while let Some((Len(c), u)) = queue.pop() {
        done[u] = true;
        let pu = if u == s { start } else { pos(u) };
        // Leave for the goal ball along a straight segment.
        let target = project_to_ball(pu, gc, gr);
        let via = c + dist(pu, target);
        if via < best_goal.0 && chk.segment_free(pu, target) {
            best_goal = (via, u, target);
        }
        if c >= best_goal.0 {
            break;
        }
        let mut relax = |v: usize, queue: &mut KeyedQueue<Len>| {
            if done[v] || !free[v] {
                return;
            }
            let pv = pos(v);
            let w = dist(pu, pv);
            if c + w < cost[v] && chk.segment_free(pu, pv) {
                cost[v] = c + w;
                parent[v] = u;
                queue.push_or_update(v, Len(c + w));
            }
        };
        if u == s {
            let ci = ((start[0] - b[0][0]) / hx).round() as i64;
            let cj = ((start[1] - b[1][0]) / hy).round() as i64;
            for dj in -3..=3 {
                for di in -3..=3 {
                    let (i, j) = (ci + di, cj + dj);
                    if i < 0 || j < 0 || i >= n as i64 || j >= n as i64 {
                        continue;
                    }
                    let v = j as usize * n + i as usize;
                    if dist(start, pos(v)) <= reach {
                        relax(v, &mut queue);
                    }
                }
            }
        } else {
            let (i, j) = ((u % n) as i64, (u / n) as i64);
            for (di, dj) in OFFSETS {
                let (a, bb) = (i + di, j + dj);
                if a < 0 || bb < 0 || a >= n as i64 || bb >= n as i64 {
                    continue;
                }
                relax(bb as usize * n + a as usize, &mut queue);
            }
        }
    }
    let (grid_cost, last, target) = best_goal;
    if !grid_cost.is_finite() {
        return Ok(None);
    }
    let mut raw = vec![target];
    let mut v = last;
    while v != s {
        raw.push(pos(v));
        v = parent[v];
    }
    raw.push(start);
    raw.reverse();

    let mut path = string_pull(&chk, &raw);
    // Re-aim the final segment at the closest point of the goal ball.
    for _ in 0..4 {
        let k = path.len();
        if k < 2 {
            break;
        }
        let from = path[k - 2];
        let aim = project_to_ball(from, gc, gr);
        if aim == path[k - 1] || !chk.segment_free(from, aim) {
            break;
        }
        path[k - 1] = aim;
        let pulled = string_pull(&chk, &path);
        if pulled.len() == path.len() {
            path = pulled;
            break;
        }
        path = pulled;
    }
    let cost = polyline_cost(&path);
    Ok(Some(OracleResult { grid_cost, cost, path }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cspace::{Configuration, GoalRegion, SpaceDefinition};

    fn world(robot: RobotModel, obstacles: Vec<Polygon>) -> Scenario {
        Scenario::new(
            "t",
            SpaceDefinition::euclidean(vec![[0.0, 10.0], [0.0, 10.0]]).unwrap(),
            robot,
            obstacles,
            Configuration::new(vec![1.0, 5.0]),
            GoalRegion {
                center: Configuration::new(vec![9.0, 5.0]),
                radius: 0.5,
            },
        )
        .unwrap()
    }

    #[test]
    fn proxy_discs_bracket_the_hexagon() {
        let hex = Polygon::new((0..6).map(|i| {
            let a = i as f64 * std::f64::consts::TAU / 6.0;
            [0.2 * a.cos(), 0.2 * a.sin()]
        }).collect());
        let s = Scenario::new(
            "hex",
            SpaceDefinition::se2([0.0, 4.0], [0.0, 4.0], 0.2).unwrap(),
            RobotModel::Polygon(hex),
            vec![Polygon::rect(1.8, 0.0, 2.2, 3.0)],
            Configuration::new(vec![0.5, 0.5, 0.0]),
            GoalRegion { center: Configuration::new(vec![3.5, 0.5, 0.0]), radius: 0.2 },
        )
        .unwrap();
        let radius = |d| match planar_proxy(&s, d).unwrap().robot() {
            RobotModel::Disc { radius } => *radius,
            _ => unreachable!(),
        };
        assert!((radius(ProxyDisc::Circumscribed) - 0.2).abs() < 1e-12);
        assert!((radius(ProxyDisc::Inscribed) - 0.1 * 3f64.sqrt()).abs() < 1e-12);
        let hi = grid_shortest_path(&planar_proxy(&s, ProxyDisc::Circumscribed).unwrap(), 201).unwrap().unwrap();
        let lo = grid_shortest_path(&planar_proxy(&s, ProxyDisc::Inscribed).unwrap(), 201).unwrap().unwrap();
        assert!(lo.cost < hi.cost);
        let turned = s.with_goal(GoalRegion { center: Configuration::new(vec![3.5, 0.5, 1.0]), radius: 0.2 }).unwrap();
        assert!(planar_proxy(&turned, ProxyDisc::Circumscribed).is_err());
    }

    #[test]
    fn free_space_is_straight_line() {
        let s = world(RobotModel::Point, vec![]);
        let r = grid_shortest_path(&s, 101).unwrap().unwrap();
        assert!((r.cost - 7.5).abs() < 1e-9, "{}", r.cost);
        assert_eq!(r.path.len(), 2);
    }

    #[test]
    fn wall_detour_matches_geometry() {
        // Wall x in [4.9, 5.1], y in [0, 7]: optimal path bends over (5.1, 7) and (4.9, 7).
        let s = world(RobotModel::Point, vec![Polygon::rect(4.9, 0.0, 5.1, 7.0)]);
        let r = grid_shortest_path(&s, 201).unwrap().unwrap();
        let c = [9.0, 5.0];
        let p = [5.1, 7.0];
        let exact = dist([1.0, 5.0], [4.9, 7.0]) + 0.2 + dist(p, c) - 0.5;
        assert!(r.cost >= exact - 1e-9, "{} < {}", r.cost, exact);
        assert!(r.cost <= exact * 1.005, "{} vs {}", r.cost, exact);
        assert!(r.grid_cost >= r.cost - 1e-12);
    }

    #[test]
    fn disc_needs_clearance() {
        // Slot of width 0.3 passes a point but not a disc of radius 0.2.
        let obs = vec![Polygon::rect(4.9, 0.0, 5.1, 4.85), Polygon::rect(4.9, 5.15, 5.1, 10.0)];
        let p = grid_shortest_path(&world(RobotModel::Point, obs.clone()), 201).unwrap().unwrap();
        assert!((p.cost - 7.5).abs() < 1e-9);
        let d = grid_shortest_path(&world(RobotModel::Disc { radius: 0.2 }, obs), 201).unwrap();
        assert!(d.is_none());
    }

    #[test]
    fn path_is_feasible() {
        let s = world(RobotModel::Disc { radius: 0.2 }, vec![Polygon::rect(3.0, 2.0, 4.0, 8.0), Polygon::rect(6.0, 0.0, 7.0, 6.0)]);
        let chk = ExactChecker::new(&s).unwrap();
        let r = grid_shortest_path(&s, 201).unwrap().unwrap();
        for w in r.path.windows(2) {
            assert!(chk.segment_free(w[0], w[1]));
        }
        assert!(dist(*r.path.last().unwrap(), [9.0, 5.0]) <= 0.5);
        assert!((polyline_cost(&r.path) - r.cost).abs() < 1e-9);
    }
}

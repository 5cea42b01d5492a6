//! Path cost and random shortcutting.

use crate::cspace::{collision_free_motion, Configuration, Path, Scenario, SpaceDefinition};
use rand::Rng;

/// Improvements at or below this are ignored.
pub const MIN_GAIN: f64 = 1e-12;

/// Sum of segment lengths; 0 for a single waypoint.
pub fn path_cost(space: &SpaceDefinition, path: &Path) -> f64 {
    path.segments().map(|(a, b)| space.dist(a, b)).sum()
}

/// Point at arc length `s`, with the index of the segment it lies on.
fn locate(space: &SpaceDefinition, wp: &[Configuration], cum: &[f64], s: f64) -> (usize, Configuration) {
    let i = match cum.binary_search_by(|c| c.total_cmp(&s)) {
        Ok(i) => i.min(wp.len() - 2),
        Err(i) => (i - 1).min(wp.len() - 2),
    };
    let len = cum[i + 1] - cum[i];
    let t = if len > 0.0 { (s - cum[i]) / len } else { 0.0 };
    (i, space.lerp(&wp[i], &wp[i + 1], t))
}

/// Random shortcutting: `iterations` rounds, each joining two arc-length-uniform
/// points by a straight motion when it is free and strictly shorter.
pub fn shortcut<R: Rng + ?Sized>(scenario: &Scenario, path: &Path, iterations: usize, delta: f64, rng: &mut R) -> Path {
    let space = scenario.space();
    let mut wp = path.waypoints.clone();
    for _ in 0..iterations {
        if wp.len() < 3 {
            break;
        }
        let mut cum = Vec::with_capacity(wp.len());
        cum.push(0.0);
        for w in wp.windows(2) {
            cum.push(cum.last().unwrap() + space.dist(&w[0], &w[1]));
        }
        let total = *cum.last().unwrap();
        if total <= 0.0 {
            break;
        }
        let (mut s1, mut s2) = (rng.gen_range(0.0..=total), rng.gen_range(0.0..=total));
        if s1 > s2 {
            std::mem::swap(&mut s1, &mut s2);
        }
        let (i1, q1) = locate(space, &wp, &cum, s1);
        let (i2, q2) = locate(space, &wp, &cum, s2);
        if i1 == i2 {
            continue;
        }
        let old = space.dist(&q1, &wp[i1 + 1]) + (cum[i2] - cum[i1 + 1]) + space.dist(&wp[i2], &q2);
        let new = space.dist(&q1, &q2);
        if old - new <= MIN_GAIN || !collision_free_motion(scenario, &q1, &q2, delta) {
            continue;
        }
        let mut next: Vec<Configuration> = wp[..=i1].to_vec();
        for q in [q1, q2] {
            if next.last() != Some(&q) {
                next.push(q);
            }
        }
        for q in &wp[i2 + 1..] {
            if next.last() != Some(q) {
                next.push(q.clone());
            }
        }
        let before = path_cost(space, &Path::new(wp.clone()));
        let after = path_cost(space, &Path::new(next.clone()));
        if before - after > MIN_GAIN {
            wp = next;
        }
    }
    Path::new(wp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cspace::{GoalRegion, RobotModel};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(x: f64, y: f64) -> Configuration {
        Configuration::new(vec![x, y])
    }

    fn empty() -> Scenario {
        let space = SpaceDefinition::euclidean(vec![[0.0, 10.0], [0.0, 10.0]]).unwrap();
        Scenario::new(
            "empty",
            space,
            RobotModel::Point,
            vec![],
            q(1.0, 1.0),
            GoalRegion {
                center: q(9.0, 9.0),
                radius: 0.5,
            },
        )
        .unwrap()
    }

    #[test]
    fn cost_examples() {
        let s = empty();
        let sp = s.space();
        assert_eq!(path_cost(sp, &Path::new(vec![q(0.0, 0.0), q(3.0, 4.0)])), 5.0);
        assert_eq!(path_cost(sp, &Path::new(vec![q(0.0, 0.0)])), 0.0);
        assert_eq!(path_cost(sp, &Path::new(vec![q(0.0, 0.0), q(1.0, 0.0), q(1.0, 1.0)])), 2.0);
    }

    #[test]
    fn zero_iterations_is_identity() {
        let s = empty();
        let p = Path::new(vec![q(1.0, 1.0), q(5.0, 1.0), q(5.0, 5.0)]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(shortcut(&s, &p, 0, 0.1, &mut rng), p);
    }

    #[test]
    fn straight_path_unchanged() {
        let s = empty();
        let p = Path::new(vec![q(1.0, 1.0), q(3.0, 3.0), q(5.0, 5.0)]);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let out = shortcut(&s, &p, 100, 0.1, &mut rng);
        assert!((path_cost(s.space(), &out) - path_cost(s.space(), &p)).abs() < 1e-9);
    }

    #[test]
    fn l_path_straightens() {
        let s = empty();
        let p = Path::new(vec![q(1.0, 1.0), q(8.0, 1.0), q(8.0, 8.0)]);
        let straight = s.space().dist(&q(1.0, 1.0), &q(8.0, 8.0));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let out = shortcut(&s, &p, 200, 0.1, &mut rng);
        assert!(path_cost(s.space(), &out) <= 1.02 * straight);
        assert_eq!(out.waypoints.first(), p.waypoints.first());
        assert_eq!(out.waypoints.last(), p.waypoints.last());
    }
}

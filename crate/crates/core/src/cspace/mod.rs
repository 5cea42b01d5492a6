//! Configuration spaces, metric, steering and interpolation.
//!
//! A space mixes Euclidean coordinates (workspace length units) with at most
//! one angular coordinate (radians, normalized into `[0, 2π)`). The first two
//! coordinates are always the robot's workspace position.

pub mod geometry;
mod scenario;

pub use scenario::{
    collision_free_config, collision_free_motion, in_goal, motion_check, sample_free, sample_free_capped, sample_goal,
    BestKnown, GoalRegion, RobotModel, Scenario, DEFAULT_SAMPLE_CAP,
};

use crate::error::{Error, Result};
use std::f64::consts::{PI, TAU};
use std::fmt;

/// How a coordinate participates in the metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordKind {
    Euclidean,
    Angular,
}

/// Wraps an angle into `[0, 2π)`.
#[inline]
pub fn normalize_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Maps an angular difference to `[-π, π]`.
#[inline]
pub fn wrap_difference(d: f64) -> f64 {
    // Differences of stored angles lie in (-2pi, 2pi).
    if (-PI..=PI).contains(&d) {
        return d;
    }
    if d > PI && d < 3.0 * PI {
        return d - TAU;
    }
    if d < -PI && d > -3.0 * PI {
        return d + TAU;
    }
    let r = (d + PI).rem_euclid(TAU) - PI;
    if r < -PI {
        r + TAU
    } else {
        r
    }
}

/// A point of the configuration space.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration(Vec<f64>);

impl Configuration {
    pub fn new(coords: Vec<f64>) -> Configuration {
        Configuration(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Workspace position (first two coordinates).
    pub fn position(&self) -> [f64; 2] {
        [self.0[0], self.0[1]]
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl From<Vec<f64>> for Configuration {
    fn from(v: Vec<f64>) -> Self {
        Configuration(v)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Dimension, coordinate kinds, bounds and the angular weight of the metric.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceDefinition {
    kinds: Vec<CoordKind>,
    bounds: Vec<[f64; 2]>,
    w_theta: f64,
}

impl SpaceDefinition {
    /// `bounds` has one entry per coordinate; entries for angular coordinates are ignored
    /// and replaced by `[0, 2π]`.
    pub fn new(kinds: Vec<CoordKind>, bounds: Vec<[f64; 2]>, w_theta: f64) -> Result<SpaceDefinition> {
        let d = kinds.len();
        if d < 2 {
            return Err(Error::InvalidArgument(format!("dimension must be at least 2, got {d}")));
        }
        if kinds[0] != CoordKind::Euclidean || kinds[1] != CoordKind::Euclidean {
            return Err(Error::InvalidArgument("the first two coordinates must be Euclidean".into()));
        }
        if kinds.iter().filter(|k| **k == CoordKind::Angular).count() > 1 {
            return Err(Error::InvalidArgument("at most one angular coordinate is supported".into()));
        }
        if bounds.len() != d {
            return Err(Error::InvalidArgument(format!("expected {d} bounds, got {}", bounds.len())));
        }
        if !(w_theta > 0.0 && w_theta.is_finite()) {
            return Err(Error::InvalidArgument(format!("w_theta must be positive, got {w_theta}")));
        }
        let mut fixed = bounds;
        for (i, k) in kinds.iter().enumerate() {
            match k {
                CoordKind::Angular => fixed[i] = [0.0, TAU],
                CoordKind::Euclidean => {
                    let [lo, hi] = fixed[i];
                    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                        return Err(Error::InvalidArgument(format!("bad bounds [{lo}, {hi}] on coordinate {i}")));
                    }
                }
            }
        }
        Ok(SpaceDefinition {
            kinds,
            bounds: fixed,
            w_theta,
        })
    }

    /// All-Euclidean space over the given box.
    pub fn euclidean(bounds: Vec<[f64; 2]>) -> Result<SpaceDefinition> {
        SpaceDefinition::new(vec![CoordKind::Euclidean; bounds.len()], bounds, 1.0)
    }

    /// Planar rigid body: `(x, y, θ)`.
    pub fn se2(x: [f64; 2], y: [f64; 2], w_theta: f64) -> Result<SpaceDefinition> {
        SpaceDefinition::new(
            vec![CoordKind::Euclidean, CoordKind::Euclidean, CoordKind::Angular],
            vec![x, y, [0.0, TAU]],
            w_theta,
        )
    }

    pub fn dimension(&self) -> usize {
        self.kinds.len()
    }

    pub fn kinds(&self) -> &[CoordKind] {
        &self.kinds
    }

    pub fn bounds(&self) -> &[[f64; 2]] {
        &self.bounds
    }

    pub fn w_theta(&self) -> f64 {
        self.w_theta
    }

    pub fn angular_index(&self) -> Option<usize> {
        self.kinds.iter().position(|k| *k == CoordKind::Angular)
    }

    /// Diagonal of the Euclidean part of the bounding box.
    pub fn euclidean_diagonal(&self) -> f64 {
        self.kinds
            .iter()
            .zip(&self.bounds)
            .filter(|(k, _)| **k == CoordKind::Euclidean)
            .map(|(_, [lo, hi])| (hi - lo) * (hi - lo))
            .sum::<f64>()
            .sqrt()
    }

    /// Volume of the sampling domain measured in metric units.
    pub fn metric_volume(&self) -> f64 {
        self.kinds
            .iter()
            .zip(&self.bounds)
            .map(|(k, [lo, hi])| match k {
                CoordKind::Euclidean => hi - lo,
                CoordKind::Angular => TAU * self.w_theta,
            })
            .product()
    }

    /// Checks dimension, finiteness, angular normalization. Bounds are not checked.
    pub fn validate(&self, q: &Configuration) -> Result<()> {
        if q.dim() != self.dimension() {
            return Err(Error::InvalidArgument(format!(
                "configuration has dimension {}, space has {}",
                q.dim(),
                self.dimension()
            )));
        }
        for (i, (c, k)) in q.coords().iter().zip(&self.kinds).enumerate() {
            if !c.is_finite() {
                return Err(Error::InvalidArgument(format!("coordinate {i} is not finite")));
            }
            if *k == CoordKind::Angular && !(0.0..TAU).contains(c) {
                return Err(Error::InvalidArgument(format!("angular coordinate {i} = {c} outside [0, 2π)")));
            }
        }
        Ok(())
    }

    /// Builds a configuration, normalizing angular coordinates.
    pub fn config(&self, mut coords: Vec<f64>) -> Result<Configuration> {
        if let Some(a) = self.angular_index() {
            if let Some(c) = coords.get_mut(a) {
                *c = normalize_angle(*c);
            }
        }
        let q = Configuration(coords);
        self.validate(&q)?;
        Ok(q)
    }

    /// True if every Euclidean coordinate lies within its closed bounds.
    pub fn in_bounds(&self, q: &Configuration) -> bool {
        q.coords()
            .iter()
            .zip(&self.kinds)
            .zip(&self.bounds)
            .all(|((c, k), [lo, hi])| *k == CoordKind::Angular || (*c >= *lo && *c <= *hi))
    }

    /// Unchecked metric; both inputs must have this space's dimension.
    #[inline]
    pub fn dist(&self, a: &Configuration, b: &Configuration) -> f64 {
        let mut s = 0.0;
        for ((x, y), k) in a.0.iter().zip(&b.0).zip(&self.kinds) {
            let d = match k {
                CoordKind::Euclidean => x - y,
                CoordKind::Angular => self.w_theta * wrap_difference(x - y),
            };
            s += d * d;
        }
        s.sqrt()
    }

    /// Unchecked geodesic interpolation; `t` is not range-checked.
    pub fn lerp(&self, a: &Configuration, b: &Configuration, t: f64) -> Configuration {
        if t <= 0.0 {
            return a.clone();
        }
        if t >= 1.0 {
            return b.clone();
        }
        Configuration(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.kinds)
                .map(|((x, y), k)| match k {
                    CoordKind::Euclidean => x + t * (y - x),
                    CoordKind::Angular => normalize_angle(x + t * wrap_difference(y - x)),
                })
                .collect(),
        )
    }

    fn check_pair(&self, a: &Configuration, b: &Configuration) -> Result<()> {
        if a.dim() != self.dimension() || b.dim() != self.dimension() {
            return Err(Error::InvalidArgument(format!(
                "dimension mismatch: {} and {} in a {}-dimensional space",
                a.dim(),
                b.dim(),
                self.dimension()
            )));
        }
        Ok(())
    }
}

/// Metric distance between two configurations.
pub fn distance(space: &SpaceDefinition, a: &Configuration, b: &Configuration) -> Result<f64> {
    space.check_pair(a, b)?;
    Ok(space.dist(a, b))
}

/// Moves from `from` toward `toward` by at most `eta` along the geodesic.
pub fn steer(space: &SpaceDefinition, from: &Configuration, toward: &Configuration, eta: f64) -> Result<Configuration> {
    space.check_pair(from, toward)?;
    if !(eta > 0.0) {
        return Err(Error::InvalidArgument(format!("steer step must be positive, got {eta}")));
    }
    Ok(steer_unchecked(space, from, toward, eta))
}

pub(crate) fn steer_unchecked(space: &SpaceDefinition, from: &Configuration, toward: &Configuration, eta: f64) -> Configuration {
    let d = space.dist(from, toward);
    if d <= eta {
        toward.clone()
    } else {
        space.lerp(from, toward, eta / d)
    }
}

/// Geodesic point at parameter `t ∈ [0, 1]`.
pub fn interpolate(space: &SpaceDefinition, a: &Configuration, b: &Configuration, t: f64) -> Result<Configuration> {
    space.check_pair(a, b)?;
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidArgument(format!("interpolation parameter {t} outside [0, 1]")));
    }
    Ok(space.lerp(a, b, t))
}

/// A sequence of configurations.
#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    pub waypoints: Vec<Configuration>,
}

impl Path {
    pub fn new(waypoints: Vec<Configuration>) -> Path {
        Path { waypoints }
    }

    pub fn len(&self) -> usize {
        self.waypoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.waypoints.is_empty()
    }

    pub fn segments(&self) -> impl Iterator<Item = (&Configuration, &Configuration)> {
        self.waypoints.windows(2).map(|w| (&w[0], &w[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> SpaceDefinition {
        SpaceDefinition::euclidean(vec![[-10.0, 10.0], [-10.0, 10.0]]).unwrap()
    }

    fn se2() -> SpaceDefinition {
        SpaceDefinition::se2([-10.0, 10.0], [-10.0, 10.0], 1.0).unwrap()
    }

    fn c(v: &[f64]) -> Configuration {
        Configuration::new(v.to_vec())
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&plane(), &c(&[0.0, 0.0]), &c(&[3.0, 4.0])).unwrap(), 5.0);
        assert_eq!(distance(&plane(), &c(&[1.5, -2.0]), &c(&[1.5, -2.0])).unwrap(), 0.0);
        let d = distance(&se2(), &c(&[0.0, 0.0, 0.1]), &c(&[0.0, 0.0, TAU - 0.1])).unwrap();
        assert!((d - 0.2).abs() < 1e-12, "{d}");
    }

    #[test]
    fn distance_dimension_mismatch() {
        assert!(matches!(
            distance(&plane(), &c(&[0.0, 0.0]), &c(&[0.0, 0.0, 0.0])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn steer_examples() {
        let s = plane();
        assert_eq!(steer(&s, &c(&[0.0, 0.0]), &c(&[10.0, 0.0]), 1.0).unwrap(), c(&[1.0, 0.0]));
        assert_eq!(steer(&s, &c(&[0.0, 0.0]), &c(&[0.5, 0.0]), 1.0).unwrap(), c(&[0.5, 0.0]));
        let q = steer(&se2(), &c(&[0.0, 0.0, 0.2]), &c(&[0.0, 0.0, TAU - 0.2]), 0.1).unwrap();
        assert!((q.coords()[2] - 0.1).abs() < 1e-12, "{q}");
        assert!(steer(&s, &c(&[0.0, 0.0]), &c(&[1.0, 0.0]), 0.0).is_err());
    }

    #[test]
    fn interpolate_examples() {
        let s = plane();
        assert_eq!(interpolate(&s, &c(&[0.0, 0.0]), &c(&[2.0, 2.0]), 0.5).unwrap(), c(&[1.0, 1.0]));
        assert_eq!(interpolate(&s, &c(&[0.3, 0.1]), &c(&[2.0, 2.0]), 0.0).unwrap(), c(&[0.3, 0.1]));
        assert_eq!(interpolate(&s, &c(&[0.3, 0.1]), &c(&[2.0, 2.0]), 1.0).unwrap(), c(&[2.0, 2.0]));
        let g = se2();
        let m = interpolate(&g, &c(&[0.0, 0.0, 0.2]), &c(&[0.0, 0.0, TAU - 0.2]), 0.5).unwrap();
        assert!(g.dist(&m, &c(&[0.0, 0.0, 0.0])) < 1e-12, "{m}");
        assert!((0.0..TAU).contains(&m.coords()[2]));
        assert!(interpolate(&s, &c(&[0.0, 0.0]), &c(&[1.0, 1.0]), 1.5).is_err());
    }

    #[test]
    fn angle_helpers() {
        assert_eq!(normalize_angle(-1e-300), 0.0);
        assert!((normalize_angle(-0.5) - (TAU - 0.5)).abs() < 1e-15);
        assert!((wrap_difference(TAU - 0.1) + 0.1).abs() < 1e-12);
        assert!(wrap_difference(PI).abs() <= PI);
    }

    #[test]
    fn space_validation() {
        assert!(SpaceDefinition::euclidean(vec![[0.0, 1.0]]).is_err());
        assert!(SpaceDefinition::euclidean(vec![[0.0, 1.0], [2.0, 1.0]]).is_err());
        assert!(SpaceDefinition::se2([0.0, 1.0], [0.0, 1.0], 0.0).is_err());
        let bad = SpaceDefinition::new(
            vec![CoordKind::Euclidean, CoordKind::Euclidean, CoordKind::Angular, CoordKind::Angular],
            vec![[0.0, 1.0]; 4],
            1.0,
        );
        assert!(bad.is_err());
        let s = se2();
        assert!(s.config(vec![0.0, 0.0, -0.5]).unwrap().coords()[2] > 5.0);
        assert!(s.validate(&c(&[0.0, 0.0, 7.0])).is_err());
        assert!(s.validate(&c(&[f64::NAN, 0.0, 1.0])).is_err());
    }
}

//! Planar primitives. Obstacles are closed sets: touching a boundary is a contact.

pub type Point2 = [f64; 2];

#[inline]
fn sub(a: Point2, b: Point2) -> Point2 {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
fn cross(a: Point2, b: Point2) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

#[inline]
fn dot(a: Point2, b: Point2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

/// Sign of the turn a -> b -> c: positive for counterclockwise.
#[inline]
pub fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    cross(sub(b, a), sub(c, a))
}

#[inline]
fn within_box(a: Point2, b: Point2, p: Point2) -> bool {
    p[0] >= a[0].min(b[0]) && p[0] <= a[0].max(b[0]) && p[1] >= a[1].min(b[1]) && p[1] <= a[1].max(b[1])
}

/// True if `p` lies on the closed segment `ab`.
pub fn on_segment(a: Point2, b: Point2, p: Point2) -> bool {
    orient(a, b, p) == 0.0 && within_box(a, b, p)
}

/// Closed segment-segment intersection, including touching and collinear overlap.
pub fn segments_intersect(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && within_box(q1, q2, p1))
        || (d2 == 0.0 && within_box(q1, q2, p2))
        || (d3 == 0.0 && within_box(p1, p2, q1))
        || (d4 == 0.0 && within_box(p1, p2, q2))
}

pub fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = sub(b, a);
    let ap = sub(p, a);
    let len2 = dot(ab, ab);
    let t = if len2 > 0.0 { (dot(ap, ab) / len2).clamp(0.0, 1.0) } else { 0.0 };
    let c = [a[0] + t * ab[0], a[1] + t * ab[1]];
    let d = sub(p, c);
    d[0].hypot(d[1])
}

/// Axis-aligned bounding box `[min_x, min_y, max_x, max_y]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aabb {
    pub min: Point2,
    pub max: Point2,
}

impl Aabb {
    pub fn of(points: &[Point2]) -> Aabb {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in points {
            for k in 0..2 {
                min[k] = min[k].min(p[k]);
                max[k] = max[k].max(p[k]);
            }
        }
        Aabb { min, max }
    }

    pub fn inflate(&self, r: f64) -> Aabb {
        Aabb {
            min: [self.min[0] - r, self.min[1] - r],
            max: [self.max[0] + r, self.max[1] + r],
        }
    }

    pub fn overlaps(&self, o: &Aabb) -> bool {
        self.min[0] <= o.max[0] && o.min[0] <= self.max[0] && self.min[1] <= o.max[1] && o.min[1] <= self.max[1]
    }

    pub fn contains(&self, p: Point2) -> bool {
        p[0] >= self.min[0] && p[0] <= self.max[0] && p[1] >= self.min[1] && p[1] <= self.max[1]
    }
}

/// A simple polygon with a cached bounding box.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point2>,
    bbox: Aabb,
}

impl Polygon {
    pub fn new(vertices: Vec<Point2>) -> Polygon {
        let bbox = Aabb::of(&vertices);
        Polygon { vertices, bbox }
    }

    /// Axis-aligned rectangle `[x0, x1] x [y0, y1]`, counterclockwise.
    pub fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Polygon {
        Polygon::new(vec![[x0, y0], [x1, y0], [x1, y1], [x0, y1]])
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn bbox(&self) -> &Aabb {
        &self.bbox
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Twice the signed area; positive for counterclockwise order.
    pub fn signed_area2(&self) -> f64 {
        self.edges().map(|(a, b)| cross(a, b)).sum()
    }

    /// No two non-adjacent edges touch and adjacent edges share only their common vertex.
    pub fn is_simple(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 || self.vertices.iter().any(|p| !p[0].is_finite() || !p[1].is_finite()) {
            return false;
        }
        if self.signed_area2() == 0.0 {
            return false;
        }
        let e: Vec<_> = self.edges().collect();
        for i in 0..n {
            if e[i].0 == e[i].1 {
                return false;
            }
            for j in (i + 1)..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // Adjacent edges may only meet at the shared vertex: reject folding back.
                    let (shared, a_other, b_other) = if j == i + 1 { (e[i].1, e[i].0, e[j].1) } else { (e[i].0, e[i].1, e[j].0) };
                    if orient(a_other, shared, b_other) == 0.0 && dot(sub(a_other, shared), sub(b_other, shared)) > 0.0 {
                        return false;
                    }
                    continue;
                }
                if segments_intersect(e[i].0, e[i].1, e[j].0, e[j].1) {
                    return false;
                }
            }
        }
        true
    }

    /// Closed containment: boundary points count as inside.
    pub fn contains(&self, p: Point2) -> bool {
        if !self.bbox.contains(p) {
            return false;
        }
        let mut inside = false;
        for (a, b) in self.edges() {
            if on_segment(a, b, p) {
                return true;
            }
            if (a[1] > p[1]) != (b[1] > p[1]) {
                let x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
                if p[0] < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Euclidean distance from `p` to the closed polygon (zero inside).
    pub fn distance_to(&self, p: Point2) -> f64 {
        if self.contains(p) {
            return 0.0;
        }
        self.edges()
            .map(|(a, b)| point_segment_distance(p, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    /// True if the closed segment meets the closed polygon.
    pub fn intersects_segment(&self, a: Point2, b: Point2) -> bool {
        if !Aabb::of(&[a, b]).overlaps(&self.bbox) {
            return false;
        }
        if self.contains(a) || self.contains(b) {
            return true;
        }
        self.edges().any(|(p, q)| segments_intersect(a, b, p, q))
    }

    /// True if the two closed polygons share at least one point.
    pub fn intersects_polygon(&self, other: &Polygon) -> bool {
        if !self.bbox.overlaps(&other.bbox) {
            return false;
        }
        for (a, b) in self.edges() {
            for (p, q) in other.edges() {
                if segments_intersect(a, b, p, q) {
                    return true;
                }
            }
        }
        self.contains(other.vertices[0]) || other.contains(self.vertices[0])
    }

    /// Rigid transform: rotate by `theta` about the body origin, then translate.
    pub fn transformed(&self, x: f64, y: f64, theta: f64) -> Polygon {
        let (s, c) = theta.sin_cos();
        Polygon::new(
            self.vertices
                .iter()
                .map(|v| [x + c * v[0] - s * v[1], y + s * v[0] + c * v[1]])
                .collect(),
        )
    }

    /// Largest distance from the body origin to a vertex.
    pub fn circumradius(&self) -> f64 {
        self.vertices.iter().map(|v| v[0].hypot(v[1])).fold(0.0, f64::max)
    }

    /// Radius of the largest origin-centred disc inside the body; zero when the
    /// origin is outside.
    pub fn inradius(&self) -> f64 {
        if !self.contains([0.0, 0.0]) {
            return 0.0;
        }
        self.edges().map(|(a, b)| point_segment_distance([0.0, 0.0], a, b)).fold(f64::INFINITY, f64::min)
    }
}

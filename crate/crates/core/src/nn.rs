//! Nearest-neighbor queries over an append-only vertex set.
//!
//! Results are defined by a linear scan ordered by `(distance, id)`. The optional
//! bucket grid only prunes candidates for radius queries and returns exactly the
//! same lists.

use crate::cspace::{Configuration, SpaceDefinition};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::f64::consts::TAU;

/// Neighbor-count constant for RRG-style connection, `2e`.
pub const K_RRG: f64 = 2.0 * std::f64::consts::E;

/// `ceil(2e · ln n)`, at least 1.
pub fn rrg_neighbor_count(n: usize) -> usize {
    let n = n.max(1) as f64;
    ((K_RRG * n.ln()).ceil() as usize).max(1)
}

#[inline]
fn by_dist_then_id(a: &(f64, usize), b: &(f64, usize)) -> Ordering {
    a.0.total_cmp(&b.0).then(a.1.cmp(&b.1))
}

#[derive(Debug, Clone)]
struct Grid {
    origin: [f64; 2],
    cell: f64,
    dims: [usize; 2],
    /// Angular coordinate index, its weight and bucket count, when the space has one.
    angle: Option<(usize, f64, usize)>,
    buckets: Vec<Vec<usize>>,
}

impl Grid {
    fn cell_of(&self, p: [f64; 2]) -> [usize; 2] {
        let mut c = [0; 2];
        for k in 0..2 {
            let i = ((p[k] - self.origin[k]) / self.cell).floor();
            c[k] = if i < 0.0 { 0 } else { (i as usize).min(self.dims[k] - 1) };
        }
        c
    }

    fn angle_cell(&self, theta: f64, slots: usize) -> i64 {
        (theta.rem_euclid(TAU) / TAU * slots as f64).floor() as i64
    }

    fn slot(&self, q: &Configuration) -> usize {
        match self.angle {
            Some((k, _, slots)) => self.angle_cell(q.coords()[k], slots).rem_euclid(slots as i64) as usize,
            None => 0,
        }
    }

    fn insert(&mut self, id: usize, q: &Configuration) {
        let [i, j] = self.cell_of(q.position());
        let t = self.slot(q);
        self.buckets[(t * self.dims[1] + j) * self.dims[0] + i].push(id);
    }
}

/// Vertex store with nearest, k-nearest and radius queries.
#[derive(Debug, Clone)]
pub struct NeighborIndex {
    space: SpaceDefinition,
    configs: Vec<Configuration>,
    grid: Option<Grid>,
}

impl NeighborIndex {
    pub fn new(space: SpaceDefinition) -> NeighborIndex {
        NeighborIndex {
            space,
            configs: Vec::new(),
            grid: None,
        }
    }

    /// Enables bucket pruning on the workspace position for radius queries.
    pub fn with_grid(mut self, cell: f64) -> NeighborIndex {
        assert!(cell > 0.0, "grid cell must be positive");
        let b = self.space.bounds();
        let origin = [b[0][0], b[1][0]];
        let dims = [
            (((b[0][1] - b[0][0]) / cell).ceil() as usize).max(1),
            (((b[1][1] - b[1][0]) / cell).ceil() as usize).max(1),
        ];
        let angle = self.space.angular_index().map(|k| {
            let slots = ((TAU * self.space.w_theta() / cell).floor() as usize).max(1);
            (k, self.space.w_theta(), slots)
        });
        let slots = angle.map_or(1, |a| a.2);
        let mut grid = Grid {
            origin,
            cell,
            dims,
            angle,
            buckets: vec![Vec::new(); dims[0] * dims[1] * slots],
        };
        for (id, q) in self.configs.iter().enumerate() {
            grid.insert(id, q);
        }
        self.grid = Some(grid);
        self
    }

    pub fn space(&self) -> &SpaceDefinition {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn get(&self, id: usize) -> &Configuration {
        &self.configs[id]
    }

    pub fn configs(&self) -> &[Configuration] {
        &self.configs
    }

    /// Appends `q` and returns its dense id.
    pub fn insert(&mut self, q: Configuration) -> usize {
        let id = self.configs.len();
        if let Some(g) = &mut self.grid {
            g.insert(id, &q);
        }
        self.configs.push(q);
        id
    }

    /// Closest vertex; ties go to the smaller id.
    pub fn nearest(&self, q: &Configuration) -> Result<usize> {
        let mut best = (f64::INFINITY, usize::MAX);
        for (id, c) in self.configs.iter().enumerate() {
            let d = self.space.dist(q, c);
            if d < best.0 {
                best = (d, id);
            }
        }
        if best.1 == usize::MAX {
            if self.configs.is_empty() {
                return Err(Error::EmptyIndex);
            }
            // Every distance was NaN: cannot happen for valid configurations.
            return Err(Error::InvalidArgument("distance is not comparable".into()));
        }
        Ok(best.1)
    }

    /// Up to `k` closest vertices in `(distance, id)` order, skipping `exclude`.
    pub fn k_nearest(&self, q: &Configuration, k: usize, exclude: Option<usize>) -> Vec<usize> {
        if k == 0 {
            return Vec::new();
        }
        let mut all: Vec<(f64, usize)> = self
            .configs
            .iter()
            .enumerate()
            .filter(|(id, _)| Some(*id) != exclude)
            .map(|(id, c)| (self.space.dist(q, c), id))
            .collect();
        if all.len() > k {
            all.select_nth_unstable_by(k - 1, by_dist_then_id);
            all.truncate(k);
        }
        all.sort_unstable_by(by_dist_then_id);
        all.into_iter().map(|(_, id)| id).collect()
    }

    /// All vertices within distance `r` (inclusive) in `(distance, id)` order, skipping `exclude`.
    pub fn radius_near(&self, q: &Configuration, r: f64, exclude: Option<usize>) -> Vec<usize> {
        self.radius_near_with_dist(q, r, exclude).into_iter().map(|(_, id)| id).collect()
    }

    /// Like [`radius_near`](Self::radius_near), returning the distances too.
    pub fn radius_near_with_dist(&self, q: &Configuration, r: f64, exclude: Option<usize>) -> Vec<(f64, usize)> {
        let mut out = Vec::new();
        self.radius_near_into(q, r, exclude, &mut out);
        out.sort_unstable_by(by_dist_then_id);
        out
    }

    /// Appends the points within `r` to `out` in bucket order, unsorted.
    pub fn radius_near_into(&self, q: &Configuration, r: f64, exclude: Option<usize>, out: &mut Vec<(f64, usize)>) {
        let mut consider = |id: usize| {
            if Some(id) == exclude {
                return;
            }
            let d = self.space.dist(q, &self.configs[id]);
            if d <= r {
                out.push((d, id));
            }
        };
        match &self.grid {
            Some(g) => {
                let p = q.position();
                // Slack absorbs rounding in the distance and cell computations.
                let reach = r * (1.0 + 1e-9) + 1e-12;
                let lo = g.cell_of([p[0] - reach, p[1] - reach]);
                let hi = g.cell_of([p[0] + reach, p[1] + reach]);
                // Angular slots to scan, unwrapped; a full turn scans each once.
                let (t0, t1, slots) = match g.angle {
                    Some((k, w, slots)) => {
                        let th = q.coords()[k];
                        let t0 = g.angle_cell(th - reach / w, slots);
                        let mut t1 = t0 + ((2.0 * reach / w) / TAU * slots as f64).ceil() as i64 + 1;
                        t1 = t1.min(t0 + slots as i64 - 1);
                        (t0, t1, slots)
                    }
                    None => (0, 0, 1),
                };
                for t in t0..=t1 {
                    let t = t.rem_euclid(slots as i64) as usize;
                    for j in lo[1]..=hi[1] {
                        for i in lo[0]..=hi[0] {
                            for &id in &g.buckets[(t * g.dims[1] + j) * g.dims[0] + i] {
                                consider(id);
                            }
                        }
                    }
                }
            }
            None => (0..self.configs.len()).for_each(&mut consider),
        }
    }
}

//! Incremental shortest paths over a mutable directed graph.
//!
//! [`Sssp`] maintains cost-to-come from one source to every vertex under edge
//! insertions and deletions and reports which vertices changed. [`Lpa`] answers
//! repeated source-to-goal-set queries with heuristic guidance.

mod graph;
mod lpa;
mod sssp;

pub use graph::DynamicGraph;
pub use lpa::Lpa;
pub use sssp::Sssp;

/// Cost of an unreachable vertex. Sorts above every finite length; `INF + w = INF`.
pub const INF: f64 = f64::INFINITY;

pub(crate) fn check_weight(w: f64) -> crate::error::Result<()> {
    if w >= 0.0 && w.is_finite() {
        Ok(())
    } else {
        Err(crate::error::Error::BadWeight(w))
    }
}

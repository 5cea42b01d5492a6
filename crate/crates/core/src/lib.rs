//! Sampling-based motion planning with bounded-suboptimality roadmaps.
//!
//! The crate provides configuration spaces and collision checking for planar
//! robots ([`cspace`]), neighbor queries ([`nn`]), incremental shortest paths
//! ([`dynsp`]), the RRT family including LBT-RRT ([`planners`]), FMT* and its
//! anytime variants ([`fmt`]), path shortcutting ([`postprocess`]) and a
//! benchmark harness ([`bench`]).

pub mod bench;
pub mod cspace;
pub mod dynsp;
pub mod error;
pub mod fmt;
pub mod nn;
pub mod planners;
pub mod postprocess;
pub mod queue;

pub use error::{Error, Result};

//! Exact toughness, Tutte's 2-factor criterion, induced path-union
//! detection and the `G(l, m)` family of tough graphs without 2-factors.

pub mod error;
pub mod families;
pub mod forbidden;
pub mod format;
pub mod graph;
pub mod harness;
pub mod rational;
pub mod toughness;
pub mod two_factor;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Graph, Path};
pub use rational::Rational;
pub use vertex_set::VertexSet;

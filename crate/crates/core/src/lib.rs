//! Exact-arithmetic toolkit for Ollivier-Ricci and Lin-Lu-Yau curvature
//! on finite simple graphs.
//!
//! All masses, distances-weighted costs and curvature values are exact
//! rationals; there is no floating point anywhere in a curvature path.

pub mod assignment;
pub mod curvature;
pub mod error;
pub mod graph;
pub mod rational;
pub mod theorem;
pub mod transport;

pub use error::{Error, Result};
pub use graph::{Distance, Graph, Vertex, VertexSet};
pub use rational::Rational;

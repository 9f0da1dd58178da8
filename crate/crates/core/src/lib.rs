//! Recognition of maximal outer-fan-planar graphs.
//!
//! The crate decides whether a graph is maximal outer-fan-planar, lists its
//! circle drawings, cross-checks every decision against an exhaustive oracle,
//! and generates and validates fan-planarity instances with a fixed rotation
//! system built from 3-Partition inputs.

pub mod circular;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod recognizer;
pub mod reduction;
pub mod spqr;
pub mod svg;
pub mod sweep;
pub mod symmetry;

pub use circular::{check_outer_fan_planar, CircularOrder, CrossingReport, EdgeClass};
pub use error::{Error, Result};
pub use graph::{edge, Edge, Graph, SeparationPair};

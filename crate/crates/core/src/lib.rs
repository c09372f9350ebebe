//! Structural graph coloring toolkit for hereditary graph classes defined by
//! forbidden induced subgraphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`graph6`], [`patterns`]: the graph type, its text encoding
//!   and every named pattern graph;
//! * [`detect`], [`oracle`]: induced-subgraph detection, class membership
//!   and exact clique/chromatic oracles;
//! * [`decompose`], [`properties`], [`edge_partition`]: the maximum-clique
//!   decomposition, checkers for its structural properties and the
//!   edge-clique partition of diamond-free graphs;
//! * [`color`]: constructive colorers that emit checkable certificates;
//! * [`harness`]: enumeration, sampling and batch verification runs.

pub mod bitset;
pub mod classes;
pub mod color;
pub mod decompose;
pub mod detect;
pub mod edge_partition;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod oracle;
pub mod par;
pub mod patterns;
pub mod properties;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;

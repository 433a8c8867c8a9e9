//! Structural invariants and counting tools for graphs embedded in surfaces:
//! flap-numbers, SPQRK trees, subgraph and clique counts, signed rotation
//! systems, and the triangulation clique census.

pub mod census;
pub mod constructions;
pub mod counting;
pub mod embedding;
pub mod error;
pub mod flap;
pub mod graph;
pub mod planarity;
pub mod spqrk;

pub use error::{Error, Result};
pub use graph::{parse_graph, Graph, VertexSet};

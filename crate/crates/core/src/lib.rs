//! κ-path edge centrality.
//!
//! Edges are ranked by how often bounded self-avoiding random walks pass
//! through them. Two walk variants are provided ([`walk::UniformWalk`] and
//! [`walk::WeightedWalk`]), together with an exact enumeration for small
//! graphs ([`oracle`]) and run-to-run comparison metrics ([`metrics`]).

pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod oracle;
pub mod synth;
pub mod walk;

pub use error::{KpathError, Result};
pub use graph::{build_graph, EdgeId, Graph, NodeId};
pub use walk::{run_kpath, CentralityVector, WalkConfig};

//! Polynomial kernelization for Outerplanar Vertex Deletion with brute-force
//! verification oracles.

pub mod batch;
pub mod blockcut;
pub mod bounds;
pub(crate) mod compact;
pub mod error;
pub mod flow;
pub mod graph;
pub mod instance;
pub mod modulator;
pub mod oracle;
pub mod outerplanar;
pub mod pipeline;
pub mod protrusion;
pub mod stats;
pub mod trace;
pub mod tree_decomp;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex, VertexSet};
pub use trace::{replay_trace, MinorOp, MinorTrace};
pub use instance::{Instance, Stage};
pub use stats::{Rule, RuleCounts};

//! Geodesic convexity on simple graphs, closures induced through graph
//! structured partitionings, and the Pasch / K₂,₃ diagnostics.

mod geodesic;
mod gsp;
mod minor;
mod pasch;
mod random;
mod simple;

use thiserror::Error;

pub use geodesic::{apsp, gamma_closure, interval, DistanceMatrix, GeodesicClosure, TreeClosure};
pub use gsp::{sigma_closure, GsPartition, SigmaClosure};
pub use minor::{k23_minor_free, k23_minor_free_bounded, DEFAULT_MINOR_BOUND};
pub use pasch::{pasch_check, pasch_check_bounded, PaschOutcome, PaschWitness, DEFAULT_PASCH_BOUND};
pub use random::{
    random_connected_graph, random_graph, random_tree, random_tree_halfspace_labeling,
};
pub use simple::Graph;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph has {n} vertices, bound is {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("no edge splits the tree with size ratio within [1/{0}, {0}]")]
    NoBalancedEdge(f64),
    #[error("invalid partitioning: {0}")]
    InvalidPartition(String),
}

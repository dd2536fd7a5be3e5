pub mod closure;
pub mod graph;
pub mod euclid;
pub mod experiments;
pub mod lattice;
pub mod cli;

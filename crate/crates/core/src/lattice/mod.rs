//! Finite lattices, order-interval closure, ideal/filter separation, concept
//! lattices of formal contexts and partition lattices.

mod concept;
mod order;
mod partition;
mod separate;

use thiserror::Error;

use crate::closure::Side;

pub use concept::{concept_lattice, read_context_csv, Concept, ConceptLattice, FormalContext};
pub use order::{build_lattice, random_lattice, FiniteLattice, DEFAULT_LATTICE_BOUND};
pub use partition::{partition_lattice, PartitionLattice, MAX_PARTITION_N};
pub use separate::{
    is_distributive, lambda_closure, lattice_kakutani_check, lattice_separate, CoverChoice, IdealFilterResult,
    LambdaClosure, LatticeKakutaniReport, LatticeSeparation, DISTRIBUTIVITY_BOUND,
};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice has no elements")]
    Empty,
    #[error("{n} elements exceed the bound of {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("element {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cover relation has a cycle through element {0}")]
    Cycle(usize),
    #[error("elements {0} and {1} have no least upper bound")]
    NoSupremum(usize, usize),
    #[error("elements {0} and {1} have no greatest lower bound")]
    NoInfimum(usize, usize),
    #[error("input set {0:?} is empty")]
    EmptyInput(Side),
    #[error("unknown element {0:?}")]
    UnknownLabel(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

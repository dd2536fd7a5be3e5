//! Classification experiments: vertex labels of random trees (D1) and
//! separable point clouds (D2), scored by accuracy and coverage.

mod metrics;
mod runner;

use thiserror::Error;

use crate::closure::SeparationError;
use crate::euclid::EuclidError;
use crate::graph::GraphError;

pub use metrics::{accuracy, coverage};
pub use runner::{
    derive_seed, read_summary_csv, run_d1, run_d2, summarize, write_summary_csv, CellSummary, D1Config,
    D2Config, ExperimentReport, TrialResult,
};

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Euclid(#[from] EuclidError),
    #[error(transparent)]
    Separation(#[from] SeparationError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

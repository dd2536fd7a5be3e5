//! Convex-hull closure over finite point sets in `R^d` and the separable
//! point-cloud generator used by the classification experiments.

mod d2;
mod hull;
mod lp;
mod points;

use thiserror::Error;

pub use d2::{generate_d2_instance, D2Instance, DEFAULT_MARGIN};
pub use hull::{alpha_closure, hulls_intersect, in_convex_hull, AlphaClosure, DEFAULT_EPS};
pub use lp::LpError;
pub use points::{read_points_csv, write_points_csv, PointSet};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum EuclidError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("point {index} has {got} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("hull generator set is empty")]
    EmptyGenerators,
    #[error("linear program failed: {0}")]
    Lp(#[from] LpError),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
}

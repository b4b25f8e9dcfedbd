//! Sparse multivariate polynomials with rational coefficients.

mod fp;
mod param;
mod quadratic;
mod sparse;

pub use fp::FpPoly;
pub use param::LinearParam;
pub use quadratic::{local_quadratic_part, perfect_square_root, quadratic_rank, PerfectSquare};
pub use sparse::{SparsePoly, TermRecord};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("expected a form of degree {expected}, got degree {got}")]
    WrongDegree { expected: u32, got: u32 },
    #[error("point does not lie on the hypersurface")]
    NotOnHypersurface,
    #[error("point is a smooth point of the hypersurface")]
    NotSingular,
    #[error("zero vector is not a projective point")]
    ZeroPoint,
    #[error("parametrization is not injective (rank {rank} < {source_vars})")]
    NotInjective { rank: usize, source_vars: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

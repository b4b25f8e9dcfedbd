//! Exact scalars and small dense linear algebra.

mod field;
mod fp;
mod linear;
mod matrix;
mod qomega;

pub use field::{int, rat, rational_abs, Field, Rational};
pub use fp::{FpElement, PrimeField};
pub use linear::{proportional_mod, LinearForm};
pub use matrix::{Matrix, MatrixQ};
pub use qomega::QOmega;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("matrix of shape {rows}x{cols} needs {expected} entries, got {got}")]
    Shape {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("modulus {0} is not a prime >= 5")]
    BadModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse linear form {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

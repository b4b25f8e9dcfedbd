//! Exact verification toolkit for the Igusa quartic, the Coble fourfold and
//! the quartic double solids with fifteen nodes cut out by its hyperplane
//! sections.
//!
//! Everything is computed over the rationals, the Eisenstein field
//! `Q(ω)` or a prime field. Floating point is never used for a verdict.
//!
//! Layout:
//! - [`algebra`]: rationals, `Q(ω)`, prime fields, dense matrices, linear forms
//! - [`poly`]: sparse multivariate polynomials over `Q`
//! - [`groups`]: signed permutation groups and character computations
//! - [`config`]: the (15₄, 10₆) line/hyperplane configuration
//! - [`geometry`]: the Igusa quartic, its sections, nodes and symmetries
//! - [`rigidity`]: lattice and intersection arithmetic for the rigidity classification
//! - [`report`] and [`suite`]: structured verification reports used by the CLI

pub mod algebra;
pub mod config;
pub mod geometry;
pub mod groups;
pub mod par;
pub mod poly;
pub mod report;
pub mod rigidity;
pub mod suite;

pub use algebra::{rat, FpElement, LinearForm, Matrix, MatrixQ, QOmega, Rational};

pub use poly::{LinearParam, SparsePoly};

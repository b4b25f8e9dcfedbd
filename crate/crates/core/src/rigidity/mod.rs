//! Lattice and intersection arithmetic for the rigidity classification of
//! the `x₆` section: the D₅ lattice model, the three-point blow-up link and
//! the subgroup sweep.

mod classify;
mod d5;
mod sarkisov;

pub use classify::{
    aut_x6, c5c4_times_c2, classify_admissible, group_label, s4_times_c2, AdmissibilityVerdict,
    Classification,
};
pub use d5::{d5_model, invariant_rank, named_subgroups, D5Action};
pub use sarkisov::{sarkisov_arithmetic, SarkisovLattice, SarkisovReport};

use thiserror::Error;

use crate::groups::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RigidityError {
    #[error("element {0} is not in S5 x <Galois>")]
    OutsideAmbient(String),
    #[error("search bound {0} is below the minimum of 10")]
    BoundTooSmall(i64),
    #[error(transparent)]
    Group(#[from] GroupError),
}

//! The configuration of 15 singular lines `l_α` and 10 tangent hyperplanes
//! `H_β`, its incidence structure and its automorphisms.

mod automorphisms;
mod incidence;
mod partition;

pub use automorphisms::{
    configuration_automorphisms, induced_from_s6, standard_automorphisms, ConfigAut, ConfigAutGroup,
};
pub use incidence::{build_incidence, pairwise_plane_intersections, Incidence};
pub use partition::{PairPartition, TriplePartition};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("cannot parse partition {0:?}")]
    Parse(String),
    #[error("expected an unsigned permutation of 6 letters, got {0}")]
    NotAPermutationOfSix(String),
}

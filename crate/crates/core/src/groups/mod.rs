//! Signed permutation groups, conjugacy, subgroup enumeration and the
//! character computations behind the hyperplane classification.

mod character;
mod group;
mod perm;
mod stabilizer;
mod subgroups;

pub use character::{
    decomposition_signature, linear_characters, simplicial_character, CharacterVector,
    DecompSignature, LinearMethod, Verdict,
};
pub use group::{symmetric_group, ConjugacyClasses, FiniteGroup, Fingerprint};
pub use perm::SignedPerm;
pub use stabilizer::{hyperplane_stabilizer, scaling_character};
pub use subgroups::{is_subconjugate, subgroups_up_to_conjugacy, MAX_ENUMERATION_ORDER};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("element {0} carries coordinate signs")]
    SignedElement(String),
    #[error("group does not stabilize the hyperplane {0}")]
    NotStabilized(String),
    #[error("linear form is proportional to the ambient form and defines no hyperplane")]
    DegenerateHyperplane,
    #[error("group order {order} exceeds the enumeration bound {bound}")]
    OrderBound { order: usize, bound: usize },
    #[error("abelianization has exponent {0}, not a divisor of 6")]
    UnsupportedAbelianization(u64),
}

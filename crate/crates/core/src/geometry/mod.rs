//! The Igusa quartic, its singular lines and special hyperplanes, hyperplane
//! sections with their fifteen nodes, and the symmetry tests on them.

mod extension;
mod igusa;
mod point;
mod scan;
mod section;

pub use extension::{node_orbits, projectivity_extension_count, ExtensionResult, NodeOrbits};
pub use igusa::{
    build_igusa, double_quadric, line_identity, ruling_split, tangential_gradient, verify_singular_lines,
    DoubleQuadric, IgusaModel, LineIdentity, RulingSplit, SingularLineReport,
};
pub use point::ProjPoint;
pub use scan::{fp_singular_scan, line_points_mod_p, reduce_point, ScanResult};
pub use section::{
    coble_section_equation, coble_x6_reference, hyperplane_chart, hyperplane_section, verify_node,
    CobleSection, Node, NodeCheck, SectionModel,
};

use thiserror::Error;

use crate::config::{PairPartition, TriplePartition};
use crate::poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("line contained: l_{0} lies in the hyperplane")]
    LineContained(PairPartition),
    #[error("node collision: l_{0} and l_{1} meet the hyperplane in the same point")]
    NodeCollision(PairPartition, PairPartition),
    #[error("linear form is proportional to s1 and defines no hyperplane of P4")]
    DegenerateHyperplane,
    #[error("restriction of F to H_{0} is not a perfect square")]
    NotASquare(TriplePartition),
    #[error("no bipartition of the six lines on H_{0}: {1}")]
    NoBipartition(TriplePartition, String),
    #[error("no 5 nodes in general position")]
    NoGeneralFrame,
    #[error("group element {0} does not stabilize the hyperplane")]
    NotStabilized(String),
    #[error("bad prime {0}: need a prime p >= 5")]
    BadPrime(u64),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

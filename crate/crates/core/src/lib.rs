//! Exact order types of generic planar point configurations and their
//! Orchard two-colouring.

pub mod census;
pub mod cli;
pub mod error;
mod exact;
pub mod families;
pub mod format;
pub mod geometry;
pub mod ordertype;
pub mod render;
pub mod transforms;

pub use error::{Error, Result, Violation, ViolationKind};
pub use geometry::{
    hull_indices, is_generic, lemma_decomposition, orchard_partition, orient, separating_count, Configuration,
    LemmaDecomposition, OrchardPartition, Point,
};
pub use ordertype::{
    canonical_key, chirotope_of, hull_size_chi, is_isomorphic, orchard_partition_chi, separating_count_chi,
    validate_chirotope, CanonicalKey, Chirotope,
};

//! COMs from rational arrangements restricted to open polyhedra, the braid
//! arrangement, and shipped fixtures.

mod affine;
mod braid;
mod enumerate;
mod fixtures;
mod lp;
pub mod simplex;

pub use affine::{AffineForm, Arrangement};
pub use braid::{
    blocks_of_covector, braid_arrangement, braid_com, braid_ground, braid_pairs,
    covector_of_blocks, ordered_partition_label, ordered_set_partitions, pair_label,
    tope_of_permutation, BRAID_CAP,
};
pub use enumerate::{enumerate_covectors, enumerate_covectors_capped, DEFAULT_FORM_CAP};
pub use fixtures::{fixture, fixture_arrangement, FIXTURE_NAMES};
pub use lp::lp_strict_feasible;

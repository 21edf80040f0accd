//! Point loci, the orbit-harmonics Hilbert engine, ideal generators and
//! NBC bases.

mod engine;
mod ideals;
mod locus;
mod nbc_basis;
mod permutation;
mod series;
mod verify;

pub use engine::{gr_membership, hilbert_series, verify_basis, OrbitHarmonics};
pub use ideals::{
    all_j, big_ideal_default, big_ideal_generators, default_j, flat_symmetric_generator,
    small_ideal_generators, tilde_ideal_generators, BigContext, Family, FlatData, Generator,
    IdealKind, IdealPresentation,
};
pub use locus::{
    big_locus, big_var, big_variables, small_locus, small_var, small_variables, LocusKind,
    LocusPoint, PointLocus,
};
pub use nbc_basis::{
    big_hilbert_via_nbc, big_nbc_basis, contraction_nbc_sets, small_hilbert_via_nbc,
    small_nbc_basis, BigBasisElement,
};
pub use permutation::{
    kostant_locus, permmatrix_locus, permutations, permutohedral_locus, proper_subsets,
    PERMUTATION_LOCUS_CAP,
};
pub use series::{small_braid_erratum, small_braid_printed_formula, small_braid_series, HilbertSeries};
pub use verify::{
    verify_small_generators, verify_theorem_big, BigTheoremReport, MembershipFailure,
    SmallGeneratorsReport, J_EXHAUSTIVE_SUPPORT,
};

//! Groups of signed permutations acting on loci, graded characters and
//! their decomposition over flat orbits.

mod character;
mod decomposition;
mod group;

pub use character::{
    character_from_actions, check_group_characteristic, check_subgroup, fixed_points, graded_character, induced_character, locus_action,
    GradedCharacter,
};
pub use decomposition::{flat_orbits, verify_graded_module_structure, FlatOrbit, ModuleStructureReport};
pub use group::{
    automorphisms_brute_force, braid_signed_permutation, braid_symmetric_group, GroupSpec, AUT_SEARCH_CAP,
    DEFAULT_GROUP_CAP,
};

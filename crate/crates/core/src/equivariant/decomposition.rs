use serde::Serialize;

use super::character::{character_from_actions, check_group_characteristic, fixed_points, induced_character, locus_action, GradedCharacter};
use super::group::GroupSpec;
use crate::com::{Com, ElementSet};
use crate::error::Result;
use crate::field::Field;
use crate::harmonics::{big_locus, small_locus, OrbitHarmonics};
use crate::matroidal::FlatStructure;

/// One orbit of flats under the group.
#[derive(Clone, Debug, Serialize)]
pub struct FlatOrbit {
    /// Lexicographically smallest flat of the orbit.
    pub representative: Vec<usize>,
    pub size: usize,
    pub stabilizer_order: usize,
    pub codim: usize,
    /// Character of the stabilizer on the contraction's tope locus,
    /// shifted by the codimension and induced up.
    pub induced: GradedCharacter,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleStructureReport {
    pub group_order: usize,
    pub points: usize,
    pub big: GradedCharacter,
    pub orbits: Vec<FlatOrbit>,
    pub assembled: GradedCharacter,
    pub matches: bool,
    /// `Σ_d χ_d(g)` equals the number of fixed covectors for every `g`.
    pub fixed_points_match: bool,
    /// The identity row is the Hilbert series.
    pub identity_is_hilbert: bool,
    pub class_function: bool,
    /// Every element acts trivially on the constants.
    pub degree_zero_trivial: bool,
}

impl ModuleStructureReport {
    pub fn passes(&self) -> bool {
        self.matches && self.fixed_points_match && self.identity_is_hilbert && self.class_function && self.degree_zero_trivial
    }
}

/// Orbits of the group on flats, each as sorted member list with the
/// smallest first.
pub fn flat_orbits(group: &GroupSpec, flats: &[ElementSet]) -> Vec<Vec<ElementSet>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut sorted = flats.to_vec();
    sorted.sort();
    for f in sorted {
        if seen.contains(&f) {
            continue;
        }
        let mut orbit: Vec<ElementSet> = group.elements().iter().map(|w| w.act_set(&f)).collect();
        orbit.sort();
        orbit.dedup();
        seen.extend(orbit.iter().cloned());
        out.push(orbit);
    }
    out
}

/// Compares the graded character of the covector locus with the sum over
/// flat orbits of characters induced from stabilizers acting on the tope
/// loci of contractions, shifted by codimension.
pub fn verify_graded_module_structure<F: Field>(field: F, m: &Com, group: &GroupSpec) -> Result<ModuleStructureReport> {
    group.check_automorphisms(m)?;
    check_group_characteristic(&field, group)?;
    let n = m.ground().len();
    let structure = FlatStructure::new(m)?;
    let big = big_locus(m);
    let actions = group
        .elements()
        .iter()
        .map(|w| locus_action(&big, w))
        .collect::<Result<Vec<_>>>()?;
    let engine = OrbitHarmonics::new(field.clone(), &big)?;
    let chi = character_from_actions(&engine, &actions)?;
    let hilbert = engine.hilbert();

    let mut orbits = Vec::new();
    let mut assembled = GradedCharacter::zero(group.order());
    for orbit in flat_orbits(group, structure.flats().flats()) {
        let f = &orbit[0];
        let stab: Vec<usize> = (0..group.order())
            .filter(|&k| group.element(k).act_set(f) == *f)
            .collect();
        let rest = ElementSet::full(n).difference(f);
        let contraction = m.contract(f)?;
        let small = small_locus(&contraction);
        let local = stab
            .iter()
            .map(|&k| locus_action(&small, &group.element(k).restrict_to(&rest)?))
            .collect::<Result<Vec<_>>>()?;
        let e = OrbitHarmonics::new(field.clone(), &small)?;
        let codim = structure.codim(f)?;
        let psi = character_from_actions(&e, &local)?.shift(codim);
        let induced = induced_character(group, &stab, &psi)?;
        assembled = assembled.add(&induced)?;
        orbits.push(FlatOrbit {
            representative: f.to_vec(),
            size: orbit.len(),
            stabilizer_order: stab.len(),
            codim,
            induced,
        });
    }
    let fixed_points_match = actions
        .iter()
        .enumerate()
        .all(|(k, perm)| chi.total(k) == fixed_points(perm) as i64);
    let identity_is_hilbert = chi.values[0].iter().map(|&v| v as u64).eq(hilbert.coeffs.iter().copied())
        && chi.values[0].iter().all(|&v| v >= 0);
    let class_function = chi.is_class_function(group);
    let degree_zero_trivial = chi.rows().all(|r| r.first() == Some(&1));
    Ok(ModuleStructureReport {
        group_order: group.order(),
        points: big.len(),
        matches: assembled == chi,
        big: chi,
        orbits,
        assembled,
        fixed_points_match,
        identity_is_hilbert,
        class_function,
        degree_zero_trivial,
    })
}

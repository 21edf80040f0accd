//! Signed vectors, conditional oriented matroids, flats and minors.

mod axioms;
mod elements;
mod flats;
mod json;
mod perm;
mod signed;

pub use axioms::{check_axioms, AxiomReport, EliminationViolation, FaceSymmetryViolation};
pub use elements::{ElementSet, GroundSet};
pub use flats::FlatPoset;
pub use json::ComJson;
pub use perm::SignedPermutation;
pub use signed::{Sign, SignedVector};

use crate::error::{Error, Result};

/// A conditional oriented matroid: a ground set with a sorted,
/// deduplicated family of covectors satisfying face symmetry and strong
/// elimination.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Com {
    ground: GroundSet,
    covectors: Vec<SignedVector>,
}

impl Com {
    /// Builds a COM and verifies both axioms.
    pub fn new(ground: GroundSet, covectors: Vec<SignedVector>) -> Result<Self> {
        let com = Self::new_unchecked(ground, covectors)?;
        com.check_axioms()?.into_result()?;
        Ok(com)
    }

    /// Builds a family without checking the axioms. Only lengths and
    /// nonemptiness are enforced; meant for negative tests of
    /// [`Com::check_axioms`].
    pub fn new_unchecked(ground: GroundSet, mut covectors: Vec<SignedVector>) -> Result<Self> {
        if covectors.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(bad) = covectors.iter().find(|x| x.len() != ground.len()) {
            return Err(Error::LengthMismatch {
                left: ground.len(),
                right: bad.len(),
            });
        }
        covectors.sort_unstable();
        covectors.dedup();
        Ok(Com { ground, covectors })
    }

    /// Convenience constructor from labels and sign strings.
    pub fn from_strs(labels: &[&str], covectors: &[&str]) -> Result<Self> {
        let ground = GroundSet::new(labels.iter().copied())?;
        let covectors = covectors
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<_>>>()?;
        Com::new(ground, covectors)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn covectors(&self) -> &[SignedVector] {
        &self.covectors
    }

    pub fn len(&self) -> usize {
        self.covectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covectors.is_empty()
    }

    pub fn contains(&self, x: &SignedVector) -> bool {
        self.covectors.binary_search(x).is_ok()
    }

    pub fn position(&self, x: &SignedVector) -> Option<usize> {
        self.covectors.binary_search(x).ok()
    }

    pub fn check_axioms(&self) -> Result<AxiomReport> {
        check_axioms(&self.covectors)
    }

    pub fn topes(&self) -> Vec<SignedVector> {
        self.covectors.iter().filter(|x| x.is_tope()).cloned().collect()
    }

    /// Elements that vanish on every covector.
    pub fn coloops(&self) -> ElementSet {
        self.covectors
            .iter()
            .fold(self.ground.full_set(), |acc, x| {
                acc.intersection(&x.zero_set())
            })
    }

    pub fn flat_poset(&self) -> FlatPoset {
        FlatPoset::from_covectors(&self.covectors)
    }

    pub fn is_flat(&self, f: &ElementSet) -> bool {
        self.covectors.iter().any(|x| x.zero_set() == *f)
    }

    fn require_flat(&self, f: &ElementSet) -> Result<()> {
        if self.is_flat(f) {
            Ok(())
        } else {
            Err(Error::NotAFlat(self.ground.show(f)))
        }
    }

    /// The COM on `f` obtained by restricting every covector to `f`. At a
    /// flat this is an oriented matroid, so it contains the zero vector.
    pub fn restrict(&self, f: &ElementSet) -> Result<Com> {
        self.require_flat(f)?;
        let covectors = self.covectors.iter().map(|x| x.restrict(f)).collect();
        let com = Com::new_unchecked(self.ground.subset(f), covectors)?;
        if !com.contains(&SignedVector::zeros(f.len())) {
            return Err(Error::AxiomViolation(format!(
                "restriction to {} lacks the zero covector",
                self.ground.show(f)
            )));
        }
        Ok(com)
    }

    /// The COM on the complement of `f` formed by the covectors vanishing
    /// on `f`. It has no coloops.
    pub fn contract(&self, f: &ElementSet) -> Result<Com> {
        self.require_flat(f)?;
        let rest = self.ground.full_set().difference(f);
        let covectors = self
            .covectors
            .iter()
            .filter(|x| x.vanishes_on(f))
            .map(|x| x.restrict(&rest))
            .collect();
        let com = Com::new_unchecked(self.ground.subset(&rest), covectors)?;
        if !com.coloops().is_empty() {
            return Err(Error::AxiomViolation(format!(
                "contraction at {} has coloops",
                self.ground.show(f)
            )));
        }
        Ok(com)
    }

    /// Whether `w` maps the covector family into itself.
    pub fn is_automorphism(&self, w: &SignedPermutation) -> bool {
        w.len() == self.ground.len()
            && self
                .covectors
                .iter()
                .all(|x| self.contains(&w.act_unchecked(x)))
    }
}

impl std::fmt::Debug for Com {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Com")
            .field("ground", &self.ground)
            .field("covectors", &self.covectors)
            .finish()
    }
}

/// Whether `w` is an automorphism of `m`.
pub fn verify_automorphism(m: &Com, w: &SignedPermutation) -> bool {
    m.is_automorphism(w)
}

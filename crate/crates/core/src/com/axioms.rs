use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::signed::SignedVector;
use crate::error::{Error, Result};

const LOW: u64 = 0x5555_5555_5555_5555;

/// `X ∘ -Y` is missing from the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceSymmetryViolation {
    pub x: SignedVector,
    pub y: SignedVector,
}

/// No covector eliminates `element` between `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationViolation {
    pub x: SignedVector,
    pub y: SignedVector,
    pub element: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub face_symmetry: Option<FaceSymmetryViolation>,
    pub strong_elimination: Option<EliminationViolation>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.face_symmetry.is_none() && self.strong_elimination.is_none()
    }

    pub(crate) fn into_result(self) -> Result<()> {
        if let Some(v) = self.face_symmetry {
            return Err(Error::AxiomViolation(format!(
                "face symmetry fails for X={} Y={}",
                v.x, v.y
            )));
        }
        if let Some(v) = self.strong_elimination {
            return Err(Error::AxiomViolation(format!(
                "strong elimination fails for X={} Y={} at index {}",
                v.x, v.y, v.element
            )));
        }
        Ok(())
    }
}

/// Brute-force check of face symmetry (all ordered pairs) and strong
/// elimination (all pairs, all separating elements). Witnesses are the
/// first violations in family order.
pub fn check_axioms(family: &[SignedVector]) -> Result<AxiomReport> {
    if let Some(first) = family.first() {
        if let Some(bad) = family.iter().find(|v| v.len() != first.len()) {
            return Err(Error::LengthMismatch {
                left: first.len(),
                right: bad.len(),
            });
        }
    }
    let members: HashSet<&SignedVector> = family.iter().collect();

    let face_symmetry = family.par_iter().find_map_first(|x| {
        family.iter().find_map(|y| {
            let z = x.compose_unchecked(&-y);
            (!members.contains(&z)).then(|| FaceSymmetryViolation {
                x: x.clone(),
                y: y.clone(),
            })
        })
    });

    let strong_elimination = (0..family.len()).into_par_iter().find_map_first(|a| {
        let x = &family[a];
        family[a + 1..]
            .iter()
            .find_map(|y| eliminate(family, x, y).map(|element| EliminationViolation {
                x: x.clone(),
                y: y.clone(),
                element,
            }))
    });

    Ok(AxiomReport {
        face_symmetry,
        strong_elimination,
    })
}

/// Returns the first separating element that no covector eliminates.
///
/// The condition is symmetric in `x` and `y` because `x ∘ y` and `y ∘ x`
/// agree off the separator.
fn eliminate(family: &[SignedVector], x: &SignedVector, y: &SignedVector) -> Option<usize> {
    let xw = x.words();
    let yw = y.words();
    // two-bit masks of the separator, per word
    let sep: Vec<u64> = xw
        .iter()
        .zip(yw)
        .map(|(&a, &b)| {
            let s = ((a & LOW) & (b >> 1)) | ((a >> 1) & LOW & b);
            s | s << 1
        })
        .collect();
    if sep.iter().all(|&s| s == 0) {
        return None;
    }
    let xy = x.compose_unchecked(y);
    let target: Vec<u64> = xy.words().iter().zip(&sep).map(|(&w, &s)| w & !s).collect();
    let mut covered = vec![0u64; sep.len()];
    for z in family {
        let zw = z.words();
        if zw.iter().zip(&sep).zip(&target).all(|((&w, &s), &t)| w & !s == t) {
            for k in 0..sep.len() {
                let nz = (zw[k] | zw[k] >> 1) & LOW;
                covered[k] |= !nz & sep[k] & LOW;
            }
        }
    }
    (0..sep.len()).find_map(|k| {
        let missing = sep[k] & LOW & !covered[k];
        (missing != 0).then(|| k * 32 + missing.trailing_zeros() as usize / 2)
    })
}

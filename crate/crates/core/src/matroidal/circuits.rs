use rayon::prelude::*;
use serde::Serialize;

use crate::com::{Com, ElementSet, SignedVector};
use crate::error::{Error, Result};

/// Default bound on the ground-set size for circuit enumeration.
pub const DEFAULT_CIRCUIT_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Circuit {
    pub vector: SignedVector,
    pub symmetric: bool,
}

impl Circuit {
    pub fn support(&self) -> ElementSet {
        self.vector.support()
    }
}

/// Signed subsets of covectors, that is every `Z` with `Z ∘ Y = Y` for some
/// covector `Y`, marked by base-3 code.
fn faces_below(m: &Com) -> Vec<bool> {
    let n = m.ground().len();
    let pow: Vec<u64> = (0..n).map(|i| 3u64.pow(i as u32)).collect();
    let mut marked = vec![false; 3usize.pow(n as u32)];
    for y in m.covectors() {
        let mut codes = vec![0u64];
        for e in y.support().iter() {
            let d = if y.get(e) == crate::com::Sign::Plus { 1 } else { 2 };
            let add = d * pow[e];
            let k = codes.len();
            for j in 0..k {
                codes.push(codes[j] + add);
            }
        }
        for c in codes {
            marked[c as usize] = true;
        }
    }
    marked
}

/// All circuits: signed sets `X` with `X ∘ Y ≠ Y` for every covector `Y`,
/// minimal with that property.
///
/// Failing the property is inherited by signed subsets (if `Z ∘ Y = Y` and
/// `Z' ≤ Z` then `Z' ∘ Y = Y`), so checking the subsets obtained by
/// deleting one support element suffices.
pub fn circuits(m: &Com) -> Result<Vec<Circuit>> {
    circuits_capped(m, DEFAULT_CIRCUIT_CAP)
}

pub fn circuits_capped(m: &Com, cap: usize) -> Result<Vec<Circuit>> {
    let n = m.ground().len();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "ground set size for circuits",
            got: n,
            limit: cap,
        });
    }
    let marked = faces_below(m);
    let pow: Vec<u64> = (0..n).map(|i| 3u64.pow(i as u32)).collect();
    let is_circuit = |code: u64| {
        if marked[code as usize] {
            return false;
        }
        let mut rest = code;
        for p in pow.iter().rev() {
            let d = rest / p;
            rest %= p;
            if d != 0 && !marked[(code - d * p) as usize] {
                return false;
            }
        }
        true
    };
    let codes: Vec<u64> = (0..marked.len() as u64)
        .into_par_iter()
        .filter(|&c| is_circuit(c))
        .collect();
    let negate = |code: u64| {
        let mut out = 0;
        let mut rest = code;
        for p in &pow {
            let d = rest % 3;
            rest /= 3;
            out += [0, 2, 1][d as usize] * p;
        }
        out
    };
    let mut out: Vec<Circuit> = codes
        .iter()
        .map(|&c| Circuit {
            vector: SignedVector::from_base3(c, n),
            symmetric: is_circuit(negate(c)),
        })
        .collect();
    out.sort();
    Ok(out)
}

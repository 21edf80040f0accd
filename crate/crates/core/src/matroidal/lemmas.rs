use serde::Serialize;

use super::basic::FlatStructure;
use super::circuits::circuits;
use crate::com::{Com, ElementSet, Sign, SignedVector};
use crate::error::{Error, Result};

/// Outcome of comparing `#M` against the tope counts of its contractions.
#[derive(Clone, Debug, Serialize)]
pub struct TopeCountReport {
    pub covectors: usize,
    /// `(flat, #topes of the contraction at it)` in flat order.
    pub per_flat: Vec<(Vec<usize>, usize)>,
    pub sum: usize,
    /// Restriction to the complement of the flat is injective on covectors
    /// with that flat and lands in the topes of the contraction.
    pub bijective: bool,
}

impl TopeCountReport {
    pub fn passes(&self) -> bool {
        self.bijective && self.sum == self.covectors
    }
}

pub fn check_tope_contraction_count(m: &Com) -> Result<TopeCountReport> {
    let flats = m.flat_poset();
    let mut per_flat = Vec::with_capacity(flats.len());
    let mut sum = 0;
    let mut bijective = true;
    for f in flats.flats() {
        let c = m.contract(f)?;
        let topes = c.topes();
        let rest = ElementSet::full(m.ground().len()).difference(f);
        let mut images: Vec<SignedVector> = m
            .covectors()
            .iter()
            .filter(|x| x.zero_set() == *f)
            .map(|x| x.restrict(&rest))
            .collect();
        images.sort();
        bijective &= images == topes;
        sum += topes.len();
        per_flat.push((f.to_vec(), topes.len()));
    }
    Ok(TopeCountReport {
        covectors: m.len(),
        per_flat,
        sum,
        bijective,
    })
}

/// Nonempty proper subsets of `s`, in lexicographic order.
pub fn proper_nonempty_subsets(s: &ElementSet) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = s
        .subsets()
        .filter(|j| !j.is_empty() && j.len() < s.len())
        .collect();
    out.sort();
    out
}

/// Value of `ỹ_i` at the big-locus point of `y`.
fn tilde_value(x: &SignedVector, j: &ElementSet, y: &SignedVector, i: usize) -> u8 {
    let yi = y.get(i);
    let mut v = u8::from(yi == x.get(i));
    if j.contains(i) && yi == Sign::Zero {
        v += 1;
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoValuesReport {
    pub covectors_checked: usize,
    /// Covectors of the contraction at which 0 or 1 is not attained.
    pub failures: Vec<SignedVector>,
}

impl TwoValuesReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For a symmetric circuit `x` of the contraction at `f` and a nonempty
/// proper `j ⊂ Supp(x)`, check that every covector of the contraction has
/// some `ỹ_i` equal to 0 and some equal to 1. Indices of `x` and `j` refer
/// to the contraction's ground set.
pub fn check_two_values(
    m: &Com,
    f: &ElementSet,
    x: &SignedVector,
    j: &ElementSet,
) -> Result<TwoValuesReport> {
    let c = m.contract(f)?;
    let ok = circuits(&c)?
        .iter()
        .any(|k| k.symmetric && k.vector == *x);
    if !ok {
        return Err(Error::InvalidChoice(format!(
            "{x} is not a symmetric circuit of the contraction"
        )));
    }
    let supp = x.support();
    if supp.len() < 2 || j.is_empty() || !j.is_subset(&supp) || j.len() == supp.len() {
        return Err(Error::InvalidChoice(format!(
            "J = {:?} is not a nonempty proper subset of the support of {x}",
            j.to_vec()
        )));
    }
    Ok(two_values_on(&c, x, j))
}

fn two_values_on(c: &Com, x: &SignedVector, j: &ElementSet) -> TwoValuesReport {
    let supp = x.support();
    let failures = c
        .covectors()
        .iter()
        .filter(|y| {
            let vals: Vec<u8> = supp.iter().map(|i| tilde_value(x, j, y, i)).collect();
            !(vals.contains(&0) && vals.contains(&1))
        })
        .cloned()
        .collect();
    TwoValuesReport {
        covectors_checked: c.len(),
        failures,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoValuesCase {
    pub flat: Vec<usize>,
    pub circuit: SignedVector,
    pub j: Vec<usize>,
    pub failures: Vec<SignedVector>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoValuesSummary {
    pub cases: usize,
    pub covector_checks: usize,
    pub failed: Vec<TwoValuesCase>,
}

impl TwoValuesSummary {
    pub fn passes(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Every flat, every symmetric circuit of its contraction with support of
/// size at least 2, every admissible `J`.
pub fn check_two_values_exhaustive(m: &Com) -> Result<TwoValuesSummary> {
    let fs = FlatStructure::new(m)?;
    let mut summary = TwoValuesSummary {
        cases: 0,
        covector_checks: 0,
        failed: Vec::new(),
    };
    for f in fs.flats().flats() {
        let c = m.contract(f)?;
        for k in circuits(&c)?.iter().filter(|k| k.symmetric) {
            let supp = k.support();
            if supp.len() < 2 {
                continue;
            }
            for j in proper_nonempty_subsets(&supp) {
                let r = two_values_on(&c, &k.vector, &j);
                summary.cases += 1;
                summary.covector_checks += r.covectors_checked;
                if !r.passes() {
                    summary.failed.push(TwoValuesCase {
                        flat: f.to_vec(),
                        circuit: k.vector.clone(),
                        j: j.to_vec(),
                        failures: r.failures,
                    });
                }
            }
        }
    }
    Ok(summary)
}

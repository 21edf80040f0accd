use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::group::GroupSpec;
use crate::com::{SignedPermutation, SignedVector};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::harmonics::{LocusKind, OrbitHarmonics, PointLocus};

/// Values `χ_d(g)` of a graded representation, one row per group element
/// in the group's element order, all rows padded to the same length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedCharacter {
    pub values: Vec<Vec<i64>>,
}

impl GradedCharacter {
    pub fn new(mut values: Vec<Vec<i64>>) -> Self {
        let len = values.iter().map(Vec::len).max().unwrap_or(0);
        for row in &mut values {
            row.resize(len, 0);
        }
        let mut c = GradedCharacter { values };
        c.trim();
        c
    }

    fn trim(&mut self) {
        while !self.values.is_empty() && self.values.iter().all(|r| r.last() == Some(&0)) {
            for r in &mut self.values {
                r.pop();
            }
        }
    }

    pub fn num_elements(&self) -> usize {
        self.values.len()
    }

    /// Number of degrees, `top degree + 1`.
    pub fn num_degrees(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    pub fn at(&self, g: usize, d: usize) -> i64 {
        self.values[g].get(d).copied().unwrap_or(0)
    }

    /// The ungraded character `Σ_d χ_d(g)`.
    pub fn total(&self, g: usize) -> i64 {
        self.values[g].iter().sum()
    }

    /// Degree shift by `k`.
    pub fn shift(&self, k: usize) -> Self {
        GradedCharacter::new(
            self.values
                .iter()
                .map(|r| std::iter::repeat(0).take(k).chain(r.iter().copied()).collect())
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.num_elements() != other.num_elements() {
            return Err(Error::LengthMismatch {
                left: self.num_elements(),
                right: other.num_elements(),
            });
        }
        let len = self.num_degrees().max(other.num_degrees());
        Ok(GradedCharacter::new(
            (0..self.num_elements())
                .map(|g| (0..len).map(|d| self.at(g, d) + other.at(g, d)).collect())
                .collect(),
        ))
    }

    pub fn zero(num_elements: usize) -> Self {
        GradedCharacter::new(vec![Vec::new(); num_elements])
    }

    /// Whether every degree is constant on conjugacy classes.
    pub fn is_class_function(&self, group: &GroupSpec) -> bool {
        let labels = group.class_labels();
        (0..self.num_elements()).all(|g| self.values[g] == self.values[labels[g]])
    }

    /// `Σ_d χ_d(g) q^d` rendered per element.
    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.values.iter().map(Vec::as_slice)
    }
}

impl fmt::Display for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, row) in self.values.iter().enumerate() {
            writeln!(f, "{g}: {row:?}")?;
        }
        Ok(())
    }
}

/// Point permutation induced by `w` on a locus of topes or covectors:
/// point `j` goes to the point labelled `w·X_j`.
pub fn locus_action(locus: &PointLocus, w: &SignedPermutation) -> Result<Vec<usize>> {
    if !matches!(locus.kind, LocusKind::Small | LocusKind::Big) {
        return Err(Error::InvalidChoice(
            "group actions are defined on tope and covector loci only".into(),
        ));
    }
    let index: HashMap<&str, usize> = locus.labels().enumerate().map(|(k, l)| (l, k)).collect();
    locus
        .labels()
        .map(|l| {
            let x: SignedVector = l.parse()?;
            let y = w.act(&x)?.to_string();
            index
                .get(y.as_str())
                .copied()
                .ok_or_else(|| Error::NotAutomorphism(format!("{w:?} sends {l} to {y}, not in the locus")))
        })
        .collect()
}

/// Graded character of a group acting through `actions` (one point
/// permutation per element) on the graded quotient of `engine`'s locus.
pub fn character_from_actions<F: Field>(
    engine: &OrbitHarmonics<F>,
    actions: &[Vec<usize>],
) -> Result<GradedCharacter> {
    let f = engine.field();
    let p = f.characteristic();
    // traces are bounded by the number of points; the symmetric lift must
    // recover them
    if p != 0 && (p as u128) <= 2 * engine.num_points() as u128 {
        return Err(Error::CharacteristicTooSmall {
            p,
            needed: 2 * engine.num_points() + 1,
        });
    }
    let rows = actions
        .par_iter()
        .map(|perm| {
            engine
                .graded_trace(perm)?
                .iter()
                .map(|t| {
                    let q = f.lift(t);
                    q.to_i64()
                        .filter(|_| q.is_integer())
                        .ok_or_else(|| Error::NonIntegralCharacter(q.to_string()))
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedCharacter::new(rows))
}

/// Fails over `F_p` unless `p > |G|`.
pub fn check_group_characteristic<F: Field>(field: &F, group: &GroupSpec) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && (p as u128) <= group.order() as u128 {
        return Err(Error::CharacteristicTooSmall {
            p,
            needed: group.order() + 1,
        });
    }
    Ok(())
}

/// Graded character of `group` on the graded quotient of a tope or
/// covector locus.
pub fn graded_character<F: Field>(field: F, locus: &PointLocus, group: &GroupSpec) -> Result<GradedCharacter> {
    check_group_characteristic(&field, group)?;
    let actions = group
        .elements()
        .iter()
        .map(|w| locus_action(locus, w))
        .collect::<Result<Vec<_>>>()?;
    let engine = OrbitHarmonics::new(field, locus)?;
    character_from_actions(&engine, &actions)
}

/// Checks that `subgroup` (element indices of `group`) is closed under
/// multiplication.
pub fn check_subgroup(group: &GroupSpec, subgroup: &[usize]) -> Result<()> {
    let mut member = vec![false; group.order()];
    for &h in subgroup {
        if h >= group.order() {
            return Err(Error::NotSubgroup(format!("index {h} out of range")));
        }
        member[h] = true;
    }
    if !member[0] {
        return Err(Error::NotSubgroup("identity missing".into()));
    }
    for &a in subgroup {
        for &b in subgroup {
            if !member[group.mul(a, b)] {
                return Err(Error::NotSubgroup(format!(
                    "{:?} * {:?} leaves the subset",
                    group.element(a),
                    group.element(b)
                )));
            }
        }
    }
    Ok(())
}

/// `Ind_H^G χ (g) = (1/|H|) Σ_{x : x⁻¹gx ∈ H} χ(x⁻¹gx)`, with `chi` given
/// per element of `subgroup` in the same order.
pub fn induced_character(group: &GroupSpec, subgroup: &[usize], chi: &GradedCharacter) -> Result<GradedCharacter> {
    check_subgroup(group, subgroup)?;
    if chi.num_elements() != subgroup.len() {
        return Err(Error::LengthMismatch {
            left: subgroup.len(),
            right: chi.num_elements(),
        });
    }
    let pos: HashMap<usize, usize> = subgroup.iter().enumerate().map(|(k, &h)| (h, k)).collect();
    let hn = subgroup.len() as i64;
    let degrees = chi.num_degrees();
    let rows = (0..group.order())
        .into_par_iter()
        .map(|g| {
            let mut acc = vec![0i64; degrees];
            for x in 0..group.order() {
                if let Some(&k) = pos.get(&group.conjugate(g, x)) {
                    for (a, v) in acc.iter_mut().zip(&chi.values[k]) {
                        *a += v;
                    }
                }
            }
            acc.into_iter()
                .map(|a| {
                    if a % hn == 0 {
                        Ok(a / hn)
                    } else {
                        Err(Error::NonIntegralCharacter(format!("{a}/{hn}")))
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedCharacter::new(rows))
}

/// Number of points fixed by a point permutation.
pub fn fixed_points(perm: &[usize]) -> usize {
    perm.iter().enumerate().filter(|&(j, &p)| j == p).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariant::group::braid_symmetric_group;
    use crate::field::{PrimeField, Rationals};
    use crate::harmonics::{big_locus, hilbert_series, small_locus};
    use crate::realize::braid_com;

    #[test]
    fn transposition_on_one_hyperplane() {
        let m = braid_com(2).unwrap();
        let g = braid_symmetric_group(2).unwrap();
        let small = graded_character(Rationals, &small_locus(&m), &g).unwrap();
        // the swap exchanges the two topes: constants, then the sign
        assert_eq!(small.values, vec![vec![1, 1], vec![1, -1]]);
        let big = graded_character(Rationals, &big_locus(&m), &g).unwrap();
        assert_eq!(big.total(1), 1);
    }

    #[test]
    fn three_cycle_fixes_only_the_origin() {
        let m = braid_com(3).unwrap();
        let g = braid_symmetric_group(3).unwrap();
        let l = big_locus(&m);
        let chi = graded_character(Rationals, &l, &g).unwrap();
        for k in 0..g.order() {
            let perm = locus_action(&l, g.element(k)).unwrap();
            assert_eq!(chi.total(k), fixed_points(&perm) as i64);
        }
        let cycle = (1..g.order()).find(|&k| g.mul(k, g.mul(k, k)) == 0).unwrap();
        assert_eq!(chi.total(cycle), 1);
        let h = hilbert_series(Rationals, &l).unwrap();
        let id: Vec<u64> = chi.values[0].iter().map(|&v| v as u64).collect();
        assert_eq!(id, h.coeffs);
        assert!(chi.is_class_function(&g));
    }

    #[test]
    fn prime_field_agrees() {
        let m = braid_com(3).unwrap();
        let g = braid_symmetric_group(3).unwrap();
        let l = big_locus(&m);
        let q = graded_character(Rationals, &l, &g).unwrap();
        let p = graded_character(PrimeField::new(1_000_003).unwrap(), &l, &g).unwrap();
        assert_eq!(p, q);
        assert!(graded_character(PrimeField::new(17).unwrap(), &l, &g).is_err());
        let s4 = braid_symmetric_group(4).unwrap();
        let small4 = small_locus(&braid_com(4).unwrap());
        assert!(matches!(
            graded_character(PrimeField::new(23).unwrap(), &small4, &s4),
            Err(Error::CharacteristicTooSmall { needed: 25, .. })
        ));
    }

    #[test]
    fn induction_edge_cases() {
        let g = braid_symmetric_group(3).unwrap();
        let m = braid_com(3).unwrap();
        let chi = graded_character(Rationals, &small_locus(&m), &g).unwrap();
        let all: Vec<usize> = (0..g.order()).collect();
        assert_eq!(induced_character(&g, &all, &chi).unwrap(), chi);
        // from the trivial group: the regular character
        let triv = GradedCharacter::new(vec![vec![1]]);
        let reg = induced_character(&g, &[0], &triv).unwrap();
        assert_eq!(reg.total(0), 6);
        assert!((1..6).all(|k| reg.total(k) == 0));
        // element 1 is an adjacent transposition
        let sign = GradedCharacter::new(vec![vec![1], vec![-1]]);
        let ind = induced_character(&g, &[0, 1], &sign).unwrap();
        assert_eq!(ind.total(0), 3);
        assert!(check_subgroup(&g, &[1]).is_err());
        assert!(check_subgroup(&g, &[0, 1, 2]).is_err());
    }
}

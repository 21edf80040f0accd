use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::com::{Com, GroundSet, SignedPermutation};
use crate::error::{Error, Result};
use crate::realize::braid_pairs;

/// Default bound on the order of a generated group.
pub const DEFAULT_GROUP_CAP: usize = 100_000;

/// Largest ground set for the brute-force automorphism search.
pub const AUT_SEARCH_CAP: usize = 6;

/// A finite group of signed permutations given by generators, with all of
/// its elements listed in breadth-first order from the identity.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    degree: usize,
    generators: Vec<SignedPermutation>,
    elements: Vec<SignedPermutation>,
    index: HashMap<SignedPermutation, usize>,
}

impl GroupSpec {
    pub fn generate(degree: usize, generators: Vec<SignedPermutation>) -> Result<Self> {
        Self::generate_capped(degree, generators, DEFAULT_GROUP_CAP)
    }

    pub fn generate_capped(degree: usize, generators: Vec<SignedPermutation>, cap: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != degree) {
            return Err(Error::LengthMismatch {
                left: degree,
                right: g.len(),
            });
        }
        let id = SignedPermutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(k) = queue.pop_front() {
            for g in &generators {
                let h = g.compose(&elements[k])?;
                if index.contains_key(&h) {
                    continue;
                }
                if elements.len() == cap {
                    return Err(Error::CapExceeded {
                        what: "group order",
                        got: cap + 1,
                        limit: cap,
                    });
                }
                index.insert(h.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(h);
            }
        }
        Ok(GroupSpec {
            degree,
            generators,
            elements,
            index,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[SignedPermutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &SignedPermutation {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &SignedPermutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let h = self.elements[a].compose(&self.elements[b]).expect("same degree");
        self.index[&h]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    /// Index of `x⁻¹ g x`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.inv(x), self.mul(g, x))
    }

    /// Fails naming the first element that is not an automorphism of `m`.
    pub fn check_automorphisms(&self, m: &Com) -> Result<()> {
        if m.ground().len() != self.degree {
            return Err(Error::LengthMismatch {
                left: m.ground().len(),
                right: self.degree,
            });
        }
        // generators suffice: automorphisms are closed under composition
        match self.generators.iter().find(|g| !m.is_automorphism(g)) {
            Some(g) => Err(Error::NotAutomorphism(format!("{g:?}"))),
            None => Ok(()),
        }
    }

    /// Conjugacy class label of each element: the smallest index in its
    /// class.
    pub fn class_labels(&self) -> Vec<usize> {
        (0..self.order())
            .map(|g| (0..self.order()).map(|x| self.conjugate(g, x)).min().expect("nonempty"))
            .collect()
    }

    pub fn from_json(s: &str, ground: &GroundSet) -> Result<Self> {
        let j: GroupJson = serde_json::from_str(s)?;
        let generators = j
            .generators
            .iter()
            .map(|g| {
                if g.perm.len() != ground.len() || g.signs.len() != ground.len() {
                    return Err(Error::LengthMismatch {
                        left: ground.len(),
                        right: g.perm.len().max(g.signs.len()),
                    });
                }
                let perm = g
                    .perm
                    .iter()
                    .map(|l| ground.index_of(l))
                    .collect::<Result<Vec<_>>>()?;
                SignedPermutation::new(perm, g.signs.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::generate(ground.len(), generators)
    }

    pub fn to_json(&self, ground: &GroundSet) -> String {
        let j = GroupJson {
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorJson {
                    perm: g.perm().iter().map(|&p| ground.label(p).to_string()).collect(),
                    signs: g.signs().to_vec(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&j).expect("group serializes");
        s.push('\n');
        s
    }
}

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    perm: Vec<String>,
    signs: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    generators: Vec<GeneratorJson>,
}

/// The action of `sigma` (0-based one-line notation) on the braid ground
/// set: pair `(i, j)` goes to the sorted pair of images, with sign `-1`
/// when the images come out reversed.
pub fn braid_signed_permutation(n: usize, sigma: &[usize]) -> Result<SignedPermutation> {
    let pairs = braid_pairs(n);
    let pos: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut perm = Vec::with_capacity(pairs.len());
    let mut signs = Vec::with_capacity(pairs.len());
    for &(i, j) in &pairs {
        let (a, b) = (sigma[i], sigma[j]);
        let (key, s) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
        perm.push(pos[&key]);
        signs.push(s);
    }
    SignedPermutation::new(perm, signs)
}

/// The symmetric group acting on the braid ground set, generated by
/// adjacent transpositions.
pub fn braid_symmetric_group(n: usize) -> Result<GroupSpec> {
    let gens = (0..n.saturating_sub(1))
        .map(|k| {
            let mut s: Vec<usize> = (0..n).collect();
            s.swap(k, k + 1);
            braid_signed_permutation(n, &s)
        })
        .collect::<Result<Vec<_>>>()?;
    GroupSpec::generate(n * n.saturating_sub(1) / 2, gens)
}

/// Every signed permutation that is an automorphism, by exhaustive search.
pub fn automorphisms_brute_force(m: &Com) -> Result<Vec<SignedPermutation>> {
    let n = m.ground().len();
    if n > AUT_SEARCH_CAP {
        return Err(Error::CapExceeded {
            what: "ground set size for automorphism search",
            got: n,
            limit: AUT_SEARCH_CAP,
        });
    }
    let mut out = Vec::new();
    for p in crate::harmonics::permutations(n) {
        let perm: Vec<usize> = p.iter().map(|a| a - 1).collect();
        for mask in 0u32..1 << n {
            let signs = (0..n).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect();
            let w = SignedPermutation::new(perm.clone(), signs)?;
            if m.is_automorphism(&w) {
                out.push(w);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realize::{braid_com, braid_ground, fixture};

    #[test]
    fn symmetric_groups() {
        for (n, order) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
            let g = braid_symmetric_group(n).unwrap();
            assert_eq!(g.order(), order);
            g.check_automorphisms(&braid_com(n).unwrap()).unwrap();
            assert!(g.element(0).is_identity());
        }
    }

    #[test]
    fn closure_and_inverses() {
        let g = braid_symmetric_group(4).unwrap();
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
        let classes = g.class_labels();
        let mut distinct = classes.clone();
        distinct.sort();
        distinct.dedup();
        // partitions of 4
        assert_eq!(distinct.len(), 5);
        assert!(GroupSpec::generate_capped(6, braid_symmetric_group(4).unwrap().generators().to_vec(), 10).is_err());
    }

    #[test]
    fn brute_force_matches_generated_group() {
        // with sign flips the full automorphism group of the central braid
        // arrangement also contains the antipodal map
        let m = braid_com(3).unwrap();
        let auts = automorphisms_brute_force(&m).unwrap();
        assert_eq!(auts.len(), 12);
        let g = braid_symmetric_group(3).unwrap();
        assert!(g.elements().iter().all(|w| auts.contains(w)));
        let f = automorphisms_brute_force(&fixture("figure1").unwrap()).unwrap();
        assert!(f.iter().any(|w| w.is_identity()));
    }

    #[test]
    fn json_round_trip() {
        let ground = braid_ground(3);
        let g = braid_symmetric_group(3).unwrap();
        let s = g.to_json(&ground);
        let back = GroupSpec::from_json(&s, &ground).unwrap();
        assert_eq!(back.order(), 6);
        assert_eq!(back.to_json(&ground), s);
        let bad = r#"{"generators":[{"perm":["12","12","23"],"signs":[1,1,1]}]}"#;
        assert!(GroupSpec::from_json(bad, &ground).is_err());
    }

    #[test]
    fn non_automorphism_rejected() {
        let m = fixture("figure1").unwrap();
        let flip = SignedPermutation::new(vec![0, 1, 2, 3], vec![1, 1, 1, -1]).unwrap();
        let g = GroupSpec::generate(4, vec![flip]).unwrap();
        assert!(matches!(g.check_automorphisms(&m), Err(Error::NotAutomorphism(_))));
    }
}

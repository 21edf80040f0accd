use std::fmt;

use super::elements::ElementSet;
use super::signed::{Sign, SignedVector};
use crate::error::{Error, Result};

/// A signed permutation of ground-set indices acting on signed vectors by
/// `(w·X)(perm[k]) = signs[k] · X(k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        if perm.len() != signs.len() {
            return Err(Error::LengthMismatch {
                left: perm.len(),
                right: signs.len(),
            });
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("{perm:?} is not a bijection")));
            }
        }
        if let Some(s) = signs.iter().find(|s| s.abs() != 1) {
            return Err(Error::InvalidPermutation(format!("sign {s} is not +1 or -1")));
        }
        Ok(SignedPermutation { perm, signs })
    }

    /// An unsigned permutation.
    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let signs = vec![1; perm.len()];
        Self::new(perm, signs)
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn image(&self, k: usize) -> usize {
        self.perm[k]
    }

    pub fn sign(&self, k: usize) -> i8 {
        self.signs[k]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &p)| k == p) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn act(&self, x: &SignedVector) -> Result<SignedVector> {
        if x.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: x.len(),
            });
        }
        Ok(self.act_unchecked(x))
    }

    pub(crate) fn act_unchecked(&self, x: &SignedVector) -> SignedVector {
        let mut out = SignedVector::zeros(x.len());
        for k in 0..x.len() {
            let s = x.get(k);
            if !s.is_zero() {
                out.set(self.perm[k], signed(s, self.signs[k]));
            }
        }
        out
    }

    pub fn act_set(&self, s: &ElementSet) -> ElementSet {
        s.iter().map(|k| self.perm[k]).collect()
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let signs = (0..self.len())
            .map(|k| other.signs[k] * self.signs[other.perm[k]])
            .collect();
        Ok(SignedPermutation { perm, signs })
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0; self.len()];
        let mut signs = vec![1; self.len()];
        for k in 0..self.len() {
            perm[self.perm[k]] = k;
            signs[self.perm[k]] = self.signs[k];
        }
        SignedPermutation { perm, signs }
    }

    /// The induced signed permutation on the elements of `s`, renumbered in
    /// increasing order. Fails unless `s` is invariant.
    pub fn restrict_to(&self, s: &ElementSet) -> Result<Self> {
        if self.act_set(s) != *s {
            return Err(Error::NotInvariant);
        }
        let elems = s.to_vec();
        let pos = |e: usize| elems.binary_search(&e).expect("invariant set");
        let perm = elems.iter().map(|&e| pos(self.perm[e])).collect();
        let signs = elems.iter().map(|&e| self.signs[e]).collect();
        Ok(SignedPermutation { perm, signs })
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for k in 0..self.len() {
            if k > 0 {
                write!(f, " ")?;
            }
            let s = if self.signs[k] < 0 { "-" } else { "" };
            write!(f, "{s}{}", self.perm[k] + 1)?;
        }
        write!(f, "]")
    }
}

/// Sign of a permutation entry applied to a sign.
pub(crate) fn signed(s: Sign, sign: i8) -> Sign {
    if sign < 0 {
        -s
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
        (
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            prop::collection::vec(prop::bool::ANY, n),
        )
            .prop_map(|(p, s)| {
                SignedPermutation::new(p, s.iter().map(|&b| if b { 1 } else { -1 }).collect()).unwrap()
            })
    }

    #[test]
    fn validation() {
        assert!(SignedPermutation::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], vec![1, 2]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], vec![1]).is_err());
    }

    #[test]
    fn action_moves_entries() {
        let w = SignedPermutation::new(vec![1, 2, 0], vec![1, -1, 1]).unwrap();
        let x: SignedVector = "+-0".parse().unwrap();
        assert_eq!(w.act(&x).unwrap().to_string(), "0++");
        let s: ElementSet = [0, 1].into_iter().collect();
        assert_eq!(w.act_set(&s).to_vec(), vec![1, 2]);
        let r = SignedPermutation::new(vec![1, 0, 2], vec![-1, 1, 1]).unwrap();
        let sub = r.restrict_to(&s).unwrap();
        assert_eq!(sub.perm(), &[1, 0]);
        assert_eq!(sub.signs(), &[-1, 1]);
        assert!(w.restrict_to(&s).is_err());
    }

    proptest! {
        #[test]
        fn action_is_a_group_action(a in arb_perm(5), b in arb_perm(5), v in prop::collection::vec(-1i8..=1, 5)) {
            let x = SignedVector::from_i8s(&v);
            let ab = a.compose(&b).unwrap();
            prop_assert_eq!(ab.act(&x).unwrap(), a.act(&b.act(&x).unwrap()).unwrap());
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
            prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
            prop_assert_eq!(a.act(&-&x).unwrap(), -a.act(&x).unwrap());
        }
    }
}

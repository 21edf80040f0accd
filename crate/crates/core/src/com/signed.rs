use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use smallvec::SmallVec;

use super::elements::ElementSet;
use crate::error::{Error, Result};

const LOW: u64 = 0x5555_5555_5555_5555;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Zero,
    Plus,
    Minus,
}

impl Sign {
    fn bits(self) -> u64 {
        match self {
            Sign::Zero => 0,
            Sign::Plus => 1,
            Sign::Minus => 2,
        }
    }

    fn from_bits(b: u64) -> Sign {
        match b {
            0 => Sign::Zero,
            1 => Sign::Plus,
            _ => Sign::Minus,
        }
    }

    pub fn from_char(c: char) -> Result<Sign> {
        match c {
            '0' => Ok(Sign::Zero),
            '+' => Ok(Sign::Plus),
            '-' | '\u{2212}' => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Zero => '0',
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Zero => 0,
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Sign {
        match v.signum() {
            0 => Sign::Zero,
            1 => Sign::Plus,
            _ => Sign::Minus,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A function from ground-set indices to `{+,-,0}`, packed two bits per
/// element (`00` zero, `01` plus, `10` minus), 32 elements per word.
///
/// The derived order compares the packed words and is the canonical
/// covector order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedVector {
    words: SmallVec<[u64; 1]>,
    len: usize,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(32)
}

impl SignedVector {
    pub fn zeros(len: usize) -> Self {
        SignedVector {
            words: SmallVec::from_elem(0, word_count(len)),
            len,
        }
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut v = SignedVector::zeros(signs.len());
        for (i, &s) in signs.iter().enumerate() {
            v.set(i, s);
        }
        v
    }

    /// Builds a vector from signs given as integers; only the sign of each
    /// entry matters.
    pub fn from_i8s(signs: &[i8]) -> Self {
        let v: Vec<Sign> = signs.iter().map(|&s| Sign::from_i8(s)).collect();
        Self::from_signs(&v)
    }

    /// Decodes the base-3 digits of `code` (digit 0 zero, 1 plus, 2 minus),
    /// least significant digit first.
    pub fn from_base3(mut code: u64, len: usize) -> Self {
        let mut v = SignedVector::zeros(len);
        for i in 0..len {
            v.set(i, Sign::from_bits(code % 3));
            code /= 3;
        }
        v
    }

    pub fn to_base3(&self) -> u64 {
        (0..self.len)
            .rev()
            .fold(0, |acc, i| acc * 3 + self.bits(i))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn bits(&self, i: usize) -> u64 {
        (self.words[i / 32] >> (2 * (i % 32))) & 3
    }

    pub fn get(&self, i: usize) -> Sign {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        Sign::from_bits(self.bits(i))
    }

    pub fn set(&mut self, i: usize, s: Sign) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let sh = 2 * (i % 32);
        let w = &mut self.words[i / 32];
        *w = (*w & !(3 << sh)) | (s.bits() << sh);
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    /// `X ∘ Y`: entries of `self` where nonzero, otherwise those of `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(&x, &y)| {
                let nz = (x | x >> 1) & LOW;
                x | (y & !(nz | nz << 1))
            })
            .collect();
        SignedVector {
            words,
            len: self.len,
        }
    }

    /// Indices where both entries are nonzero and opposite.
    pub fn separator(&self, other: &Self) -> Result<ElementSet> {
        self.check_len(other)?;
        Ok(self.separator_unchecked(other))
    }

    pub(crate) fn separator_unchecked(&self, other: &Self) -> ElementSet {
        let mut out = ElementSet::new();
        for (k, (&x, &y)) in self.words.iter().zip(other.words.iter()).enumerate() {
            let (xp, xm) = (x & LOW, (x >> 1) & LOW);
            let (yp, ym) = (y & LOW, (y >> 1) & LOW);
            let mut sep = (xp & ym) | (xm & yp);
            while sep != 0 {
                let b = sep.trailing_zeros() as usize;
                out.insert(k * 32 + b / 2);
                sep &= sep - 1;
            }
        }
        out
    }

    pub fn support(&self) -> ElementSet {
        (0..self.len).filter(|&i| self.bits(i) != 0).collect()
    }

    /// The zero set of the vector.
    pub fn zero_set(&self) -> ElementSet {
        (0..self.len).filter(|&i| self.bits(i) == 0).collect()
    }

    pub fn support_size(&self) -> usize {
        self.words
            .iter()
            .map(|&w| ((w | w >> 1) & LOW).count_ones() as usize)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_tope(&self) -> bool {
        self.support_size() == self.len
    }

    /// `self ≤ other` in the face order: `other` agrees with `self` on the
    /// support of `self`.
    pub fn conforms_to(&self, other: &Self) -> bool {
        self.len == other.len
            && self.words.iter().zip(other.words.iter()).all(|(&x, &y)| {
                let nz = (x | x >> 1) & LOW;
                y & (nz | nz << 1) == x
            })
    }

    /// The entries at the indices of `set`, in increasing order.
    pub fn restrict(&self, set: &ElementSet) -> SignedVector {
        let signs: Vec<Sign> = set.iter().map(|i| self.get(i)).collect();
        SignedVector::from_signs(&signs)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Whether every entry indexed by `set` is zero.
    pub fn vanishes_on(&self, set: &ElementSet) -> bool {
        set.iter().all(|i| self.bits(i) == 0)
    }
}

impl Neg for &SignedVector {
    type Output = SignedVector;

    fn neg(self) -> SignedVector {
        let words = self
            .words
            .iter()
            .map(|&w| ((w & LOW) << 1) | ((w >> 1) & LOW))
            .collect();
        SignedVector {
            words,
            len: self.len,
        }
    }
}

impl Neg for SignedVector {
    type Output = SignedVector;

    fn neg(self) -> SignedVector {
        -&self
    }
}

impl FromStr for SignedVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s.chars().map(Sign::from_char).collect::<Result<Vec<_>>>()?;
        Ok(SignedVector::from_signs(&signs))
    }
}

impl fmt::Display for SignedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.signs() {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl serde::Serialize for SignedVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for SignedVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(sv("0+-+").compose(&sv("-+-+")).unwrap(), sv("-+-+"));
        assert_eq!(sv("00").compose(&sv("+-")).unwrap(), sv("+-"));
        assert!(sv("0+").compose(&sv("0+-")).is_err());
    }

    #[test]
    fn separator_examples() {
        assert_eq!(sv("+-0").separator(&sv("--+")).unwrap().to_vec(), vec![0]);
        assert_eq!(sv("+0").separator(&sv("-0")).unwrap().to_vec(), vec![0]);
        assert!(sv("+-0").separator(&sv("+-0")).unwrap().is_empty());
        assert!(sv("+").separator(&sv("+-")).is_err());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(sv("0+-+").to_string(), "0+-+");
        assert_eq!(sv("+\u{2212}").to_string(), "+-");
        assert!("+x".parse::<SignedVector>().is_err());
        assert_eq!(sv("").len(), 0);
        assert_eq!(sv("0+-+").zero_set().to_vec(), vec![0]);
        assert!(sv("+0").conforms_to(&sv("+-")));
        assert!(!sv("+0").conforms_to(&sv("--")));
    }

    #[test]
    fn base3_round_trip() {
        for code in 0..81 {
            assert_eq!(SignedVector::from_base3(code, 4).to_base3(), code);
        }
    }

    fn arb_signs(len: usize) -> impl Strategy<Value = Vec<i8>> {
        prop::collection::vec(-1i8..=1, len)
    }

    fn naive_compose(x: &[i8], y: &[i8]) -> Vec<i8> {
        x.iter().zip(y).map(|(&a, &b)| if a != 0 { a } else { b }).collect()
    }

    proptest! {
        #[test]
        fn packed_ops_match_naive(len in 0usize..80, seed in any::<u64>()) {
            let mut r = seed;
            let mut draw = || { r = r.wrapping_mul(6364136223846793005).wrapping_add(1); ((r >> 33) % 3) as i8 - 1 };
            let x: Vec<i8> = (0..len).map(|_| draw()).collect();
            let y: Vec<i8> = (0..len).map(|_| draw()).collect();
            let (vx, vy) = (SignedVector::from_i8s(&x), SignedVector::from_i8s(&y));
            prop_assert_eq!(vx.compose(&vy).unwrap(), SignedVector::from_i8s(&naive_compose(&x, &y)));
            let sep: Vec<usize> = (0..len).filter(|&i| x[i] * y[i] == -1).collect();
            prop_assert_eq!(vx.separator(&vy).unwrap().to_vec(), sep.clone());
            let neg: Vec<i8> = x.iter().map(|v| -v).collect();
            prop_assert_eq!(-&vx, SignedVector::from_i8s(&neg));
            prop_assert_eq!(vx.support_size(), x.iter().filter(|&&v| v != 0).count());
        }

        #[test]
        fn composition_is_associative_and_idempotent(x in arb_signs(7), y in arb_signs(7), z in arb_signs(7)) {
            let (x, y, z) = (SignedVector::from_i8s(&x), SignedVector::from_i8s(&y), SignedVector::from_i8s(&z));
            let left = x.compose(&y).unwrap().compose(&z).unwrap();
            let right = x.compose(&y.compose(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(x.compose(&x).unwrap(), x.clone());
            prop_assert_eq!(
                x.compose(&y).unwrap().zero_set(),
                x.zero_set().intersection(&y.zero_set())
            );
        }
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// An ordered list of distinct element labels. The list order is the
/// default total order used by circuits, NBC sets and basic-set choices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Arc<[String]>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet {
            labels: labels.into(),
        })
    }

    /// Labels `"1"`, ..., `"n"`.
    pub fn numbered(n: usize) -> Self {
        GroundSet {
            labels: (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().into(),
        }
    }

    pub fn empty() -> Self {
        GroundSet {
            labels: Vec::new().into(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Ground set consisting of the labels in `set`, in ground order.
    pub fn subset(&self, set: &ElementSet) -> GroundSet {
        GroundSet {
            labels: set
                .iter()
                .map(|i| self.labels[i].clone())
                .collect::<Vec<_>>()
                .into(),
        }
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// Parses a comma-separated label list such as `1,2,3`.
    pub fn parse_set(&self, s: &str) -> Result<ElementSet> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = ElementSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            set.insert(self.index_of(part)?);
        }
        Ok(set)
    }

    /// Renders a subset as `{a,b,c}` using labels.
    pub fn show(&self, set: &ElementSet) -> String {
        let parts: Vec<&str> = set.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// A subset of ground-set indices stored as a bitset.
///
/// Ordering is lexicographic on the ascending element lists, so `{0,1} <
/// {0,2} < {1}` and the empty set is smallest.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: SmallVec<[u64; 1]>,
}

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    /// Elements of the low `n` bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = ElementSet::new();
        if mask != 0 {
            s.words.push(mask);
        }
        s
    }

    /// The set as a single-word mask, if every element is below 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        let w = i / 64;
        if w < self.words.len() {
            self.words[w] &= !(1 << (i % 64));
            self.trim();
        }
    }

    pub fn with(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(k, w)| w & !other.words.get(k).copied().unwrap_or(0) == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn union(&self, other: &Self) -> Self {
        let n = self.words.len().max(other.words.len());
        let mut s = ElementSet {
            words: (0..n)
                .map(|k| {
                    self.words.get(k).copied().unwrap_or(0) | other.words.get(k).copied().unwrap_or(0)
                })
                .collect(),
        };
        s.trim();
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = ElementSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = ElementSet {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(k, a)| a & !other.words.get(k).copied().unwrap_or(0))
                .collect(),
        };
        s.trim();
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// All subsets, in increasing bitmask order. Intended for small sets.
    pub fn subsets(&self) -> impl Iterator<Item = ElementSet> + '_ {
        let elems = self.to_vec();
        assert!(elems.len() < 32, "subset enumeration of a set that large");
        (0u64..1 << elems.len()).map(move |m| {
            let mut s = ElementSet::new();
            for (k, &e) in elems.iter().enumerate() {
                if m >> k & 1 == 1 {
                    s.insert(e);
                }
            }
            s
        })
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElementSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

use super::elements::ElementSet;
use super::signed::SignedVector;

/// The distinct zero sets of a covector family, sorted by size and then
/// lexicographically. For a COM this is a meet-semilattice whose minimum
/// is the coloop set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatPoset {
    flats: Vec<ElementSet>,
}

impl FlatPoset {
    pub fn from_covectors(covectors: &[SignedVector]) -> Self {
        let mut flats: Vec<ElementSet> = covectors.iter().map(|x| x.zero_set()).collect();
        flats.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        flats.dedup();
        let poset = FlatPoset { flats };
        debug_assert!(poset.is_meet_closed());
        poset
    }

    pub fn flats(&self) -> &[ElementSet] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn contains(&self, f: &ElementSet) -> bool {
        self.index_of(f).is_some()
    }

    pub fn index_of(&self, f: &ElementSet) -> Option<usize> {
        self.flats.iter().position(|g| g == f)
    }

    /// The smallest flat; the first entry after sorting by size.
    pub fn minimum(&self) -> Option<&ElementSet> {
        self.flats.first()
    }

    pub fn is_meet_closed(&self) -> bool {
        self.flats.iter().all(|a| {
            self.flats
                .iter()
                .all(|b| self.contains(&a.intersection(b)))
        })
    }

    /// Flats containing `c`.
    pub fn containing<'a>(&'a self, c: &'a ElementSet) -> impl Iterator<Item = &'a ElementSet> + 'a {
        self.flats.iter().filter(move |f| c.is_subset(f))
    }

    /// Pairs `(i, j)` of indices with `flats[j]` covering `flats[i]`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.flats.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (&self.flats[i], &self.flats[j]);
                if a == b || !a.is_subset(b) {
                    continue;
                }
                let between = self.flats.iter().any(|c| {
                    c != a && c != b && a.is_subset(c) && c.is_subset(b)
                });
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

use crate::com::{Com, ElementSet, FlatPoset};
use crate::error::{Error, Result};

/// The smallest flat containing `c`, or `None` if no flat contains it.
pub fn closure(flats: &FlatPoset, c: &ElementSet) -> Option<ElementSet> {
    let mut it = flats.containing(c);
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, f| acc.intersection(f)))
}

/// Whether `b` is basic for the flat `f`: its closure is `f` and no
/// smaller subset of it has closure `f`.
pub fn is_basic_for(flats: &FlatPoset, b: &ElementSet, f: &ElementSet) -> bool {
    closure(flats, b).as_ref() == Some(f)
        && b.iter().all(|e| closure(flats, &b.without(e)).as_ref() != Some(f))
}

/// Whether `c` is basic for some flat, namely its closure.
pub fn is_basic(flats: &FlatPoset, c: &ElementSet) -> bool {
    match closure(flats, c) {
        Some(f) => is_basic_for(flats, c, &f),
        None => false,
    }
}

/// Flats of a COM together with their basic sets and codimensions.
#[derive(Clone, Debug)]
pub struct FlatStructure {
    flats: FlatPoset,
    basic: Vec<Vec<ElementSet>>,
    codim: Vec<usize>,
    ground_len: usize,
}

impl FlatStructure {
    /// Fails if two basic sets of one flat differ in size.
    pub fn new(m: &Com) -> Result<Self> {
        let flats = m.flat_poset();
        let mut basic = Vec::with_capacity(flats.len());
        let mut codim = Vec::with_capacity(flats.len());
        for f in flats.flats() {
            let mut bs: Vec<ElementSet> =
                f.subsets().filter(|b| is_basic_for(&flats, b, f)).collect();
            bs.sort();
            let k = bs.first().map(ElementSet::len).ok_or_else(|| {
                Error::AxiomViolation(format!("flat {} has no basic set", m.ground().show(f)))
            })?;
            if bs.iter().any(|b| b.len() != k) {
                return Err(Error::AxiomViolation(format!(
                    "basic sets of {} have different sizes",
                    m.ground().show(f)
                )));
            }
            basic.push(bs);
            codim.push(k);
        }
        Ok(FlatStructure {
            flats,
            basic,
            codim,
            ground_len: m.ground().len(),
        })
    }

    pub fn flats(&self) -> &FlatPoset {
        &self.flats
    }

    fn index(&self, f: &ElementSet) -> Result<usize> {
        self.flats
            .index_of(f)
            .ok_or_else(|| Error::NotAFlat(format!("{f:?}")))
    }

    /// Basic sets of `f` in lexicographic order.
    pub fn basic_sets(&self, f: &ElementSet) -> Result<&[ElementSet]> {
        Ok(&self.basic[self.index(f)?])
    }

    pub fn basic_sets_at(&self, k: usize) -> &[ElementSet] {
        &self.basic[k]
    }

    pub fn codim(&self, f: &ElementSet) -> Result<usize> {
        Ok(self.codim[self.index(f)?])
    }

    pub fn codim_at(&self, k: usize) -> usize {
        self.codim[k]
    }

    pub fn closure(&self, c: &ElementSet) -> Option<ElementSet> {
        closure(&self.flats, c)
    }

    pub fn is_nonbasic(&self, c: &ElementSet) -> bool {
        !is_basic(&self.flats, c)
    }

    /// Inclusion-minimal nonbasic subsets of the ground set, in
    /// lexicographic order.
    pub fn minimal_nonbasic_sets(&self) -> Vec<ElementSet> {
        let all = ElementSet::full(self.ground_len);
        let mut out: Vec<ElementSet> = all
            .subsets()
            .filter(|c| self.is_nonbasic(c) && c.iter().all(|e| !self.is_nonbasic(&c.without(e))))
            .collect();
        out.sort();
        out
    }

    /// Whether every pair of nested flats has nested basic sets.
    pub fn basic_sets_nest(&self) -> bool {
        let fs = self.flats.flats();
        (0..fs.len()).all(|i| {
            (0..fs.len()).all(|j| {
                !fs[i].is_subset(&fs[j])
                    || self.basic[i]
                        .iter()
                        .any(|b1| self.basic[j].iter().any(|b2| b1.is_subset(b2)))
            })
        })
    }

    /// Whether nonbasic sets are closed under taking supersets.
    pub fn nonbasic_upward_closed(&self) -> bool {
        let all = ElementSet::full(self.ground_len);
        let closed = all.subsets().all(|c| {
            !self.is_nonbasic(&c)
                || (0..self.ground_len).all(|e| c.contains(e) || self.is_nonbasic(&c.with(e)))
        });
        closed
    }
}

/// Basic sets of the flat `f` of `m`.
pub fn basic_sets(m: &Com, f: &ElementSet) -> Result<Vec<ElementSet>> {
    let fs = FlatStructure::new(m)?;
    Ok(fs.basic_sets(f)?.to_vec())
}

pub fn codim(m: &Com, f: &ElementSet) -> Result<usize> {
    FlatStructure::new(m)?.codim(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realize::{braid_com, fixture};

    fn set(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    #[test]
    fn figure1_basic_sets() {
        let m = fixture("figure1").unwrap();
        let fs = FlatStructure::new(&m).unwrap();
        let top = set(&[0, 1, 2]);
        assert_eq!(
            fs.basic_sets(&top).unwrap(),
            &[set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]
        );
        assert_eq!(fs.codim(&top).unwrap(), 2);
        assert_eq!(fs.closure(&set(&[0, 1])), Some(top.clone()));
        assert_eq!(fs.closure(&set(&[])), Some(set(&[])));
        assert_eq!(fs.closure(&set(&[3])), None);
        assert_eq!(fs.minimal_nonbasic_sets(), vec![set(&[0, 1, 2]), set(&[3])]);
        assert_eq!(fs.basic_sets(&set(&[])).unwrap(), &[set(&[])]);
        assert_eq!(fs.codim(&set(&[])).unwrap(), 0);
        assert!(fs.basic_sets(&set(&[0, 1])).is_err());
        assert!(fs.basic_sets_nest());
        assert!(fs.nonbasic_upward_closed());
    }

    #[test]
    fn braid_codimension_is_rank() {
        // a flat of the braid arrangement is a set partition; codim = n - #blocks
        let m = braid_com(4).unwrap();
        let fs = FlatStructure::new(&m).unwrap();
        assert_eq!(fs.flats().len(), 15);
        for f in fs.flats().flats() {
            let x = m.covectors().iter().find(|x| x.zero_set() == *f).unwrap();
            let blocks = crate::realize::blocks_of_covector(4, x);
            let distinct = blocks.iter().copied().max().unwrap() + 1;
            assert_eq!(fs.codim(f).unwrap(), 4 - distinct);
        }
        assert!(fs.basic_sets_nest());
    }
}

use crate::error::{Error, Result};
use crate::field::Field;

/// A stored basis row: sparse entries sorted by column, the first being
/// the pivot with coefficient one.
#[derive(Clone, Debug)]
struct Row<E> {
    entries: Vec<(u32, E)>,
}

impl<E> Row<E> {
    fn lead(&self) -> usize {
        self.entries[0].0 as usize
    }
}

/// Outcome of reducing a vector against the basis.
#[derive(Clone, Debug)]
pub struct Reduction<E> {
    /// What is left after eliminating every pivot column.
    pub remainder: Vec<E>,
    /// `(row index, multiplier)` for each row subtracted, so that the input
    /// equals the remainder plus the weighted sum of rows.
    pub coords: Vec<(usize, E)>,
}

/// An incrementally built subspace of `F^dim` kept in row echelon form,
/// one distinct pivot column per row. Rows keep their insertion order,
/// which lets callers treat prefixes as a filtration.
#[derive(Clone, Debug)]
pub struct RowSpace<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<Row<F::Elem>>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(field: F, dim: usize) -> Self {
        RowSpace {
            field,
            dim,
            rows: Vec::new(),
            pivot_row: vec![None; dim],
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn check_len(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::LengthMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok(())
    }

    /// Eliminates pivot columns from `v` in column order. With `stop_early`
    /// the scan halts at the first nonzero non-pivot column.
    fn reduce_in_place(
        &self,
        v: &mut [F::Elem],
        mut coords: Option<&mut Vec<(usize, F::Elem)>>,
        stop_early: bool,
    ) -> Option<usize> {
        let f = &self.field;
        let mut first_free = None;
        for col in 0..self.dim {
            if f.is_zero(&v[col]) {
                continue;
            }
            match self.pivot_row[col] {
                Some(k) => {
                    let c = v[col].clone();
                    for (j, a) in &self.rows[k].entries {
                        let j = *j as usize;
                        v[j] = f.sub_mul(&v[j], &c, a);
                    }
                    if let Some(cs) = coords.as_deref_mut() {
                        cs.push((k, c));
                    }
                }
                None => {
                    if first_free.is_none() {
                        first_free = Some(col);
                        if stop_early {
                            return first_free;
                        }
                    }
                }
            }
        }
        first_free
    }

    pub fn reduce(&self, v: &[F::Elem]) -> Result<Reduction<F::Elem>> {
        self.check_len(v)?;
        let mut remainder = v.to_vec();
        let mut coords = Vec::new();
        self.reduce_in_place(&mut remainder, Some(&mut coords), false);
        Ok(Reduction { remainder, coords })
    }

    pub fn in_span(&self, v: &[F::Elem]) -> Result<bool> {
        self.check_len(v)?;
        let mut w = v.to_vec();
        Ok(self.reduce_in_place(&mut w, None, true).is_none())
    }

    /// Adds `v` to the basis if it is independent; returns whether the rank
    /// grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> Result<bool> {
        self.check_len(v)?;
        let mut w = v.to_vec();
        Ok(self.insert_owned(&mut w))
    }

    /// Like [`RowSpace::insert`] but reuses the caller's buffer, which is
    /// left in an unspecified state.
    pub fn insert_owned(&mut self, w: &mut [F::Elem]) -> bool {
        assert_eq!(w.len(), self.dim, "vector length");
        let Some(lead) = self.reduce_in_place(w, None, true) else {
            return false;
        };
        // finish reducing the tail so stored rows stay short
        let f = &self.field;
        for col in lead + 1..self.dim {
            if f.is_zero(&w[col]) {
                continue;
            }
            if let Some(k) = self.pivot_row[col] {
                let c = w[col].clone();
                for (j, a) in &self.rows[k].entries {
                    let j = *j as usize;
                    w[j] = f.sub_mul(&w[j], &c, a);
                }
            }
        }
        let inv = f.inv(&w[lead]).expect("nonzero pivot");
        let entries = (lead..self.dim)
            .filter(|&j| !f.is_zero(&w[j]))
            .map(|j| (j as u32, f.mul(&w[j], &inv)))
            .collect();
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(Row { entries });
        true
    }

    /// Row `k` as a dense vector.
    pub fn row(&self, k: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        for (j, a) in &self.rows[k].entries {
            v[*j as usize] = a.clone();
        }
        v
    }

    pub fn lead(&self, k: usize) -> usize {
        self.rows[k].lead()
    }

    /// Coefficient of row `k` in the image of row `k` under the coordinate
    /// permutation `new[perm[j]] = old[j]`, for every row in `0..prefix`.
    /// Fails if an image leaves the span of the prefix.
    pub fn diagonal_under(&self, perm: &[usize], prefix: usize) -> Result<Vec<F::Elem>> {
        self.check_perm(perm)?;
        let f = &self.field;
        let mut out = Vec::with_capacity(prefix);
        let mut w = vec![f.zero(); self.dim];
        for k in 0..prefix {
            for x in w.iter_mut() {
                *x = f.zero();
            }
            for (j, a) in &self.rows[k].entries {
                w[perm[*j as usize]] = a.clone();
            }
            let mut coords = Vec::new();
            if self.reduce_in_place(&mut w, Some(&mut coords), true).is_some()
                || coords.iter().any(|(r, _)| *r >= prefix)
            {
                return Err(Error::NotInvariant);
            }
            let diag = coords
                .iter()
                .find(|(r, _)| *r == k)
                .map_or_else(|| f.zero(), |(_, c)| c.clone());
            out.push(diag);
        }
        Ok(out)
    }

    /// Trace of the coordinate permutation on the span of the first
    /// `prefix` rows.
    pub fn trace_on_prefix(&self, perm: &[usize], prefix: usize) -> Result<F::Elem> {
        let f = &self.field;
        Ok(self
            .diagonal_under(perm, prefix)?
            .iter()
            .fold(f.zero(), |acc, c| f.add(&acc, c)))
    }

    /// Trace of the coordinate permutation on the whole subspace.
    pub fn trace(&self, perm: &[usize]) -> Result<F::Elem> {
        self.trace_on_prefix(perm, self.rank())
    }

    fn check_perm(&self, perm: &[usize]) -> Result<()> {
        if perm.len() != self.dim {
            return Err(Error::LengthMismatch {
                left: self.dim,
                right: perm.len(),
            });
        }
        let mut seen = vec![false; self.dim];
        for &p in perm {
            if p >= self.dim || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("{perm:?}")));
            }
        }
        Ok(())
    }
}

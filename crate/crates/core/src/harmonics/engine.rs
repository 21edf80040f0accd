use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::locus::PointLocus;
use super::series::HilbertSeries;
use crate::error::{Error, Result};
use crate::exactla::{Monomial, Polynomial, RowSpace};
use crate::field::Field;

/// Candidates evaluated per parallel batch.
const BATCH: usize = 256;

/// The degree filtration `E_{<=0} ⊆ E_{<=1} ⊆ ...` of evaluation spans of
/// monomials on a locus, built in graded-lex order.
///
/// Standard monomials are those whose evaluation vector is independent of
/// all smaller monomials. The others form an upward-closed set, so a
/// candidate of degree `d` is only tried when every divisor of degree
/// `d - 1` is standard.
#[derive(Clone, Debug)]
pub struct OrbitHarmonics<F: Field> {
    field: F,
    variables: std::sync::Arc<[String]>,
    columns: Vec<Vec<F::Elem>>,
    npoints: usize,
    space: RowSpace<F>,
    standard: Vec<Monomial>,
    degree_ends: Vec<usize>,
}

impl<F: Field> OrbitHarmonics<F> {
    pub fn new(field: F, locus: &PointLocus) -> Result<Self> {
        let npoints = locus.len();
        if npoints == 0 {
            return Err(Error::EmptyLocus);
        }
        locus.validate()?;
        let p = field.characteristic();
        if p != 0 && p <= npoints as u64 {
            return Err(Error::CharacteristicTooSmall { p, needed: npoints });
        }
        let columns = locus_columns(&field, locus)?;
        let mut h = OrbitHarmonics {
            space: RowSpace::new(field.clone(), npoints),
            field,
            variables: locus.variables.clone(),
            columns,
            npoints,
            standard: Vec::new(),
            degree_ends: Vec::new(),
        };
        h.build()?;
        Ok(h)
    }

    fn build(&mut self) -> Result<()> {
        let f = self.field.clone();
        let mut one = vec![f.one(); self.npoints];
        self.space.insert_owned(&mut one);
        self.standard.push(Monomial::one());
        self.degree_ends.push(1);
        let mut prev: Vec<(Monomial, Vec<F::Elem>)> = vec![(Monomial::one(), vec![f.one(); self.npoints])];
        let mut d = 1;
        while !self.space.is_full() {
            if d >= self.npoints {
                return Err(Error::NonTermination(d - 1));
            }
            let prev_index: HashMap<&Monomial, usize> =
                prev.iter().enumerate().map(|(k, (m, _))| (m, k)).collect();
            // candidate -> a standard parent and the variable completing it
            let mut cands: BTreeMap<Monomial, (usize, usize)> = BTreeMap::new();
            for (k, (s, _)) in prev.iter().enumerate() {
                for v in 0..self.columns.len() {
                    let m = s.times_var(v);
                    if cands.contains_key(&m) {
                        continue;
                    }
                    let closed = m.exponents().all(|(u, _)| {
                        m.div_var(u).is_some_and(|q| prev_index.contains_key(&q))
                    });
                    if closed {
                        cands.insert(m, (k, v));
                    }
                }
            }
            if cands.is_empty() {
                return Err(Error::NonTermination(d));
            }
            let cands: Vec<(Monomial, (usize, usize))> = cands.into_iter().collect();
            let mut next = Vec::new();
            for batch in cands.chunks(BATCH) {
                if self.space.is_full() {
                    break;
                }
                let evals: Vec<Option<Vec<F::Elem>>> = batch
                    .par_iter()
                    .map(|(_, (k, v))| {
                        let w: Vec<F::Elem> = prev[*k]
                            .1
                            .iter()
                            .zip(&self.columns[*v])
                            .map(|(a, b)| f.mul(a, b))
                            .collect();
                        // anything already in the span stays dependent
                        match self.space.in_span(&w) {
                            Ok(true) => None,
                            _ => Some(w),
                        }
                    })
                    .collect();
                for ((m, _), w) in batch.iter().zip(evals) {
                    let Some(w) = w else { continue };
                    let mut buf = w.clone();
                    if self.space.insert_owned(&mut buf) {
                        self.standard.push(m.clone());
                        next.push((m.clone(), w));
                    }
                }
            }
            self.degree_ends.push(self.space.rank());
            prev = next;
            d += 1;
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn variables(&self) -> &std::sync::Arc<[String]> {
        &self.variables
    }

    pub fn num_points(&self) -> usize {
        self.npoints
    }

    pub fn hilbert(&self) -> HilbertSeries {
        let mut prev = 0;
        HilbertSeries::new(
            self.degree_ends
                .iter()
                .map(|&e| {
                    let h = e - prev;
                    prev = e;
                    h as u64
                })
                .collect(),
        )
    }

    /// Standard monomials in graded-lex order; they form a basis of the
    /// graded quotient.
    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }

    /// `dim E_{<=d}`.
    pub fn rank_up_to(&self, d: usize) -> usize {
        self.degree_ends
            .get(d)
            .copied()
            .unwrap_or(self.npoints)
    }

    pub fn top_degree(&self) -> usize {
        self.degree_ends.len() - 1
    }

    pub fn space(&self) -> &RowSpace<F> {
        &self.space
    }

    pub fn eval_monomial(&self, m: &Monomial) -> Vec<F::Elem> {
        eval_on_columns(&self.field, &self.columns, self.npoints, m)
    }

    pub fn eval_poly(&self, p: &Polynomial<F>) -> Result<Vec<F::Elem>> {
        if p.vars()[..] != self.variables[..] || *p.field() != self.field {
            return Err(Error::RingMismatch);
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.npoints];
        for (m, c) in p.terms() {
            let e = self.eval_monomial(m);
            for (o, x) in out.iter_mut().zip(&e) {
                *o = f.add(o, &f.mul(c, x));
            }
        }
        Ok(out)
    }

    /// Whether the homogeneous `g` of degree `d >= 1` is the top-degree form
    /// of an element of the vanishing ideal, i.e. whether its evaluation
    /// vector lies in `E_{<=d-1}`.
    pub fn gr_member(&self, g: &Polynomial<F>) -> Result<bool> {
        if g.is_zero() {
            return Ok(true);
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let d = g.degree().expect("nonzero");
        if d == 0 {
            return Err(Error::DegreeZero);
        }
        let w = self.eval_poly(g)?;
        self.in_filtration(&w, d - 1)
    }

    /// Whether `w` lies in `E_{<=k}`.
    pub fn in_filtration(&self, w: &[F::Elem], k: usize) -> Result<bool> {
        let prefix = self.rank_up_to(k);
        let r = self.space.reduce(w)?;
        let f = &self.field;
        Ok(r.remainder.iter().all(|x| f.is_zero(x)) && r.coords.iter().all(|(row, _)| *row < prefix))
    }

    /// Per-degree traces `tr(g | E_{<=d}) - tr(g | E_{<=d-1})` for the
    /// point permutation `perm` (point `j` goes to point `perm[j]`).
    pub fn graded_trace(&self, perm: &[usize]) -> Result<Vec<F::Elem>> {
        let f = &self.field;
        let diag = self.space.diagonal_under(perm, self.space.rank())?;
        let mut out = Vec::with_capacity(self.degree_ends.len());
        let mut start = 0;
        for &end in &self.degree_ends {
            out.push(diag[start..end].iter().fold(f.zero(), |acc, c| f.add(&acc, c)));
            start = end;
        }
        Ok(out)
    }
}

/// Coordinate functions of the locus, one vector per variable.
fn locus_columns<F: Field>(field: &F, locus: &PointLocus) -> Result<Vec<Vec<F::Elem>>> {
    (0..locus.num_vars())
        .map(|v| {
            locus
                .points
                .iter()
                .map(|pt| field.from_rational(&pt.coords[v]))
                .collect()
        })
        .collect()
}

fn eval_on_columns<F: Field>(f: &F, columns: &[Vec<F::Elem>], npoints: usize, m: &Monomial) -> Vec<F::Elem> {
    let mut out = vec![f.one(); npoints];
    for (v, e) in m.exponents() {
        for _ in 0..e {
            for (o, c) in out.iter_mut().zip(&columns[v]) {
                *o = f.mul(o, c);
            }
        }
    }
    out
}

/// Hilbert series of the graded quotient of a locus.
pub fn hilbert_series<F: Field>(field: F, locus: &PointLocus) -> Result<HilbertSeries> {
    Ok(OrbitHarmonics::new(field, locus)?.hilbert())
}

/// Membership of a homogeneous polynomial in `gr I(L)`.
pub fn gr_membership<F: Field>(locus: &PointLocus, g: &Polynomial<F>) -> Result<bool> {
    OrbitHarmonics::new(g.field().clone(), locus)?.gr_member(g)
}

/// Whether the monomials evaluate to a basis of functions on the locus.
pub fn verify_basis<F: Field>(field: F, locus: &PointLocus, monomials: &[Monomial]) -> Result<bool> {
    if monomials.len() != locus.len() {
        return Err(Error::SizeMismatch {
            monomials: monomials.len(),
            points: locus.len(),
        });
    }
    let columns = locus_columns(&field, locus)?;
    let mut space = RowSpace::new(field.clone(), locus.len());
    for m in monomials {
        if !space.insert_owned(&mut eval_on_columns(&field, &columns, locus.len(), m)) {
            return Ok(false);
        }
    }
    Ok(space.is_full())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::var_list;
    use crate::field::{PrimeField, Rationals};
    use crate::harmonics::locus::{big_locus, small_locus, LocusKind, LocusPoint};
    use crate::rational::Rational;
    use crate::realize::{braid_com, fixture};

    fn raw(points: &[&[i64]]) -> PointLocus {
        let n = points[0].len();
        PointLocus::new(
            var_list((0..n).map(|i| format!("x{i}"))),
            points
                .iter()
                .enumerate()
                .map(|(k, p)| LocusPoint {
                    label: k.to_string(),
                    coords: p.iter().map(|&a| Rational::from_integer(a)).collect(),
                })
                .collect(),
            LocusKind::Raw,
        )
        .unwrap()
    }

    /// Dimension of `E_{<=d}` from every monomial of degree at most `d`, no
    /// pruning.
    fn naive_ranks(l: &PointLocus, top: usize) -> Vec<usize> {
        let h = OrbitHarmonics::new(Rationals, l).unwrap();
        let mut space = RowSpace::new(Rationals, l.len());
        (0..=top)
            .map(|d| {
                for m in crate::exactla::monomials_of_degree(l.num_vars(), d) {
                    space.insert(&h.eval_monomial(&m)).unwrap();
                }
                space.rank()
            })
            .collect()
    }

    #[test]
    fn small_examples() {
        let l = small_locus(&braid_com(2).unwrap());
        assert_eq!(hilbert_series(Rationals, &l).unwrap().coeffs, vec![1, 1]);
        let line = raw(&[&[0], &[1], &[2], &[5]]);
        assert_eq!(hilbert_series(Rationals, &line).unwrap().coeffs, vec![1, 1, 1, 1]);
        let single = raw(&[&[3, 4]]);
        assert_eq!(hilbert_series(Rationals, &single).unwrap().coeffs, vec![1]);
    }

    #[test]
    fn pruning_matches_full_enumeration() {
        let mut corpus = vec![
            big_locus(&fixture("figure1").unwrap()),
            small_locus(&braid_com(3).unwrap()),
            big_locus(&braid_com(3).unwrap()),
            raw(&[&[0, 0], &[1, 0], &[0, 1], &[2, 3], &[1, 1], &[-1, 2]]),
        ];
        corpus.push(big_locus(&fixture("figure1-rectangle").unwrap()));
        for l in &corpus {
            let h = OrbitHarmonics::new(Rationals, l).unwrap();
            let top = h.top_degree();
            let naive = naive_ranks(l, top);
            let ends: Vec<usize> = (0..=top).map(|d| h.rank_up_to(d)).collect();
            assert_eq!(ends, naive);
        }
    }

    #[test]
    fn braid_big_tables() {
        assert_eq!(hilbert_series(Rationals, &big_locus(&braid_com(1).unwrap())).unwrap().coeffs, vec![1]);
        assert_eq!(hilbert_series(Rationals, &big_locus(&braid_com(3).unwrap())).unwrap().coeffs, vec![1, 6, 6]);
        assert_eq!(
            hilbert_series(Rationals, &big_locus(&braid_com(4).unwrap())).unwrap().coeffs,
            vec![1, 12, 36, 26]
        );
    }

    #[test]
    fn prime_field_agrees() {
        let l = big_locus(&braid_com(4).unwrap());
        let q = hilbert_series(Rationals, &l).unwrap();
        let p = hilbert_series(PrimeField::default(), &l).unwrap();
        assert_eq!(p, q);
        assert!(matches!(
            hilbert_series(PrimeField::new(7).unwrap(), &l),
            Err(Error::CharacteristicTooSmall { .. })
        ));
    }

    #[test]
    fn errors() {
        let m = Com::from_strs(&["1", "2"], &["0+", "0-", "00"]).unwrap();
        assert!(matches!(hilbert_series(Rationals, &small_locus(&m)), Err(Error::EmptyLocus)));
        let l = big_locus(&fixture("figure1").unwrap());
        let vars = l.variables.clone();
        let y = |name: &str| Polynomial::var_named(Rationals, vars.clone(), name).unwrap();
        let inhom = y("y1+").add(&Polynomial::one(Rationals, vars.clone())).unwrap();
        assert!(matches!(gr_membership(&l, &inhom), Err(Error::NotHomogeneous)));
        assert!(matches!(
            gr_membership(&l, &Polynomial::one(Rationals, vars.clone())),
            Err(Error::DegreeZero)
        ));
        let other = Polynomial::var(Rationals, var_list(["a"]), 0);
        assert!(matches!(gr_membership(&l, &other), Err(Error::RingMismatch)));
    }

    use crate::com::Com;

    #[test]
    fn membership_examples() {
        let l = big_locus(&fixture("figure1").unwrap());
        let vars = l.variables.clone();
        let y = |name: &str| Polynomial::var_named(Rationals, vars.clone(), name).unwrap();
        assert!(gr_membership(&l, &y("y4-")).unwrap());
        let sum = y("y1+").add(&y("y1-")).unwrap().add(&y("z1")).unwrap();
        assert!(gr_membership(&l, &sum).unwrap());
        assert!(!gr_membership(&l, &y("y1+")).unwrap());
    }

    /// `g` is in gr I exactly when `g - h` vanishes on the locus for some
    /// `h` of lower degree; build `h` from the reduction and check both ways.
    #[test]
    fn membership_matches_explicit_lift() {
        let l = big_locus(&braid_com(3).unwrap());
        let h = OrbitHarmonics::new(Rationals, &l).unwrap();
        let vars = l.variables.clone();
        for d in 1..=3 {
            for m in crate::exactla::monomials_of_degree(vars.len(), d).into_iter().take(60) {
                let g = Polynomial::monomial(Rationals, vars.clone(), m);
                let member = h.gr_member(&g).unwrap();
                // lower-degree standard monomials span E_{<=d-1}
                let lower: Vec<&Monomial> = h.standard_monomials().iter().filter(|s| s.degree() < d).collect();
                let target = h.eval_poly(&g).unwrap();
                let mut sys = RowSpace::new(Rationals, l.len());
                for s in &lower {
                    sys.insert(&h.eval_monomial(s)).unwrap();
                }
                assert_eq!(member, sys.in_span(&target).unwrap());
                if member {
                    // solve target = sum c_s eval(s) by Gaussian elimination
                    // on the augmented system and check g - h vanishes
                    let hpoly = solve_lift(&h, &lower, &target);
                    let diff = g.sub(&hpoly).unwrap();
                    assert!(h.eval_poly(&diff).unwrap().iter().all(|x| x.is_zero()));
                    assert!(hpoly.degree().map_or(true, |e| e < d));
                }
            }
        }
    }

    fn solve_lift(
        h: &OrbitHarmonics<Rationals>,
        basis: &[&Monomial],
        target: &[Rational],
    ) -> Polynomial<Rationals> {
        // columns = basis evaluations; solve with dense elimination
        let n = target.len();
        let k = basis.len();
        let cols: Vec<Vec<Rational>> = basis.iter().map(|m| h.eval_monomial(m)).collect();
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> = (0..k).map(|c| cols[c][r].clone()).collect();
                row.push(target[r].clone());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..k {
            let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let inv = a[r][c].recip().unwrap();
            for x in a[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..n {
                if i != r && !a[i][c].is_zero() {
                    let fac = a[i][c].clone();
                    for j in 0..=k {
                        let t = &a[r][j] * &fac;
                        a[i][j] = &a[i][j] - &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut p = Polynomial::zero(Rationals, h.variables().clone());
        for (row, &c) in pivots.iter().enumerate() {
            p.add_term(basis[c].clone(), a[row][k].clone());
        }
        p
    }

    #[test]
    fn bases() {
        let l = small_locus(&braid_com(2).unwrap());
        let y = Monomial::var(0);
        assert!(verify_basis(Rationals, &l, &[Monomial::one(), y.clone()]).unwrap());
        assert!(!verify_basis(Rationals, &l, &[y.clone(), y.clone()]).unwrap());
        assert!(verify_basis(Rationals, &l, &[y]).is_err());
    }

    #[test]
    fn traces_at_identity_are_hilbert() {
        let l = big_locus(&braid_com(3).unwrap());
        let h = OrbitHarmonics::new(Rationals, &l).unwrap();
        let id: Vec<usize> = (0..l.len()).collect();
        let t: Vec<i64> = h.graded_trace(&id).unwrap().iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(t, vec![1, 6, 6]);
    }
}

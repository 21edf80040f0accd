use std::cmp::Ordering;

use smallvec::SmallVec;

/// A monomial as a sparse exponent list sorted by variable index.
///
/// Ordering is graded lexicographic: total degree first, then the
/// exponent of variable 0, then variable 1, and so on, a larger exponent
/// on an earlier variable making the monomial larger.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[(u32, u32); 4]>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![(i as u32, 1)],
            degree: 1,
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// repeated variables add up and zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            for _ in 0..e {
                m = m.times_var(v);
            }
        }
        m
    }

    /// Product of the given variables, with multiplicity.
    pub fn product<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        Self::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w as usize == v)
            .map_or(0, |&(_, e)| e)
    }

    /// The largest variable index present.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v as usize)
    }

    pub fn times_var(&self, v: usize) -> Self {
        let mut m = self.clone();
        let v = v as u32;
        match m.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(k) => m.exps[k].1 += 1,
            Err(k) => m.exps.insert(k, (v, 1)),
        }
        m.degree += 1;
        m
    }

    /// Divides by one power of `v`; `None` if `v` does not divide.
    pub fn div_var(&self, v: usize) -> Option<Self> {
        let mut m = self.clone();
        let k = m.exps.iter().position(|&(w, _)| w as usize == v)?;
        if m.exps[k].1 == 1 {
            m.exps.remove(k);
        } else {
            m.exps[k].1 -= 1;
        }
        m.degree -= 1;
        Some(m)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps: SmallVec<[(u32, u32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            match (self.exps.get(i), other.exps.get(j)) {
                (Some(&a), Some(&b)) if a.0 == b.0 => {
                    exps.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
                (Some(&a), Some(&b)) if a.0 < b.0 => {
                    exps.push(a);
                    i += 1;
                }
                (Some(_), Some(&b)) | (None, Some(&b)) => {
                    exps.push(b);
                    j += 1;
                }
                (Some(&a), None) => {
                    exps.push(a);
                    i += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v as usize) >= e)
    }

    /// Renders with the given variable names, `1` for the empty monomial.
    pub fn display(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| {
                let name = &names[v as usize];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(other.exps.iter()) {
                if a.0 != b.0 {
                    // the monomial using the earlier variable is larger
                    return if a.0 < b.0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.exps.len().cmp(&other.exps.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| if e == 1 { format!("x{v}") } else { format!("x{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// All monomials of degree `d` in `n` variables, in increasing order.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    fn rec(n: usize, start: usize, d: usize, cur: &Monomial, out: &mut Vec<Monomial>) {
        if d == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            rec(n, v, d - 1, &cur.times_var(v), out);
        }
    }
    if n > 0 || d == 0 {
        rec(n, 0, d, &Monomial::one(), &mut out);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense(m: &Monomial, n: usize) -> Vec<u32> {
        (0..n).map(|v| m.exponent(v)).collect()
    }

    #[test]
    fn graded_lex_order() {
        let (x, y) = (Monomial::var(0), Monomial::var(1));
        assert!(Monomial::one() < y);
        assert!(y < x);
        assert!(x < y.mul(&y));
        assert!(y.mul(&y) < x.mul(&y));
        assert!(x.mul(&y) < x.mul(&x));
        assert_eq!(monomials_of_degree(2, 2), vec![y.mul(&y), x.mul(&y), x.mul(&x)]);
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(monomials_of_degree(0, 0), vec![Monomial::one()]);
        assert!(monomials_of_degree(0, 1).is_empty());
    }

    #[test]
    fn arithmetic() {
        let m = Monomial::product([0, 2, 2]);
        assert_eq!(m.degree(), 3);
        assert_eq!(m.exponent(2), 2);
        assert_eq!(m.div_var(2).unwrap(), Monomial::product([0, 2]));
        assert!(m.div_var(1).is_none());
        assert!(Monomial::product([2]).divides(&m));
        assert!(!Monomial::product([1]).divides(&m));
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(m.display(&names), "a*c^2");
    }

    proptest! {
        #[test]
        fn order_matches_dense_graded_lex(a in prop::collection::vec(0u32..3, 4), b in prop::collection::vec(0u32..3, 4)) {
            let ma = Monomial::from_pairs(a.iter().enumerate().map(|(v, &e)| (v, e)));
            let mb = Monomial::from_pairs(b.iter().enumerate().map(|(v, &e)| (v, e)));
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            let expected = da.cmp(&db).then_with(|| a.cmp(&b));
            prop_assert_eq!(ma.cmp(&mb), expected);
            let prod = ma.mul(&mb);
            let sum: Vec<u32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            prop_assert_eq!(dense(&prod, 4), sum);
        }
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::rational::Rational;

/// A sparse polynomial over `F` in a fixed, named variable list.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    field: F,
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, vars: Arc<[String]>) -> Self {
        Polynomial {
            field,
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: F, vars: Arc<[String]>, c: F::Elem) -> Self {
        let mut p = Self::zero(field, vars);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one(field: F, vars: Arc<[String]>) -> Self {
        let c = field.one();
        Self::constant(field, vars, c)
    }

    pub fn monomial(field: F, vars: Arc<[String]>, m: Monomial) -> Self {
        let mut p = Self::zero(field, vars);
        let one = p.field.one();
        p.add_term(m, one);
        p
    }

    pub fn var(field: F, vars: Arc<[String]>, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {i} out of range");
        Self::monomial(field, vars, Monomial::var(i))
    }

    /// The variable called `name`.
    pub fn var_named(field: F, vars: Arc<[String]>, name: &str) -> Result<Self> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
        Ok(Self::var(field, vars, i))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        assert!(
            m.max_var().map_or(true, |v| v < self.vars.len()),
            "monomial uses a variable outside the ring"
        );
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = self.field.add(existing, &c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Highest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.field != other.field || self.vars != other.vars {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = Self::zero(self.field.clone(), self.vars.clone());
        for (m, a) in &self.terms {
            out.add_term(m.clone(), self.field.mul(a, c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Self::zero(self.field.clone(), self.vars.clone());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.mul(n), self.field.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut out = Self::zero(self.field.clone(), self.vars.clone());
        for (n, a) in &self.terms {
            out.add_term(n.mul(m), a.clone());
        }
        out
    }

    /// Value at a point given by one field element per variable.
    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.vars.len() {
            return Err(Error::LengthMismatch {
                left: self.vars.len(),
                right: point.len(),
            });
        }
        let f = &self.field;
        Ok(self.terms.iter().fold(f.zero(), |acc, (m, c)| {
            f.add(&acc, &f.mul(c, &eval_monomial(f, m, point)))
        }))
    }

    /// Same polynomial with coefficients mapped into another field through
    /// their rational lifts.
    pub fn to_field<G: Field>(&self, g: G) -> Result<Polynomial<G>> {
        let mut out = Polynomial::zero(g.clone(), self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), g.from_rational(&self.field.lift(c))?);
        }
        Ok(out)
    }
}

/// Value of a monomial at a point.
pub fn eval_monomial<F: Field>(f: &F, m: &Monomial, point: &[F::Elem]) -> F::Elem {
    let mut acc = f.one();
    for (v, e) in m.exponents() {
        for _ in 0..e {
            acc = f.mul(&acc, &point[v]);
        }
    }
    acc
}

/// `e_d` of the given polynomials: the sum over `d`-subsets of products.
pub fn elementary_symmetric<F: Field>(d: usize, polys: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    let n = polys.len();
    if d > n {
        return Err(Error::DegreeOutOfRange { d, n });
    }
    let first = polys.first().ok_or(Error::DegreeOutOfRange { d, n })?;
    // e_k of the first j inputs, built by the usual recurrence
    let mut e: Vec<Polynomial<F>> = vec![Polynomial::one(first.field.clone(), first.vars.clone())];
    for p in polys {
        p.same_ring(first)?;
        let mut next = e.clone();
        next.push(Polynomial::zero(first.field.clone(), first.vars.clone()));
        for k in 1..next.len() {
            next[k] = next[k].add(&e[k - 1].mul(p)?)?;
        }
        e = next;
    }
    Ok(e.swap_remove(d))
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.terms == other.terms
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest terms first
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let q = self.field.lift(c);
            let (neg, mag) = if q.is_negative() { (true, -q) } else { (false, q) };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.display(&self.vars))?;
            } else {
                write!(f, "{mag}*{}", m.display(&self.vars))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Polynomial<Rationals> {
    /// Rational polynomial with the given terms.
    pub fn from_terms<I>(vars: Arc<[String]>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(Rationals, vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }
}

/// Shared variable list from names.
pub fn var_list<I, S>(names: I) -> Arc<[String]>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    names.into_iter().map(Into::into).collect::<Vec<_>>().into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    fn ring() -> Arc<[String]> {
        var_list(["a", "b", "c"])
    }

    fn v(i: usize) -> Polynomial<Rationals> {
        Polynomial::var(Rationals, ring(), i)
    }

    #[test]
    fn ring_identities() {
        let (y, z) = (v(0), v(1));
        let p = y.add(&z).unwrap().mul(&y.sub(&z).unwrap()).unwrap();
        let expected = y.mul(&y).unwrap().sub(&z.mul(&z).unwrap()).unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.add(&Polynomial::zero(Rationals, ring())).unwrap(), p);
        assert_eq!(p.mul(&Polynomial::one(Rationals, ring())).unwrap(), p);
        assert_eq!(p.to_string(), "a^2 - b^2");
        let other = Polynomial::var(Rationals, var_list(["a"]), 0);
        assert!(matches!(y.add(&other), Err(Error::RingMismatch)));
    }

    #[test]
    fn elementary_symmetric_examples() {
        let vs = [v(0), v(1), v(2)];
        assert_eq!(
            elementary_symmetric(0, &vs[..2]).unwrap(),
            Polynomial::one(Rationals, ring())
        );
        assert_eq!(elementary_symmetric(2, &vs).unwrap().to_string(), "a*b + a*c + b*c");
        assert!(elementary_symmetric(4, &vs).is_err());
        let mixed = [v(0), v(1).add(&v(2)).unwrap()];
        assert_eq!(elementary_symmetric(1, &mixed).unwrap().to_string(), "a + b + c");
    }

    #[test]
    fn evaluation() {
        let x = v(0);
        let sq = x.mul(&x).unwrap();
        let pt = [Rational::from(3), Rational::zero(), Rational::zero()];
        assert_eq!(sq.evaluate(&pt).unwrap(), Rational::from(9));
        assert_eq!(
            Polynomial::one(Rationals, ring()).evaluate(&pt).unwrap(),
            Rational::one()
        );
        assert!(sq.evaluate(&pt[..2]).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<Rationals>> {
        prop::collection::vec(
            (prop::collection::vec(0u32..3, 3), -20i64..20, 1i64..6),
            0..5,
        )
        .prop_map(|terms| {
            Polynomial::from_terms(
                ring(),
                terms.into_iter().map(|(e, n, d)| {
                    (
                        Monomial::from_pairs(e.into_iter().enumerate()),
                        Rational::new(n, d),
                    )
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn prime_field_agrees_with_rationals(p in arb_poly(), q in arb_poly()) {
            let f = PrimeField::new(1_000_003).unwrap();
            let prod = p.mul(&q).unwrap().add(&p).unwrap();
            let modular = p.to_field(f).unwrap().mul(&q.to_field(f).unwrap()).unwrap()
                .add(&p.to_field(f).unwrap()).unwrap();
            prop_assert_eq!(prod.to_field(f).unwrap(), modular);
        }

        #[test]
        fn multiplication_is_commutative_and_distributive(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
            let left = p.mul(&q.add(&r).unwrap()).unwrap();
            let right = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}

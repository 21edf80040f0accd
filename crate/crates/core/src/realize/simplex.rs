//! Dense two-phase primal simplex over the rationals with Bland's rule.

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Maximize `objective · v` subject to the constraints and `v ≥ 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    // reduced costs of the current minimization objective
    cost: Vec<Rational>,
    value: Rational,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip().expect("nonzero pivot");
        for a in self.rows[r].iter_mut() {
            *a = &*a * &inv;
        }
        self.rhs[r] = &self.rhs[r] * &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (a, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *a = &*a - &(&f * p);
                }
            }
            self.rhs[i] = &self.rhs[i] - &(&f * &prhs);
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (a, p) in self.cost.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *a = &*a - &(&f * p);
                }
            }
            self.value = &self.value - &(&f * &prhs);
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule over the columns in `allowed`. Returns false when
    /// the objective is unbounded below.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][c].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][c];
                let better = match &best {
                    None => true,
                    Some((b, r)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*b]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

impl LinearProgram {
    pub fn solve(&self) -> LpOutcome {
        let n = self.objective.len();
        let m = self.constraints.len();
        // column layout: original, slack/surplus, artificial
        let n_slack = self
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let n_art = self
            .constraints
            .iter()
            .filter(|c| {
                let flip = c.rhs.is_negative();
                matches!(
                    (c.relation, flip),
                    (Relation::Eq, _) | (Relation::Ge, false) | (Relation::Le, true)
                )
            })
            .count();
        let width = n + n_slack + n_art;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut s, mut a) = (n, n + n_slack);
        for c in &self.constraints {
            assert_eq!(c.coeffs.len(), n, "constraint width");
            let flip = c.rhs.is_negative();
            let sign = |q: &Rational| if flip { -q } else { q.clone() };
            let mut row: Vec<Rational> = c.coeffs.iter().map(sign).collect();
            row.resize(width, Rational::zero());
            let rel = match (c.relation, flip) {
                (Relation::Le, true) => Relation::Ge,
                (Relation::Ge, true) => Relation::Le,
                (r, _) => r,
            };
            match rel {
                Relation::Le => {
                    row[s] = Rational::one();
                    basis.push(s);
                    s += 1;
                }
                Relation::Ge => {
                    row[s] = -Rational::one();
                    s += 1;
                    row[a] = Rational::one();
                    basis.push(a);
                    a += 1;
                }
                Relation::Eq => {
                    row[a] = Rational::one();
                    basis.push(a);
                    a += 1;
                }
            }
            rows.push(row);
            rhs.push(sign(&c.rhs));
        }

        // phase one: minimize the sum of artificials
        let mut cost = vec![Rational::zero(); width];
        let mut value = Rational::zero();
        for i in 0..m {
            if basis[i] >= n + n_slack {
                for j in 0..n + n_slack {
                    cost[j] = &cost[j] - &rows[i][j];
                }
                value = &value - &rhs[i];
            }
        }
        let mut t = Tableau {
            rows,
            rhs,
            basis,
            cost,
            value,
        };
        t.optimize(width);
        if !t.value.is_zero() {
            return LpOutcome::Infeasible;
        }
        // drive remaining artificials out of the basis, dropping redundant rows
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= n + n_slack {
                match (0..n + n_slack).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => {
                        t.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }

        // phase two on the original objective, negated for minimization
        let mut cost: Vec<Rational> = (0..width)
            .map(|j| if j < n { -&self.objective[j] } else { Rational::zero() })
            .collect();
        let mut value = Rational::zero();
        for (r, &b) in t.basis.iter().enumerate() {
            if b < n && !self.objective[b].is_zero() {
                let cb = -&self.objective[b];
                for j in 0..width {
                    cost[j] = &cost[j] - &(&cb * &t.rows[r][j]);
                }
                value = &value - &(&cb * &t.rhs[r]);
            }
        }
        t.cost = cost;
        t.value = value;
        if !t.optimize(n + n_slack) {
            return LpOutcome::Unbounded;
        }
        let mut point = vec![Rational::zero(); n];
        for (r, &b) in t.basis.iter().enumerate() {
            if b < n {
                point[b] = t.rhs[r].clone();
            }
        }
        LpOutcome::Optimal {
            value: t.value,
            point,
        }
    }
}

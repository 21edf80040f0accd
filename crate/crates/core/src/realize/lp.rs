use super::affine::AffineForm;
use super::simplex::{Constraint, LinearProgram, LpOutcome, Relation};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Decides whether some `x` has `β(x) > 0` for every strict form and
/// `γ(x) = 0` for every equality, returning such an `x` if so.
///
/// Maximizes a slack `t` subject to `β(x) ≥ t` and `t ≤ 1`; the system is
/// strictly feasible exactly when the optimum is positive.
pub fn lp_strict_feasible(
    strict: &[AffineForm],
    equalities: &[AffineForm],
) -> Result<Option<Vec<Rational>>> {
    let d = strict
        .iter()
        .chain(equalities)
        .map(AffineForm::dimension)
        .next()
        .unwrap_or(0);
    if let Some(bad) = strict.iter().chain(equalities).find(|f| f.dimension() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: bad.dimension(),
        });
    }
    // variables: x⁺ (d), x⁻ (d), t⁺, t⁻
    let width = 2 * d + 2;
    let row = |f: &AffineForm, t_coeff: i64| {
        let mut c = Vec::with_capacity(width);
        c.extend(f.coeffs.iter().cloned());
        c.extend(f.coeffs.iter().map(|a| -a));
        c.push(Rational::from(t_coeff));
        c.push(Rational::from(-t_coeff));
        c
    };
    let mut constraints = Vec::with_capacity(strict.len() + equalities.len() + 1);
    for f in strict {
        constraints.push(Constraint {
            coeffs: row(f, -1),
            relation: Relation::Ge,
            rhs: -&f.constant,
        });
    }
    for g in equalities {
        constraints.push(Constraint {
            coeffs: row(g, 0),
            relation: Relation::Eq,
            rhs: -&g.constant,
        });
    }
    let mut cap = vec![Rational::zero(); width];
    cap[2 * d] = Rational::one();
    cap[2 * d + 1] = -Rational::one();
    constraints.push(Constraint {
        coeffs: cap.clone(),
        relation: Relation::Le,
        rhs: Rational::one(),
    });
    let lp = LinearProgram {
        objective: cap,
        constraints,
    };
    match lp.solve() {
        LpOutcome::Optimal { value, point } if value.is_positive() => {
            Ok(Some((0..d).map(|i| &point[i] - &point[d + i]).collect()))
        }
        LpOutcome::Optimal { .. } | LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => unreachable!("slack is capped at one"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(c: &[i64], k: i64) -> AffineForm {
        AffineForm::from_ints(c, k)
    }

    fn satisfies(x: &[Rational], strict: &[AffineForm], eq: &[AffineForm]) -> bool {
        strict.iter().all(|s| s.eval(x).unwrap().is_positive())
            && eq.iter().all(|g| g.eval(x).unwrap().is_zero())
    }

    #[test]
    fn witness_case() {
        let strict = [f(&[1, -1, 0], 0), f(&[1, 0, -1], 0), f(&[0, -1, 1], 0)];
        let w = lp_strict_feasible(&strict, &[]).unwrap().unwrap();
        assert!(satisfies(&w, &strict, &[]));
        let known: Vec<Rational> = [3, 1, 2].iter().map(|&v| Rational::from(v)).collect();
        assert!(satisfies(&known, &strict, &[]));
    }

    #[test]
    fn contradictions() {
        assert!(lp_strict_feasible(&[f(&[1], 0), f(&[-1], 0)], &[]).unwrap().is_none());
        let cyclic = [f(&[1, -1, 0], 0), f(&[0, 1, -1], 0), f(&[-1, 0, 1], 0)];
        assert!(lp_strict_feasible(&cyclic, &[]).unwrap().is_none());
        // x > 0 on the line x = 0
        assert!(lp_strict_feasible(&[f(&[1, 0], 0)], &[f(&[1, 0], 0)]).unwrap().is_none());
        assert!(lp_strict_feasible(&[f(&[1, 0], 0)], &[f(&[1], 0)]).is_err());
    }

    #[test]
    fn equalities_and_offsets() {
        // x + y > 10, x - y = 4, x < 8
        let strict = [f(&[1, 1], -10), f(&[-1, 0], 8)];
        let eq = [f(&[1, -1], -4)];
        let w = lp_strict_feasible(&strict, &eq).unwrap().unwrap();
        assert!(satisfies(&w, &strict, &eq));
        assert!(lp_strict_feasible(&[], &[]).unwrap().is_some());
        assert!(lp_strict_feasible(&[], &[f(&[0], 1)]).unwrap().is_none());
    }

    #[test]
    fn adding_constraints_never_restores_feasibility() {
        let pool = [
            f(&[1, 0], 0),
            f(&[0, 1], -1),
            f(&[-1, -1], 3),
            f(&[1, -2], 0),
            f(&[-1, 0], 1),
            f(&[2, 1], -5),
        ];
        for mask in 0u32..1 << pool.len() {
            let sub: Vec<AffineForm> =
                (0..pool.len()).filter(|k| mask >> k & 1 == 1).map(|k| pool[k].clone()).collect();
            let feasible = lp_strict_feasible(&sub, &[]).unwrap();
            if let Some(w) = &feasible {
                assert!(satisfies(w, &sub, &[]));
            }
            for k in 0..pool.len() {
                if feasible.is_none() && mask >> k & 1 == 0 {
                    let mut more = sub.clone();
                    more.push(pool[k].clone());
                    assert!(lp_strict_feasible(&more, &[]).unwrap().is_none());
                }
            }
        }
    }
}

use super::locus::{LocusKind, LocusPoint, PointLocus};
use crate::error::{Error, Result};
use crate::exactla::var_list;
use crate::field::Field;
use crate::rational::Rational;

/// Largest `n` accepted by the permutation loci.
pub const PERMUTATION_LOCUS_CAP: usize = 6;

/// All permutations of `1..=n` in one-line notation, lexicographically.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut w: Vec<usize> = (1..=n).collect();
    loop {
        out.push(w.clone());
        // next lexicographic permutation
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
            return out;
        };
        let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).expect("successor exists");
        w.swap(i - 1, j);
        w[i..].reverse();
    }
}

fn one_line(w: &[usize]) -> String {
    if w.len() <= 9 {
        w.iter().map(|a| a.to_string()).collect()
    } else {
        w.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn check(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidChoice("n must be at least 1".into()));
    }
    if n > PERMUTATION_LOCUS_CAP {
        return Err(Error::CapExceeded {
            what: "permutation locus size n",
            got: n,
            limit: PERMUTATION_LOCUS_CAP,
        });
    }
    Ok(())
}

fn require_char_zero<F: Field>(field: &F) -> Result<()> {
    if field.characteristic() != 0 {
        return Err(Error::CharacteristicZeroRequired);
    }
    Ok(())
}

fn locus(vars: Vec<String>, pts: impl Iterator<Item = (String, Vec<i64>)>) -> Result<PointLocus> {
    PointLocus::new(
        var_list(vars),
        pts.map(|(label, c)| LocusPoint {
            label,
            coords: c.into_iter().map(Rational::from_integer).collect(),
        })
        .collect(),
        LocusKind::Permutation,
    )
}

/// Permutations as points of `F^n` by one-line notation.
pub fn kostant_locus<F: Field>(field: &F, n: usize) -> Result<PointLocus> {
    check(n)?;
    require_char_zero(field)?;
    locus(
        (1..=n).map(|i| format!("x{i}")).collect(),
        permutations(n)
            .into_iter()
            .map(|w| (one_line(&w), w.iter().map(|&a| a as i64).collect())),
    )
}

/// Nonempty proper subsets of `1..=n`, by size then lexicographically.
pub fn proper_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1u32..(1 << n) - 1)
        .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Coordinate `I` is `w(j) - w(j+1)` when `I = {w(1), ..., w(j)}`.
pub fn permutohedral_locus<F: Field>(field: &F, n: usize) -> Result<PointLocus> {
    check(n)?;
    require_char_zero(field)?;
    let subsets = proper_subsets(n);
    let vars = subsets
        .iter()
        .map(|s| format!("x{}", s.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(if n <= 9 { "" } else { "," })))
        .collect();
    locus(
        vars,
        permutations(n).into_iter().map(|w| {
            let mut c = vec![0i64; subsets.len()];
            for j in 1..n {
                let mut prefix: Vec<usize> = w[..j].to_vec();
                prefix.sort_unstable();
                let k = subsets.iter().position(|s| *s == prefix).expect("proper subset");
                c[k] = w[j - 1] as i64 - w[j] as i64;
            }
            (one_line(&w), c)
        }),
    )
}

/// Permutation matrices flattened row by row; `x<i><j>` is 1 when `w(i) = j`.
pub fn permmatrix_locus(n: usize) -> Result<PointLocus> {
    check(n)?;
    let vars = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| format!("x{i}{j}")))
        .collect();
    locus(
        vars,
        permutations(n).into_iter().map(|w| {
            let mut c = vec![0i64; n * n];
            for (i, &a) in w.iter().enumerate() {
                c[i * n + a - 1] = 1;
            }
            (one_line(&w), c)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| Rational::from_integer(a)).collect()
    }

    #[test]
    fn kostant_points() {
        let l = kostant_locus(&Rationals, 3).unwrap();
        let labels: Vec<&str> = l.labels().collect();
        assert_eq!(labels, vec!["123", "132", "213", "231", "312", "321"]);
        assert_eq!(l.points[2].coords, ints(&[2, 1, 3]));
        assert!(matches!(
            kostant_locus(&PrimeField::default(), 3),
            Err(Error::CharacteristicZeroRequired)
        ));
        assert!(kostant_locus(&Rationals, 7).is_err());
    }

    #[test]
    fn permutohedral_table() {
        let l = permutohedral_locus(&Rationals, 3).unwrap();
        let vars: Vec<&str> = l.variables.iter().map(String::as_str).collect();
        assert_eq!(vars, vec!["x1", "x2", "x3", "x12", "x13", "x23"]);
        let row = |w: &str| l.points[l.position(w).unwrap()].coords.clone();
        assert_eq!(row("123"), ints(&[-1, 0, 0, -1, 0, 0]));
        assert_eq!(row("213"), ints(&[0, 1, 0, -2, 0, 0]));
        assert_eq!(row("132"), ints(&[-2, 0, 0, 0, 1, 0]));
        assert_eq!(row("231"), ints(&[0, -1, 0, 0, 0, 2]));
        assert_eq!(row("312"), ints(&[0, 0, 2, 0, -1, 0]));
        assert_eq!(row("321"), ints(&[0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn permmatrix_points() {
        let l = permmatrix_locus(2).unwrap();
        assert_eq!(l.points[0].coords, ints(&[1, 0, 0, 1]));
        assert_eq!(l.points[1].coords, ints(&[0, 1, 1, 0]));
        assert_eq!(permutations(4).len(), 24);
    }
}

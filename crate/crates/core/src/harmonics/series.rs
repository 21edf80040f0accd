use std::fmt;

use serde::{Deserialize, Serialize};

/// Coefficients of a Hilbert series, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub coeffs: Vec<u64>,
}

impl HilbertSeries {
    /// Drops trailing zero coefficients.
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertSeries { coeffs }
    }

    pub fn one() -> Self {
        HilbertSeries { coeffs: vec![1] }
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    /// Value at `q = 1`.
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![0; k];
        out.extend_from_slice(&self.coeffs);
        Self::new(out)
    }

    /// `sum_d #{x : stat(x) = d} q^d`.
    pub fn from_statistic<I: IntoIterator<Item = usize>>(values: I) -> Self {
        let mut out = Vec::new();
        for v in values {
            if out.len() <= v {
                out.resize(v + 1, 0);
            }
            out[v] += 1;
        }
        Self::new(out)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(d, c)| match d {
                0 => c.to_string(),
                1 if *c == 1 => "q".into(),
                1 => format!("{c}q"),
                _ if *c == 1 => format!("q^{d}"),
                _ => format!("{c}q^{d}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `prod_{i=1}^{n-1} (1 + i q)`, the small braid series.
pub fn small_braid_series(n: usize) -> HilbertSeries {
    (1..n).fold(HilbertSeries::one(), |acc, i| {
        acc.mul(&HilbertSeries::new(vec![1, i as u64]))
    })
}

/// `q (q + 1) (q + 2) ... (q + n - 1)` as printed for the small braid
/// locus. It has no constant term, so it cannot be the Hilbert series of a
/// nonzero graded quotient of a polynomial ring.
pub fn small_braid_printed_formula(n: usize) -> HilbertSeries {
    (0..n).fold(HilbertSeries::one(), |acc, i| {
        acc.mul(&HilbertSeries::new(vec![i as u64, 1]))
    })
}

/// A note when `computed` for the small braid locus disagrees with the
/// printed closed form.
pub fn small_braid_erratum(n: usize, computed: &HilbertSeries) -> Option<String> {
    let printed = small_braid_printed_formula(n);
    (printed != *computed).then(|| {
        format!(
            "computed {computed} = prod_(i=1..{}) (1 + i q); the printed closed form q(q+1)...(q+{}) = {printed} has constant term {} and disagrees",
            n.saturating_sub(1),
            n.saturating_sub(1),
            printed.coeff(0)
        )
    })
}

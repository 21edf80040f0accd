use indexmap::IndexMap;

use super::affine::{AffineForm, Arrangement};
use crate::com::{Com, GroundSet, Sign, SignedVector};
use crate::error::{Error, Result};

/// Largest `n` accepted by the braid generators.
pub const BRAID_CAP: usize = 8;

/// Label of the pair `i < j` (1-based).
pub fn pair_label(n: usize, i: usize, j: usize) -> String {
    if n <= 9 {
        format!("{i}{j}")
    } else {
        format!("{i},{j}")
    }
}

/// Index pairs `(i, j)`, 0-based with `i < j`, in ground order.
pub fn braid_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidChoice("braid arrangements need n >= 1".into()));
    }
    if n > BRAID_CAP {
        return Err(Error::CapExceeded {
            what: "braid rank",
            got: n,
            limit: BRAID_CAP,
        });
    }
    Ok(())
}

pub fn braid_ground(n: usize) -> GroundSet {
    GroundSet::new(
        braid_pairs(n)
            .into_iter()
            .map(|(i, j)| pair_label(n, i + 1, j + 1)),
    )
    .expect("distinct labels")
}

/// Covector of a weak order given by block positions; an element in an
/// earlier block has the larger coordinate.
pub fn covector_of_blocks(block: &[usize]) -> SignedVector {
    let n = block.len();
    let signs: Vec<Sign> = braid_pairs(n)
        .into_iter()
        .map(|(i, j)| match block[i].cmp(&block[j]) {
            std::cmp::Ordering::Less => Sign::Plus,
            std::cmp::Ordering::Greater => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
        })
        .collect();
    SignedVector::from_signs(&signs)
}

/// Every ordered set partition of `{0..n}`, as block positions per element.
pub fn ordered_set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            let max = cur.iter().copied().max().map_or(0, |m| m + 1);
            if (0..max).all(|b| cur.contains(&b)) {
                out.push(cur.clone());
            }
            return;
        }
        for b in 0..cur.len() {
            cur[k] = b;
            rec(k + 1, cur, out);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// Block positions of a braid covector, recovered from its signs.
pub fn blocks_of_covector(n: usize, x: &SignedVector) -> Vec<usize> {
    let pairs = braid_pairs(n);
    let sign = |i: usize, j: usize| {
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        let k = pairs.iter().position(|&p| p == (a, b)).expect("pair");
        let s = x.get(k);
        if flip {
            -s
        } else {
            s
        }
    };
    (0..n)
        .map(|i| {
            // number of distinct blocks strictly before i's block
            let mut before: Vec<usize> = (0..n).filter(|&j| j != i && sign(j, i) == Sign::Plus).collect();
            before.sort_unstable();
            let mut reps = 0;
            let mut seen: Vec<usize> = Vec::new();
            for j in before {
                if !seen.iter().any(|&s| sign(s, j) == Sign::Zero) {
                    reps += 1;
                }
                seen.push(j);
            }
            reps
        })
        .collect()
}

/// Renders a braid covector as an ordered set partition such as `(13|2)`.
pub fn ordered_partition_label(n: usize, x: &SignedVector) -> String {
    let blocks = blocks_of_covector(n, x);
    let k = blocks.iter().copied().max().map_or(0, |m| m + 1);
    let parts: Vec<String> = (0..k)
        .map(|b| {
            (0..n)
                .filter(|&i| blocks[i] == b)
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(if n > 9 { "," } else { "" })
        })
        .collect();
    format!("({})", parts.join("|"))
}

/// Tope of the permutation `w` in one-line notation (values 1-based),
/// namely the chamber `(w1|w2|...|wn)`.
pub fn tope_of_permutation(w: &[usize]) -> SignedVector {
    let mut block = vec![0; w.len()];
    for (pos, &v) in w.iter().enumerate() {
        block[v - 1] = pos;
    }
    covector_of_blocks(&block)
}

/// The braid arrangement COM, built directly from ordered set partitions.
pub fn braid_com(n: usize) -> Result<Com> {
    check_n(n)?;
    let covectors = ordered_set_partitions(n)
        .iter()
        .map(|b| covector_of_blocks(b))
        .collect();
    Com::new_unchecked(braid_ground(n), covectors)
}

/// Forms `x_i - x_j` for `i < j` on `Q^n`, with no region.
pub fn braid_arrangement(n: usize) -> Result<Arrangement> {
    check_n(n)?;
    let mut forms = IndexMap::new();
    for (i, j) in braid_pairs(n) {
        let mut c = vec![0; n];
        c[i] = 1;
        c[j] = -1;
        forms.insert(pair_label(n, i + 1, j + 1), AffineForm::from_ints(&c, 0));
    }
    Arrangement::new(n, forms, Vec::new())
}

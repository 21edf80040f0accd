use super::circuits::Circuit;
use super::order::TotalOrder;
use crate::com::ElementSet;

/// Sets that a no-broken-circuit set may not contain: every circuit
/// support, and every symmetric circuit support minus its smallest element.
pub fn broken_circuits(circuits: &[Circuit], ord: &TotalOrder) -> Vec<ElementSet> {
    let mut forbidden: Vec<ElementSet> = Vec::new();
    for c in circuits {
        let s = c.support();
        if c.symmetric {
            let min = ord.min_of(&s).expect("circuits are nonzero");
            forbidden.push(s.without(min));
        }
        forbidden.push(s);
    }
    // keep the inclusion-minimal ones, smallest first
    forbidden.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    forbidden.dedup();
    let mut minimal: Vec<ElementSet> = Vec::new();
    for f in forbidden {
        if !minimal.iter().any(|g| g.is_subset(&f)) {
            minimal.push(f);
        }
    }
    minimal
}

/// All NBC sets of an `n`-element ground set for the given circuits and
/// order, sorted by size and then lexicographically.
pub fn nbc_sets(n: usize, circuits: &[Circuit], ord: &TotalOrder) -> Vec<ElementSet> {
    assert!(n < 64, "ground set too large for subset enumeration");
    let forbidden: Vec<u64> = broken_circuits(circuits, ord)
        .iter()
        .map(|s| s.to_mask().expect("small ground set"))
        .collect();
    let mut out: Vec<ElementSet> = (0u64..1 << n)
        .filter(|&m| forbidden.iter().all(|&f| f & m != f))
        .map(ElementSet::from_mask)
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroidal::circuits;
    use crate::realize::{braid_com, fixture};

    #[test]
    fn nbc_counts_match_topes() {
        let m = fixture("figure1").unwrap();
        let cs = circuits(&m).unwrap();
        let n = nbc_sets(4, &cs, &TotalOrder::natural(4));
        assert_eq!(n.len(), 6);
        let b = braid_com(3).unwrap();
        let cs = circuits(&b).unwrap();
        for order in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            let o = TotalOrder::new(order.to_vec()).unwrap();
            assert_eq!(nbc_sets(3, &cs, &o).len(), 6);
        }
    }

    #[test]
    fn no_circuits_means_everything_is_nbc() {
        assert_eq!(nbc_sets(3, &[], &TotalOrder::natural(3)).len(), 8);
    }

    #[test]
    fn coloop_kills_every_set() {
        let m = crate::com::Com::from_strs(&["1", "2"], &["0+", "0-", "00"]).unwrap();
        let cs = circuits(&m).unwrap();
        assert!(nbc_sets(2, &cs, &TotalOrder::natural(2)).is_empty());
    }
}

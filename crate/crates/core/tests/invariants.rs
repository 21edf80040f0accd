use proptest::prelude::*;

use covg_core::field::{PrimeField, Rationals};
use covg_core::harmonics::{
    big_hilbert_via_nbc, big_locus, hilbert_series, small_hilbert_via_nbc, small_locus, BigContext, LocusKind,
    LocusPoint, PointLocus,
};
use covg_core::matroidal::{check_tope_contraction_count, nbc_sets_of, FlatStructure, TotalOrder};
use covg_core::realize::{braid_com, enumerate_covectors, fixture, AffineForm, Arrangement};
use covg_core::{Com, Rational};

fn corpus() -> Vec<Com> {
    let mut v = vec![fixture("figure1").unwrap(), fixture("figure1-rectangle").unwrap()];
    v.extend((1..=4).map(|n| braid_com(n).unwrap()));
    v
}

fn shuffled(n: usize, keys: &[u32]) -> TotalOrder {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (keys[i], i));
    TotalOrder::new(idx).unwrap()
}

prop_compose! {
    fn plane_arrangement()(
        lines in prop::collection::vec((-3i64..=3, -3i64..=3, -4i64..=4), 1..=4),
        bounded in any::<bool>(),
    ) -> Option<Arrangement> {
        if lines.iter().any(|&(a, b, _)| a == 0 && b == 0) {
            return None;
        }
        let forms = lines
            .iter()
            .enumerate()
            .map(|(k, &(a, b, c))| ((k + 1).to_string(), AffineForm::from_ints(&[a, b], c)))
            .collect();
        let region = if bounded {
            vec![
                AffineForm::from_ints(&[1, 0], 2),
                AffineForm::from_ints(&[-1, 0], 2),
                AffineForm::from_ints(&[0, 1], 2),
                AffineForm::from_ints(&[0, -1], 2),
            ]
        } else {
            Vec::new()
        };
        Some(Arrangement::new(2, forms, region).unwrap())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nbc_count_is_tope_count(keys in prop::collection::vec(any::<u32>(), 6)) {
        for m in corpus() {
            let ord = shuffled(m.ground().len(), &keys);
            prop_assert_eq!(nbc_sets_of(&m, &ord).unwrap().len(), m.topes().len());
        }
    }

    #[test]
    fn big_series_is_order_independent(keys in prop::collection::vec(any::<u32>(), 6)) {
        for m in corpus() {
            let ord = shuffled(m.ground().len(), &keys);
            let ctx = BigContext::new(&m).unwrap();
            let h = big_hilbert_via_nbc(&ctx, &ord);
            prop_assert_eq!(h.total(), m.len() as u64);
            prop_assert_eq!(h, hilbert_series(Rationals, &big_locus(&m)).unwrap());
        }
    }

    #[test]
    fn random_plane_arrangements(a in plane_arrangement()) {
        let Some(a) = a else { return Ok(()) };
        let m = enumerate_covectors(&a).unwrap();
        prop_assert!(m.check_axioms().unwrap().passes());
        prop_assert!(check_tope_contraction_count(&m).unwrap().passes());
        let fs = FlatStructure::new(&m).unwrap();
        prop_assert!(fs.basic_sets_nest());
        prop_assert!(fs.nonbasic_upward_closed());
        let ord = TotalOrder::natural(m.ground().len());
        let big = hilbert_series(Rationals, &big_locus(&m)).unwrap();
        prop_assert_eq!(big.coeff(0), 1);
        prop_assert_eq!(&big, &big_hilbert_via_nbc(&BigContext::new(&m).unwrap(), &ord));
        let small = small_locus(&m);
        if !small.is_empty() {
            prop_assert_eq!(hilbert_series(Rationals, &small).unwrap(), small_hilbert_via_nbc(&m, &ord).unwrap());
        }
    }

    #[test]
    fn random_loci_series(
        pts in prop::collection::btree_set(prop::collection::vec(-2i64..=2, 3), 1..12),
    ) {
        let points: Vec<LocusPoint> = pts
            .iter()
            .enumerate()
            .map(|(k, c)| LocusPoint { label: k.to_string(), coords: c.iter().map(|&x| Rational::from_integer(x)).collect() })
            .collect();
        let l = PointLocus::new(vec!["a".into(), "b".into(), "c".into()].into(), points, LocusKind::Raw).unwrap();
        let q = hilbert_series(Rationals, &l).unwrap();
        prop_assert_eq!(q.total(), pts.len() as u64);
        prop_assert_eq!(q.coeff(0), 1);
        prop_assert!(q.degree().unwrap() < pts.len());
        let p = hilbert_series(PrimeField::new(1_000_003).unwrap(), &l).unwrap();
        prop_assert_eq!(p, q);
    }
}

use covg_core::realize::{
    braid_arrangement, braid_com, enumerate_covectors, fixture, fixture_arrangement, lp_strict_feasible, AffineForm,
    Arrangement,
};
use covg_core::Rational;

#[test]
fn braid_forms_enumerate_to_braid_com() {
    for n in 1..=4 {
        let a = braid_arrangement(n).unwrap();
        let m = enumerate_covectors(&a).unwrap();
        assert_eq!(m, braid_com(n).unwrap(), "n = {n}");
        assert!(m.check_axioms().unwrap().passes());
    }
}

#[test]
fn polyhedral_fixtures_match_shipped_json() {
    let boxed = enumerate_covectors(&fixture_arrangement("figure1-box").unwrap()).unwrap();
    assert_eq!(boxed, fixture("figure1").unwrap());
    let rect = enumerate_covectors(&fixture_arrangement("figure1-rectangle").unwrap()).unwrap();
    assert_eq!(rect, fixture("figure1-rectangle").unwrap());
}

#[test]
fn arrangement_json_round_trips() {
    for a in [
        braid_arrangement(3).unwrap(),
        fixture_arrangement("figure1-box").unwrap(),
        fixture_arrangement("figure1-rectangle").unwrap(),
    ] {
        let s = a.to_json();
        let b = Arrangement::from_json(&s).unwrap();
        assert_eq!(b, a);
        assert_eq!(b.to_json(), s);
    }
}

#[test]
fn lp_witness_satisfies_every_form() {
    // x > 0, y > 0, x + y < 3 together with x - y = 0
    let strict = [
        AffineForm::from_ints(&[1, 0], 0),
        AffineForm::from_ints(&[0, 1], 0),
        AffineForm::from_ints(&[-1, -1], 3),
    ];
    let eq = [AffineForm::from_ints(&[1, -1], 0)];
    let x = lp_strict_feasible(&strict, &eq).unwrap().unwrap();
    for f in &strict {
        assert!(f.eval(&x).unwrap() > Rational::zero());
    }
    assert!(eq[0].eval(&x).unwrap().is_zero());
    // x > 0 and -x > 0
    let contra = [AffineForm::from_ints(&[1], 0), AffineForm::from_ints(&[-1], 0)];
    assert!(lp_strict_feasible(&contra, &[]).unwrap().is_none());
}

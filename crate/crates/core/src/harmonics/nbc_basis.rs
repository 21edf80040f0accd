use super::ideals::BigContext;
use super::locus::{big_var, small_var};
use super::series::HilbertSeries;
use crate::com::{Com, ElementSet, Sign};
use crate::error::Result;
use crate::exactla::Monomial;
use crate::matroidal::{circuits, nbc_sets, TotalOrder};

/// One element of the big NBC basis: `z_B prod_{i in N} y_i^+` for an NBC
/// set `N` of the contraction at `flat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigBasisElement {
    pub flat: ElementSet,
    pub nbc: ElementSet,
    pub monomial: Monomial,
}

/// `(N, prod_{i in N} y_i^+)` for every NBC set `N`.
pub fn small_nbc_basis(m: &Com, ord: &TotalOrder) -> Result<Vec<(ElementSet, Monomial)>> {
    let cs = circuits(m)?;
    Ok(nbc_sets(m.ground().len(), &cs, ord)
        .into_iter()
        .map(|n| {
            let mono = Monomial::product(n.iter().map(|i| small_var(i, Sign::Plus)));
            (n, mono)
        })
        .collect())
}

/// NBC sets of the contraction at each flat, lifted to ground indices.
pub fn contraction_nbc_sets(ctx: &BigContext, ord: &TotalOrder) -> Vec<Vec<ElementSet>> {
    ctx.flats
        .iter()
        .map(|f| {
            let o = f.restricted_order(ord);
            nbc_sets(f.rest.len(), &f.circuits, &o)
                .iter()
                .map(|n| f.lift_set(n))
                .collect()
        })
        .collect()
}

/// The big basis, flat by flat, with `z_F` the product over `basic[k]`.
pub fn big_nbc_basis(ctx: &BigContext, ord: &TotalOrder, basic: &[ElementSet]) -> Result<Vec<BigBasisElement>> {
    ctx.check_basic_choice(basic)?;
    let nbc = contraction_nbc_sets(ctx, ord);
    let mut out = Vec::new();
    for ((f, b), sets) in ctx.flats.iter().zip(basic).zip(nbc) {
        let zb = Monomial::product(b.iter().map(|i| big_var(i, Sign::Zero)));
        for n in sets {
            let y = Monomial::product(n.iter().map(|i| big_var(i, Sign::Plus)));
            out.push(BigBasisElement {
                flat: f.flat.clone(),
                nbc: n,
                monomial: zb.mul(&y),
            });
        }
    }
    Ok(out)
}

/// `sum_N q^{|N|}` over NBC sets of `m`.
pub fn small_hilbert_via_nbc(m: &Com, ord: &TotalOrder) -> Result<HilbertSeries> {
    let cs = circuits(m)?;
    Ok(HilbertSeries::from_statistic(
        nbc_sets(m.ground().len(), &cs, ord).iter().map(ElementSet::len),
    ))
}

/// `sum_F q^{codim F} sum_{N in NBC(M^F)} q^{|N|}`.
pub fn big_hilbert_via_nbc(ctx: &BigContext, ord: &TotalOrder) -> HilbertSeries {
    let nbc = contraction_nbc_sets(ctx, ord);
    HilbertSeries::from_statistic(
        ctx.flats
            .iter()
            .zip(&nbc)
            .flat_map(|(f, sets)| sets.iter().map(move |n| f.codim + n.len())),
    )
}

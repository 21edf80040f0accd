use serde::Serialize;

use super::engine::{verify_basis, OrbitHarmonics};
use super::ideals::{
    all_j, big_ideal_default, flat_symmetric_generator, small_ideal_generators, BigContext, Family,
    Generator, IdealKind,
};
use super::locus::{big_locus, small_locus};
use super::nbc_basis::{big_hilbert_via_nbc, big_nbc_basis, small_hilbert_via_nbc, small_nbc_basis};
use super::series::HilbertSeries;
use crate::com::Com;
use crate::error::Result;
use crate::exactla::Monomial;
use crate::field::Field;
use crate::matroidal::TotalOrder;

/// Symmetric circuits with at most this many support elements get every
/// admissible `J` checked.
pub const J_EXHAUSTIVE_SUPPORT: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct MembershipFailure {
    pub ideal: IdealKind,
    pub family: Family,
    pub source: String,
    pub polynomial: String,
}

fn failure<F: Field>(ideal: IdealKind, g: &Generator<F>) -> MembershipFailure {
    MembershipFailure {
        ideal,
        family: g.family,
        source: g.source.clone(),
        polynomial: g.poly.to_string(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BigTheoremReport {
    pub covectors: usize,
    pub tilde_generators: usize,
    pub big_generators: usize,
    pub membership_failures: Vec<MembershipFailure>,
    pub j_variants_checked: usize,
    pub j_failures: Vec<MembershipFailure>,
    pub basis_size: usize,
    pub basis_is_basis: bool,
    /// Every flat contributes `#NBC(M^F) = #topes(M^F)` basis elements of
    /// degree `codim F + |N|`.
    pub strata_match: bool,
    pub hilbert_rank: HilbertSeries,
    pub hilbert_nbc: HilbertSeries,
}

impl BigTheoremReport {
    pub fn passes(&self) -> bool {
        self.membership_failures.is_empty()
            && self.j_failures.is_empty()
            && self.basis_is_basis
            && self.basis_size == self.covectors
            && self.strata_match
            && self.hilbert_rank == self.hilbert_nbc
    }
}

/// Membership of every tilde and big generator in `gr I` of the big locus,
/// the NBC basis, and the two Hilbert series.
pub fn verify_theorem_big<F: Field>(field: F, m: &Com, ord: &TotalOrder) -> Result<BigTheoremReport> {
    let ctx = BigContext::new(m)?;
    let locus = big_locus(m);
    let engine = OrbitHarmonics::new(field.clone(), &locus)?;
    let pres = big_ideal_default(&field, m, &ctx, ord)?;
    let tilde_generators = pres
        .generators
        .iter()
        .filter(|g| matches!(g.family, Family::NonbasicProduct | Family::BasicDifference))
        .count();
    let mut membership_failures = Vec::new();
    for g in &pres.generators {
        if !engine.gr_member(&g.poly)? {
            let kind = if matches!(g.family, Family::NonbasicProduct | Family::BasicDifference) {
                IdealKind::Tilde
            } else {
                IdealKind::Big
            };
            membership_failures.push(failure(kind, g));
        }
    }
    let basic = ctx.default_basic_choice();
    let mut j_variants_checked = 0;
    let mut j_failures = Vec::new();
    for (f, b) in ctx.flats.iter().zip(&basic) {
        for c in f.lifted.iter().filter(|c| c.symmetric) {
            if c.vector.support_size() > J_EXHAUSTIVE_SUPPORT {
                continue;
            }
            for j in all_j(&c.vector) {
                let poly = flat_symmetric_generator(&field, &pres.variables, b, &c.vector, &j)?;
                j_variants_checked += 1;
                if !engine.gr_member(&poly)? {
                    let g = m.ground();
                    j_failures.push(failure(
                        IdealKind::Big,
                        &Generator {
                            family: Family::FlatSymmetric,
                            poly,
                            source: format!("{} {} J={}", g.show(&f.flat), c.vector, g.show(&j)),
                        },
                    ));
                }
            }
        }
    }
    let basis = big_nbc_basis(&ctx, ord, &basic)?;
    let monomials: Vec<Monomial> = basis.iter().map(|e| e.monomial.clone()).collect();
    let basis_is_basis = monomials.len() == locus.len() && verify_basis(field, &locus, &monomials)?;
    let strata_match = ctx.flats.iter().all(|f| {
        let stratum: Vec<_> = basis.iter().filter(|e| e.flat == f.flat).collect();
        stratum.len() == f.contraction.topes().len()
            && stratum.iter().all(|e| e.monomial.degree() == f.codim + e.nbc.len())
    });
    Ok(BigTheoremReport {
        covectors: m.len(),
        tilde_generators,
        big_generators: pres.len(),
        membership_failures,
        j_variants_checked,
        j_failures,
        basis_size: basis.len(),
        basis_is_basis,
        strata_match,
        hilbert_rank: engine.hilbert(),
        hilbert_nbc: big_hilbert_via_nbc(&ctx, ord),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SmallGeneratorsReport {
    pub topes: usize,
    pub graded_generators: usize,
    pub graded_failures: Vec<MembershipFailure>,
    pub affine_generators: usize,
    /// Affine generators that do not vanish on every tope point.
    pub affine_failures: Vec<MembershipFailure>,
    pub basis_is_basis: bool,
    pub hilbert_rank: HilbertSeries,
    pub hilbert_nbc: HilbertSeries,
}

impl SmallGeneratorsReport {
    pub fn passes(&self) -> bool {
        self.graded_failures.is_empty()
            && self.affine_failures.is_empty()
            && self.basis_is_basis
            && self.hilbert_rank == self.hilbert_nbc
    }
}

/// The small generator lists against the small locus, plus the NBC basis.
pub fn verify_small_generators<F: Field>(field: F, m: &Com, ord: &TotalOrder) -> Result<SmallGeneratorsReport> {
    let locus = small_locus(m);
    let engine = OrbitHarmonics::new(field.clone(), &locus)?;
    let (affine, graded) = small_ideal_generators(&field, m)?;
    let mut graded_failures = Vec::new();
    for g in &graded.generators {
        if !engine.gr_member(&g.poly)? {
            graded_failures.push(failure(IdealKind::SmallGraded, g));
        }
    }
    let mut affine_failures = Vec::new();
    for g in &affine.generators {
        if !engine.eval_poly(&g.poly)?.iter().all(|x| field.is_zero(x)) {
            affine_failures.push(failure(IdealKind::SmallAffine, g));
        }
    }
    let monomials: Vec<Monomial> = small_nbc_basis(m, ord)?.into_iter().map(|p| p.1).collect();
    let basis_is_basis = monomials.len() == locus.len() && verify_basis(field, &locus, &monomials)?;
    Ok(SmallGeneratorsReport {
        topes: locus.len(),
        graded_generators: graded.len(),
        graded_failures,
        affine_generators: affine.len(),
        affine_failures,
        basis_is_basis,
        hilbert_rank: engine.hilbert(),
        hilbert_nbc: small_hilbert_via_nbc(m, ord)?,
    })
}

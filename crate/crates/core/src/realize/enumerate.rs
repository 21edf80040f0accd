use rayon::prelude::*;

use super::affine::{AffineForm, Arrangement};
use super::lp::lp_strict_feasible;
use crate::com::{Com, GroundSet, Sign, SignedVector};
use crate::error::{Error, Result};

/// Default bound on the number of hyperplanes.
pub const DEFAULT_FORM_CAP: usize = 14;

/// All faces of the arrangement meeting the region, as a COM.
pub fn enumerate_covectors(a: &Arrangement) -> Result<Com> {
    enumerate_covectors_capped(a, DEFAULT_FORM_CAP)
}

pub fn enumerate_covectors_capped(a: &Arrangement, cap: usize) -> Result<Com> {
    a.validate()?;
    let forms: Vec<&AffineForm> = a.forms.values().collect();
    if forms.len() > cap {
        return Err(Error::CapExceeded {
            what: "number of hyperplanes",
            got: forms.len(),
            limit: cap,
        });
    }
    if lp_strict_feasible(&a.region, &[])?.is_none() {
        return Err(Error::EmptyRegion);
    }
    let mut found = Vec::new();
    extend(a, &forms, &[], &mut found)?;
    let ground = GroundSet::new(a.forms.keys().cloned())?;
    Com::new(ground, found)
}

/// Depth-first search over sign prefixes; an infeasible prefix prunes its
/// whole subtree.
fn extend(
    a: &Arrangement,
    forms: &[&AffineForm],
    prefix: &[Sign],
    out: &mut Vec<SignedVector>,
) -> Result<()> {
    if prefix.len() == forms.len() {
        out.push(SignedVector::from_signs(prefix));
        return Ok(());
    }
    let branches: Vec<Result<Vec<SignedVector>>> = [Sign::Zero, Sign::Plus, Sign::Minus]
        .par_iter()
        .map(|&s| {
            let mut p = prefix.to_vec();
            p.push(s);
            if !prefix_feasible(a, forms, &p)? {
                return Ok(Vec::new());
            }
            let mut sub = Vec::new();
            extend(a, forms, &p, &mut sub)?;
            Ok(sub)
        })
        .collect();
    for b in branches {
        out.extend(b?);
    }
    Ok(())
}

fn prefix_feasible(a: &Arrangement, forms: &[&AffineForm], signs: &[Sign]) -> Result<bool> {
    let mut strict = a.region.clone();
    let mut eq = Vec::new();
    for (f, s) in forms.iter().zip(signs) {
        match s {
            Sign::Plus => strict.push((*f).clone()),
            Sign::Minus => strict.push(f.negated()),
            Sign::Zero => eq.push((*f).clone()),
        }
    }
    if strict.is_empty() && eq.is_empty() {
        return Ok(true);
    }
    Ok(lp_strict_feasible(&strict, &eq)?.is_some())
}

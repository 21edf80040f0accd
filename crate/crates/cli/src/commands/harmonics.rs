use covg_core::field::Field;
use covg_core::harmonics::{
    big_hilbert_via_nbc, big_locus, hilbert_series, kostant_locus, permmatrix_locus, permutohedral_locus,
    small_braid_erratum, small_hilbert_via_nbc, small_locus, verify_small_generators, verify_theorem_big,
    BigContext, HilbertSeries, PointLocus,
};
use covg_core::matroidal::{check_tope_contraction_count, check_two_values_exhaustive, nbc_sets_of, FlatStructure};
use covg_core::realize::{braid_com, BRAID_CAP};
use covg_core::Com;
use serde_json::json;

use super::{with_field, Ctx};
use crate::args::{Family, Method, What, Which};
use crate::error::Result;
use crate::input::{load_com, parse_order};
use crate::report::{InputRecord, Outcome, Table};

fn series_table(title: &str, h: &HilbertSeries) -> Table {
    let mut t = Table::new(format!("{title}: {h}"), ["degree", "dimension"]);
    for (d, c) in h.coeffs.iter().enumerate() {
        t.row([d, *c as usize]);
    }
    t
}

/// `n` when `m` is the braid COM on `n` points.
fn braid_rank(m: &Com) -> Option<usize> {
    let len = m.ground().len();
    let n = (1..=BRAID_CAP).find(|n| n * (n - 1) / 2 == len && (*n > 1 || len == 0))?;
    (braid_com(n).ok()? == *m).then_some(n)
}

pub fn hilbert(
    ctx: &Ctx,
    input: &str,
    which: Which,
    method: Method,
    order: Option<&str>,
) -> Result<(Outcome, Vec<InputRecord>)> {
    let (m, rec) = load_com(input)?;
    let ord = parse_order(m.ground(), order)?;
    let h = match (which, method) {
        (Which::Small, Method::Rank) => with_field!(ctx.field, |f| hilbert_series(f, &small_locus(&m))?),
        (Which::Big, Method::Rank) => with_field!(ctx.field, |f| hilbert_series(f, &big_locus(&m))?),
        (Which::Small, Method::Nbc) => small_hilbert_via_nbc(&m, &ord)?,
        (Which::Big, Method::Nbc) => big_hilbert_via_nbc(&BigContext::new(&m)?, &ord),
    };
    let which_s = format!("{which:?}").to_lowercase();
    let method_s = format!("{method:?}").to_lowercase();
    let mut results = json!({ "which": which_s, "method": method_s, "series": h });
    let expected = match which {
        Which::Small => m.topes().len(),
        Which::Big => m.len(),
    };
    if which == Which::Small {
        if let Some(note) = braid_rank(&m).and_then(|n| small_braid_erratum(n, &h)) {
            results["printed_formula_disagrees"] = json!(note);
        }
    }
    let mut out = Outcome::new(results).table(series_table(&format!("{which_s} series ({method_s})"), &h));
    out.assert("series sums to the number of points", h.total() == expected as u64);
    Ok((out, vec![rec]))
}

pub fn verify(ctx: &Ctx, input: &str, what: What, order: Option<&str>) -> Result<(Outcome, Vec<InputRecord>)> {
    let (m, rec) = load_com(input)?;
    let ord = parse_order(m.ground(), order)?;
    let out = match what {
        What::BigTheorem => {
            let r = with_field!(ctx.field, |f| verify_theorem_big(f, &m, &ord)?);
            let mut t = Table::new("big theorem", ["check", "value"]);
            t.row(["covectors".to_string(), r.covectors.to_string()]);
            t.row(["generators".to_string(), r.big_generators.to_string()]);
            t.row(["J variants".to_string(), r.j_variants_checked.to_string()]);
            t.row(["rank series".to_string(), r.hilbert_rank.to_string()]);
            t.row(["NBC series".to_string(), r.hilbert_nbc.to_string()]);
            let mut o = Outcome::new(json!(r)).table(t);
            o.assert("tilde and big generators lie in gr I", r.membership_failures.is_empty());
            o.assert("every admissible J gives members", r.j_failures.is_empty());
            o.assert("NBC monomials form a basis", r.basis_is_basis && r.basis_size == r.covectors);
            o.assert("per-flat strata sizes", r.strata_match);
            o.assert("rank series = NBC series", r.hilbert_rank == r.hilbert_nbc);
            o
        }
        What::SmallGenerators => {
            let r = with_field!(ctx.field, |f| verify_small_generators(f, &m, &ord)?);
            let mut t = Table::new("small generators", ["check", "value"]);
            t.row(["topes".to_string(), r.topes.to_string()]);
            t.row(["graded generators".to_string(), r.graded_generators.to_string()]);
            t.row(["affine generators".to_string(), r.affine_generators.to_string()]);
            t.row(["rank series".to_string(), r.hilbert_rank.to_string()]);
            let mut o = Outcome::new(json!(r)).table(t);
            o.assert("graded generators lie in gr I", r.graded_failures.is_empty());
            o.assert("affine generators vanish on the topes", r.affine_failures.is_empty());
            o.assert("NBC monomials form a basis", r.basis_is_basis);
            o.assert("rank series = NBC series", r.hilbert_rank == r.hilbert_nbc);
            o
        }
        What::TwoValues => {
            let r = check_two_values_exhaustive(&m)?;
            let mut t = Table::new("two values", ["check", "value"]);
            t.row(["cases", &r.cases.to_string()]);
            t.row(["covector checks", &r.covector_checks.to_string()]);
            t.row(["failed", &r.failed.len().to_string()]);
            let mut o = Outcome::new(json!(r)).table(t);
            o.assert("0 and 1 both attained", r.passes());
            o
        }
        What::TopeCount => {
            let r = check_tope_contraction_count(&m)?;
            let g = m.ground();
            let mut t = Table::new(format!("{} covectors, sum {}", r.covectors, r.sum), ["flat", "topes of contraction"]);
            for (f, c) in &r.per_flat {
                t.row([g.show(&f.iter().copied().collect()), c.to_string()]);
            }
            let mut o = Outcome::new(json!(r)).table(t);
            o.assert("#M = sum of contraction tope counts", r.sum == r.covectors);
            o.assert("restriction is a bijection onto topes", r.bijective);
            o
        }
        What::BasicLemma => {
            let fs = FlatStructure::new(&m)?;
            let nbc = nbc_sets_of(&m, &ord)?.len();
            let topes = m.topes().len();
            let nest = fs.basic_sets_nest();
            let upward = fs.nonbasic_upward_closed();
            let mut t = Table::new("basic sets", ["check", "value"]);
            t.row(["flats", &fs.flats().len().to_string()]);
            t.row(["NBC sets", &nbc.to_string()]);
            t.row(["topes", &topes.to_string()]);
            let mut o = Outcome::new(json!({
                "flats": fs.flats().len(),
                "nbc_sets": nbc,
                "topes": topes,
                "basic_sets_nest": nest,
                "nonbasic_upward_closed": upward,
            }))
            .table(t);
            // FlatStructure::new already rejects unequal basic-set sizes
            o.assert("basic sets of a flat have equal size", true);
            o.assert("basic sets nest along flats", nest);
            o.assert("nonbasic sets are upward closed", upward);
            o.assert("#NBC = #topes", nbc == topes);
            o
        }
    };
    Ok((out, vec![rec]))
}

fn locus_table(l: &PointLocus) -> Table {
    let mut headers = vec!["point".to_string()];
    headers.extend(l.variables.iter().cloned());
    let mut t = Table::new(format!("{} points", l.len()), headers);
    for p in &l.points {
        let mut row = vec![p.label.clone()];
        row.extend(p.coords.iter().map(|c| c.to_string()));
        t.row(row);
    }
    t
}

fn permutation_locus<F: Field>(f: &F, family: Family, n: usize) -> Result<PointLocus> {
    Ok(match family {
        Family::Kostant => kostant_locus(f, n)?,
        Family::Permutohedral => permutohedral_locus(f, n)?,
        Family::Permmatrix => permmatrix_locus(n)?,
    })
}

pub fn loci(ctx: &Ctx, family: Family, n: usize, with_hilbert: bool) -> Result<(Outcome, Vec<InputRecord>)> {
    let (l, h) = with_field!(ctx.field, |f| {
        let l = permutation_locus(&f, family, n)?;
        let h = if with_hilbert { Some(hilbert_series(f, &l)?) } else { None };
        (l, h)
    });
    let mut results = json!({
        "family": format!("{family:?}").to_lowercase(),
        "n": n,
        "locus": l,
    });
    let mut out = Outcome::new(json!(null));
    out.tables.push(locus_table(&l));
    if let Some(h) = h {
        out.assert("series sums to n!", h.total() == l.len() as u64);
        out.tables.push(series_table("hilbert", &h));
        results["hilbert"] = json!(h);
    }
    out.results = results;
    Ok((out, Vec::new()))
}

use std::path::Path;

use covg_core::matroidal::{broken_circuits, circuits as all_circuits, nbc_sets, FlatStructure};
use covg_core::realize::{braid_com, enumerate_covectors, fixture as load_fixture};
use serde_json::json;

use super::{com_outcome, labels};
use crate::error::Result;
use crate::input::{load_arrangement, load_com, load_unchecked, parse_order};
use crate::report::{InputRecord, Outcome, Table};

pub fn check(input: &str) -> Result<(Outcome, Vec<InputRecord>)> {
    let (m, rec) = load_unchecked(input)?;
    let report = m.check_axioms()?;
    let g = m.ground();
    let mut t = Table::new("axioms", ["property", "value"]);
    t.row(["covectors".to_string(), m.len().to_string()]);
    t.row(["topes".to_string(), m.topes().len().to_string()]);
    t.row(["coloops".to_string(), g.show(&m.coloops())]);
    let mut out = Outcome::new(json!({
        "covectors": m.len(),
        "topes": m.topes().len(),
        "coloops": labels(g, &m.coloops()),
        "axioms": report,
    }))
    .table(t);
    out.assert("face symmetry", report.face_symmetry.is_none());
    out.assert("strong elimination", report.strong_elimination.is_none());
    Ok((out, vec![rec]))
}

pub fn enumerate(path: &Path) -> Result<(Outcome, Vec<InputRecord>)> {
    let (a, rec) = load_arrangement(path)?;
    let m = enumerate_covectors(&a)?;
    Ok((com_outcome(&m, "enumerated"), vec![rec]))
}

pub fn braid(n: usize) -> Result<(Outcome, Vec<InputRecord>)> {
    let m = braid_com(n)?;
    Ok((com_outcome(&m, &format!("braid n={n}")), Vec::new()))
}

pub fn fixture(name: &str) -> Result<(Outcome, Vec<InputRecord>)> {
    let m = load_fixture(name)?;
    Ok((com_outcome(&m, name), Vec::new()))
}

pub fn circuits(input: &str) -> Result<(Outcome, Vec<InputRecord>)> {
    let (m, rec) = load_com(input)?;
    let cs = all_circuits(&m)?;
    let mut t = Table::new(format!("{} circuits", cs.len()), ["circuit", "support", "symmetric"]);
    let list: Vec<_> = cs
        .iter()
        .map(|c| {
            t.row([
                c.vector.to_string(),
                m.ground().show(&c.support()),
                c.symmetric.to_string(),
            ]);
            json!({
                "circuit": c.vector.to_string(),
                "support": labels(m.ground(), &c.support()),
                "symmetric": c.symmetric,
            })
        })
        .collect();
    Ok((Outcome::new(json!({ "circuits": list })).table(t), vec![rec]))
}

pub fn nbc(input: &str, order: Option<&str>) -> Result<(Outcome, Vec<InputRecord>)> {
    let (m, rec) = load_com(input)?;
    let g = m.ground();
    let ord = parse_order(g, order)?;
    let cs = all_circuits(&m)?;
    let broken = broken_circuits(&cs, &ord);
    let sets = nbc_sets(g.len(), &cs, &ord);
    let topes = m.topes().len();
    let mut t = Table::new(format!("{} NBC sets, {topes} topes", sets.len()), ["nbc set", "size"]);
    for s in &sets {
        t.row([g.show(s), s.len().to_string()]);
    }
    let mut out = Outcome::new(json!({
        "order": ord.labels(g),
        "broken_circuits": broken.iter().map(|s| labels(g, s)).collect::<Vec<_>>(),
        "nbc_sets": sets.iter().map(|s| labels(g, s)).collect::<Vec<_>>(),
        "topes": topes,
    }))
    .table(t);
    out.assert("#NBC = #topes", sets.len() == topes);
    Ok((out, vec![rec]))
}

pub fn flats(input: &str) -> Result<(Outcome, Vec<InputRecord>)> {
    let (m, rec) = load_com(input)?;
    let g = m.ground();
    let fs = FlatStructure::new(&m)?;
    let mut t = Table::new(
        format!("{} flats", fs.flats().len()),
        ["flat", "codim", "basic sets", "covectors"],
    );
    let list: Vec<_> = fs
        .flats()
        .flats()
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let count = m.covectors().iter().filter(|x| x.zero_set() == *f).count();
            let basic: Vec<String> = fs.basic_sets_at(k).iter().map(|b| g.show(b)).collect();
            t.row([g.show(f), fs.codim_at(k).to_string(), basic.join(" "), count.to_string()]);
            json!({
                "flat": labels(g, f),
                "codim": fs.codim_at(k),
                "basic_sets": fs.basic_sets_at(k).iter().map(|b| labels(g, b)).collect::<Vec<_>>(),
                "covectors": count,
            })
        })
        .collect();
    let minimal: Vec<_> = fs.minimal_nonbasic_sets().iter().map(|c| labels(g, c)).collect();
    Ok((
        Outcome::new(json!({ "flats": list, "minimal_nonbasic_sets": minimal })).table(t),
        vec![rec],
    ))
}

pub fn basic(input: &str, flat: &str) -> Result<(Outcome, Vec<InputRecord>)> {
    let (m, rec) = load_com(input)?;
    let g = m.ground();
    let f = g.parse_set(flat)?;
    let fs = FlatStructure::new(&m)?;
    let bs = fs.basic_sets(&f)?;
    let codim = fs.codim(&f)?;
    let mut t = Table::new(format!("flat {} (codim {codim})", g.show(&f)), ["basic set"]);
    for b in bs {
        t.row([g.show(b)]);
    }
    Ok((
        Outcome::new(json!({
            "flat": labels(g, &f),
            "codim": codim,
            "basic_sets": bs.iter().map(|b| labels(g, b)).collect::<Vec<_>>(),
        }))
        .table(t),
        vec![rec],
    ))
}

use covg_core::equivariant::{graded_character, verify_graded_module_structure};
use covg_core::harmonics::{big_locus, small_locus};
use serde_json::json;

use super::{with_field, Ctx};
use crate::args::Which;
use crate::error::{CliError, Result};
use crate::input::{load_com, load_group};
use crate::report::{InputRecord, Outcome, Table};

pub fn character(
    ctx: &Ctx,
    input: &str,
    group: &str,
    which: Which,
    decompose: bool,
) -> Result<(Outcome, Vec<InputRecord>)> {
    let (m, rec) = load_com(input)?;
    let (g, grec) = load_group(group, m.ground())?;
    g.check_automorphisms(&m)?;
    let locus = match which {
        Which::Small => small_locus(&m),
        Which::Big => big_locus(&m),
    };
    let chi = with_field!(ctx.field, |f| graded_character(f, &locus, &g)?);
    let classes = g.class_labels();
    let mut t = Table::new(
        format!("graded character, |G| = {}", g.order()),
        ["element", "class", "by degree", "total"],
    );
    let elements: Vec<_> = (0..g.order())
        .map(|k| {
            let name = format!("{:?}", g.element(k));
            t.row([
                name.clone(),
                classes[k].to_string(),
                format!("{:?}", chi.values[k]),
                chi.total(k).to_string(),
            ]);
            json!({ "element": name, "class": classes[k], "values": chi.values[k] })
        })
        .collect();
    let mut results = json!({
        "which": format!("{which:?}").to_lowercase(),
        "group_order": g.order(),
        "characters": elements,
    });
    let mut out = Outcome::new(json!(null)).table(t);
    out.assert("class function", chi.is_class_function(&g));
    if decompose {
        if which != Which::Big {
            return Err(CliError::Usage("--verify-decomposition needs --which big".into()));
        }
        let r = with_field!(ctx.field, |f| verify_graded_module_structure(f, &m, &g)?);
        let gr = m.ground();
        let mut o = Table::new("flat orbits", ["representative", "size", "stabilizer", "codim"]);
        for orb in &r.orbits {
            o.row([
                gr.show(&orb.representative.iter().copied().collect()),
                orb.size.to_string(),
                orb.stabilizer_order.to_string(),
                orb.codim.to_string(),
            ]);
        }
        out.tables.push(o);
        out.assert("induced sum equals the covector character", r.matches);
        out.assert("totals are fixed-covector counts", r.fixed_points_match);
        out.assert("identity row is the Hilbert series", r.identity_is_hilbert);
        out.assert("degree zero is trivial", r.degree_zero_trivial);
        results["decomposition"] = json!(r);
    }
    out.results = results;
    Ok((out, vec![rec, grec]))
}

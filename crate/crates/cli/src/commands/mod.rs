mod combinatorics;
mod equivariant;
mod harmonics;

pub use combinatorics::{basic, braid, check, circuits, enumerate, fixture, flats, nbc};
pub use equivariant::character;
pub use harmonics::{hilbert, loci, verify};

use covg_core::{Com, ElementSet, FieldChoice, GroundSet};
use serde_json::{json, Value};

use crate::report::{Outcome, Table, STREAM_THRESHOLD};

/// Runs `$body` with `$f` bound to the chosen field.
macro_rules! with_field {
    ($choice:expr, |$f:ident| $body:expr) => {
        match $choice {
            covg_core::FieldChoice::Rational => {
                let $f = covg_core::Rationals;
                $body
            }
            covg_core::FieldChoice::Prime(p) => {
                let $f = covg_core::PrimeField::new(p)?;
                $body
            }
        }
    };
}
pub(crate) use with_field;

pub struct Ctx {
    pub field: FieldChoice,
}

pub(crate) fn labels(g: &GroundSet, s: &ElementSet) -> Vec<String> {
    s.iter().map(|i| g.label(i).to_string()).collect()
}

/// The COM as `{ground, covectors, counts}`; long listings are moved to
/// the JSON-lines stream.
pub(crate) fn com_outcome(m: &Com, title: &str) -> Outcome {
    let covectors: Vec<String> = m.covectors().iter().map(|x| x.to_string()).collect();
    let topes = m.topes().len();
    let mut t = Table::new(
        format!("{title}: {} covectors, {topes} topes", m.len()),
        ["covector", "zero set"],
    );
    for x in m.covectors() {
        t.row([x.to_string(), m.ground().show(&x.zero_set())]);
    }
    let streamed = covectors.len() > STREAM_THRESHOLD;
    let mut results = json!({
        "ground": m.ground().labels(),
        "counts": { "covectors": m.len(), "topes": topes },
    });
    let mut out = if streamed {
        results["streamed"] = Value::Bool(true);
        let mut o = Outcome::new(results);
        o.stream = Some(covectors);
        o
    } else {
        results["covectors"] = json!(covectors);
        Outcome::new(results)
    };
    out.tables.push(t);
    out
}

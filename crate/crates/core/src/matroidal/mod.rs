//! Circuits, NBC sets, closures, basic sets and the counting lemmas.

mod basic;
mod circuits;
mod lemmas;
mod nbc;
mod order;

pub use basic::{basic_sets, closure, codim, is_basic, is_basic_for, FlatStructure};
pub use circuits::{circuits, circuits_capped, Circuit, DEFAULT_CIRCUIT_CAP};
pub use lemmas::{
    check_tope_contraction_count, check_two_values, check_two_values_exhaustive,
    proper_nonempty_subsets, TopeCountReport, TwoValuesReport, TwoValuesSummary,
};
pub use nbc::{broken_circuits, nbc_sets};
pub use order::TotalOrder;

use crate::com::{Com, ElementSet};
use crate::error::Result;

/// NBC sets of a COM under an order.
pub fn nbc_sets_of(m: &Com, ord: &TotalOrder) -> Result<Vec<ElementSet>> {
    let cs = circuits(m)?;
    Ok(nbc_sets(m.ground().len(), &cs, ord))
}

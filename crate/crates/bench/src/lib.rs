//! Inputs shared by the benchmarks.

use covg_core::realize::{braid_com, fixture};
use covg_core::Com;

/// The fixtures followed by braid COMs up to `max_n`, with names.
pub fn corpus(max_n: usize) -> Vec<(String, Com)> {
    let mut v: Vec<(String, Com)> = ["figure1", "figure1-rectangle"]
        .iter()
        .map(|n| (n.to_string(), fixture(n).expect("shipped fixture")))
        .collect();
    v.extend((1..=max_n).map(|n| (format!("braid{n}"), braid_com(n).expect("braid"))));
    v
}

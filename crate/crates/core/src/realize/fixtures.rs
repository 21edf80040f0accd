use indexmap::IndexMap;

use super::affine::{AffineForm, Arrangement};
use crate::com::Com;
use crate::error::{Error, Result};

const FIGURE1: &str = include_str!("../../fixtures/figure1.json");
const FIGURE1_RECTANGLE: &str = include_str!("../../fixtures/figure1-rectangle.json");

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: [&str; 2] = ["figure1", "figure1-rectangle"];

/// A shipped COM. `figure1` is four lines in the plane cut to an elliptical
/// region that line 4 misses; `figure1-rectangle` uses a rectangle whose
/// corner line 4 cuts off.
pub fn fixture(name: &str) -> Result<Com> {
    match name {
        "figure1" => Com::from_json(FIGURE1),
        "figure1-rectangle" => Com::from_json(FIGURE1_RECTANGLE),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

fn figure1_lines() -> IndexMap<String, AffineForm> {
    let mut forms = IndexMap::new();
    forms.insert("1".to_string(), AffineForm::from_ints(&[1, 0], 0));
    forms.insert("2".to_string(), AffineForm::from_ints(&[3, -2], 0));
    forms.insert("3".to_string(), AffineForm::from_ints(&[0, 1], 0));
    forms.insert("4".to_string(), AffineForm::from_ints(&[4, 3], 15));
    forms
}

/// `lo < x < hi` and `ylo < y < yhi` as strict forms.
fn open_box(lo: i64, hi: i64, ylo: i64, yhi: i64) -> Vec<AffineForm> {
    vec![
        AffineForm::from_ints(&[1, 0], -lo),
        AffineForm::from_ints(&[-1, 0], hi),
        AffineForm::from_ints(&[0, 1], -ylo),
        AffineForm::from_ints(&[0, -1], yhi),
    ]
}

/// The four fixture lines over a polyhedral region. `figure1-box` (the square
/// `|x|, |y| < 1`) has the same faces as the elliptical fixture;
/// `figure1-rectangle` is `(-3, 4) × (-2, 2)`.
pub fn fixture_arrangement(name: &str) -> Result<Arrangement> {
    let region = match name {
        "figure1-box" => open_box(-1, 1, -1, 1),
        "figure1-rectangle" => open_box(-3, 4, -2, 2),
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    Arrangement::new(2, figure1_lines(), region)
}

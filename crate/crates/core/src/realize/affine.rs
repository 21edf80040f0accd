use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `x ↦ coeffs · x + constant` on `Q^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineForm {
    pub coeffs: Vec<Rational>,
    #[serde(rename = "const")]
    pub constant: Rational,
}

impl AffineForm {
    pub fn new(coeffs: Vec<Rational>, constant: Rational) -> Self {
        AffineForm { coeffs, constant }
    }

    /// Integer coefficients, for tests and built-in arrangements.
    pub fn from_ints(coeffs: &[i64], constant: i64) -> Self {
        AffineForm {
            coeffs: coeffs.iter().map(|&c| Rational::from(c)).collect(),
            constant: Rational::from(constant),
        }
    }

    pub fn dimension(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                got: x.len(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(x)
            .fold(self.constant.clone(), |acc, (a, b)| &acc + &(a * b)))
    }

    pub fn negated(&self) -> Self {
        AffineForm {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            constant: -&self.constant,
        }
    }
}

/// Labeled affine hyperplanes together with an open polyhedral region
/// `{x : β(x) > 0 for every β in region}`; an empty region list means the
/// whole space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrangement {
    pub dimension: usize,
    pub forms: IndexMap<String, AffineForm>,
    #[serde(default)]
    pub region: Vec<AffineForm>,
}

impl Arrangement {
    pub fn new(
        dimension: usize,
        forms: IndexMap<String, AffineForm>,
        region: Vec<AffineForm>,
    ) -> Result<Self> {
        let a = Arrangement {
            dimension,
            forms,
            region,
        };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<()> {
        for f in self.forms.values().chain(self.region.iter()) {
            if f.dimension() != self.dimension {
                return Err(Error::DimensionMismatch {
                    expected: self.dimension,
                    got: f.dimension(),
                });
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let a: Arrangement = serde_json::from_str(s)?;
        a.validate()?;
        Ok(a)
    }

    /// Pretty JSON with a trailing newline; parsing the output and
    /// serializing again reproduces it byte for byte.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

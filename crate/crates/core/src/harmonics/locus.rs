use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::com::{Com, Sign, SignedVector};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// What the point labels name.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocusKind {
    /// Topes, coordinates `(i, +), (i, -)`.
    Small,
    /// Covectors, coordinates `(i, +), (i, -), (i, 0)`.
    Big,
    Permutation,
    #[default]
    Raw,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusPoint {
    pub label: String,
    pub coords: Vec<Rational>,
}

/// A finite set of distinct labeled points with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointLocus {
    pub variables: Arc<[String]>,
    pub points: Vec<LocusPoint>,
    #[serde(default)]
    pub kind: LocusKind,
}

impl PointLocus {
    pub fn new(variables: Arc<[String]>, points: Vec<LocusPoint>, kind: LocusKind) -> Result<Self> {
        let l = PointLocus {
            variables,
            points,
            kind,
        };
        l.validate()?;
        Ok(l)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for p in &self.points {
            if p.coords.len() != self.variables.len() {
                return Err(Error::LengthMismatch {
                    left: self.variables.len(),
                    right: p.coords.len(),
                });
            }
            if !seen.insert(&p.coords) {
                return Err(Error::DuplicatePoint(p.label.clone()));
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let l: PointLocus = serde_json::from_str(s)?;
        l.validate()?;
        Ok(l)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("locus serializes");
        s.push('\n');
        s
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.points.iter().map(|p| p.label.as_str())
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p.label == label)
    }
}

fn bit(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Variable names `y<label>+`, `y<label>-` per ground element.
pub fn small_variables(m: &Com) -> Arc<[String]> {
    m.ground()
        .labels()
        .iter()
        .flat_map(|l| [format!("y{l}+"), format!("y{l}-")])
        .collect()
}

/// Variable names `y<label>+`, `y<label>-`, `z<label>` per ground element.
pub fn big_variables(m: &Com) -> Arc<[String]> {
    m.ground()
        .labels()
        .iter()
        .flat_map(|l| [format!("y{l}+"), format!("y{l}-"), format!("z{l}")])
        .collect()
}

/// Index of `y_i^+` (or `y_i^-`) in the small ring.
pub fn small_var(i: usize, s: Sign) -> usize {
    match s {
        Sign::Plus => 2 * i,
        Sign::Minus => 2 * i + 1,
        Sign::Zero => panic!("small ring has no zero variable"),
    }
}

/// Index of `y_i^+`, `y_i^-` or `z_i` in the big ring.
pub fn big_var(i: usize, s: Sign) -> usize {
    match s {
        Sign::Plus => 3 * i,
        Sign::Minus => 3 * i + 1,
        Sign::Zero => 3 * i + 2,
    }
}

fn small_point(x: &SignedVector) -> Vec<Rational> {
    x.signs()
        .flat_map(|s| [bit(s == Sign::Plus), bit(s == Sign::Minus)])
        .collect()
}

fn big_point(x: &SignedVector) -> Vec<Rational> {
    x.signs()
        .flat_map(|s| [bit(s == Sign::Plus), bit(s == Sign::Minus), bit(s == Sign::Zero)])
        .collect()
}

/// One 0/1 point per tope; empty when `m` has coloops.
pub fn small_locus(m: &Com) -> PointLocus {
    let points = m
        .topes()
        .iter()
        .map(|x| LocusPoint {
            label: x.to_string(),
            coords: small_point(x),
        })
        .collect();
    PointLocus {
        variables: small_variables(m),
        points,
        kind: LocusKind::Small,
    }
}

/// One 0/1 point per covector.
pub fn big_locus(m: &Com) -> PointLocus {
    let points = m
        .covectors()
        .iter()
        .map(|x| LocusPoint {
            label: x.to_string(),
            coords: big_point(x),
        })
        .collect();
    PointLocus {
        variables: big_variables(m),
        points,
        kind: LocusKind::Big,
    }
}

use serde::Serialize;

use crate::com::{ElementSet, GroundSet};
use crate::error::{Error, Result};

/// A total order on ground-set indices, listed from smallest to largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TotalOrder {
    order: Vec<usize>,
    #[serde(skip)]
    rank: Vec<usize>,
}

impl TotalOrder {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let mut rank = vec![usize::MAX; order.len()];
        for (pos, &e) in order.iter().enumerate() {
            if e >= order.len() || rank[e] != usize::MAX {
                return Err(Error::InvalidChoice(format!("{order:?} is not a total order")));
            }
            rank[e] = pos;
        }
        Ok(TotalOrder { order, rank })
    }

    /// Ground-set order.
    pub fn natural(n: usize) -> Self {
        TotalOrder {
            order: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    /// Order given by labels, smallest first; must list every label once.
    pub fn from_labels<S: AsRef<str>>(ground: &GroundSet, labels: &[S]) -> Result<Self> {
        if labels.len() != ground.len() {
            return Err(Error::InvalidChoice(format!(
                "order lists {} labels for a ground set of {}",
                labels.len(),
                ground.len()
            )));
        }
        let order = labels
            .iter()
            .map(|l| ground.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(order)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, e: usize) -> usize {
        self.rank[e]
    }

    /// The smallest element of `s` under this order.
    pub fn min_of(&self, s: &ElementSet) -> Option<usize> {
        s.iter().min_by_key(|&e| self.rank[e])
    }

    pub fn labels(&self, ground: &GroundSet) -> Vec<String> {
        self.order.iter().map(|&e| ground.label(e).to_string()).collect()
    }
}

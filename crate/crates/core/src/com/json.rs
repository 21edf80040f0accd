use serde::{Deserialize, Serialize};

use super::{Com, GroundSet, SignedVector};
use crate::error::Result;

/// Wire form of a COM: labels in ground order and one sign string per
/// covector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComJson {
    pub ground: Vec<String>,
    pub covectors: Vec<String>,
}

impl From<&Com> for ComJson {
    fn from(m: &Com) -> Self {
        ComJson {
            ground: m.ground().labels().to_vec(),
            covectors: m.covectors().iter().map(|x| x.to_string()).collect(),
        }
    }
}

impl ComJson {
    /// Validating conversion, axioms included.
    pub fn into_com(self) -> Result<Com> {
        let ground = GroundSet::new(self.ground)?;
        let covectors = self
            .covectors
            .iter()
            .map(|s| s.parse::<SignedVector>())
            .collect::<Result<Vec<_>>>()?;
        Com::new(ground, covectors)
    }
}

impl Com {
    pub fn from_json(s: &str) -> Result<Com> {
        serde_json::from_str::<ComJson>(s)?.into_com()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&ComJson::from(self)).expect("serializable");
        s.push('\n');
        s
    }
}

impl Serialize for Com {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComJson::from(self).serialize(s)
    }
}

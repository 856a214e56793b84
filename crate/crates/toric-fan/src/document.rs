//! The fan interchange document: a small JSON schema listing the rays and
//! the maximal cones, either as ray indices or as inline vectors.
//!
//! ```json
//! {
//!   "name": "wedge",
//!   "ambient_dim": 2,
//!   "rays": [[0, 1], [2, 1], [-2, 1]],
//!   "maximal_cones": [[0, 1], [0, 2]]
//! }
//! ```

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::geometry::{Cone, LatticeVector};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDocument {
    #[serde(default)]
    pub name: Option<String>,
    pub ambient_dim: usize,
    #[serde(default)]
    pub rays: Vec<Vec<i64>>,
    pub maximal_cones: Vec<ConeSpec>,
}

/// A maximal cone given by indices into `rays`, or by inline vectors.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ConeSpec {
    Indices(Vec<usize>),
    Vectors(Vec<Vec<i64>>),
}

impl FanDocument {
    pub fn parse(text: &str) -> Result<FanDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Validates the document and builds the fan.
    pub fn to_fan(&self) -> Result<Fan> {
        for (i, ray) in self.rays.iter().enumerate() {
            if ray.len() != self.ambient_dim {
                return Err(Error::Parse(format!(
                    "rays[{i}] has {} coordinates, expected {}",
                    ray.len(),
                    self.ambient_dim
                )));
            }
        }
        let mut cones = Vec::new();
        for (c, spec) in self.maximal_cones.iter().enumerate() {
            let gens: Vec<LatticeVector> = match spec {
                ConeSpec::Indices(indices) => indices
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| {
                        self.rays.get(i).map(|r| LatticeVector::from_i64(r)).ok_or_else(|| {
                            Error::Parse(format!(
                                "maximal_cones[{c}][{k}] = {i} is out of range ({} rays)",
                                self.rays.len()
                            ))
                        })
                    })
                    .collect::<Result<_>>()?,
                ConeSpec::Vectors(vectors) => {
                    for (k, v) in vectors.iter().enumerate() {
                        if v.len() != self.ambient_dim {
                            return Err(Error::Parse(format!(
                                "maximal_cones[{c}][{k}] has {} coordinates, expected {}",
                                v.len(),
                                self.ambient_dim
                            )));
                        }
                    }
                    vectors.iter().map(|v| LatticeVector::from_i64(v)).collect()
                }
            };
            cones.push(Cone::from_generators(self.ambient_dim, &gens)?);
        }
        Fan::build(self.ambient_dim, cones)
    }
}

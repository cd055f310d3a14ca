//! JSON descriptors of modules with sparse action matrices.

use serde::{Deserialize, Serialize};

use super::{FinDimModule, Scope};
use crate::algebra::{parse_algebra, Parity};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, RatMatrix};
use crate::roots::Weight;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDescriptor {
    pub index: usize,
    pub label: String,
    /// `(row, col, value)` triplets.
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDescriptor {
    pub algebra: String,
    pub scope: Scope,
    pub dim: usize,
    pub parities: Vec<Parity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Weight>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zdegrees: Option<Vec<i32>>,
    pub actions: Vec<ActionDescriptor>,
}

impl FinDimModule {
    pub fn to_descriptor(&self) -> ModuleDescriptor {
        let actions = self
            .acting_indices()
            .into_iter()
            .map(|i| ActionDescriptor {
                index: i,
                label: self.algebra.label(i).to_string(),
                entries: self.actions[i]
                    .as_ref()
                    .expect("acting index")
                    .triplets()
                    .into_iter()
                    .map(|(r, c, x)| (r, c, format_rational(&x)))
                    .collect(),
            })
            .collect();
        ModuleDescriptor {
            algebra: self.algebra.spec().to_string(),
            scope: self.scope,
            dim: self.dim,
            parities: self.parities.clone(),
            weights: self.weights.clone(),
            zdegrees: self.zdegrees.clone(),
            actions,
        }
    }

    pub fn from_descriptor(d: &ModuleDescriptor) -> Result<FinDimModule> {
        let algebra = parse_algebra(&d.algebra)?;
        if d.parities.len() != d.dim {
            return Err(Error::DimensionMismatch(
                "parity list does not match dim".into(),
            ));
        }
        let mut actions: Vec<Option<RatMatrix>> = vec![None; algebra.dim()];
        for a in &d.actions {
            if a.index >= algebra.dim() || algebra.label(a.index) != a.label {
                return Err(Error::Parse(format!(
                    "action {} ({}) does not match {}",
                    a.index, a.label, d.algebra
                )));
            }
            let mut triplets = Vec::with_capacity(a.entries.len());
            for (r, c, x) in &a.entries {
                if *r >= d.dim || *c >= d.dim {
                    return Err(Error::DimensionMismatch(format!(
                        "entry ({r}, {c}) outside dimension {}",
                        d.dim
                    )));
                }
                triplets.push((*r, *c, parse_rational(x)?));
            }
            actions[a.index] = Some(RatMatrix::from_triplets(d.dim, d.dim, triplets));
        }
        FinDimModule::new(
            algebra,
            d.scope,
            actions,
            d.parities.clone(),
            d.weights.clone(),
            d.zdegrees.clone(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_descriptor()).expect("descriptor serializes")
    }

    pub fn from_json(text: &str) -> Result<FinDimModule> {
        let d: ModuleDescriptor =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        FinDimModule::from_descriptor(&d)
    }
}

use serde::{Deserialize, Serialize};

use super::{HemisphereFlag, Simplex, SymmetricComplex, TwoColouring};
use crate::error::{Error, Result};

/// On-disk complex: `{dim, vertices, nu, facets, flag?, kappa?}` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub dim: usize,
    pub vertices: Vec<String>,
    pub nu: Vec<usize>,
    pub facets: Vec<Simplex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag: Option<HemisphereFlag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<TwoColouring>,
}

impl ComplexFile {
    pub fn new(k: &SymmetricComplex, flag: Option<&HemisphereFlag>, kappa: Option<&TwoColouring>) -> Self {
        ComplexFile {
            dim: k.dim(),
            vertices: k.names().to_vec(),
            nu: k.involution().to_vec(),
            facets: k.facets().to_vec(),
            flag: flag.cloned(),
            kappa: kappa.cloned(),
        }
    }

    /// Rebuilds the complex with shape checks only; run the verifiers on the result.
    pub fn complex(&self) -> Result<SymmetricComplex> {
        let k = SymmetricComplex::from_raw(self.vertices.clone(), self.nu.clone(), self.facets.clone())?;
        if k.dim() != self.dim {
            return Err(Error::Parse(format!("file declares dim {} but facets have dim {}", self.dim, k.dim())));
        }
        Ok(k)
    }
}

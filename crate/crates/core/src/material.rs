//! Relative material tensors.

use crate::error::Result;
use crate::matrix::ComplexMatrix3;

/// Relative permittivity/permeability pair with cached inverses.
///
/// Both tensors are validated invertible at construction, so the inverses
/// are always available downstream.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialPair {
    eps_rel: ComplexMatrix3,
    mu_rel: ComplexMatrix3,
    eps_inv: ComplexMatrix3,
    mu_inv: ComplexMatrix3,
}

impl MaterialPair {
    pub fn new(eps_rel: ComplexMatrix3, mu_rel: ComplexMatrix3) -> Result<Self> {
        let eps_inv = eps_rel.invert()?;
        let mu_inv = mu_rel.invert()?;
        Ok(Self {
            eps_rel,
            mu_rel,
            eps_inv,
            mu_inv,
        })
    }

    /// Builds the pair from the inverse tensors instead.
    pub fn from_inverses(eps_inv: ComplexMatrix3, mu_inv: ComplexMatrix3) -> Result<Self> {
        let eps_rel = eps_inv.invert()?;
        let mu_rel = mu_inv.invert()?;
        Ok(Self {
            eps_rel,
            mu_rel,
            eps_inv,
            mu_inv,
        })
    }

    pub fn vacuum() -> Self {
        let id = ComplexMatrix3::identity();
        Self {
            eps_rel: id,
            mu_rel: id,
            eps_inv: id,
            mu_inv: id,
        }
    }

    pub fn eps(&self) -> &ComplexMatrix3 {
        &self.eps_rel
    }

    pub fn mu(&self) -> &ComplexMatrix3 {
        &self.mu_rel
    }

    pub fn eps_inv(&self) -> &ComplexMatrix3 {
        &self.eps_inv
    }

    pub fn mu_inv(&self) -> &ComplexMatrix3 {
        &self.mu_inv
    }
}

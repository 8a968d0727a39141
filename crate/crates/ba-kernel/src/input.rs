//! JSON-facing descriptions of algebras, posets, and ideals.
//!
//! Field names are part of the documented interface:
//! `{"atoms": n}` or `{"atoms": n, "labels": [...]}` for an algebra,
//! `{"nodes": [...], "leq": [[p,q], ...]}` for a poset (`[p,q]` means
//! `p ≤ q`; generators only, closure is taken), and
//! `{"generator": [atom indices]}` for a principal ideal. Atom and node
//! indices are 0-based.

use serde::Deserialize;

use crate::{Algebra, Ideal, Poset, Result};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraInput {
    pub atoms: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    /// Overrides the default atom cap when present.
    #[serde(default)]
    pub cap: Option<usize>,
}

impl AlgebraInput {
    pub fn build(&self) -> Result<Algebra> {
        let cap = self.cap.unwrap_or(crate::DEFAULT_ATOM_CAP);
        let mut algebra = Algebra::with_cap(self.atoms, cap)?;
        if let Some(labels) = &self.labels {
            algebra.set_labels(labels.clone())?;
        }
        Ok(algebra)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetInput {
    pub nodes: Vec<String>,
    #[serde(default)]
    pub leq: Vec<(usize, usize)>,
}

impl PosetInput {
    pub fn build(&self) -> Result<Poset> {
        Poset::new(self.nodes.clone(), &self.leq)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealInput {
    /// Atom indices of the principal generator.
    pub generator: Vec<usize>,
}

impl IdealInput {
    pub fn build(&self, algebra: &Algebra) -> Result<Ideal> {
        let generator = algebra.element_from_atoms(&self.generator)?;
        Ideal::principal(algebra, generator)
    }
}

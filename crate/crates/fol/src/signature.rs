//! Relation and function symbol declarations.

use std::collections::BTreeMap;

use crate::{FolError, Result};

/// A finite first-order signature: named relation and function symbols with
/// fixed arities.  Equality is built into the formula language and is not
/// declared here.  Names are unique across both kinds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    relations: BTreeMap<String, usize>,
    functions: BTreeMap<String, usize>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single binary relation `in`, the language of membership.
    pub fn membership() -> Self {
        let mut sig = Self::new();
        sig.add_relation("in", 2).expect("fresh signature");
        sig
    }

    pub fn add_relation(&mut self, name: &str, arity: usize) -> Result<()> {
        if self.declares(name) {
            return Err(FolError::DuplicateSymbol(name.to_string()));
        }
        self.relations.insert(name.to_string(), arity);
        Ok(())
    }

    pub fn add_function(&mut self, name: &str, arity: usize) -> Result<()> {
        if self.declares(name) {
            return Err(FolError::DuplicateSymbol(name.to_string()));
        }
        self.functions.insert(name.to_string(), arity);
        Ok(())
    }

    pub fn declares(&self, name: &str) -> bool {
        self.relations.contains_key(name) || self.functions.contains_key(name)
    }

    pub fn relation_arity(&self, name: &str) -> Option<usize> {
        self.relations.get(name).copied()
    }

    pub fn function_arity(&self, name: &str) -> Option<usize> {
        self.functions.get(name).copied()
    }

    pub fn relations(&self) -> impl Iterator<Item = (&str, usize)> {
        self.relations.iter().map(|(n, &a)| (n.as_str(), a))
    }

    pub fn functions(&self) -> impl Iterator<Item = (&str, usize)> {
        self.functions.iter().map(|(n, &a)| (n.as_str(), a))
    }
}

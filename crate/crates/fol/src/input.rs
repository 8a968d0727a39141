//! JSON form of a Boolean-valued structure.
//!
//! ```json
//! {
//!   "atoms": 2,
//!   "names": ["p", "q"],
//!   "eq": [[0, 1, [0]]],
//!   "relations": { "R": { "arity": 1, "entries": [[0, [0]], [1, [1]]] } },
//!   "functions": { "f": { "arity": 1, "entries": [[0, 1, [0, 1]]] } },
//!   "relativized": [0]
//! }
//! ```
//!
//! The algebra is the `atoms`-atom powerset algebra.  A table entry is a
//! flat array: argument name indices first, then the value as a list of
//! atom indices.  Function entries lead with `y`, so `[0, 1, [0, 1]]` above
//! gives `y = f(s)` for `y` name 0, `s` name 1, value `{a0, a1}`.  Equality
//! starts from the identity table and entries overwrite both orientations;
//! relation and function tables start at constant zero.  The key sets of
//! `relations` and `functions` define the signature.  `relativized`, when
//! present, designates the `@Vcheck` sub-pool.

use std::collections::BTreeMap;

use ba_kernel::Algebra;
use serde::Deserialize;
use serde_json::Value;

use crate::signature::Signature;
use crate::structure::BValuedStructure;
use crate::{FolError, Result};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableInput {
    pub arity: usize,
    #[serde(default)]
    pub entries: Vec<Value>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureInput {
    pub atoms: usize,
    #[serde(default)]
    pub cap: Option<usize>,
    pub names: Vec<String>,
    #[serde(default)]
    pub eq: Vec<Value>,
    #[serde(default)]
    pub relations: BTreeMap<String, TableInput>,
    #[serde(default)]
    pub functions: BTreeMap<String, TableInput>,
    #[serde(default)]
    pub relativized: Option<Vec<usize>>,
}

fn as_index(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| FolError::BadStructure(format!("{what} must be a nonnegative integer")))
}

/// Splits a flat entry into `lead` argument indices and the trailing atom
/// list.
fn split_entry(entry: &Value, lead: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let arr = entry
        .as_array()
        .ok_or_else(|| FolError::BadStructure("table entry must be an array".into()))?;
    if arr.len() != lead + 1 {
        return Err(FolError::BadStructure(format!(
            "table entry needs {lead} index(es) plus an atom list, got {} item(s)",
            arr.len()
        )));
    }
    let args = arr[..lead]
        .iter()
        .map(|v| as_index(v, "argument"))
        .collect::<Result<Vec<_>>>()?;
    let atoms = arr[lead]
        .as_array()
        .ok_or_else(|| FolError::BadStructure("entry value must be an atom list".into()))?
        .iter()
        .map(|v| as_index(v, "atom"))
        .collect::<Result<Vec<_>>>()?;
    Ok((args, atoms))
}

impl StructureInput {
    /// Builds the signature implied by the table keys and the structure
    /// itself.
    pub fn build(&self) -> Result<(Signature, BValuedStructure)> {
        let algebra = match self.cap {
            Some(cap) => Algebra::with_cap(self.atoms, cap)?,
            None => Algebra::new(self.atoms)?,
        };
        let mut sig = Signature::new();
        for (name, t) in &self.relations {
            sig.add_relation(name, t.arity)?;
        }
        for (name, t) in &self.functions {
            sig.add_function(name, t.arity)?;
        }
        let names: Vec<&str> = self.names.iter().map(String::as_str).collect();
        let mut s = BValuedStructure::discrete(algebra.clone(), sig.clone(), &names)?;
        for entry in &self.eq {
            let (args, atoms) = split_entry(entry, 2)?;
            let value = algebra.element_from_atoms(&atoms)?;
            s.set_eq(args[0], args[1], value)?;
        }
        for (name, t) in &self.relations {
            for entry in &t.entries {
                let (args, atoms) = split_entry(entry, t.arity)?;
                let value = algebra.element_from_atoms(&atoms)?;
                s.set_relation(name, &args, value)?;
            }
        }
        for (name, t) in &self.functions {
            for entry in &t.entries {
                let (args, atoms) = split_entry(entry, t.arity + 1)?;
                let value = algebra.element_from_atoms(&atoms)?;
                s.set_function(name, args[0], &args[1..], value)?;
            }
        }
        if let Some(pool) = &self.relativized {
            s.set_relativized_pool(pool.clone())?;
        }
        Ok((sig, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
        "atoms": 2,
        "names": ["p", "q"],
        "eq": [[0, 1, [0]]],
        "relations": { "R": { "arity": 1, "entries": [[0, [0]], [1, [1]]] } },
        "functions": { "f": { "arity": 1, "entries": [[0, 0, [0, 1]], [1, 1, [0, 1]]] } }
    }"#;

    #[test]
    fn sample_builds() {
        let input: StructureInput = serde_json::from_str(SAMPLE).unwrap();
        let (sig, s) = input.build().unwrap();
        assert_eq!(sig.relation_arity("R"), Some(1));
        assert_eq!(sig.function_arity("f"), Some(1));
        let b = s.algebra().clone();
        assert_eq!(s.eq_value(1, 0).unwrap(), b.atom(0));
        assert_eq!(s.eq_value(0, 0).unwrap(), b.one());
        assert_eq!(s.relation_value("R", &[1]).unwrap(), b.atom(1));
        assert_eq!(s.function_value("f", 0, &[0]).unwrap(), b.one());
        assert_eq!(s.function_value("f", 1, &[0]).unwrap(), b.zero());
        assert!(s.relativized_pool().is_none());
    }

    #[test]
    fn unknown_fields_rejected() {
        let bad = r#"{ "atoms": 1, "names": [], "extra": 3 }"#;
        assert!(serde_json::from_str::<StructureInput>(bad).is_err());
    }

    #[test]
    fn malformed_entries_rejected() {
        let short = r#"{ "atoms": 1, "names": ["p"], "eq": [[0, [0]]] }"#;
        let input: StructureInput = serde_json::from_str(short).unwrap();
        assert!(matches!(input.build(), Err(FolError::BadStructure(_))));

        let no_list = r#"{ "atoms": 1, "names": ["p"], "eq": [[0, 0, 1]] }"#;
        let input: StructureInput = serde_json::from_str(no_list).unwrap();
        assert!(matches!(input.build(), Err(FolError::BadStructure(_))));
    }

    #[test]
    fn relativized_pool_round_trips() {
        let src = r#"{ "atoms": 1, "names": ["p", "q"], "relativized": [1] }"#;
        let input: StructureInput = serde_json::from_str(src).unwrap();
        let (_, s) = input.build().unwrap();
        assert_eq!(s.relativized_pool(), Some(&[1][..]));
    }
}

//! JSON round trips for hereditarily finite sets and names.
//!
//! A hereditarily finite set is a nested array: `[]` is empty,
//! `[[], [[]]]` is `{0, {0}}`.  A name is an array of entries
//! `[subname, [atom indices]]`, mirroring the pair structure.

use ba_kernel::Algebra;
use serde_json::{json, Value};

use crate::hf::HFSet;
use crate::name::Name;
use crate::{NamesError, Result};

pub fn hf_to_json(h: &HFSet) -> Value {
    Value::Array(h.elements().iter().map(hf_to_json).collect())
}

pub fn hf_from_json(v: &Value) -> Result<HFSet> {
    let arr = v
        .as_array()
        .ok_or_else(|| NamesError::BadInput(format!("expected array, got {v}")))?;
    let elements = arr.iter().map(hf_from_json).collect::<Result<Vec<_>>>()?;
    Ok(HFSet::new(elements))
}

pub fn name_to_json(n: &Name) -> Value {
    Value::Array(
        n.entries()
            .iter()
            .map(|(sub, b)| json!([name_to_json(sub), b.atom_indices()]))
            .collect(),
    )
}

pub fn name_from_json(algebra: &Algebra, v: &Value) -> Result<Name> {
    let arr = v
        .as_array()
        .ok_or_else(|| NamesError::BadInput(format!("expected array of entries, got {v}")))?;
    let mut entries = Vec::with_capacity(arr.len());
    for entry in arr {
        let pair = entry
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| NamesError::BadInput(format!("entry must be [subname, atoms]: {entry}")))?;
        let sub = name_from_json(algebra, &pair[0])?;
        let atoms = pair[1]
            .as_array()
            .ok_or_else(|| NamesError::BadInput(format!("atoms must be an array: {}", pair[1])))?
            .iter()
            .map(|a| {
                a.as_u64()
                    .map(|n| n as usize)
                    .ok_or_else(|| NamesError::BadInput(format!("atom index must be a number: {a}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let b = algebra
            .element_from_atoms(&atoms)
            .map_err(NamesError::Kernel)?;
        entries.push((sub, b));
    }
    Name::new(algebra, entries)
}

//! JSON round trips for ultimately periodic sets and eventually affine
//! functions.

use serde_json::{json, Value};

use crate::func::EAFunction;
use crate::upset::UPSet;
use crate::{OmegaError, Result};

pub fn upset_to_json(s: &UPSet) -> Value {
    json!({
        "threshold": s.threshold(),
        "period": s.period(),
        "pattern": s.pattern().iter().collect::<Vec<_>>(),
        "prefix": s.prefix().iter().collect::<Vec<_>>(),
    })
}

fn u64_field(v: &Value, key: &str) -> Result<u64> {
    v.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| OmegaError::BadInput(format!("missing or non-natural `{key}`")))
}

fn u64_list(v: &Value, key: &str) -> Result<Vec<u64>> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| OmegaError::BadInput(format!("missing array `{key}`")))?
        .iter()
        .map(|x| {
            x.as_u64()
                .ok_or_else(|| OmegaError::BadInput(format!("non-natural entry in `{key}`")))
        })
        .collect()
}

pub fn upset_from_json(v: &Value) -> Result<UPSet> {
    Ok(UPSet::new(
        u64_field(v, "threshold")?,
        u64_field(v, "period")?,
        &u64_list(v, "pattern")?,
        &u64_list(v, "prefix")?,
    ))
}

pub fn eafunction_to_json(f: &EAFunction) -> Value {
    json!({
        "threshold": f.threshold(),
        "slope": f.slope(),
        "intercept": f.intercept(),
        "exceptions": f.exceptions(),
    })
}

pub fn eafunction_from_json(v: &Value) -> Result<EAFunction> {
    let intercept = v
        .get("intercept")
        .and_then(Value::as_i64)
        .ok_or_else(|| OmegaError::BadInput("missing or non-integer `intercept`".into()))?;
    EAFunction::new(
        u64_field(v, "threshold")?,
        u64_field(v, "slope")?,
        intercept,
        &u64_list(v, "exceptions")?,
    )
}

//! JSON scenario descriptions: a carrier (algebra, poset, or explicit
//! structure tables), an ultrafilter, an antichain family, a pool rank, a
//! formula list, and a requested-check list, under a versioned schema tag.
//!
//! Schema `ultra-scenario/1`:
//! ```json
//! {
//!   "schema": "ultra-scenario/1",
//!   "algebra": {"atoms": 3},
//!   "ultrafilter": {"kind": "principal", "atom": 0},
//!   "pool_rank": 1,
//!   "antichains": [[[0], [1], [2]], [[0, 1], [2]]],
//!   "formulas": ["exists y. y in x"],
//!   "checks": ["los", "triviality"]
//! }
//! ```
//! Exactly one of `algebra`, `poset`, or `structure` supplies the carrier.
//! A poset is `{"nodes": [..], "leq": [[p, q], ..]}` and contributes its
//! regular-open completion as the algebra.  A structure is explicit atomic
//! tables (see the `fol` input format); formulas then parse against its own
//! signature instead of the name-pool one.  Antichains are lists of
//! elements, each element a list of atom indices.  Ultrafilter kinds:
//! `principal` (with `atom`), `explicit` (with `members`, each a list of
//! atom indices), `symbolic` (no parameter).  `ultrafilter` may be omitted
//! only for structure scenarios.

use ba_kernel::{Algebra, AlgebraInput, Antichain, Poset};
use fol::{BValuedStructure, Formula, Signature, StructureInput};
use names::{Filter, NamePool};
use serde::Deserialize;

use crate::{Result, Ultrafilter, UltraError};

pub const SCENARIO_SCHEMA: &str = "ultra-scenario/1";

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioInput {
    schema: String,
    #[serde(default)]
    algebra: Option<AlgebraInput>,
    #[serde(default)]
    poset: Option<PosetInput>,
    #[serde(default)]
    structure: Option<StructureInput>,
    #[serde(default)]
    ultrafilter: Option<UltrafilterInput>,
    #[serde(default = "default_pool_rank")]
    pool_rank: usize,
    #[serde(default)]
    antichains: Vec<Vec<Vec<usize>>>,
    #[serde(default)]
    formulas: Vec<String>,
    #[serde(default)]
    checks: Vec<String>,
}

fn default_pool_rank() -> usize {
    1
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetInput {
    nodes: Vec<String>,
    #[serde(default)]
    leq: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum UltrafilterInput {
    Principal { atom: usize },
    Explicit { members: Vec<Vec<usize>> },
    Symbolic,
}

/// A fully built scenario, ready for the quotient and limit machinery.
/// `algebra` is always the working algebra: the declared one, the
/// regular-open completion of `poset`, or the one under `structure`.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub algebra: Algebra,
    pub poset: Option<Poset>,
    pub structure: Option<(Signature, BValuedStructure)>,
    pub ultra: Option<Ultrafilter>,
    pub pool_rank: usize,
    pub antichains: Vec<Antichain>,
    pub formulas: Vec<Formula>,
    pub formula_texts: Vec<String>,
    pub checks: Vec<String>,
}

pub fn scenario_from_json(text: &str) -> Result<Scenario> {
    let input: ScenarioInput = serde_json::from_str(text)
        .map_err(|e| UltraError::BadInput(format!("scenario does not parse: {e}")))?;
    if input.schema != SCENARIO_SCHEMA {
        return Err(UltraError::BadInput(format!(
            "unknown schema `{}`; this build reads `{SCENARIO_SCHEMA}`",
            input.schema
        )));
    }
    let carriers = [
        input.algebra.is_some(),
        input.poset.is_some(),
        input.structure.is_some(),
    ]
    .iter()
    .filter(|&&p| p)
    .count();
    if carriers != 1 {
        return Err(UltraError::BadInput(format!(
            "need exactly one of `algebra`, `poset`, `structure`, got {carriers}"
        )));
    }

    let mut poset = None;
    let mut structure = None;
    let algebra = if let Some(spec) = &input.algebra {
        spec.build()?
    } else if let Some(spec) = &input.poset {
        let p = Poset::new(spec.nodes.clone(), &spec.leq)?;
        let a = p.ro_completion()?.algebra().clone();
        poset = Some(p);
        a
    } else {
        let built = input
            .structure
            .as_ref()
            .expect("carrier count checked")
            .build()?;
        let a = built.1.algebra().clone();
        structure = Some(built);
        a
    };

    let ultra = match &input.ultrafilter {
        Some(UltrafilterInput::Principal { atom }) => {
            Some(Ultrafilter::principal(&algebra, *atom)?)
        }
        Some(UltrafilterInput::Explicit { members }) => {
            let set = members
                .iter()
                .map(|atoms| algebra.element_from_atoms(atoms))
                .collect::<ba_kernel::Result<_>>()?;
            Some(Ultrafilter::explicit(Filter::from_members(&algebra, set)?)?)
        }
        Some(UltrafilterInput::Symbolic) => Some(Ultrafilter::symbolic()),
        None => {
            if structure.is_none() {
                return Err(UltraError::BadInput(
                    "algebra and poset scenarios need an `ultrafilter`".into(),
                ));
            }
            None
        }
    };

    let antichains = input
        .antichains
        .iter()
        .map(|members| {
            let elements = members
                .iter()
                .map(|atoms| algebra.element_from_atoms(atoms))
                .collect::<ba_kernel::Result<Vec<_>>>()?;
            Ok(Antichain::new(&algebra, elements)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let pool_signature = NamePool::signature();
    let signature = match &structure {
        Some((sig, _)) => sig,
        None => &pool_signature,
    };
    let formulas = input
        .formulas
        .iter()
        .map(|text| Ok(fol::parse(text, signature)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Scenario {
        algebra,
        poset,
        structure,
        ultra,
        pool_rank: input.pool_rank,
        antichains,
        formulas,
        formula_texts: input.formulas,
        checks: input.checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_of_a_principal_scenario() {
        let text = r#"{
            "schema": "ultra-scenario/1",
            "algebra": {"atoms": 3},
            "ultrafilter": {"kind": "principal", "atom": 1},
            "pool_rank": 1,
            "antichains": [[[0], [1], [2]], [[0, 1], [2]]],
            "formulas": ["exists y. y in x"],
            "checks": ["los"]
        }"#;
        let s = scenario_from_json(text).unwrap();
        assert_eq!(s.algebra.atom_count(), 3);
        assert_eq!(s.ultra.unwrap().atom().unwrap(), 1);
        assert_eq!(s.antichains.len(), 2);
        assert_eq!(s.formulas.len(), 1);
        assert_eq!(s.checks, vec!["los".to_string()]);
    }

    #[test]
    fn explicit_and_symbolic_kinds_build() {
        let explicit = r#"{
            "schema": "ultra-scenario/1",
            "algebra": {"atoms": 2},
            "ultrafilter": {"kind": "explicit", "members": [[0], [0, 1]]}
        }"#;
        let s = scenario_from_json(explicit).unwrap();
        assert_eq!(s.ultra.unwrap().atom().unwrap(), 0);

        let symbolic = r#"{
            "schema": "ultra-scenario/1",
            "algebra": {"atoms": 2},
            "ultrafilter": {"kind": "symbolic"}
        }"#;
        assert!(scenario_from_json(symbolic)
            .unwrap()
            .ultra
            .unwrap()
            .is_symbolic());
    }

    #[test]
    fn poset_scenarios_complete_to_their_regular_opens() {
        // Three-node fork: root below two incompatible leaves.
        let text = r#"{
            "schema": "ultra-scenario/1",
            "poset": {"nodes": ["r", "p", "q"], "leq": [[1, 0], [2, 0]]},
            "ultrafilter": {"kind": "principal", "atom": 0}
        }"#;
        let s = scenario_from_json(text).unwrap();
        assert_eq!(s.algebra.atom_count(), 2);
        assert_eq!(s.poset.as_ref().unwrap().len(), 3);
    }

    #[test]
    fn structure_scenarios_parse_formulas_against_their_own_signature() {
        let text = r#"{
            "schema": "ultra-scenario/1",
            "structure": {
                "atoms": 2,
                "names": ["p", "q"],
                "relations": {"R": {"arity": 1, "entries": [[0, [0]]]}}
            },
            "formulas": ["R(p) | R(q)"]
        }"#;
        let s = scenario_from_json(text).unwrap();
        assert!(s.ultra.is_none());
        assert_eq!(s.formulas.len(), 1);
        assert_eq!(s.algebra.atom_count(), 2);
    }

    #[test]
    fn wrong_schema_and_bad_shapes_are_rejected() {
        assert!(scenario_from_json("{}").is_err());
        let wrong = r#"{
            "schema": "ultra-scenario/2",
            "algebra": {"atoms": 2},
            "ultrafilter": {"kind": "symbolic"}
        }"#;
        assert!(scenario_from_json(wrong).is_err());
        let overlap = r#"{
            "schema": "ultra-scenario/1",
            "algebra": {"atoms": 2},
            "ultrafilter": {"kind": "principal", "atom": 0},
            "antichains": [[[0, 1], [1]]]
        }"#;
        assert!(scenario_from_json(overlap).is_err());
        let not_ultra = r#"{
            "schema": "ultra-scenario/1",
            "algebra": {"atoms": 2},
            "ultrafilter": {"kind": "explicit", "members": [[0, 1]]}
        }"#;
        assert!(scenario_from_json(not_ultra).is_err());
        let two_carriers = r#"{
            "schema": "ultra-scenario/1",
            "algebra": {"atoms": 2},
            "poset": {"nodes": ["r"], "leq": []},
            "ultrafilter": {"kind": "principal", "atom": 0}
        }"#;
        assert!(scenario_from_json(two_carriers).is_err());
        let missing_ultra = r#"{
            "schema": "ultra-scenario/1",
            "algebra": {"atoms": 2}
        }"#;
        assert!(scenario_from_json(missing_ultra).is_err());
    }
}

//! Spanning functions: hereditarily finite values spread over a maximal
//! antichain, with reduction along refinements, ultrafilter-relative
//! equivalence, and satisfaction by the large-join criterion.

use std::collections::BTreeMap;

use ba_kernel::{common_refinement, Algebra, Antichain, Element};
use fol::{ClassicalModel, Formula};
use names::HFSet;

use crate::{Result, Ultrafilter, UltraError};

/// A function from a maximal antichain into the ground universe.  Values
/// ride along positions of `domain.elements()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningFunction {
    domain: Antichain,
    values: Vec<HFSet>,
}

impl SpanningFunction {
    pub fn new(domain: Antichain, values: Vec<HFSet>) -> Result<SpanningFunction> {
        if !domain.is_maximal() {
            return Err(UltraError::BadDomain(
                "domain join falls short of one".to_string(),
            ));
        }
        if domain.len() != values.len() {
            return Err(UltraError::BadDomain(format!(
                "{} domain element(s) but {} value(s)",
                domain.len(),
                values.len()
            )));
        }
        Ok(SpanningFunction { domain, values })
    }

    /// Constant function on the trivial antichain.
    pub fn constant(algebra: &Algebra, value: HFSet) -> SpanningFunction {
        SpanningFunction {
            domain: Antichain::unit(algebra),
            values: vec![value],
        }
    }

    /// One value per atom, in atom order.
    pub fn on_atoms(algebra: &Algebra, values: Vec<HFSet>) -> Result<SpanningFunction> {
        SpanningFunction::new(Antichain::atoms(algebra), values)
    }

    /// Builds from a presentation on a dense set of positions: the listed
    /// elements must cover every atom, and overlapping positions must carry
    /// equal values.  The result lives on the atom antichain.
    pub fn from_dense(algebra: &Algebra, pairs: &[(Element, HFSet)]) -> Result<SpanningFunction> {
        let mut values: Vec<Option<HFSet>> = vec![None; algebra.atom_count()];
        for (e, v) in pairs {
            if e.is_zero() {
                return Err(UltraError::BadDomain(
                    "dense presentation includes zero".to_string(),
                ));
            }
            for i in e.atom_indices() {
                match &values[i] {
                    None => values[i] = Some(v.clone()),
                    Some(old) if old == v => {}
                    Some(old) => {
                        return Err(UltraError::BadDomain(format!(
                            "conflicting values {old:?} and {v:?} at {}",
                            algebra.label(i)
                        )));
                    }
                }
            }
        }
        let values: Vec<HFSet> = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    UltraError::BadDomain(format!("no value covers {}", algebra.label(i)))
                })
            })
            .collect::<Result<_>>()?;
        SpanningFunction::on_atoms(algebra, values)
    }

    pub fn domain(&self) -> &Antichain {
        &self.domain
    }

    pub fn values(&self) -> &[HFSet] {
        &self.values
    }

    /// Value at an exact domain member.
    pub fn value_at(&self, a: Element) -> Option<&HFSet> {
        self.domain
            .elements()
            .iter()
            .position(|&e| e == a)
            .map(|i| &self.values[i])
    }

    /// Value at the unique domain member above a nonzero element.
    pub fn value_above(&self, c: Element) -> Result<&HFSet> {
        self.domain
            .member_above(c)
            .and_then(|a| self.value_at(a))
            .ok_or_else(|| {
                UltraError::BadDomain("no domain member above the given element".to_string())
            })
    }
}

/// Copies values along a refinement: each element of the finer antichain
/// takes the value of the unique domain member above it.
pub fn sf_reduce(f: &SpanningFunction, finer: &Antichain) -> Result<SpanningFunction> {
    if !finer.refines(f.domain()) {
        return Err(UltraError::BadDomain(
            "target antichain does not refine the domain".to_string(),
        ));
    }
    let values = finer
        .elements()
        .iter()
        .map(|&c| f.value_above(c).cloned())
        .collect::<Result<Vec<_>>>()?;
    SpanningFunction::new(finer.clone(), values)
}

/// Equivalence through an ultrafilter: reduce both to the common refinement
/// and ask whether the join of agreement positions is large.
pub fn sf_equiv(f: &SpanningFunction, g: &SpanningFunction, u: &Ultrafilter) -> Result<bool> {
    let b = u.algebra()?;
    let (refinement, _, _) = common_refinement(f.domain(), g.domain())?;
    let fr = sf_reduce(f, &refinement)?;
    let gr = sf_reduce(g, &refinement)?;
    let mut agree = b.zero();
    for (i, &c) in refinement.elements().iter().enumerate() {
        if fr.values()[i] == gr.values()[i] {
            agree = b.join(agree, c)?;
        }
    }
    u.contains(agree)
}

/// Satisfaction by the large-join criterion: positions where the formula
/// holds classically of the pointwise values, with quantifiers ranging
/// over the ground universe up to `universe_rank`.
pub fn sf_los(
    functions: &BTreeMap<String, SpanningFunction>,
    phi: &Formula,
    u: &Ultrafilter,
    universe_rank: usize,
) -> Result<bool> {
    let b = u.algebra()?;
    let universe = HFSet::all_up_to_rank(universe_rank);
    let model = ground_model(&universe)?;
    let mut refinement = Antichain::unit(b);
    for f in functions.values() {
        let (next, _, _) = common_refinement(&refinement, f.domain())?;
        refinement = next;
    }
    let mut satisfied = b.zero();
    for &c in refinement.elements() {
        let mut assignment = BTreeMap::new();
        for (var, f) in functions {
            let value = f.value_above(c)?;
            let index = universe.iter().position(|h| h == value).ok_or_else(|| {
                UltraError::OutsideFragment {
                    rank: value.rank(),
                    cap: universe_rank,
                }
            })?;
            assignment.insert(var.clone(), index);
        }
        if model.eval(phi, &assignment)? {
            satisfied = b.join(satisfied, c)?;
        }
    }
    u.contains(satisfied)
}

/// The ground universe as a two-valued structure: real membership between
/// the listed sets, with the fragment predicate true everywhere.
pub fn ground_model(sets: &[HFSet]) -> Result<ClassicalModel> {
    let mut m = ClassicalModel::new(sets.len());
    let mut in_tuples: Vec<Vec<usize>> = Vec::new();
    let mut inv_tuples: Vec<Vec<usize>> = Vec::new();
    for (i, x) in sets.iter().enumerate() {
        inv_tuples.push(vec![i]);
        for (j, y) in sets.iter().enumerate() {
            if y.contains(x) {
                in_tuples.push(vec![i, j]);
            }
        }
    }
    let in_refs: Vec<&[usize]> = in_tuples.iter().map(Vec::as_slice).collect();
    let inv_refs: Vec<&[usize]> = inv_tuples.iter().map(Vec::as_slice).collect();
    m.set_relation("in", 2, &in_refs)?;
    m.set_relation("inV", 1, &inv_refs)?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate_ultrafilters;
    use ba_kernel::Algebra;

    fn hf(n: usize) -> HFSet {
        HFSet::von_neumann(n)
    }

    #[test]
    fn reduction_to_own_domain_is_identity() {
        let b = Algebra::new(3).unwrap();
        let f = SpanningFunction::on_atoms(&b, vec![hf(0), hf(1), hf(2)]).unwrap();
        let same = sf_reduce(&f, &f.domain().clone()).unwrap();
        assert_eq!(same, f);
    }

    #[test]
    fn constants_on_different_domains_are_equivalent_everywhere() {
        let b = Algebra::new(4).unwrap();
        let f = SpanningFunction::constant(&b, hf(1));
        let g = SpanningFunction::on_atoms(&b, vec![hf(1); 4]).unwrap();
        for u in enumerate_ultrafilters(&b) {
            assert!(sf_equiv(&f, &g, &u).unwrap());
        }
    }

    #[test]
    fn agreement_on_a_large_set_only_is_filter_relative() {
        let b = Algebra::new(4).unwrap();
        let f = SpanningFunction::on_atoms(&b, vec![hf(0), hf(0), hf(1), hf(2)]).unwrap();
        let g = SpanningFunction::on_atoms(&b, vec![hf(0), hf(0), hf(2), hf(1)]).unwrap();
        let all = enumerate_ultrafilters(&b);
        assert!(sf_equiv(&f, &g, &all[0]).unwrap());
        assert!(sf_equiv(&f, &g, &all[1]).unwrap());
        assert!(!sf_equiv(&f, &g, &all[2]).unwrap());
        assert!(!sf_equiv(&f, &g, &all[3]).unwrap());
    }

    #[test]
    fn dense_presentation_reduces_to_atoms() {
        let b = Algebra::new(3).unwrap();
        let a01 = b.element_from_atoms(&[0, 1]).unwrap();
        let a12 = b.element_from_atoms(&[1, 2]).unwrap();
        // Positions overlap at atom 1 with the same value, so the
        // presentation is consistent.
        let f = SpanningFunction::from_dense(&b, &[(a01, hf(0)), (a12, hf(0))]).unwrap();
        assert_eq!(f.values(), &[hf(0), hf(0), hf(0)]);
        let clash = SpanningFunction::from_dense(&b, &[(a01, hf(0)), (a12, hf(1))]);
        assert!(clash.is_err());
        let gap = SpanningFunction::from_dense(&b, &[(a01, hf(0))]);
        assert!(gap.is_err());
    }

    #[test]
    fn satisfaction_follows_the_selected_position() {
        let b = Algebra::new(2).unwrap();
        let mut functions = BTreeMap::new();
        functions.insert(
            "x".to_string(),
            SpanningFunction::on_atoms(&b, vec![HFSet::empty(), hf(1)]).unwrap(),
        );
        let phi = fol::parse("exists y. y in x", &names::NamePool::signature()).unwrap();
        let all = enumerate_ultrafilters(&b);
        assert!(!sf_los(&functions, &phi, &all[0], 2).unwrap());
        assert!(sf_los(&functions, &phi, &all[1], 2).unwrap());
    }
}

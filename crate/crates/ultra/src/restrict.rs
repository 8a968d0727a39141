//! Restriction of an ultrafilter to a complete subalgebra presented by a
//! partition: the intersection ultrafilter, the factor map between the two
//! quotients, and the agreement sweeps that make "factor" checkable.

use std::collections::{BTreeMap, BTreeSet};

use ba_kernel::{Algebra, Antichain, Element, Partition};
use fol::{boolean_value, Formula};
use names::{generic_name, val, HFSet, Name, NamePool};

use crate::presentations::mixing_pool;
use crate::quotient::quotient_model;
use crate::{QuotientModel, Result, Ultrafilter, UltraError};

/// The restriction data: the block algebra, the intersected ultrafilter,
/// the class-level factor map, and the verification flags.
#[derive(Debug, Clone)]
pub struct SubalgebraRestriction {
    pub sub_algebra: Algebra,
    pub u0: Ultrafilter,
    pub sub_quotient: QuotientModel,
    pub big_quotient: QuotientModel,
    /// Sub-quotient class to big-quotient class.
    pub k: Vec<usize>,
    pub u0_is_intersection: bool,
    pub map_well_defined: bool,
    pub injective: bool,
    pub membership_preserved: bool,
    pub embedding_commutes: bool,
    pub elementary_on_samples: bool,
    pub values_agree: bool,
    pub generic_restricts: bool,
    pub formulas_checked: usize,
}

impl SubalgebraRestriction {
    pub fn ok(&self) -> bool {
        self.u0_is_intersection
            && self.map_well_defined
            && self.injective
            && self.membership_preserved
            && self.embedding_commutes
            && self.elementary_on_samples
            && self.values_agree
            && self.generic_restricts
    }
}

/// Join of the partition blocks a subalgebra element selects.
fn embed(partition: &Partition, algebra: &Algebra, b: Element) -> Result<Element> {
    Ok(algebra.big_join(b.atom_indices().into_iter().map(|i| partition.blocks()[i]))?)
}

/// Rebuilds a block-algebra name over the big algebra, sending every value
/// through the block embedding.
fn transport(
    name: &Name,
    partition: &Partition,
    big: &Algebra,
) -> Result<Name> {
    let entries = name
        .entries()
        .iter()
        .map(|(sub, v)| {
            Ok((
                transport(sub, partition, big)?,
                embed(partition, big, *v)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Name::new(big, entries)?)
}

/// Reads an element back out of its hereditarily finite encoding: members
/// must be von Neumann numerals naming atom indices.
fn decode_element(algebra: &Algebra, h: &HFSet) -> Result<Element> {
    let mut indices = Vec::new();
    for m in h.elements() {
        let n = m.rank();
        if *m != HFSet::von_neumann(n) {
            return Err(UltraError::BadInput(
                "encoded element contains a non-numeral".to_string(),
            ));
        }
        indices.push(n);
    }
    Ok(algebra.element_from_atoms(&indices)?)
}

/// The interpreted generic filter: decode every member of the generic
/// name's value under the given ultrafilter.
fn generic_members(algebra: &Algebra, u: &Ultrafilter) -> Result<BTreeSet<Element>> {
    let filter = u.to_filter()?;
    let g = val(&generic_name(algebra), &filter);
    g.elements()
        .iter()
        .map(|h| decode_element(algebra, h))
        .collect()
}

pub fn restrict_to_subalgebra(
    big: &Algebra,
    u: &Ultrafilter,
    partition: &Partition,
    fragment_rank: usize,
    formulas: &[Formula],
) -> Result<SubalgebraRestriction> {
    let labels: Vec<String> = partition.blocks().iter().map(|&b| big.show(b)).collect();
    let sub = Algebra::labeled(labels)?;

    // The intersection ultrafilter, found by block sweep and then verified
    // against the definition element by element.
    let mut block_hits = Vec::new();
    for (i, &block) in partition.blocks().iter().enumerate() {
        if u.contains(block)? {
            block_hits.push(i);
        }
    }
    let atom = match block_hits.as_slice() {
        [one] => *one,
        _ => {
            return Err(UltraError::NotUltra(format!(
                "{} partition blocks are large; exactly one must be",
                block_hits.len()
            )));
        }
    };
    let u0 = Ultrafilter::principal(&sub, atom)?;
    let mut u0_is_intersection = true;
    for b in sub.elements() {
        if u0.contains(b)? != u.contains(embed(partition, big, b)?)? {
            u0_is_intersection = false;
        }
    }

    let sub_pool = mixing_pool(&sub, fragment_rank, &[Antichain::atoms(&sub)])?;
    let transported: Vec<Name> = sub_pool
        .names()
        .iter()
        .map(|n| transport(n, partition, big))
        .collect::<Result<_>>()?;
    let big_pool = NamePool::new(big, &transported, fragment_rank)?;

    let sub_quotient = quotient_model(&sub_pool, &u0)?;
    let big_quotient = quotient_model(&big_pool, u)?;

    let transported_class = |i: usize| -> Result<usize> {
        big_quotient.class_of_name(&transported[i]).ok_or_else(|| {
            UltraError::BadInput("transported name missing from the big pool".to_string())
        })
    };

    let mut k = vec![usize::MAX; sub_quotient.class_count()];
    for c in 0..sub_quotient.class_count() {
        k[c] = transported_class(sub_quotient.rep_index(c))?;
    }
    let mut map_well_defined = true;
    for i in 0..sub_pool.len() {
        if transported_class(i)? != k[sub_quotient.class_of_index(i)] {
            map_well_defined = false;
        }
    }
    let mut injective = true;
    for c1 in 0..k.len() {
        for c2 in 0..c1 {
            if k[c1] == k[c2] {
                injective = false;
            }
        }
    }
    let mut membership_preserved = true;
    for c1 in 0..k.len() {
        for c2 in 0..k.len() {
            if sub_quotient.member(c1, c2) != big_quotient.member(k[c1], k[c2]) {
                membership_preserved = false;
            }
        }
    }
    let mut embedding_commutes = true;
    for x in HFSet::all_up_to_rank(fragment_rank) {
        if k[sub_quotient.j(&x)?] != big_quotient.j(&x)? {
            embedding_commutes = false;
        }
    }

    // Elementarity samples: truth at classes in the small quotient versus
    // truth at the mapped classes in the big quotient.
    let sub_classical = sub_quotient.classical_view()?;
    let big_classical = big_quotient.classical_view()?;
    let mut elementary_on_samples = true;
    let mut values_agree = true;
    for phi in formulas {
        let free: Vec<String> = phi.free_vars().into_iter().collect();
        for indices in index_tuples(sub_pool.len(), free.len()) {
            let sub_assignment: BTreeMap<String, usize> = free
                .iter()
                .cloned()
                .zip(indices.iter().copied())
                .collect();
            let sub_classes: BTreeMap<String, usize> = free
                .iter()
                .cloned()
                .zip(indices.iter().map(|&i| sub_quotient.class_of_index(i)))
                .collect();
            let big_classes: BTreeMap<String, usize> = sub_classes
                .iter()
                .map(|(v, &c)| (v.clone(), k[c]))
                .collect();
            if sub_classical.eval(phi, &sub_classes)? != big_classical.eval(phi, &big_classes)? {
                elementary_on_samples = false;
            }

            // Boolean values computed in either algebra must agree through
            // the embedding; this needs the transported assignment, not
            // the class map.
            let sub_value = boolean_value(sub_quotient.structure(), phi, &sub_assignment)?.value;
            let big_assignment: BTreeMap<String, usize> = free
                .iter()
                .zip(indices.iter())
                .map(|(v, &i)| {
                    let idx = big_pool.index_of(&transported[i]).ok_or_else(|| {
                        UltraError::BadInput("transported name missing".to_string())
                    })?;
                    Ok((v.clone(), idx))
                })
                .collect::<Result<_>>()?;
            let big_value = boolean_value(big_quotient.structure(), phi, &big_assignment)?.value;
            if embed(partition, big, sub_value)? != big_value {
                values_agree = false;
            }
        }
    }

    // The interpreted generic filters: the small one must be exactly the
    // big one intersected with the subalgebra, read through the embedding.
    let small_members = generic_members(&sub, &u0)?;
    let big_members = generic_members(big, u)?;
    let sub_elements = partition.subalgebra_elements();
    let embedded_small: BTreeSet<Element> = small_members
        .iter()
        .map(|&b| embed(partition, big, b))
        .collect::<Result<_>>()?;
    let restricted_big: BTreeSet<Element> = big_members
        .intersection(&sub_elements)
        .copied()
        .collect();
    let generic_restricts = embedded_small == restricted_big;

    Ok(SubalgebraRestriction {
        sub_algebra: sub,
        u0,
        sub_quotient,
        big_quotient,
        k,
        u0_is_intersection,
        map_well_defined,
        injective,
        membership_preserved,
        embedding_commutes,
        elementary_on_samples,
        values_agree,
        generic_restricts,
        formulas_checked: formulas.len(),
    })
}

fn index_tuples(pool: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..pool).map(move |i| {
                    let mut next = prefix.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    out
}

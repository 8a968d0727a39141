//! Finite pools of names and formula evaluation over them.
//!
//! The class of all names is replaced by a finite [`NamePool`]: quantifiers
//! range over it, and the check-name predicate joins over its check
//! fragment.  Values computed against different pools are different
//! quantities; see the pool-size data carried on every evaluation.

use std::collections::BTreeMap;

use ba_kernel::{Algebra, Element};
use fol::{BValuedStructure, Formula, Signature};

use crate::atomic::AtomicEvaluator;
use crate::hf::HFSet;
use crate::name::{check_name, Name};
use crate::{NamesError, Result};

/// A finite, subname-closed set of names containing the check names of a
/// declared ground fragment (every hereditarily finite set of rank at most
/// `fragment_rank`).
#[derive(Debug, Clone)]
pub struct NamePool {
    algebra: Algebra,
    names: Vec<Name>,
    fragment: Vec<(HFSet, usize)>,
    fragment_rank: usize,
}

impl NamePool {
    /// Closes `seeds` under subnames, adds the check names of the rank
    /// fragment, sorts, and deduplicates.
    pub fn new(algebra: &Algebra, seeds: &[Name], fragment_rank: usize) -> Result<Self> {
        let mut names: Vec<Name> = Vec::new();
        for seed in seeds {
            if seed.algebra().atom_count() != algebra.atom_count() {
                return Err(NamesError::MixedAlgebras {
                    left: algebra.atom_count(),
                    right: seed.algebra().atom_count(),
                });
            }
            names.extend(seed.subname_closure());
        }
        let frag_sets = HFSet::all_up_to_rank(fragment_rank);
        for x in &frag_sets {
            // Check names are subname-closed within the fragment because
            // the fragment itself is transitive.
            names.push(check_name(algebra, x));
        }
        names.sort();
        names.dedup();
        let fragment = frag_sets
            .into_iter()
            .map(|x| {
                let idx = names
                    .binary_search(&check_name(algebra, &x))
                    .expect("check name was just inserted");
                (x, idx)
            })
            .collect();
        Ok(NamePool {
            algebra: algebra.clone(),
            names,
            fragment,
            fragment_rank,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn names(&self) -> &[Name] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn fragment_rank(&self) -> usize {
        self.fragment_rank
    }

    /// The declared ground fragment with each set's pool index.
    pub fn fragment(&self) -> &[(HFSet, usize)] {
        &self.fragment
    }

    pub fn index_of(&self, name: &Name) -> Option<usize> {
        self.names.binary_search(name).ok()
    }

    pub fn contains(&self, name: &Name) -> bool {
        self.index_of(name).is_some()
    }

    /// Value of "is a check name of the fragment": the join of equalities
    /// with every fragment check name.
    pub fn vcheck_value(&self, tau: &Name, ev: &mut AtomicEvaluator) -> Result<Element> {
        let mut acc = self.algebra.zero();
        for (_, idx) in &self.fragment {
            let eq = ev.eq(tau, &self.names[*idx])?;
            acc = self.algebra.join(acc, eq)?;
        }
        Ok(acc)
    }

    /// The signature of the induced structure: membership plus the unary
    /// check-fragment predicate `inV`.
    pub fn signature() -> Signature {
        let mut sig = Signature::membership();
        sig.add_relation("inV", 1).expect("fresh signature");
        sig
    }

    /// Builds the induced structure: one fol name per pool name (labeled
    /// `t0`, `t1`, ...), atomic tables from the double recursion, `inV` from
    /// the fragment join, and the relativized sub-pool set to the fragment's
    /// check names.  One memo session covers the whole table build.
    pub fn structure(&self) -> Result<BValuedStructure> {
        let n = self.names.len();
        let labels: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
        let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let mut s = BValuedStructure::new(self.algebra.clone(), Self::signature(), &label_refs)?;
        let mut ev = AtomicEvaluator::new(&self.algebra);
        for i in 0..n {
            for j in 0..n {
                let eq = ev.eq(&self.names[i], &self.names[j])?;
                s.set_eq_raw(i, j, eq)?;
                let mem = ev.member(&self.names[i], &self.names[j])?;
                s.set_relation("in", &[i, j], mem)?;
            }
            let inv = self.vcheck_value(&self.names[i], &mut ev)?;
            s.set_relation("inV", &[i], inv)?;
        }
        s.set_relativized_pool(self.fragment.iter().map(|&(_, idx)| idx).collect())?;
        Ok(s)
    }
}

/// Evaluates `phi` with quantifiers over the pool.  The assignment maps
/// formula variables to names, each of which must belong to the pool.
/// Under a `@Vcheck` marker, quantifiers range over the fragment's check
/// names only.
pub fn bv_formula(
    phi: &Formula,
    assignment: &BTreeMap<String, Name>,
    pool: &NamePool,
) -> Result<Element> {
    let structure = pool.structure()?;
    bv_formula_in(phi, assignment, pool, &structure)
}

/// Same as [`bv_formula`] with a prebuilt structure (see
/// [`NamePool::structure`]), so repeated evaluations share the table work.
pub fn bv_formula_in(
    phi: &Formula,
    assignment: &BTreeMap<String, Name>,
    pool: &NamePool,
    structure: &BValuedStructure,
) -> Result<Element> {
    let mut indices = BTreeMap::new();
    for (var, name) in assignment {
        let idx = pool
            .index_of(name)
            .ok_or(NamesError::NameOutsidePool { rank: name.rank() })?;
        indices.insert(var.clone(), idx);
    }
    Ok(fol::boolean_value(structure, phi, &indices)?.value)
}

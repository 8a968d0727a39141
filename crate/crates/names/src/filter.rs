//! Filters on the algebra and interpretation of names by filters.

use std::collections::BTreeSet;

use ba_kernel::{Algebra, Element};

use crate::hf::HFSet;
use crate::name::Name;
use crate::{NamesError, Result};

/// An upward-closed, meet-closed set of nonzero elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filter {
    algebra: Algebra,
    members: BTreeSet<Element>,
}

impl Filter {
    /// Everything above `generator`, which must be nonzero.
    pub fn principal(algebra: &Algebra, generator: Element) -> Result<Self> {
        if !algebra.contains(generator) {
            return Err(NamesError::BadFilter(format!(
                "generator {generator:?} is not in the algebra"
            )));
        }
        if generator.is_zero() {
            return Err(NamesError::BadFilter("generator is zero".into()));
        }
        let members = algebra
            .elements()
            .filter(|e| generator.leq(*e))
            .collect();
        Ok(Filter {
            algebra: algebra.clone(),
            members,
        })
    }

    /// The principal ultrafilter concentrating on one atom.
    pub fn at_atom(algebra: &Algebra, atom: usize) -> Self {
        Self::principal(algebra, algebra.atom(atom)).expect("atoms are nonzero")
    }

    /// Validates upward closure, meet closure, nonemptiness, and absence of
    /// zero.
    pub fn from_members(algebra: &Algebra, members: BTreeSet<Element>) -> Result<Self> {
        if members.is_empty() {
            return Err(NamesError::BadFilter("a filter is nonempty".into()));
        }
        for &m in &members {
            if !algebra.contains(m) {
                return Err(NamesError::BadFilter(format!("{m:?} not in the algebra")));
            }
            if m.is_zero() {
                return Err(NamesError::BadFilter("zero is a member".into()));
            }
            for e in algebra.elements() {
                if m.leq(e) && !members.contains(&e) {
                    return Err(NamesError::BadFilter(format!(
                        "upward closure fails: {} above {}",
                        algebra.show(e),
                        algebra.show(m)
                    )));
                }
            }
            for &n in &members {
                if !members.contains(&algebra.meet(m, n)?) {
                    return Err(NamesError::BadFilter(format!(
                        "meet closure fails at {} and {}",
                        algebra.show(m),
                        algebra.show(n)
                    )));
                }
            }
        }
        Ok(Filter {
            algebra: algebra.clone(),
            members,
        })
    }

    /// All ultrafilters: on a finite algebra, exactly the principal filters
    /// at atoms.
    pub fn all_ultrafilters(algebra: &Algebra) -> Vec<Filter> {
        (0..algebra.atom_count())
            .map(|i| Self::at_atom(algebra, i))
            .collect()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn contains(&self, e: Element) -> bool {
        self.members.contains(&e)
    }

    pub fn members(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// An ultrafilter decides every element one way or the other.
    pub fn is_ultra(&self) -> bool {
        self.algebra.elements().all(|e| {
            self.contains(e)
                || self
                    .algebra
                    .complement(e)
                    .map(|c| self.contains(c))
                    .unwrap_or(false)
        })
    }
}

/// Interprets a name by a filter: the values of subnames whose entry value
/// the filter accepts.
pub fn val(tau: &Name, filter: &Filter) -> HFSet {
    let elems = tau
        .entries()
        .iter()
        .filter(|(_, b)| filter.contains(*b))
        .map(|(sigma, _)| val(sigma, filter))
        .collect();
    HFSet::new(elems)
}

/// Per-ultrafilter outcome of the rank comparison for one name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub name_rank: usize,
    /// (atom index, rank of the value) per ultrafilter.
    pub value_ranks: Vec<(usize, usize)>,
    /// Ultrafilters where the value's rank exceeded the name's rank.  The
    /// rank bound is a theorem, so anything here is a defect.
    pub violations: Vec<usize>,
}

impl RankReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn max_value_rank(&self) -> usize {
        self.value_ranks.iter().map(|&(_, r)| r).max().unwrap_or(0)
    }
}

/// Compares rank(val(tau, U)) against rank(tau) for every ultrafilter U on
/// the algebra (all principal, one per atom).
pub fn rank_check(tau: &Name) -> RankReport {
    let algebra = tau.algebra();
    let mut value_ranks = Vec::new();
    let mut violations = Vec::new();
    for z in 0..algebra.atom_count() {
        let u = Filter::at_atom(algebra, z);
        let r = val(tau, &u).rank();
        value_ranks.push((z, r));
        if r > tau.rank() {
            violations.push(z);
        }
    }
    RankReport {
        name_rank: tau.rank(),
        value_ranks,
        violations,
    }
}

//! Derived names: the powerset name and separation-style subnames.

use ba_kernel::Algebra;
use itertools::Itertools;

use crate::atomic::AtomicEvaluator;
use crate::name::Name;
use crate::pool::NamePool;
use crate::{NamesError, Result};

/// Enumeration bound for the powerset construction, counted in candidate
/// pairs `dom(tau) x B`.  The enumeration walks 2^pairs subsets.
pub const POWERSET_PAIR_LIMIT: usize = 16;

/// The name whose entries are `<eta, [eta subset tau]>` for every name
/// `eta` built from pairs in `dom(tau) x B`.
///
/// Enumerating all subsets of `dom(tau) x B` is exponential, so the pair
/// count is guarded by [`POWERSET_PAIR_LIMIT`].
pub fn powerset_name(algebra: &Algebra, tau: &Name) -> Result<Name> {
    let dom = tau.dom();
    let elements: Vec<_> = algebra.elements().collect();
    let pairs: Vec<(Name, ba_kernel::Element)> = dom
        .iter()
        .flat_map(|sub| elements.iter().map(move |&b| ((*sub).clone(), b)))
        .collect();
    if pairs.len() > POWERSET_PAIR_LIMIT {
        return Err(NamesError::SizeGuard {
            pairs: pairs.len(),
            limit: POWERSET_PAIR_LIMIT,
        });
    }
    let mut ev = AtomicEvaluator::new(algebra);
    let mut entries = Vec::new();
    for subset in pairs.iter().powerset() {
        let eta = Name::new(algebra, subset.into_iter().cloned().collect())?;
        let value = ev.subset(&eta, tau)?;
        entries.push((eta, value));
    }
    Name::new(algebra, entries)
}

/// The subname `{<sigma, [sigma in tau] meet [phi(sigma)]> : sigma in dom(tau)}`.
///
/// `phi` is evaluated over `pool` with `var` bound to each member of the
/// domain in turn, so every subname of `tau` must lie in the pool.
pub fn separation_name(
    algebra: &Algebra,
    tau: &Name,
    phi: &fol::Formula,
    var: &str,
    pool: &NamePool,
) -> Result<Name> {
    let mut ev = AtomicEvaluator::new(algebra);
    let mut entries = Vec::new();
    for sigma in tau.dom() {
        let membership = ev.member(sigma, tau)?;
        let mut assignment = std::collections::BTreeMap::new();
        assignment.insert(var.to_string(), (*sigma).clone());
        let holds = crate::pool::bv_formula(phi, &assignment, pool)?;
        entries.push(((*sigma).clone(), algebra.meet(membership, holds)?));
    }
    Name::new(algebra, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filter::{val, Filter};
    use crate::hf::HFSet;
    use crate::name::check_name;

    #[test]
    fn powerset_of_empty_names_the_singleton_of_empty() {
        let b = Algebra::new(1).unwrap();
        let empty = check_name(&b, &HFSet::empty());
        let pow = powerset_name(&b, &empty).unwrap();
        // dom is empty, so the only candidate subname is the empty name,
        // with subset value 1.
        assert_eq!(pow.entries().len(), 1);
        assert_eq!(pow.entries()[0].1, b.one());
        let u = Filter::at_atom(&b, 0);
        assert_eq!(
            val(&pow, &u),
            HFSet::singleton(HFSet::empty()),
            "value is {{0}}"
        );
    }

    #[test]
    fn powerset_of_singleton_check_name() {
        let b = Algebra::new(1).unwrap();
        let one = check_name(&b, &HFSet::singleton(HFSet::empty()));
        let pow = powerset_name(&b, &one).unwrap();
        let u = Filter::at_atom(&b, 0);
        let got = val(&pow, &u);
        let expect = HFSet::new(vec![
            HFSet::empty(),
            HFSet::singleton(HFSet::empty()),
        ]);
        assert_eq!(got, expect, "value is {{0, {{0}}}}");
    }

    #[test]
    fn powerset_guard_trips() {
        let b = Algebra::new(3).unwrap();
        let two = check_name(&b, &HFSet::von_neumann(2));
        // dom has 2 subnames, 8 elements: 16 pairs is at the limit.
        assert!(powerset_name(&b, &two).is_ok());
        let three = check_name(&b, &HFSet::von_neumann(3));
        let err = powerset_name(&b, &three).unwrap_err();
        match err {
            NamesError::SizeGuard { pairs, limit } => {
                assert_eq!(pairs, 24);
                assert_eq!(limit, POWERSET_PAIR_LIMIT);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn separation_with_false_empties_the_name() {
        let b = Algebra::new(2).unwrap();
        let two = check_name(&b, &HFSet::von_neumann(2));
        let pool = NamePool::new(&b, &[two.clone()], 2).unwrap();
        // "x in x" is always 0 here: no pool name satisfies it.
        let phi = fol::parse("x in x", &NamePool::signature()).unwrap();
        let sep = separation_name(&b, &two, &phi, "x", &pool).unwrap();
        for (_, v) in sep.entries() {
            assert!(v.is_zero());
        }
        let u = Filter::at_atom(&b, 0);
        assert_eq!(val(&sep, &u), HFSet::empty());
    }

    #[test]
    fn separation_with_true_keeps_membership_values() {
        let b = Algebra::new(2).unwrap();
        let two = check_name(&b, &HFSet::von_neumann(2));
        let pool = NamePool::new(&b, &[two.clone()], 2).unwrap();
        let phi = fol::parse("x = x", &NamePool::signature()).unwrap();
        let sep = separation_name(&b, &two, &phi, "x", &pool).unwrap();
        let mut ev = AtomicEvaluator::new(&b);
        for (sub, v) in sep.entries() {
            assert_eq!(*v, ev.member(sub, &two).unwrap());
        }
        let u = Filter::at_atom(&b, 1);
        assert_eq!(val(&sep, &u), val(&two, &u));
    }
}

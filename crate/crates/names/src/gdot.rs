//! The canonical filter name and its laws.
//!
//! Algebra elements are encoded as hereditarily finite sets by collecting
//! the von Neumann naturals of their atom indices; the canonical name pairs
//! each element's check name with the element itself.  Its membership
//! values then read the algebra back: the value of "b-check is a member" is
//! b.  The filter laws are evaluated from those memberships, not assumed.

use ba_kernel::{Algebra, Element};

use crate::atomic::AtomicEvaluator;
use crate::hf::HFSet;
use crate::name::{check_name, Name};
use crate::Result;

/// Encodes an element as the set of von Neumann naturals of its atoms.
/// `{a0, a2}` becomes `{0, 2}` as sets.  Injective on every algebra.
pub fn encode_element(e: Element) -> HFSet {
    HFSet::new(e.atom_indices().into_iter().map(HFSet::von_neumann).collect())
}

/// The name `{<b-check, b> : b in B}`, using the fixed element encoding.
pub fn generic_name(algebra: &Algebra) -> Name {
    let entries = algebra
        .elements()
        .map(|b| (check_name(algebra, &encode_element(b)), b))
        .collect();
    Name::new(algebra, entries).expect("same algebra throughout")
}

/// Membership of an element's check name in the canonical filter name,
/// computed by the atomic recursion.
pub fn membership_value(
    algebra: &Algebra,
    gdot: &Name,
    b: Element,
    ev: &mut AtomicEvaluator,
) -> Result<Element> {
    let bname = check_name(algebra, &encode_element(b));
    ev.member(&bname, gdot)
}

/// Each filter law as one evaluated element: the meet over all instances.
/// A lawful filter name yields 1 everywhere.
#[derive(Debug, Clone, PartialEq)]
pub struct GenericLawsReport {
    /// Meet over b <= c of: member(b) implies member(c).
    pub upward: Element,
    /// Meet over b, c of: member(b) and member(c) implies member(b meet c).
    pub meet: Element,
    /// Meet over b of: member(b) or member(complement b).
    pub ultra: Element,
    /// Not member(0), and member(1).
    pub proper: Element,
}

impl GenericLawsReport {
    pub fn all_one(&self, algebra: &Algebra) -> bool {
        let one = algebra.one();
        self.upward == one && self.meet == one && self.ultra == one && self.proper == one
    }
}

/// Evaluates the filter laws of the canonical name over `algebra`.
pub fn generic_filter_laws(algebra: &Algebra) -> Result<GenericLawsReport> {
    let gdot = generic_name(algebra);
    let mut ev = AtomicEvaluator::new(algebra);
    let elements: Vec<Element> = algebra.elements().collect();
    let mut member = Vec::with_capacity(elements.len());
    for &b in &elements {
        member.push(membership_value(algebra, &gdot, b, &mut ev)?);
    }
    let implies = |p: Element, q: Element| -> Result<Element> {
        Ok(algebra.join(algebra.complement(p)?, q)?)
    };

    let mut upward = algebra.one();
    let mut meet_law = algebra.one();
    let mut ultra = algebra.one();
    for (i, &b) in elements.iter().enumerate() {
        for (j, &c) in elements.iter().enumerate() {
            if b.leq(c) {
                upward = algebra.meet(upward, implies(member[i], member[j])?)?;
            }
            let both = algebra.meet(member[i], member[j])?;
            let k = elements
                .iter()
                .position(|&e| e == algebra.meet(b, c).expect("same algebra"))
                .expect("meet stays in the algebra");
            meet_law = algebra.meet(meet_law, implies(both, member[k])?)?;
        }
        let ci = elements
            .iter()
            .position(|&e| e == algebra.complement(b).expect("same algebra"))
            .expect("complement stays in the algebra");
        ultra = algebra.meet(ultra, algebra.join(member[i], member[ci])?)?;
    }
    let zero_at = elements.iter().position(|e| e.is_zero()).expect("zero");
    let one_at = elements.iter().position(|e| e.is_one()).expect("one");
    let proper = algebra.meet(algebra.complement(member[zero_at])?, member[one_at])?;
    Ok(GenericLawsReport {
        upward,
        meet: meet_law,
        ultra,
        proper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filter::{val, Filter};

    #[test]
    fn encoding_is_injective_and_ranked() {
        let b = Algebra::new(3).unwrap();
        let mut seen = Vec::new();
        for e in b.elements() {
            let h = encode_element(e);
            assert!(!seen.contains(&h));
            seen.push(h);
        }
        assert_eq!(encode_element(b.zero()), HFSet::empty());
        // {a0, a1} encodes as {0, {0}}, which is the von Neumann 2.
        let e01 = b.element_from_atoms(&[0, 1]).unwrap();
        assert_eq!(encode_element(e01), HFSet::von_neumann(2));
    }

    #[test]
    fn membership_reads_the_algebra_back() {
        for atoms in 1..=3 {
            let b = Algebra::new(atoms).unwrap();
            let gdot = generic_name(&b);
            let mut ev = AtomicEvaluator::new(&b);
            for e in b.elements() {
                assert_eq!(
                    membership_value(&b, &gdot, e, &mut ev).unwrap(),
                    e,
                    "{} atoms, element {}",
                    atoms,
                    b.show(e)
                );
            }
        }
    }

    #[test]
    fn one_and_zero_memberships() {
        let b = Algebra::new(2).unwrap();
        let gdot = generic_name(&b);
        let mut ev = AtomicEvaluator::new(&b);
        assert_eq!(membership_value(&b, &gdot, b.one(), &mut ev).unwrap(), b.one());
        assert_eq!(membership_value(&b, &gdot, b.zero(), &mut ev).unwrap(), b.zero());
    }

    #[test]
    fn filter_laws_hold_up_to_three_atoms() {
        for atoms in 1..=3 {
            let b = Algebra::new(atoms).unwrap();
            let report = generic_filter_laws(&b).unwrap();
            assert!(report.all_one(&b), "{atoms} atoms: {report:?}");
        }
    }

    #[test]
    fn value_under_an_ultrafilter_is_that_ultrafilter() {
        let b = Algebra::new(2).unwrap();
        let gdot = generic_name(&b);
        for z in 0..2 {
            let u = Filter::at_atom(&b, z);
            let got = val(&gdot, &u);
            let expect = HFSet::new(u.members().map(encode_element).collect());
            assert_eq!(got, expect);
        }
    }
}

//! Antichains, maximality, and common refinements with their witness maps.

use std::collections::BTreeMap;

use crate::{Algebra, Element, KernelError, Result};

/// A finite set of pairwise-disjoint nonzero elements of one algebra.
/// Maximality (join = 1) is a property, not a constructor requirement;
/// operations that need it check [`Antichain::is_maximal`] explicitly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Antichain {
    universe: usize,
    elements: Vec<Element>, // sorted, deduplicated
}

impl Antichain {
    /// Validate pairwise disjointness and nonzeroness; the element list is
    /// canonicalized (sorted, deduplicated).
    pub fn new(algebra: &Algebra, elements: Vec<Element>) -> Result<Self> {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        for &e in &elements {
            if !algebra.contains(e) {
                return Err(KernelError::MixedAlgebras {
                    left: algebra.atom_count(),
                    right: e.universe(),
                });
            }
            if e.is_zero() {
                return Err(KernelError::NotAntichain("contains 0".into()));
            }
        }
        for (i, &x) in elements.iter().enumerate() {
            for &y in &elements[i + 1..] {
                if !x.disjoint(y) {
                    return Err(KernelError::NotAntichain(format!(
                        "{x:?} and {y:?} have nonzero meet"
                    )));
                }
            }
        }
        Ok(Antichain {
            universe: algebra.atom_count(),
            elements,
        })
    }

    /// The antichain of all atoms (always maximal).
    pub fn atoms(algebra: &Algebra) -> Self {
        Antichain {
            universe: algebra.atom_count(),
            elements: algebra.atoms().collect(),
        }
    }

    /// The one-element antichain `{1}` (always maximal).
    pub fn unit(algebra: &Algebra) -> Self {
        Antichain {
            universe: algebra.atom_count(),
            elements: vec![algebra.one()],
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn join(&self) -> Element {
        let mut acc = Element::zero_of(self.universe);
        for &e in &self.elements {
            acc = acc | e;
        }
        acc
    }

    /// Maximal iff the join is 1. (Pairwise disjointness and nonzeroness
    /// hold by construction.)
    pub fn is_maximal(&self) -> bool {
        self.join().is_one()
    }

    fn require_maximal(&self, role: &str) -> Result<()> {
        if self.is_maximal() {
            Ok(())
        } else {
            Err(KernelError::NotMaximal(format!(
                "{role}: join is {:?}, not 1",
                self.join()
            )))
        }
    }

    /// True iff every element of `self` sits below some element of
    /// `coarser` (the refinement order on antichains).
    pub fn refines(&self, coarser: &Antichain) -> bool {
        self.elements
            .iter()
            .all(|&c| coarser.elements.iter().any(|&a| c.leq(a)))
    }

    /// The unique element of this antichain above `e`, if any. For maximal
    /// antichains and nonzero `e` below a member, uniqueness comes from
    /// pairwise disjointness.
    pub fn member_above(&self, e: Element) -> Option<Element> {
        self.elements.iter().copied().find(|&a| e.leq(a))
    }

    /// The unique member whose meet with `e` is nonzero, when exactly one
    /// exists (so: the block containing an atom, for maximal antichains).
    pub fn member_meeting(&self, e: Element) -> Option<Element> {
        let mut hits = self.elements.iter().copied().filter(|&a| !a.disjoint(e));
        let first = hits.next()?;
        match hits.next() {
            None => Some(first),
            Some(_) => None,
        }
    }
}

/// Is the given element set a maximal antichain: pairwise disjoint, all
/// nonzero, join = 1?
pub fn is_maximal_antichain(algebra: &Algebra, elements: &[Element]) -> bool {
    match Antichain::new(algebra, elements.to_vec()) {
        Ok(chain) => chain.is_maximal(),
        Err(_) => false,
    }
}

/// Witness map attached to a common refinement: sends each refinement
/// element to its unique superelement in one of the refined antichains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementMap {
    pairs: BTreeMap<Element, Element>,
}

impl RefinementMap {
    /// Superelement of a refinement member.
    pub fn above(&self, c: Element) -> Option<Element> {
        self.pairs.get(&c).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.pairs.iter().map(|(&c, &a)| (c, a))
    }
}

/// Common refinement of two maximal antichains: all nonzero pairwise meets,
/// with maps sending each meet to its superelement on either side. The
/// result refines both inputs and is the coarsest antichain that does.
pub fn common_refinement(
    a: &Antichain,
    b: &Antichain,
) -> Result<(Antichain, RefinementMap, RefinementMap)> {
    if a.universe() != b.universe() {
        return Err(KernelError::MixedAlgebras {
            left: a.universe(),
            right: b.universe(),
        });
    }
    a.require_maximal("left antichain")?;
    b.require_maximal("right antichain")?;

    let mut elements = Vec::new();
    let mut to_a = BTreeMap::new();
    let mut to_b = BTreeMap::new();
    for &x in a.elements() {
        for &y in b.elements() {
            let c = x & y;
            if !c.is_zero() {
                elements.push(c);
                to_a.insert(c, x);
                to_b.insert(c, y);
            }
        }
    }
    elements.sort();
    elements.dedup();
    let chain = Antichain {
        universe: a.universe(),
        elements,
    };
    debug_assert!(chain.is_maximal());
    Ok((chain, RefinementMap { pairs: to_a }, RefinementMap { pairs: to_b }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: usize) -> Algebra {
        Algebra::new(n).unwrap()
    }

    #[test]
    fn atoms_form_a_maximal_antichain() {
        let b = alg(2);
        assert!(is_maximal_antichain(&b, &[b.atom(0), b.atom(1)]));
        assert!(is_maximal_antichain(&b, &[b.one()]));
        assert!(!is_maximal_antichain(&b, &[b.atom(0)]));
    }

    #[test]
    fn zero_and_overlap_rejected() {
        let b = alg(3);
        assert!(Antichain::new(&b, vec![b.zero()]).is_err());
        let x = b.element_from_atoms(&[0, 1]).unwrap();
        let y = b.element_from_atoms(&[1, 2]).unwrap();
        assert!(Antichain::new(&b, vec![x, y]).is_err());
    }

    #[test]
    fn refinement_of_two_splits() {
        // A = {{0,1},{2,3}}, B = {{0,2},{1,3}} → C = four atoms.
        let b = alg(4);
        let a = Antichain::new(
            &b,
            vec![
                b.element_from_atoms(&[0, 1]).unwrap(),
                b.element_from_atoms(&[2, 3]).unwrap(),
            ],
        )
        .unwrap();
        let c = Antichain::new(
            &b,
            vec![
                b.element_from_atoms(&[0, 2]).unwrap(),
                b.element_from_atoms(&[1, 3]).unwrap(),
            ],
        )
        .unwrap();
        let (r, to_a, to_c) = common_refinement(&a, &c).unwrap();
        assert_eq!(r.elements(), Antichain::atoms(&b).elements());
        assert_eq!(to_a.above(b.atom(2)), Some(b.element_from_atoms(&[2, 3]).unwrap()));
        assert_eq!(to_c.above(b.atom(2)), Some(b.element_from_atoms(&[0, 2]).unwrap()));
    }

    #[test]
    fn refinement_identities() {
        let b = alg(3);
        let a = Antichain::new(&b, vec![b.atom(0), b.element_from_atoms(&[1, 2]).unwrap()]).unwrap();
        // A = B → C = A with identity maps.
        let (r, to_a, _) = common_refinement(&a, &a).unwrap();
        assert_eq!(&r, &a);
        for &e in a.elements() {
            assert_eq!(to_a.above(e), Some(e));
        }
        // A = {1} → C = B.
        let unit = Antichain::unit(&b);
        let (r, _, _) = common_refinement(&unit, &a).unwrap();
        assert_eq!(&r, &a);
    }

    #[test]
    fn non_maximal_inputs_rejected() {
        let b = alg(2);
        let partial = Antichain::new(&b, vec![b.atom(0)]).unwrap();
        let unit = Antichain::unit(&b);
        assert!(common_refinement(&partial, &unit).is_err());
    }

    #[test]
    fn member_lookup() {
        let b = alg(4);
        let a = Antichain::new(
            &b,
            vec![
                b.element_from_atoms(&[0, 1]).unwrap(),
                b.element_from_atoms(&[2, 3]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a.member_above(b.atom(1)), Some(b.element_from_atoms(&[0, 1]).unwrap()));
        assert_eq!(a.member_meeting(b.atom(3)), Some(b.element_from_atoms(&[2, 3]).unwrap()));
        assert_eq!(a.member_above(b.element_from_atoms(&[1, 2]).unwrap()), None);
    }
}

//! Partition-induced complete subalgebras and the closure validator for
//! arbitrary claimed element sets.

use std::collections::BTreeSet;

use crate::{Algebra, Antichain, Element, KernelError, Result};

/// A partition of the atom set: the canonical presentation of a complete
/// subalgebra (its elements are exactly the joins of blocks). Blocks are
/// nonempty, disjoint, covering, and stored sorted by least atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    universe: usize,
    blocks: Vec<Element>,
}

impl Partition {
    pub fn new(algebra: &Algebra, blocks: Vec<Element>) -> Result<Self> {
        let chain = Antichain::new(algebra, blocks).map_err(|e| match e {
            KernelError::NotAntichain(msg) => KernelError::NotPartition(msg),
            other => other,
        })?;
        if !chain.is_maximal() {
            return Err(KernelError::NotPartition(format!(
                "blocks cover {:?}, not every atom",
                chain.join()
            )));
        }
        Ok(Partition {
            universe: algebra.atom_count(),
            blocks: chain.elements().to_vec(),
        })
    }

    /// The finest partition: every atom its own block.
    pub fn atoms(algebra: &Algebra) -> Self {
        Partition {
            universe: algebra.atom_count(),
            blocks: algebra.atoms().collect(),
        }
    }

    /// The coarsest partition: one block, inducing the two-element
    /// subalgebra {0, 1}.
    pub fn coarsest(algebra: &Algebra) -> Self {
        Partition {
            universe: algebra.atom_count(),
            blocks: vec![algebra.one()],
        }
    }

    /// A maximal antichain reread as a partition (same data, other role).
    pub fn from_antichain(chain: &Antichain) -> Result<Self> {
        if !chain.is_maximal() {
            return Err(KernelError::NotPartition("antichain join is not 1".into()));
        }
        Ok(Partition {
            universe: chain.universe(),
            blocks: chain.elements().to_vec(),
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn blocks(&self) -> &[Element] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The block containing an atom (None for foreign or non-atomic input).
    pub fn block_of_atom(&self, atom: Element) -> Option<Element> {
        if !atom.is_atom() || atom.universe() != self.universe {
            return None;
        }
        self.blocks.iter().copied().find(|b| atom.leq(*b))
    }

    /// All `2^blocks` joins of block subsets: the induced subalgebra.
    pub fn subalgebra_elements(&self) -> BTreeSet<Element> {
        let mut out = BTreeSet::new();
        for pick in 0u64..(1 << self.blocks.len()) {
            let mut acc = Element::zero_of(self.universe);
            for (k, &b) in self.blocks.iter().enumerate() {
                if pick >> k & 1 == 1 {
                    acc = acc | b;
                }
            }
            out.insert(acc);
        }
        out
    }

    /// Does the subalgebra contain this element (is it a union of blocks)?
    pub fn contains(&self, e: Element) -> bool {
        e.universe() == self.universe
            && self
                .blocks
                .iter()
                .all(|&b| b.leq(e) || b.disjoint(e))
    }

    /// Nearest subalgebra element from above: the join of all blocks the
    /// element meets.
    pub fn upper_approximation(&self, e: Element) -> Element {
        let mut acc = Element::zero_of(self.universe);
        for &b in &self.blocks {
            if !b.disjoint(e) {
                acc = acc | b;
            }
        }
        acc
    }

    /// The antichain of blocks.
    pub fn as_antichain(&self, algebra: &Algebra) -> Antichain {
        Antichain::new(algebra, self.blocks.clone()).expect("blocks form a maximal antichain")
    }
}

/// Validate that a claimed element set is a complete subalgebra: contains 0
/// and 1 and is closed under complement, meet, and arbitrary joins. In a
/// finite algebra arbitrary joins reduce to iterated pairwise joins plus the
/// empty join, so pairwise closure is what gets checked.
pub fn is_complete_subalgebra(algebra: &Algebra, claimed: &BTreeSet<Element>) -> bool {
    if claimed.iter().any(|e| e.universe() != algebra.atom_count()) {
        return false;
    }
    if !claimed.contains(&algebra.zero()) || !claimed.contains(&algebra.one()) {
        return false;
    }
    for &x in claimed {
        if !claimed.contains(&!x) {
            return false;
        }
        for &y in claimed {
            if !claimed.contains(&(x & y)) || !claimed.contains(&(x | y)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: usize) -> Algebra {
        Algebra::new(n).unwrap()
    }

    #[test]
    fn two_block_partition_of_four_atoms() {
        let b = alg(4);
        let p = Partition::new(
            &b,
            vec![
                b.element_from_atoms(&[0, 1]).unwrap(),
                b.element_from_atoms(&[2, 3]).unwrap(),
            ],
        )
        .unwrap();
        let sub = p.subalgebra_elements();
        assert_eq!(sub.len(), 4);
        assert!(is_complete_subalgebra(&b, &sub));
    }

    #[test]
    fn coarsest_partition_gives_two_element_subalgebra() {
        let b = alg(3);
        let sub = Partition::coarsest(&b).subalgebra_elements();
        assert_eq!(sub, BTreeSet::from([b.zero(), b.one()]));
        assert!(is_complete_subalgebra(&b, &sub));
    }

    #[test]
    fn missing_complement_detected() {
        let b = alg(2);
        let mut claimed = BTreeSet::from([b.zero(), b.one(), b.atom(0)]);
        assert!(!is_complete_subalgebra(&b, &claimed));
        claimed.insert(b.atom(1));
        assert!(is_complete_subalgebra(&b, &claimed));
    }

    #[test]
    fn bad_partitions_rejected() {
        let b = alg(3);
        // Not covering.
        assert!(Partition::new(&b, vec![b.atom(0), b.atom(1)]).is_err());
        // Overlapping.
        let x = b.element_from_atoms(&[0, 1]).unwrap();
        let y = b.element_from_atoms(&[1, 2]).unwrap();
        assert!(Partition::new(&b, vec![x, y]).is_err());
    }

    #[test]
    fn membership_and_approximation() {
        let b = alg(4);
        let p = Partition::new(
            &b,
            vec![
                b.element_from_atoms(&[0, 1]).unwrap(),
                b.element_from_atoms(&[2, 3]).unwrap(),
            ],
        )
        .unwrap();
        assert!(p.contains(b.element_from_atoms(&[0, 1]).unwrap()));
        assert!(!p.contains(b.atom(0)));
        assert_eq!(p.upper_approximation(b.atom(0)), b.element_from_atoms(&[0, 1]).unwrap());
        assert_eq!(p.block_of_atom(b.atom(2)), Some(b.element_from_atoms(&[2, 3]).unwrap()));
    }
}

//! Hereditarily finite sets in canonical form.

use std::fmt;

use itertools::Itertools;

/// Default rank cap for ground-universe fragments.
pub const DEFAULT_RANK_CAP: usize = 3;

/// A hereditarily finite set.  Elements are kept sorted and deduplicated
/// under the derived (structural, lexicographic) order, so equality of
/// values is equality of sets and the representation is unique.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HFSet {
    elements: Vec<HFSet>,
    rank: usize,
}

impl HFSet {
    pub fn empty() -> Self {
        HFSet {
            elements: Vec::new(),
            rank: 0,
        }
    }

    pub fn new(mut elements: Vec<HFSet>) -> Self {
        elements.sort();
        elements.dedup();
        let rank = elements.iter().map(|e| e.rank + 1).max().unwrap_or(0);
        HFSet { elements, rank }
    }

    pub fn singleton(element: HFSet) -> Self {
        Self::new(vec![element])
    }

    /// The von Neumann natural: 0 is empty, n+1 is n together with {n}.
    pub fn von_neumann(n: usize) -> Self {
        let mut current = Self::empty();
        for _ in 0..n {
            let mut elems = current.elements.clone();
            elems.push(current);
            current = Self::new(elems);
        }
        current
    }

    /// rank(x) = sup of rank(y) + 1 over members y.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[HFSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &HFSet) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    /// Every hereditarily finite set of rank at most `rank`, in canonical
    /// order.  Sizes grow as 1, 2, 4, 16, 65536; callers should stay at
    /// rank 3 or below.
    pub fn all_up_to_rank(rank: usize) -> Vec<HFSet> {
        assert!(rank <= 4, "fragment of rank {rank} is astronomically large");
        let mut stage = vec![HFSet::empty()];
        for _ in 0..rank {
            stage = stage
                .iter()
                .powerset()
                .map(|subset| HFSet::new(subset.into_iter().cloned().collect()))
                .collect();
        }
        stage.sort();
        stage
    }

    /// Members, members of members, and so on, excluding the set itself.
    pub fn transitive_content(&self) -> Vec<HFSet> {
        let mut out = Vec::new();
        let mut queue: Vec<&HFSet> = self.elements.iter().collect();
        while let Some(x) = queue.pop() {
            if !out.contains(x) {
                out.push(x.clone());
                queue.extend(x.elements.iter());
            }
        }
        out.sort();
        out
    }
}

impl fmt::Debug for HFSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elements.is_empty() {
            return f.write_str("0");
        }
        write!(f, "{{{}}}", self.elements.iter().map(|e| format!("{e:?}")).join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_order_independent() {
        let a = HFSet::new(vec![HFSet::empty(), HFSet::singleton(HFSet::empty())]);
        let b = HFSet::new(vec![
            HFSet::singleton(HFSet::empty()),
            HFSet::empty(),
            HFSet::empty(),
        ]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn ranks() {
        assert_eq!(HFSet::empty().rank(), 0);
        assert_eq!(HFSet::singleton(HFSet::empty()).rank(), 1);
        let pair = HFSet::new(vec![HFSet::empty(), HFSet::singleton(HFSet::empty())]);
        assert_eq!(pair.rank(), 2);
        for n in 0..5 {
            assert_eq!(HFSet::von_neumann(n).rank(), n);
        }
    }

    #[test]
    fn von_neumann_membership_chain() {
        let three = HFSet::von_neumann(3);
        assert_eq!(three.len(), 3);
        for k in 0..3 {
            assert!(three.contains(&HFSet::von_neumann(k)));
        }
        assert!(!three.contains(&three.clone()));
    }

    #[test]
    fn fragment_sizes() {
        assert_eq!(HFSet::all_up_to_rank(0).len(), 1);
        assert_eq!(HFSet::all_up_to_rank(1).len(), 2);
        assert_eq!(HFSet::all_up_to_rank(2).len(), 4);
        assert_eq!(HFSet::all_up_to_rank(3).len(), 16);
        let frag = HFSet::all_up_to_rank(2);
        assert!(frag.iter().all(|x| x.rank() <= 2));
        assert!(frag.iter().tuple_windows().all(|(a, b)| a < b));
    }

    #[test]
    fn fragment_is_transitive() {
        let frag = HFSet::all_up_to_rank(3);
        for x in &frag {
            for y in x.elements() {
                assert!(frag.contains(y));
            }
        }
    }

    #[test]
    fn transitive_content_of_two() {
        let two = HFSet::von_neumann(2);
        let tc = two.transitive_content();
        assert_eq!(tc, vec![HFSet::von_neumann(0), HFSet::von_neumann(1)]);
    }

    #[test]
    fn debug_rendering() {
        assert_eq!(format!("{:?}", HFSet::empty()), "0");
        assert_eq!(format!("{:?}", HFSet::von_neumann(2)), "{0,{0}}");
    }
}

//! Atom-presented finite complete Boolean algebras and their elements.

use std::fmt;
use std::sync::Arc;

use crate::{KernelError, Result};

/// Default ceiling on the atom count of any constructed algebra. Everything
/// downstream (oracles, exhaustive sweeps) is exponential in atoms, so the
/// cap is deliberately small; raise it per algebra via [`Algebra::with_cap`].
pub const DEFAULT_ATOM_CAP: usize = 16;

/// Hard limit imposed by the `u64` atom-mask representation.
pub const MASK_LIMIT: usize = 60;

/// A finite complete Boolean algebra, presented as the powerset of
/// `{0, …, atom_count − 1}`. `0` is the empty set, `1` the full set, and
/// meet/join/complement are set operations. Arbitrary joins exist because
/// everything is finite.
///
/// Two algebras are equal iff their atom counts are equal; a finite powerset
/// algebra is determined by its atoms. Labels are display-only.
#[derive(Clone)]
pub struct Algebra {
    atoms: usize,
    cap: usize,
    labels: Option<Arc<Vec<String>>>,
}

impl Algebra {
    /// Algebra with `atoms` atoms under the default cap.
    pub fn new(atoms: usize) -> Result<Self> {
        Self::with_cap(atoms, DEFAULT_ATOM_CAP)
    }

    /// Algebra with `atoms` atoms under an explicit cap (still bounded by
    /// [`MASK_LIMIT`]). The cap travels with the algebra: products and
    /// iterations built from it inherit the larger operand cap.
    pub fn with_cap(atoms: usize, cap: usize) -> Result<Self> {
        let cap = cap.min(MASK_LIMIT);
        if atoms == 0 {
            return Err(KernelError::NotPartition(
                "an algebra needs at least one atom".into(),
            ));
        }
        if atoms > cap {
            return Err(KernelError::AtomCapExceeded {
                requested: atoms,
                cap,
            });
        }
        Ok(Algebra {
            atoms,
            cap,
            labels: None,
        })
    }

    /// Algebra whose atoms carry the given display labels.
    pub fn labeled(labels: Vec<String>) -> Result<Self> {
        let mut alg = Self::new(labels.len())?;
        alg.labels = Some(Arc::new(labels));
        Ok(alg)
    }

    /// Replace the display labels (count must match).
    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.atoms {
            return Err(KernelError::NotPartition(format!(
                "{} labels for {} atoms",
                labels.len(),
                self.atoms
            )));
        }
        self.labels = Some(Arc::new(labels));
        Ok(())
    }

    pub fn atom_count(&self) -> usize {
        self.atoms
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Display label of one atom (`a<i>` when unlabeled).
    pub fn label(&self, index: usize) -> String {
        match &self.labels {
            Some(labels) => labels[index].clone(),
            None => format!("a{index}"),
        }
    }

    pub fn zero(&self) -> Element {
        Element {
            mask: 0,
            universe: self.atoms,
        }
    }

    pub fn one(&self) -> Element {
        Element {
            mask: full_mask(self.atoms),
            universe: self.atoms,
        }
    }

    /// The atom with the given index. Panics on out-of-range indices; use
    /// [`Algebra::element_from_atoms`] for unvalidated input.
    pub fn atom(&self, index: usize) -> Element {
        assert!(index < self.atoms, "atom {index} of {}", self.atoms);
        Element {
            mask: 1 << index,
            universe: self.atoms,
        }
    }

    /// Element below which exactly the listed atoms sit. Duplicates are fine.
    pub fn element_from_atoms(&self, atoms: &[usize]) -> Result<Element> {
        let mut mask = 0u64;
        for &i in atoms {
            if i >= self.atoms {
                return Err(KernelError::AtomOutOfRange {
                    index: i,
                    atoms: self.atoms,
                });
            }
            mask |= 1 << i;
        }
        Ok(Element {
            mask,
            universe: self.atoms,
        })
    }

    /// All `2^atoms` elements in mask order (so `0` first, `1` last).
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let universe = self.atoms;
        (0..(1u64 << self.atoms)).map(move |mask| Element { mask, universe })
    }

    /// All nonzero elements in mask order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.elements().skip(1)
    }

    pub fn atoms(&self) -> impl Iterator<Item = Element> + '_ {
        let universe = self.atoms;
        (0..self.atoms).map(move |i| Element {
            mask: 1 << i,
            universe,
        })
    }

    /// True iff the element belongs to this algebra.
    pub fn contains(&self, e: Element) -> bool {
        e.universe == self.atoms
    }

    fn check_member(&self, e: Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(KernelError::MixedAlgebras {
                left: self.atoms,
                right: e.universe,
            })
        }
    }

    /// Meet of two elements of this algebra; mixed-algebra operands are
    /// rejected.
    pub fn meet(&self, x: Element, y: Element) -> Result<Element> {
        self.check_member(x)?;
        self.check_member(y)?;
        Ok(x & y)
    }

    /// Join of two elements of this algebra; mixed-algebra operands are
    /// rejected.
    pub fn join(&self, x: Element, y: Element) -> Result<Element> {
        self.check_member(x)?;
        self.check_member(y)?;
        Ok(x | y)
    }

    /// Complement within this algebra.
    pub fn complement(&self, x: Element) -> Result<Element> {
        self.check_member(x)?;
        Ok(!x)
    }

    /// Join of arbitrarily many elements; the empty join is `0`.
    pub fn big_join<I: IntoIterator<Item = Element>>(&self, items: I) -> Result<Element> {
        let mut acc = self.zero();
        for e in items {
            self.check_member(e)?;
            acc = acc | e;
        }
        Ok(acc)
    }

    /// Meet of arbitrarily many elements; the empty meet is `1`.
    pub fn big_meet<I: IntoIterator<Item = Element>>(&self, items: I) -> Result<Element> {
        let mut acc = self.one();
        for e in items {
            self.check_member(e)?;
            acc = acc & e;
        }
        Ok(acc)
    }

    /// Render an element with atom labels: `0`, `1`, or `{a0,a2}`.
    pub fn show(&self, e: Element) -> String {
        if e.is_zero() {
            return "0".into();
        }
        if e.universe == self.atoms && e.is_one() {
            return "1".into();
        }
        let names: Vec<String> = e.atom_indices().iter().map(|&i| self.label(i)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.atoms == other.atoms
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({} atoms)", self.atoms)
    }
}

fn full_mask(atoms: usize) -> u64 {
    debug_assert!(atoms <= MASK_LIMIT);
    (1u64 << atoms) - 1
}

/// An element of a finite algebra: the set of atoms below it, carried as a
/// bitmask together with the owning algebra's atom count.
///
/// The derived `Ord` is structural (mask then universe) and exists only so
/// elements sort deterministically in sets and reports; the Boolean order is
/// [`Element::leq`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    mask: u64,
    universe: usize,
}

impl Element {
    /// Crate-internal constructor for modules that track a universe without
    /// holding an `Algebra` value. Stray mask bits are a bug.
    pub(crate) fn from_mask(mask: u64, universe: usize) -> Element {
        debug_assert!(mask & !full_mask(universe) == 0);
        Element { mask, universe }
    }

    pub(crate) fn zero_of(universe: usize) -> Element {
        Element { mask: 0, universe }
    }

    /// Raw atom mask.
    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Atom count of the owning algebra.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.mask == 0
    }

    pub fn is_one(&self) -> bool {
        self.mask == full_mask(self.universe)
    }

    /// Number of atoms below this element.
    pub fn atom_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// True iff this element is a single atom.
    pub fn is_atom(&self) -> bool {
        self.mask.count_ones() == 1
    }

    /// Sorted indices of the atoms below this element.
    pub fn atom_indices(&self) -> Vec<usize> {
        (0..self.universe).filter(|i| self.mask >> i & 1 == 1).collect()
    }

    /// Boolean order: `self ≤ other` iff every atom below `self` is below
    /// `other`.
    pub fn leq(&self, other: Element) -> bool {
        self.assert_same(other);
        self.mask & !other.mask == 0
    }

    /// True iff the meet is zero.
    pub fn disjoint(&self, other: Element) -> bool {
        self.assert_same(other);
        self.mask & other.mask == 0
    }

    /// `self − other` (meet with the complement).
    pub fn minus(&self, other: Element) -> Element {
        self.assert_same(other);
        Element {
            mask: self.mask & !other.mask,
            universe: self.universe,
        }
    }

    /// Symmetric difference `(a−b)+(b−a)`, the ideal-congruence witness.
    pub fn sym_diff(&self, other: Element) -> Element {
        self.assert_same(other);
        Element {
            mask: self.mask ^ other.mask,
            universe: self.universe,
        }
    }

    /// Implication `¬self ∨ other`.
    pub fn implies(&self, other: Element) -> Element {
        self.assert_same(other);
        Element {
            mask: (!self.mask | other.mask) & full_mask(self.universe),
            universe: self.universe,
        }
    }

    fn assert_same(&self, other: Element) {
        assert_eq!(
            self.universe, other.universe,
            "elements of different algebras ({} vs {} atoms)",
            self.universe, other.universe
        );
    }
}

impl std::ops::BitAnd for Element {
    type Output = Element;
    fn bitand(self, rhs: Element) -> Element {
        self.assert_same(rhs);
        Element {
            mask: self.mask & rhs.mask,
            universe: self.universe,
        }
    }
}

impl std::ops::BitOr for Element {
    type Output = Element;
    fn bitor(self, rhs: Element) -> Element {
        self.assert_same(rhs);
        Element {
            mask: self.mask | rhs.mask,
            universe: self.universe,
        }
    }
}

impl std::ops::Not for Element {
    type Output = Element;
    fn not(self) -> Element {
        Element {
            mask: !self.mask & full_mask(self.universe),
            universe: self.universe,
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0/{}", self.universe);
        }
        if self.is_one() {
            return write!(f, "1/{}", self.universe);
        }
        let indices: Vec<String> = self.atom_indices().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}/{}", indices.join(","), self.universe)
    }
}

impl serde::Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let indices = self.atom_indices();
        let mut seq = serializer.serialize_seq(Some(indices.len()))?;
        for i in indices {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_lattice_identities() {
        let b = Algebra::new(2).unwrap();
        let a0 = b.atom(0);
        let a1 = b.atom(1);
        assert_eq!(b.meet(a0, a1).unwrap(), b.zero());
        assert_eq!(b.join(a0, a1).unwrap(), b.one());
        assert_eq!(b.complement(b.zero()).unwrap(), b.one());
        assert_eq!(b.complement(b.one()).unwrap(), b.zero());
    }

    #[test]
    fn mixed_algebra_operands_rejected() {
        let b2 = Algebra::new(2).unwrap();
        let b3 = Algebra::new(3).unwrap();
        let err = b2.meet(b2.atom(0), b3.atom(0)).unwrap_err();
        assert_eq!(err, KernelError::MixedAlgebras { left: 2, right: 3 });
    }

    #[test]
    fn big_join_of_atoms_is_one() {
        let b = Algebra::new(5).unwrap();
        assert_eq!(b.big_join(b.atoms()).unwrap(), b.one());
        assert_eq!(b.big_join(std::iter::empty()).unwrap(), b.zero());
        assert_eq!(b.big_meet(std::iter::empty()).unwrap(), b.one());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(Algebra::new(16).is_ok());
        let err = Algebra::new(17).unwrap_err();
        assert_eq!(
            err,
            KernelError::AtomCapExceeded {
                requested: 17,
                cap: 16
            }
        );
        assert!(Algebra::with_cap(17, 32).is_ok());
    }

    #[test]
    fn element_order_and_ops() {
        let b = Algebra::new(4).unwrap();
        let x = b.element_from_atoms(&[0, 1]).unwrap();
        let y = b.element_from_atoms(&[1, 2]).unwrap();
        assert!(x.leq(b.one()));
        assert!(b.zero().leq(x));
        assert!(!x.leq(y));
        assert_eq!(x.minus(y), b.element_from_atoms(&[0]).unwrap());
        assert_eq!(x.sym_diff(y), b.element_from_atoms(&[0, 2]).unwrap());
        assert_eq!(x.implies(y), b.element_from_atoms(&[1, 2, 3]).unwrap());
        assert_eq!((x | y).atom_indices(), vec![0, 1, 2]);
    }

    #[test]
    fn show_uses_labels() {
        let b = Algebra::labeled(vec!["p".into(), "q".into()]).unwrap();
        assert_eq!(b.show(b.atom(1)), "{q}");
        assert_eq!(b.show(b.one()), "1");
        assert_eq!(b.show(b.zero()), "0");
    }

    #[test]
    fn out_of_range_atom_rejected() {
        let b = Algebra::new(3).unwrap();
        let err = b.element_from_atoms(&[3]).unwrap_err();
        assert_eq!(err, KernelError::AtomOutOfRange { index: 3, atoms: 3 });
    }
}

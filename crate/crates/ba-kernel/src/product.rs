//! Product algebras and finite two-step iteration algebras, with their
//! complete embeddings.

use crate::{Algebra, Element, KernelError, Result};

/// Product of two atom-presented algebras. Atoms are atom pairs, flattened
/// as `left_atom * right_count + right_atom`; both coordinate embeddings
/// are complete.
#[derive(Clone, Debug)]
pub struct Product {
    algebra: Algebra,
    left_atoms: usize,
    right_atoms: usize,
}

/// `B0 × B1`: atoms are pairs of atoms, the left embedding sends
/// `b ↦ b × 1`, the right sends `c ↦ 1 × c`, and `(b×1) ∧ (1×c) = b×c`.
/// Exceeding the (inherited) atom cap is a sizing error.
pub fn product_algebra(b0: &Algebra, b1: &Algebra) -> Result<Product> {
    let atoms = b0.atom_count() * b1.atom_count();
    let cap = b0.cap().max(b1.cap());
    if atoms > cap {
        return Err(KernelError::AtomCapExceeded {
            requested: atoms,
            cap,
        });
    }
    let labels = (0..b0.atom_count())
        .flat_map(|i| (0..b1.atom_count()).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}*{}", b0.label(i), b1.label(j)))
        .collect();
    let mut algebra = Algebra::with_cap(atoms, cap)?;
    algebra.set_labels(labels)?;
    Ok(Product {
        algebra,
        left_atoms: b0.atom_count(),
        right_atoms: b1.atom_count(),
    })
}

impl Product {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn left_atom_count(&self) -> usize {
        self.left_atoms
    }

    pub fn right_atom_count(&self) -> usize {
        self.right_atoms
    }

    /// Flat atom index of the pair `(i, j)`.
    pub fn atom_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.left_atoms && j < self.right_atoms);
        i * self.right_atoms + j
    }

    /// The pair behind a flat atom index.
    pub fn atom_pair(&self, k: usize) -> (usize, usize) {
        (k / self.right_atoms, k % self.right_atoms)
    }

    /// Left embedding `b ↦ b × 1`.
    pub fn embed_left(&self, b: Element) -> Element {
        assert_eq!(b.universe(), self.left_atoms, "foreign left element");
        let mut mask = 0u64;
        for i in 0..self.left_atoms {
            if b.mask() >> i & 1 == 1 {
                for j in 0..self.right_atoms {
                    mask |= 1 << self.atom_index(i, j);
                }
            }
        }
        Element::from_mask(mask, self.algebra.atom_count())
    }

    /// Right embedding `c ↦ 1 × c`.
    pub fn embed_right(&self, c: Element) -> Element {
        assert_eq!(c.universe(), self.right_atoms, "foreign right element");
        let mut mask = 0u64;
        for j in 0..self.right_atoms {
            if c.mask() >> j & 1 == 1 {
                for i in 0..self.left_atoms {
                    mask |= 1 << self.atom_index(i, j);
                }
            }
        }
        Element::from_mask(mask, self.algebra.atom_count())
    }

    /// The rectangle `b × c`.
    pub fn rectangle(&self, b: Element, c: Element) -> Element {
        self.embed_left(b) & self.embed_right(c)
    }
}

/// Finite two-step iteration. The second step is presented fiberwise: one
/// finite algebra per atom of the base, the mixed form of a base-indexed
/// family. Atoms are pairs (base atom, fiber atom).
#[derive(Clone, Debug)]
pub struct Iteration {
    algebra: Algebra,
    /// Flat index where each base atom's fiber block starts.
    offsets: Vec<usize>,
    fiber_sizes: Vec<usize>,
}

/// Build the iteration algebra of a base and its fibers; the base embeds
/// completely via the first coordinate.
pub fn iteration_algebra(b0: &Algebra, fibers: &[Algebra]) -> Result<Iteration> {
    if fibers.len() != b0.atom_count() {
        return Err(KernelError::NotPartition(format!(
            "{} fibers for {} base atoms",
            fibers.len(),
            b0.atom_count()
        )));
    }
    let mut offsets = Vec::with_capacity(fibers.len());
    let mut fiber_sizes = Vec::with_capacity(fibers.len());
    let mut total = 0usize;
    for fiber in fibers {
        offsets.push(total);
        fiber_sizes.push(fiber.atom_count());
        total += fiber.atom_count();
    }
    let cap = fibers
        .iter()
        .map(Algebra::cap)
        .fold(b0.cap(), usize::max);
    if total > cap {
        return Err(KernelError::AtomCapExceeded {
            requested: total,
            cap,
        });
    }
    let labels = (0..b0.atom_count())
        .flat_map(|i| {
            let fiber = &fibers[i];
            (0..fiber.atom_count())
                .map(move |j| format!("{}*{}", b0.label(i), fiber.label(j)))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut algebra = Algebra::with_cap(total, cap)?;
    algebra.set_labels(labels)?;
    Ok(Iteration {
        algebra,
        offsets,
        fiber_sizes,
    })
}

impl Iteration {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn base_atom_count(&self) -> usize {
        self.offsets.len()
    }

    pub fn fiber_size(&self, base_atom: usize) -> usize {
        self.fiber_sizes[base_atom]
    }

    /// Flat atom index of (base atom, fiber atom).
    pub fn atom_index(&self, base_atom: usize, fiber_atom: usize) -> usize {
        debug_assert!(fiber_atom < self.fiber_sizes[base_atom]);
        self.offsets[base_atom] + fiber_atom
    }

    /// The (base atom, fiber atom) pair behind a flat index.
    pub fn atom_pair(&self, k: usize) -> (usize, usize) {
        let base = self
            .offsets
            .iter()
            .rposition(|&off| off <= k)
            .expect("offsets start at 0");
        (base, k - self.offsets[base])
    }

    /// First-coordinate embedding: a base element becomes the join of every
    /// fiber atom over its base atoms.
    pub fn embed_base(&self, b: Element) -> Element {
        assert_eq!(b.universe(), self.base_atom_count(), "foreign base element");
        let mut mask = 0u64;
        for i in 0..self.base_atom_count() {
            if b.mask() >> i & 1 == 1 {
                for j in 0..self.fiber_sizes[i] {
                    mask |= 1 << self.atom_index(i, j);
                }
            }
        }
        Element::from_mask(mask, self.algebra.atom_count())
    }

    /// The fiber component of an iteration element over one base atom, as
    /// an element of that fiber's algebra.
    pub fn fiber_component(&self, e: Element, base_atom: usize) -> Element {
        assert_eq!(e.universe(), self.algebra.atom_count(), "foreign element");
        let mut mask = 0u64;
        for j in 0..self.fiber_sizes[base_atom] {
            if e.mask() >> self.atom_index(base_atom, j) & 1 == 1 {
                mask |= 1 << j;
            }
        }
        Element::from_mask(mask, self.fiber_sizes[base_atom])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: usize) -> Algebra {
        Algebra::new(n).unwrap()
    }

    #[test]
    fn two_by_two_product() {
        let b0 = alg(2);
        let b1 = alg(2);
        let p = product_algebra(&b0, &b1).unwrap();
        assert_eq!(p.algebra().atom_count(), 4);
        // (b×1) ∧ (1×c) = b×c on atoms.
        let b = b0.atom(0);
        let c = b1.atom(1);
        let rect = p.embed_left(b) & p.embed_right(c);
        assert_eq!(rect, p.rectangle(b, c));
        assert_eq!(rect.atom_indices(), vec![p.atom_index(0, 1)]);
    }

    #[test]
    fn product_with_trivial_factor() {
        let b0 = alg(3);
        let unit = alg(1);
        let p = product_algebra(&b0, &unit).unwrap();
        assert_eq!(p.algebra().atom_count(), 3);
        for e in b0.elements() {
            assert_eq!(p.embed_left(e).mask(), e.mask());
        }
    }

    #[test]
    fn product_cap_rejection() {
        let b = alg(16);
        assert!(matches!(
            product_algebra(&b, &b),
            Err(KernelError::AtomCapExceeded { requested: 256, .. })
        ));
    }

    #[test]
    fn iteration_sizes() {
        let b0 = alg(2);
        let fibers = vec![alg(2), alg(3)];
        let it = iteration_algebra(&b0, &fibers).unwrap();
        assert_eq!(it.algebra().atom_count(), 5);
        assert_eq!(it.atom_pair(0), (0, 0));
        assert_eq!(it.atom_pair(2), (1, 0));
        assert_eq!(it.atom_pair(4), (1, 2));
    }

    #[test]
    fn iteration_degenerate_cases() {
        // All fibers trivial → base.
        let b0 = alg(3);
        let it = iteration_algebra(&b0, &vec![alg(1), alg(1), alg(1)]).unwrap();
        assert_eq!(it.algebra().atom_count(), 3);
        for e in b0.elements() {
            assert_eq!(it.embed_base(e).mask(), e.mask());
        }
        // One-atom base → the single fiber.
        let it = iteration_algebra(&alg(1), &vec![alg(4)]).unwrap();
        assert_eq!(it.algebra().atom_count(), 4);
    }

    #[test]
    fn embed_base_meets_fiber_components() {
        let b0 = alg(2);
        let fibers = vec![alg(2), alg(3)];
        let it = iteration_algebra(&b0, &fibers).unwrap();
        let e = it.embed_base(b0.atom(1));
        assert_eq!(it.fiber_component(e, 1), fibers[1].one());
        assert_eq!(it.fiber_component(e, 0), fibers[0].zero());
    }
}

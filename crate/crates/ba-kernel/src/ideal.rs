//! Ideals, their closure laws, quotient algebras, and the small/local
//! constructions over a maximal antichain.

use std::collections::BTreeSet;

use crate::{Algebra, Antichain, Element, KernelError, Result};

/// An ideal of a finite algebra, in one of two presentations.
///
/// Principal: `I = {b : b ≤ generator}`, proper iff the generator is not 1.
/// Every honest ideal of a finite algebra is principal, so the explicit-set
/// presentation exists for the degenerate finite analogue of "small":
/// `{b : b ≤ ∨A₀ for some proper A₀ ⊊ A}` is downward closed but, for
/// `|A| ≥ 2`, not closed under pairwise joins, and therefore has no
/// generator. Such families are constructed successfully, flagged by
/// [`IdealLaws::join_closed`], and rejected by [`quotient`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    universe: usize,
    kind: IdealKind,
    /// Report label for the finite analogues of size-bounded constructions.
    degenerate_finite_analogue: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum IdealKind {
    Principal { generator: Element },
    Explicit { members: BTreeSet<Element> },
}

/// Closure-law report for one ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealLaws {
    pub contains_zero: bool,
    /// 1 ∉ I.
    pub proper: bool,
    pub downward_closed: bool,
    pub join_closed: bool,
    /// Construction came from a size-bounded definition whose finite
    /// reading degenerates; reports must carry this label.
    pub degenerate_finite_analogue: bool,
}

impl IdealLaws {
    /// The four laws of an honest proper ideal.
    pub fn all(self) -> bool {
        self.contains_zero && self.proper && self.downward_closed && self.join_closed
    }
}

impl Ideal {
    /// Principal ideal `{b : b ≤ generator}`. Improper (generator = 1) is
    /// constructible so that its rejection can be observed downstream.
    pub fn principal(algebra: &Algebra, generator: Element) -> Result<Self> {
        if !algebra.contains(generator) {
            return Err(KernelError::MixedAlgebras {
                left: algebra.atom_count(),
                right: generator.universe(),
            });
        }
        Ok(Ideal {
            universe: algebra.atom_count(),
            kind: IdealKind::Principal { generator },
            degenerate_finite_analogue: false,
        })
    }

    /// Explicit downward-closed member family. Requires 0 ∈ I, 1 ∉ I, and
    /// downward closure; join closure is diagnosed, not required.
    pub fn explicit<I: IntoIterator<Item = Element>>(algebra: &Algebra, members: I) -> Result<Self> {
        let members: BTreeSet<Element> = members.into_iter().collect();
        for &m in &members {
            if !algebra.contains(m) {
                return Err(KernelError::MixedAlgebras {
                    left: algebra.atom_count(),
                    right: m.universe(),
                });
            }
            if m.is_one() {
                return Err(KernelError::ImproperIdeal);
            }
        }
        if !members.contains(&algebra.zero()) {
            return Err(KernelError::NotIdeal("0 missing".into()));
        }
        for &m in &members {
            for below in algebra.elements() {
                if below.leq(m) && !members.contains(&below) {
                    return Err(KernelError::NotIdeal(format!(
                        "not downward closed: {below:?} ≤ {m:?} is missing"
                    )));
                }
            }
        }
        Ok(Ideal {
            universe: algebra.atom_count(),
            kind: IdealKind::Explicit { members },
            degenerate_finite_analogue: false,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, b: Element) -> bool {
        if b.universe() != self.universe {
            return false;
        }
        match &self.kind {
            IdealKind::Principal { generator } => b.leq(*generator),
            IdealKind::Explicit { members } => members.contains(&b),
        }
    }

    /// Principal generator, when this presentation has one.
    pub fn generator(&self) -> Option<Element> {
        match &self.kind {
            IdealKind::Principal { generator } => Some(*generator),
            IdealKind::Explicit { .. } => None,
        }
    }

    /// Every member, materialized.
    pub fn members(&self, algebra: &Algebra) -> BTreeSet<Element> {
        match &self.kind {
            IdealKind::Principal { generator } => algebra
                .elements()
                .filter(|b| b.leq(*generator))
                .collect(),
            IdealKind::Explicit { members } => members.clone(),
        }
    }

    pub fn is_proper(&self) -> bool {
        match &self.kind {
            IdealKind::Principal { generator } => !generator.is_one(),
            // Explicit construction rejects 1 up front.
            IdealKind::Explicit { .. } => true,
        }
    }

    /// `a =_I b`: the symmetric difference lies in the ideal.
    pub fn congruent(&self, a: Element, b: Element) -> bool {
        self.contains(a.sym_diff(b))
    }

    /// `a ≤_I b`: `a − b` lies in the ideal.
    pub fn leq_mod(&self, a: Element, b: Element) -> bool {
        self.contains(a.minus(b))
    }

    /// Check all four closure laws against the owning algebra.
    pub fn validate(&self, algebra: &Algebra) -> IdealLaws {
        let members = self.members(algebra);
        let contains_zero = members.contains(&algebra.zero());
        let proper = !members.contains(&algebra.one());
        let downward_closed = members.iter().all(|&m| {
            algebra
                .elements()
                .all(|below| !below.leq(m) || members.contains(&below))
        });
        let join_closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| members.contains(&(a | b))));
        IdealLaws {
            contains_zero,
            proper,
            downward_closed,
            join_closed,
            degenerate_finite_analogue: self.degenerate_finite_analogue,
        }
    }

    pub fn is_degenerate_finite_analogue(&self) -> bool {
        self.degenerate_finite_analogue
    }
}

/// The finite analogue of the size-bounded ideal over a maximal antichain:
/// everything below the join of a proper subfamily `A₀ ⊊ A`. Not join-closed
/// once `|A| ≥ 2`, hence flagged degenerate; see [`Ideal`].
pub fn small_ideal(algebra: &Algebra, a: &Antichain) -> Result<Ideal> {
    if a.universe() != algebra.atom_count() {
        return Err(KernelError::MixedAlgebras {
            left: algebra.atom_count(),
            right: a.universe(),
        });
    }
    if !a.is_maximal() {
        return Err(KernelError::NotMaximal("small ideal needs a maximal antichain".into()));
    }
    let every_proper_subfamily: Vec<u64> = (0..(1u64 << a.len()) - 1).collect();
    let mut ideal = local_ideal_from_masks(algebra, a, &every_proper_subfamily)?;
    ideal.degenerate_finite_analogue = true;
    Ok(ideal)
}

/// Ideal generated by a family `J` of index subsets of a maximal antichain:
/// everything below `∨A₀` for some `A₀ ∈ J`. `J` must contain ∅, be
/// downward closed under ⊆, and exclude the full index set; union closure
/// of `J` (which the join closure of the result mirrors) is diagnosed via
/// [`Ideal::validate`], not required.
pub fn local_ideal(algebra: &Algebra, a: &Antichain, j_family: &[Vec<usize>]) -> Result<Ideal> {
    let mut masks = Vec::with_capacity(j_family.len());
    for subset in j_family {
        let mut mask = 0u64;
        for &i in subset {
            if i >= a.len() {
                return Err(KernelError::NotIdeal(format!(
                    "J member index {i} out of range for a {}-element antichain",
                    a.len()
                )));
            }
            mask |= 1 << i;
        }
        masks.push(mask);
    }
    local_ideal_from_masks(algebra, a, &masks)
}

fn local_ideal_from_masks(algebra: &Algebra, a: &Antichain, j_masks: &[u64]) -> Result<Ideal> {
    if a.universe() != algebra.atom_count() {
        return Err(KernelError::MixedAlgebras {
            left: algebra.atom_count(),
            right: a.universe(),
        });
    }
    if !a.is_maximal() {
        return Err(KernelError::NotMaximal("local ideal needs a maximal antichain".into()));
    }
    let mut j: BTreeSet<u64> = j_masks.iter().copied().collect();
    if j.is_empty() {
        j.insert(0);
    }
    if !j.contains(&0) {
        return Err(KernelError::NotIdeal("J must contain the empty subfamily".into()));
    }
    let full = (1u64 << a.len()) - 1;
    if j.contains(&full) {
        return Err(KernelError::ImproperIdeal);
    }
    for &s in &j {
        // Downward closure under ⊆ , checked one removed index at a time.
        for i in 0..a.len() {
            if s >> i & 1 == 1 && !j.contains(&(s & !(1 << i))) {
                return Err(KernelError::NotIdeal(
                    "J is not downward closed under subset".into(),
                ));
            }
        }
    }

    let mut members = BTreeSet::new();
    for &s in &j {
        let bound = a
            .elements()
            .iter()
            .enumerate()
            .filter(|(i, _)| s >> i & 1 == 1)
            .fold(algebra.zero(), |acc, (_, &e)| acc | e);
        for b in algebra.elements() {
            if b.leq(bound) {
                members.insert(b);
            }
        }
    }
    Ideal::explicit(algebra, members)
}

/// The quotient algebra `B/I` for a principal proper ideal, with its
/// projection.
///
/// The quotient is the powerset of the atoms outside the generator;
/// `π(a) = a − generator`, reindexed. `π` is a surjective homomorphism and
/// `π(a) = π(b)` iff `a △ b ∈ I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    algebra: Algebra,
    kept_atoms: Vec<usize>,
    source_universe: usize,
}

impl Quotient {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// Source-algebra indices of the atoms that survive, in atom order.
    pub fn kept_atoms(&self) -> &[usize] {
        &self.kept_atoms
    }

    /// The projection `π`.
    pub fn project(&self, a: Element) -> Element {
        assert_eq!(a.universe(), self.source_universe, "foreign element");
        let mut mask = 0u64;
        for (k, &i) in self.kept_atoms.iter().enumerate() {
            if a.mask() >> i & 1 == 1 {
                mask |= 1 << k;
            }
        }
        Element::from_mask(mask, self.kept_atoms.len())
    }

    /// The canonical section: a quotient element pulled back to the join of
    /// its surviving atoms.
    pub fn lift(&self, q: Element) -> Element {
        assert_eq!(q.universe(), self.kept_atoms.len(), "foreign element");
        let mut mask = 0u64;
        for (k, &i) in self.kept_atoms.iter().enumerate() {
            if q.mask() >> k & 1 == 1 {
                mask |= 1 << i;
            }
        }
        Element::from_mask(mask, self.source_universe)
    }
}

/// Quotient by an ideal. Requires a proper ideal with a generator: explicit
/// families that are join-closed use their join; degenerate families are
/// rejected as not-an-ideal.
pub fn quotient(algebra: &Algebra, ideal: &Ideal) -> Result<Quotient> {
    if ideal.universe() != algebra.atom_count() {
        return Err(KernelError::MixedAlgebras {
            left: algebra.atom_count(),
            right: ideal.universe(),
        });
    }
    let generator = match ideal.generator() {
        Some(g) => g,
        None => {
            let laws = ideal.validate(algebra);
            if !laws.join_closed {
                return Err(KernelError::NotJoinClosed);
            }
            // Join-closed downward-closed family in a finite algebra is
            // principal: the generator is the join of all members.
            let mut acc = algebra.zero();
            for m in ideal.members(algebra) {
                acc = acc | m;
            }
            acc
        }
    };
    if generator.is_one() {
        return Err(KernelError::ImproperIdeal);
    }
    let kept_atoms: Vec<usize> = (0..algebra.atom_count())
        .filter(|&i| generator.mask() >> i & 1 == 0)
        .collect();
    let labels = kept_atoms.iter().map(|&i| algebra.label(i)).collect();
    let quotient_algebra = Algebra::labeled(labels)?;
    Ok(Quotient {
        algebra: quotient_algebra,
        kept_atoms,
        source_universe: algebra.atom_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: usize) -> Algebra {
        Algebra::new(n).unwrap()
    }

    #[test]
    fn quotient_of_three_atoms_by_one() {
        let b = alg(3);
        let i = Ideal::principal(&b, b.atom(0)).unwrap();
        let q = quotient(&b, &i).unwrap();
        assert_eq!(q.algebra().atom_count(), 2);
        // π(generator) = 0.
        assert!(q.project(b.atom(0)).is_zero());
        // π is a homomorphism on a spot pair.
        let x = b.element_from_atoms(&[0, 1]).unwrap();
        let y = b.element_from_atoms(&[1, 2]).unwrap();
        assert_eq!(q.project(x) & q.project(y), q.project(x & y));
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let b = alg(3);
        let i = Ideal::principal(&b, b.zero()).unwrap();
        let q = quotient(&b, &i).unwrap();
        assert_eq!(q.algebra().atom_count(), 3);
        for e in b.elements() {
            assert_eq!(q.project(e).mask(), e.mask());
            assert_eq!(q.lift(q.project(e)), e);
        }
    }

    #[test]
    fn improper_ideal_rejected() {
        let b = alg(2);
        let i = Ideal::principal(&b, b.one()).unwrap();
        assert!(!i.is_proper());
        assert_eq!(quotient(&b, &i).unwrap_err(), KernelError::ImproperIdeal);
    }

    #[test]
    fn congruence_matches_symmetric_difference() {
        let b = alg(4);
        let g = b.element_from_atoms(&[0, 1]).unwrap();
        let i = Ideal::principal(&b, g).unwrap();
        let q = quotient(&b, &i).unwrap();
        for a in b.elements() {
            for c in b.elements() {
                assert_eq!(q.project(a) == q.project(c), i.congruent(a, c));
            }
        }
    }

    #[test]
    fn small_ideal_on_three_atoms() {
        let b = alg(3);
        let atoms = Antichain::atoms(&b);
        let i = small_ideal(&b, &atoms).unwrap();
        // Everything except 1 qualifies: each such element misses an atom.
        let members = i.members(&b);
        assert_eq!(members.len(), 7);
        assert!(!members.contains(&b.one()));
        let laws = i.validate(&b);
        assert!(laws.contains_zero && laws.proper && laws.downward_closed);
        assert!(!laws.join_closed, "finite analogue is not join closed");
        assert!(laws.degenerate_finite_analogue);
        assert_eq!(quotient(&b, &i).unwrap_err(), KernelError::NotJoinClosed);
    }

    #[test]
    fn small_ideal_on_unit_antichain_is_zero() {
        let b = alg(2);
        let unit = Antichain::unit(&b);
        let i = small_ideal(&b, &unit).unwrap();
        assert_eq!(i.members(&b).len(), 1);
        assert!(i.validate(&b).all());
    }

    #[test]
    fn local_ideal_examples() {
        let b = alg(2);
        let atoms = Antichain::atoms(&b);
        // J = {∅} → {0}.
        let zero_ideal = local_ideal(&b, &atoms, &[vec![]]).unwrap();
        assert_eq!(zero_ideal.members(&b).len(), 1);
        assert!(zero_ideal.validate(&b).all());
        // J = P(A) ∖ {A} → {0, {a0}, {a1}}.
        let j: Vec<Vec<usize>> = vec![vec![], vec![0], vec![1]];
        let i = local_ideal(&b, &atoms, &j).unwrap();
        let members = i.members(&b);
        assert_eq!(
            members.into_iter().collect::<Vec<_>>(),
            vec![b.zero(), b.atom(0), b.atom(1)]
        );
        assert!(!i.validate(&b).join_closed);
    }

    #[test]
    fn local_ideal_input_validation() {
        let b = alg(2);
        let atoms = Antichain::atoms(&b);
        // Full family present → improper.
        assert_eq!(
            local_ideal(&b, &atoms, &[vec![], vec![0], vec![1], vec![0, 1]]).unwrap_err(),
            KernelError::ImproperIdeal
        );
        // Missing ∅ outright.
        assert!(local_ideal(&b, &atoms, &[vec![0]]).is_err());
        // Not downward closed under ⊆ (on a 3-block antichain).
        let b3 = alg(3);
        let atoms3 = Antichain::atoms(&b3);
        assert!(matches!(
            local_ideal(&b3, &atoms3, &[vec![], vec![0, 1]]),
            Err(KernelError::NotIdeal(_))
        ));
    }

    #[test]
    fn explicit_requires_downward_closure() {
        let b = alg(2);
        let err = Ideal::explicit(&b, vec![b.zero(), b.element_from_atoms(&[0]).unwrap()]);
        assert!(err.is_ok());
        let err = Ideal::explicit(&b, vec![b.element_from_atoms(&[0]).unwrap()]);
        assert!(err.is_err());
    }
}

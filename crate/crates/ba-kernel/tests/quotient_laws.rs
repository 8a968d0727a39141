//! Quotient projections: surjective homomorphisms with kernel exactly the
//! ideal, congruence matching symmetric difference, exhaustive through 5
//! atoms. Ideal closure laws asserted alongside.

use std::collections::BTreeSet;

use ba_kernel::{quotient, Algebra, Antichain, Ideal};

#[test]
fn quotient_laws_exhaustive() {
    for n in 1..=5 {
        let algebra = Algebra::new(n).unwrap();
        for generator in algebra.elements() {
            if generator.is_one() {
                continue; // improper; covered below
            }
            let ideal = Ideal::principal(&algebra, generator).unwrap();
            assert!(ideal.validate(&algebra).all(), "laws fail for {generator:?}");
            let q = quotient(&algebra, &ideal).unwrap();

            // Homomorphism.
            for a in algebra.elements() {
                for b in algebra.elements() {
                    assert_eq!(q.project(a) & q.project(b), q.project(a & b));
                    assert_eq!(q.project(a) | q.project(b), q.project(a | b));
                }
                assert_eq!(!q.project(a), q.project(!a));
            }

            // Kernel is exactly the ideal.
            for a in algebra.elements() {
                assert_eq!(q.project(a).is_zero(), ideal.contains(a));
            }

            // Surjective: every quotient element is hit.
            let image: BTreeSet<_> = algebra.elements().map(|a| q.project(a)).collect();
            assert_eq!(image.len(), 1 << q.algebra().atom_count());

            // Congruence ⇔ symmetric difference in the ideal.
            for a in algebra.elements() {
                for b in algebra.elements() {
                    assert_eq!(q.project(a) == q.project(b), ideal.congruent(a, b));
                }
            }
        }
    }
}

#[test]
fn improper_rejection_is_uniform() {
    for n in 1..=4 {
        let algebra = Algebra::new(n).unwrap();
        let improper = Ideal::principal(&algebra, algebra.one()).unwrap();
        assert!(quotient(&algebra, &improper).is_err());
    }
}

#[test]
fn small_ideal_laws_across_antichains() {
    // Small ideals keep three of the four laws; join closure only survives
    // on the one-element antichain. The degenerate label is always set.
    for n in 2..=4 {
        let algebra = Algebra::new(n).unwrap();
        for chain in Antichain::all_maximal(&algebra) {
            let ideal = ba_kernel::small_ideal(&algebra, &chain).unwrap();
            let laws = ideal.validate(&algebra);
            assert!(laws.contains_zero && laws.proper && laws.downward_closed);
            assert!(laws.degenerate_finite_analogue);
            assert_eq!(laws.join_closed, chain.len() == 1, "antichain {chain:?}");
        }
    }
}

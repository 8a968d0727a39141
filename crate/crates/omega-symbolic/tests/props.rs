//! Randomized invariants: the symbolic Boolean operations agree with
//! pointwise membership on a sound-and-complete window, the ultrafilter
//! decider is a two-valued homomorphism, and comparison sets of
//! eventually affine functions are finite or cofinite.

use omega_symbolic::{comparison_lt, u_membership, EAFunction, SymbolicUltrapower, UPSet};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn random_upset<R: Rng>(rng: &mut R) -> UPSet {
    let threshold = rng.gen_range(0..8u64);
    let period = rng.gen_range(1..10u64);
    let pattern: Vec<u64> = (0..period).filter(|_| rng.gen_bool(0.4)).collect();
    let prefix: Vec<u64> = (0..threshold).filter(|_| rng.gen_bool(0.4)).collect();
    UPSet::new(threshold, period, &pattern, &prefix)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The spec window: beyond it an ultimately periodic disagreement would
/// have already shown up.
fn window(a: &UPSet, b: &UPSet) -> u64 {
    let l = a.period() / gcd(a.period(), b.period()) * b.period();
    2 * l + a.threshold().max(b.threshold()) + 4
}

#[test]
fn operations_agree_with_pointwise_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0e6a);
    for _ in 0..2000 {
        let a = random_upset(&mut rng);
        let b = random_upset(&mut rng);
        let meet = a.meet(&b);
        let join = a.join(&b);
        let comp = a.complement();
        for n in 0..window(&a, &b) {
            assert_eq!(meet.contains(n), a.contains(n) && b.contains(n), "meet at {n}");
            assert_eq!(join.contains(n), a.contains(n) || b.contains(n), "join at {n}");
            assert_eq!(comp.contains(n), !a.contains(n), "complement at {n}");
        }
    }
}

#[test]
fn normalization_is_stable_and_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0e6b);
    for _ in 0..2000 {
        let a = random_upset(&mut rng);
        // Re-presenting the same membership data reproduces the value.
        let blown = UPSet::new(
            a.threshold() + 3,
            a.period() * 2,
            &a.pattern()
                .iter()
                .flat_map(|&r| [r, r + a.period()])
                .collect::<Vec<_>>(),
            &(0..a.threshold() + 3)
                .filter(|&n| a.contains(n))
                .collect::<Vec<_>>(),
        );
        assert_eq!(blown, a, "blow-up changed the set");
    }
}

#[test]
fn decider_is_a_two_valued_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0e6c);
    for _ in 0..10_000 {
        let a = random_upset(&mut rng);
        let b = random_upset(&mut rng);
        let ua = u_membership(&a);
        let ub = u_membership(&b);
        assert_eq!(u_membership(&a.meet(&b)), ua && ub);
        assert_eq!(u_membership(&a.join(&b)), ua || ub);
        assert_eq!(u_membership(&a.complement()), !ua);
    }
}

#[test]
fn decider_is_nonprincipal() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0e6d);
    for _ in 0..500 {
        let n = rng.gen_range(0..100_000u64);
        assert!(!u_membership(&UPSet::singleton(n)));
    }
    // Any finite random set is small too.
    for _ in 0..500 {
        let elements: Vec<u64> = (0..rng.gen_range(0..6)).map(|_| rng.gen_range(0..50)).collect();
        assert!(!u_membership(&UPSet::finite(&elements)));
    }
}

fn random_eafunction<R: Rng>(rng: &mut R) -> EAFunction {
    let threshold = rng.gen_range(0..5u64);
    let slope = rng.gen_range(0..4u64);
    let low = if slope == 0 { 0 } else { -((slope * threshold) as i64) };
    let intercept = rng.gen_range(low..30);
    let exceptions: Vec<u64> = (0..threshold).map(|_| rng.gen_range(0..20)).collect();
    EAFunction::new(threshold, slope, intercept, &exceptions).expect("tail nonnegative")
}

#[test]
fn comparison_sets_are_finite_or_cofinite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0e6e);
    for _ in 0..3000 {
        let f = random_eafunction(&mut rng);
        let g = random_eafunction(&mut rng);
        let set = comparison_lt(&f, &g);
        assert!(
            set.is_finite() || set.is_cofinite(),
            "{f} vs {g} gave {set}"
        );
        // The symbolic set matches pointwise comparison on a window.
        for n in 0..set.threshold() + 8 {
            assert_eq!(set.contains(n), f.value(n) < g.value(n), "at {n}");
        }
    }
}

#[test]
fn random_families_are_totally_ordered() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0e6f);
    for _ in 0..60 {
        let functions: Vec<EAFunction> = (0..6).map(|_| random_eafunction(&mut rng)).collect();
        let up = SymbolicUltrapower::new(functions);
        let report = up.verify_order();
        assert!(report.ok(), "violation {:?} in {up}", report.violation);
    }
}

#[test]
fn embedding_preserves_order_but_is_not_cofinal() {
    let mut functions: Vec<EAFunction> = (0..15).map(EAFunction::constant).collect();
    functions.push(EAFunction::identity());
    let up = SymbolicUltrapower::new(functions);
    let id = 15;
    for k in 0..15usize {
        if k + 1 < 15 {
            assert!(up.lt(k, k + 1));
        }
        // Nothing standard reaches the identity class.
        assert!(up.lt(k, id));
    }
    assert!(up.verify_order().ok());
}

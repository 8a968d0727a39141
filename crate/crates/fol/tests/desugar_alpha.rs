//! Evaluation is invariant under desugaring and bound-variable renaming.
//!
//! Both transforms are purely syntactic, so the invariants must hold on
//! arbitrary structures, law-abiding or not; the tables here are random.

use std::collections::BTreeMap;

use ba_kernel::{Algebra, Element};
use fol::{boolean_value, BValuedStructure, Formula, FormulaGen, Signature};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sig() -> Signature {
    let mut s = Signature::membership();
    s.add_relation("R", 1).unwrap();
    s.add_function("g", 1).unwrap();
    s
}

fn random_element<R: Rng>(rng: &mut R, b: &Algebra) -> Element {
    let atoms: Vec<usize> = (0..b.atom_count()).filter(|_| rng.gen_bool(0.5)).collect();
    b.element_from_atoms(&atoms).unwrap()
}

/// Fully random tables, equality included (raw, possibly asymmetric).
fn random_structure<R: Rng>(rng: &mut R) -> BValuedStructure {
    let b = Algebra::new(rng.gen_range(1..=3)).unwrap();
    let names = ["p", "q", "r"];
    let mut s = BValuedStructure::new(b.clone(), sig(), &names).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let v = random_element(rng, &b);
            s.set_eq_raw(i, j, v).unwrap();
        }
        let v = random_element(rng, &b);
        s.set_relation("R", &[i], v).unwrap();
        for j in 0..3 {
            let v = random_element(rng, &b);
            s.set_relation("in", &[i, j], v).unwrap();
            let v = random_element(rng, &b);
            s.set_function("g", i, &[j], v).unwrap();
        }
    }
    s.set_relativized_pool(vec![0, 2]).unwrap();
    s
}

#[test]
fn desugar_and_renaming_preserve_values() {
    let gen = FormulaGen::new(sig(), &["p", "q", "r"], 3).with_vcheck();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0f01);
    let empty = BTreeMap::new();
    for round in 0..400 {
        let s = random_structure(&mut rng);
        let f = gen.sample(&mut rng);
        let direct = boolean_value(&s, &f, &empty).unwrap();
        let desugared = f.desugar();
        assert!(desugared.is_desugared());
        let via_basis = boolean_value(&s, &desugared, &empty).unwrap();
        assert_eq!(
            direct.value, via_basis.value,
            "round {round}: desugaring changed the value of {f}"
        );
        let renamed = f.rename_bound("w");
        let via_renamed = boolean_value(&s, &renamed, &empty).unwrap();
        assert_eq!(
            direct.value, via_renamed.value,
            "round {round}: renaming changed the value of {f}"
        );
        // The two transforms commute on values too.
        let both = boolean_value(&s, &renamed.desugar(), &empty).unwrap();
        assert_eq!(direct.value, both.value, "round {round}: combined transform");
    }
}

#[test]
fn desugaring_is_stable_under_renaming() {
    // Renaming then desugaring equals desugaring then renaming: the basis
    // rewrite touches no binders.
    let gen = FormulaGen::new(sig(), &["p", "q"], 3);
    let mut rng = ChaCha8Rng::seed_from_u64(0x0f02);
    for _ in 0..300 {
        let f = gen.sample(&mut rng);
        assert_eq!(f.rename_bound("w").desugar(), f.desugar().rename_bound("w"));
    }
}

#[test]
fn vcheck_marker_survives_desugaring() {
    let sig = sig();
    let f = fol::parse("(forall x. x in y) @Vcheck", &sig).unwrap();
    match f.desugar() {
        Formula::Vcheck(inner) => assert!(inner.is_desugared()),
        other => panic!("marker lost: {other:?}"),
    }
}

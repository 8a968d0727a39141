//! Mixtures: the glued name agrees with each ingredient below its
//! antichain element, exactly so for maximal antichains of pairwise
//! incompatible ingredients, and interpretation under a principal
//! ultrafilter picks out the ingredient whose block holds the atom.

mod common;

use ba_kernel::{Algebra, Antichain};
use common::{random_name, random_partition};
use names::{check_name, mix, val, AtomicEvaluator, Filter, HFSet};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

#[test]
fn two_atom_mixture_is_exact() {
    let b = Algebra::new(2).unwrap();
    let atoms = Antichain::atoms(&b);
    let empty = check_name(&b, &HFSet::empty());
    let one = check_name(&b, &HFSet::singleton(HFSet::empty()));
    let tau = mix(&atoms, &[empty.clone(), one.clone()]).unwrap();
    let mut ev = AtomicEvaluator::new(&b);
    assert_eq!(ev.eq(&tau, &empty).unwrap(), b.atom(0));
    assert_eq!(ev.eq(&tau, &one).unwrap(), b.atom(1));
}

#[test]
fn mixture_sits_above_each_block() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x317a);
    for round in 0..40 {
        let atoms = 1 + round % 3;
        let b = Algebra::new(atoms).unwrap();
        let mut blocks = random_partition(&b, &mut rng);
        // Dropping blocks keeps the family an antichain but not maximal.
        if blocks.len() > 1 && rng.gen_bool(0.5) {
            blocks.pop();
        }
        let antichain = Antichain::new(&b, blocks.clone()).unwrap();
        let names: Vec<_> = blocks
            .iter()
            .map(|_| random_name(&b, &mut rng, 2))
            .collect();
        let tau = mix(&antichain, &names).unwrap();
        let mut ev = AtomicEvaluator::new(&b);
        for (a, ingredient) in antichain.elements().iter().zip(&names) {
            let agree = ev.eq(&tau, ingredient).unwrap();
            assert!(
                a.leq(agree),
                "round {round}: block {} not below agreement {}",
                b.show(*a),
                b.show(agree)
            );
        }
    }
}

#[test]
fn maximal_antichain_of_distinct_check_names_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x317b);
    let frag = HFSet::all_up_to_rank(2);
    for round in 0..40 {
        let atoms = 2 + round % 2;
        let b = Algebra::new(atoms).unwrap();
        let blocks = random_partition(&b, &mut rng);
        let antichain = Antichain::new(&b, blocks.clone()).unwrap();
        assert!(antichain.is_maximal());
        // Distinct ground sets give pairwise equality value zero.
        let mut picks = frag.clone();
        picks.shuffle(&mut rng);
        let names: Vec<_> = picks
            .iter()
            .take(blocks.len())
            .map(|h| check_name(&b, h))
            .collect();
        let tau = mix(&antichain, &names).unwrap();
        let mut ev = AtomicEvaluator::new(&b);
        for (a, ingredient) in antichain.elements().iter().zip(&names) {
            assert_eq!(ev.eq(&tau, ingredient).unwrap(), *a, "round {round}");
        }
    }
}

#[test]
fn identical_ingredients_mix_to_the_same_name_everywhere() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x317c);
    for round in 0..20 {
        let b = Algebra::new(3).unwrap();
        let blocks = random_partition(&b, &mut rng);
        let antichain = Antichain::new(&b, blocks.clone()).unwrap();
        let tau = random_name(&b, &mut rng, 2);
        let names = vec![tau.clone(); blocks.len()];
        let mixed = mix(&antichain, &names).unwrap();
        let mut ev = AtomicEvaluator::new(&b);
        // The blocks cover the unit, so agreement joins to 1.
        assert!(ev.eq(&mixed, &tau).unwrap().is_one(), "round {round}");
    }
}

#[test]
fn principal_value_of_a_mixture_is_the_blocks_ingredient() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x317d);
    for round in 0..40 {
        let atoms = 1 + round % 3;
        let b = Algebra::new(atoms).unwrap();
        let blocks = random_partition(&b, &mut rng);
        let antichain = Antichain::new(&b, blocks.clone()).unwrap();
        let names: Vec<_> = blocks
            .iter()
            .map(|_| random_name(&b, &mut rng, 2))
            .collect();
        let tau = mix(&antichain, &names).unwrap();
        for z in 0..atoms {
            let u = Filter::at_atom(&b, z);
            let zatom = b.atom(z);
            let (a, ingredient) = antichain
                .elements()
                .iter()
                .zip(&names)
                .find(|(a, _)| zatom.leq(**a))
                .expect("partitions cover every atom");
            assert!(u.contains(*a));
            assert_eq!(
                val(&tau, &u),
                val(ingredient, &u),
                "round {round}, atom {z}"
            );
        }
    }
}

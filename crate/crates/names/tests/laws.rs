//! The atomic recursion must induce law-abiding structures: every pool,
//! over every small algebra, passes the full equality-law check.

mod common;

use ba_kernel::{Algebra, Antichain};
use common::random_name;
use names::{check_name, generic_name, mix, HFSet, NamePool};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assert_lawful(pool: &NamePool, label: &str) {
    let s = pool.structure().expect("structure builds");
    let report = fol::check_laws(&s).expect("check runs");
    assert!(
        report.passes(),
        "{label}: {} violation(s), first: {}",
        report.violations.len(),
        report.violations[0].describe(&s)
    );
}

#[test]
fn fragment_pools_are_lawful() {
    for atoms in 1..=3 {
        let b = Algebra::new(atoms).unwrap();
        for rank in 0..=2 {
            let pool = NamePool::new(&b, &[], rank).unwrap();
            assert_lawful(&pool, &format!("{atoms} atoms, fragment rank {rank}"));
        }
    }
}

#[test]
fn generic_name_pool_is_lawful() {
    for atoms in 1..=2 {
        let b = Algebra::new(atoms).unwrap();
        let pool = NamePool::new(&b, &[generic_name(&b)], 2).unwrap();
        assert_lawful(&pool, &format!("{atoms} atoms with the canonical filter name"));
    }
}

#[test]
fn random_name_pools_are_lawful() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a35);
    for round in 0..12 {
        let atoms = 1 + round % 3;
        let b = Algebra::new(atoms).unwrap();
        let seeds: Vec<_> = (0..3).map(|_| random_name(&b, &mut rng, 2)).collect();
        let pool = NamePool::new(&b, &seeds, 1).unwrap();
        assert_lawful(&pool, &format!("round {round}, {atoms} atoms"));
    }
}

#[test]
fn mixed_name_pool_is_lawful() {
    let b = Algebra::new(2).unwrap();
    let atoms = Antichain::atoms(&b);
    let tau = mix(
        &atoms,
        &[
            check_name(&b, &HFSet::empty()),
            check_name(&b, &HFSet::von_neumann(2)),
        ],
    )
    .unwrap();
    let pool = NamePool::new(&b, &[tau], 2).unwrap();
    assert_lawful(&pool, "pool seeded with a mixture");
}

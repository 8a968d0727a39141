#![allow(dead_code)]

//! Shared generators for the integration tests.

use ba_kernel::{Algebra, Element};
use names::{check_name, HFSet, Name};
use rand::prelude::*;

pub fn random_element<R: Rng>(algebra: &Algebra, rng: &mut R) -> Element {
    let all: Vec<Element> = algebra.elements().collect();
    all[rng.gen_range(0..all.len())]
}

/// A name of rank at most `depth + 1`: entries pair shallower random
/// names (or check names) with arbitrary values.
pub fn random_name<R: Rng>(algebra: &Algebra, rng: &mut R, depth: usize) -> Name {
    if depth == 0 || rng.gen_bool(0.3) {
        let frag = HFSet::all_up_to_rank(depth.min(2));
        let pick = &frag[rng.gen_range(0..frag.len())];
        return check_name(algebra, pick);
    }
    let k = rng.gen_range(0..=3);
    let entries = (0..k)
        .map(|_| {
            (
                random_name(algebra, rng, depth - 1),
                random_element(algebra, rng),
            )
        })
        .collect();
    Name::new(algebra, entries).expect("one algebra throughout")
}

/// A random partition of the unit: atoms grouped into nonempty blocks.
pub fn random_partition<R: Rng>(algebra: &Algebra, rng: &mut R) -> Vec<Element> {
    let n = algebra.atom_count();
    let blocks = rng.gen_range(1..=n);
    let mut assign: Vec<usize> = (0..n).map(|_| rng.gen_range(0..blocks)).collect();
    // Every block label 0..blocks must occur at least once.
    for b in 0..blocks {
        if !assign.contains(&b) {
            let i = rng.gen_range(0..n);
            assign[i] = b;
        }
    }
    let mut parts = Vec::new();
    for b in 0..blocks {
        let atoms: Vec<usize> = (0..n).filter(|&i| assign[i] == b).collect();
        if !atoms.is_empty() {
            parts.push(algebra.element_from_atoms(&atoms).expect("atoms in range"));
        }
    }
    parts
}

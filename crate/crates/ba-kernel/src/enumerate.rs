//! Exhaustive and sampled enumeration of the small structures the oracles
//! sweep over: set partitions (= maximal antichains of a powerset algebra)
//! and labeled posets.

use rand::Rng;

use crate::{Algebra, Antichain, Element, Poset, Result};

/// All partitions of `{0, …, n−1}` as block masks, in restricted-growth
/// order. Bell(5) = 52, Bell(6) = 203; callers stay small.
pub fn set_partitions(n: usize) -> Vec<Vec<u64>> {
    assert!(n >= 1 && n <= 12, "partition enumeration is for small n");
    let mut out = Vec::new();
    // Restricted growth strings: cell[i] ≤ 1 + max(cell[0..i]).
    let mut cell = vec![0usize; n];
    loop {
        let block_count = cell.iter().copied().max().unwrap() + 1;
        let mut blocks = vec![0u64; block_count];
        for (i, &c) in cell.iter().enumerate() {
            blocks[c] |= 1 << i;
        }
        out.push(blocks);

        // Advance the restricted growth string.
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let max_prefix = cell[..i].iter().copied().max().unwrap();
            if cell[i] <= max_prefix {
                cell[i] += 1;
                for c in cell[i + 1..].iter_mut() {
                    *c = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

impl Antichain {
    /// Every maximal antichain of the algebra. In a finite powerset algebra
    /// these are exactly the partitions of the atom set into nonempty
    /// blocks.
    pub fn all_maximal(algebra: &Algebra) -> Vec<Antichain> {
        set_partitions(algebra.atom_count())
            .into_iter()
            .map(|blocks| {
                let elements = blocks
                    .into_iter()
                    .map(|mask| Element::from_mask(mask, algebra.atom_count()))
                    .collect();
                Antichain::new(algebra, elements).expect("partition blocks form an antichain")
            })
            .collect()
    }
}

/// Every labeled poset on `n ≤ 5` nodes (nodes named `p0…`), enumerated by
/// choosing, for each unordered pair, one of `<`, `>`, or incomparable, and
/// keeping the transitive candidates.
pub fn labeled_posets(n: usize) -> Vec<Poset> {
    assert!(n >= 1 && n <= 5, "exhaustive poset enumeration is for n ≤ 5");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0u8; pairs.len()]; // 0: incomparable, 1: i<j, 2: j<i
    'next: loop {
        let mut strict = vec![[false; 5]; 5];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            match choice[k] {
                1 => strict[i][j] = true,
                2 => strict[j][i] = true,
                _ => {}
            }
        }
        let mut transitive = true;
        'check: for a in 0..n {
            for b in 0..n {
                if !strict[a][b] {
                    continue;
                }
                for c in 0..n {
                    if strict[b][c] && !strict[a][c] {
                        transitive = false;
                        break 'check;
                    }
                }
            }
        }
        if transitive {
            let mut leq = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if strict[a][b] {
                        leq.push((a, b));
                    }
                }
            }
            let nodes = (0..n).map(|i| format!("p{i}")).collect();
            out.push(Poset::new(nodes, &leq).expect("transitive antisymmetric relation"));
        }

        // Advance the mixed-radix counter.
        for k in 0..choice.len() {
            if choice[k] < 2 {
                choice[k] += 1;
                continue 'next;
            }
            choice[k] = 0;
        }
        return out;
    }
}

/// One random labeled poset on `n` nodes: orient a random subset of pairs
/// along a random permutation (guaranteeing acyclicity), then close
/// transitively inside `Poset::new`.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, edge_prob: f64) -> Result<Poset> {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut leq = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(edge_prob) {
                // order[i] sits below order[j].
                leq.push((order[i], order[j]));
            }
        }
    }
    let nodes = (0..n).map(|i| format!("p{i}")).collect();
    Poset::new(nodes, &leq)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        assert_eq!(set_partitions(1).len(), 1);
        assert_eq!(set_partitions(3).len(), 5);
        assert_eq!(set_partitions(5).len(), 52);
        assert_eq!(set_partitions(6).len(), 203);
    }

    #[test]
    fn partitions_are_maximal_antichains() {
        let b = Algebra::new(4).unwrap();
        let all = Antichain::all_maximal(&b);
        assert_eq!(all.len(), 15); // Bell(4)
        assert!(all.iter().all(Antichain::is_maximal));
        // Finest and coarsest both present.
        assert!(all.contains(&Antichain::atoms(&b)));
        assert!(all.contains(&Antichain::unit(&b)));
    }

    #[test]
    fn labeled_poset_counts() {
        // Known counts of partial orders on n labeled points.
        assert_eq!(labeled_posets(1).len(), 1);
        assert_eq!(labeled_posets(2).len(), 3);
        assert_eq!(labeled_posets(3).len(), 19);
        assert_eq!(labeled_posets(4).len(), 219);
        assert_eq!(labeled_posets(5).len(), 4231);
    }

    #[test]
    fn random_posets_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let p = random_poset(&mut rng, 6, 0.4).unwrap();
            assert_eq!(p.len(), 6);
        }
    }
}

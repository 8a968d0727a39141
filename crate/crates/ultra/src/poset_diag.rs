//! Poset-side diagnostics: split maximal antichains, weak decision by a
//! filter of conditions, and the independent regular-open comparison.

use std::collections::BTreeSet;

use ba_kernel::{set_partitions, Poset};
use names::Filter;

use crate::{Result, UltraError};

/// A maximal antichain of conditions split into disjoint nonempty pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitAntichain {
    pub antichain: Vec<usize>,
    pub pieces: Vec<Vec<usize>>,
}

impl SplitAntichain {
    pub fn new(poset: &Poset, antichain: Vec<usize>, pieces: Vec<Vec<usize>>) -> Result<Self> {
        if !is_maximal_antichain(poset, &antichain) {
            return Err(UltraError::BadInput(
                "split base is not a maximal antichain".to_string(),
            ));
        }
        let mut seen = BTreeSet::new();
        for piece in &pieces {
            if piece.is_empty() {
                return Err(UltraError::BadInput("empty split piece".to_string()));
            }
            for &q in piece {
                if !seen.insert(q) {
                    return Err(UltraError::BadInput(
                        "split pieces overlap".to_string(),
                    ));
                }
            }
        }
        if seen != antichain.iter().copied().collect() {
            return Err(UltraError::BadInput(
                "split pieces do not cover the antichain".to_string(),
            ));
        }
        Ok(SplitAntichain { antichain, pieces })
    }
}

fn is_antichain(poset: &Poset, nodes: &[usize]) -> bool {
    for (k, &i) in nodes.iter().enumerate() {
        for &j in &nodes[..k] {
            if poset.compatible(i, j) {
                return false;
            }
        }
    }
    true
}

fn is_maximal_antichain(poset: &Poset, nodes: &[usize]) -> bool {
    is_antichain(poset, nodes)
        && (0..poset.len()).all(|p| nodes.iter().any(|&q| poset.compatible(p, q)))
}

/// Every maximal antichain of the poset, by subset sweep.
pub fn enumerate_maximal_antichains(poset: &Poset) -> Vec<Vec<usize>> {
    let n = poset.len();
    let mut out = Vec::new();
    for mask in 1u64..1 << n {
        let nodes: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if is_maximal_antichain(poset, &nodes) {
            out.push(nodes);
        }
    }
    out
}

/// True iff the node set is a filter of conditions: nonempty, upward
/// closed, downward directed.
pub fn is_condition_filter(poset: &Poset, nodes: &[usize]) -> bool {
    if nodes.is_empty() {
        return false;
    }
    let set: BTreeSet<usize> = nodes.iter().copied().collect();
    for &p in &set {
        for q in 0..poset.len() {
            if poset.leq(p, q) && !set.contains(&q) {
                return false;
            }
        }
    }
    for &p in &set {
        for &q in &set {
            if !(0..poset.len()).any(|r| set.contains(&r) && poset.leq(r, p) && poset.leq(r, q)) {
                return false;
            }
        }
    }
    true
}

/// Filters of conditions that no larger filter extends.
pub fn enumerate_maximal_filters(poset: &Poset) -> Vec<Vec<usize>> {
    let n = poset.len();
    let mut filters: Vec<u64> = Vec::new();
    for mask in 1u64..1 << n {
        let nodes: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if is_condition_filter(poset, &nodes) {
            filters.push(mask);
        }
    }
    filters
        .iter()
        .filter(|&&m| !filters.iter().any(|&other| other != m && other & m == m))
        .map(|&m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Weak decision: some condition in the filter is incompatible with every
/// antichain member outside a single piece.
pub fn weakly_decides(poset: &Poset, filter_nodes: &[usize], split: &SplitAntichain) -> bool {
    filter_nodes.iter().any(|&f| {
        (0..split.pieces.len()).any(|n| {
            split
                .antichain
                .iter()
                .filter(|q| !split.pieces[n].contains(q))
                .all(|&q| !poset.compatible(f, q))
        })
    })
}

/// All two-piece splits of one maximal antichain.
pub fn two_splits(antichain: &[usize]) -> Vec<SplitAntichain> {
    let k = antichain.len();
    let mut out = Vec::new();
    // Smallest member stays in piece 0, so each unordered split appears once.
    for mask in 0u64..1 << (k.saturating_sub(1)) {
        let mut left = vec![antichain[0]];
        let mut right = Vec::new();
        for i in 1..k {
            if mask >> (i - 1) & 1 == 1 {
                right.push(antichain[i]);
            } else {
                left.push(antichain[i]);
            }
        }
        if !right.is_empty() {
            out.push(SplitAntichain {
                antichain: antichain.to_vec(),
                pieces: vec![left, right],
            });
        }
    }
    out
}

/// The finitely-many-pieces analogue of the countably split case. Every
/// run of it here is a finite shadow and says so.
#[derive(Debug, Clone)]
pub struct CountableShadow {
    pub partitions_checked: usize,
    pub decided: Vec<bool>,
    pub all_decided: bool,
    pub finite_shadow: bool,
}

#[derive(Debug, Clone)]
pub struct PosetDiagnostics {
    pub splits: Vec<SplitAntichain>,
    pub decided: Vec<bool>,
    pub all_decided: bool,
    pub ro_ultra: bool,
    pub theorem_matches: bool,
    pub countable: CountableShadow,
}

/// Runs the decision sweep for a filter of conditions and compares the
/// outcome with ultrafilterhood of its upward closure in the completion,
/// computed independently through the regular-open algebra.
pub fn poset_diagnostics(poset: &Poset, filter_nodes: &[usize]) -> Result<PosetDiagnostics> {
    if !is_condition_filter(poset, filter_nodes) {
        return Err(UltraError::BadInput(
            "node set is not a filter of conditions".to_string(),
        ));
    }

    let antichains = enumerate_maximal_antichains(poset);
    let mut splits = Vec::new();
    for a in &antichains {
        splits.extend(two_splits(a));
    }
    let decided: Vec<bool> = splits
        .iter()
        .map(|s| weakly_decides(poset, filter_nodes, s))
        .collect();
    let all_decided = decided.iter().all(|&d| d);

    let ro = poset.ro_completion()?;
    let algebra = ro.algebra();
    let mut members = BTreeSet::new();
    for u in algebra.elements() {
        if filter_nodes.iter().any(|&f| ro.embed(f).leq(u)) {
            members.insert(u);
        }
    }
    let ro_ultra = Filter::from_members(algebra, members)?.is_ultra();
    let theorem_matches = ro_ultra == all_decided;

    let mut partitions_checked = 0;
    let mut countable_decided = Vec::new();
    for a in &antichains {
        for blocks in set_partitions(a.len()) {
            if blocks.len() < 2 {
                continue;
            }
            let pieces: Vec<Vec<usize>> = blocks
                .iter()
                .map(|&b| {
                    (0..a.len())
                        .filter(|i| b >> i & 1 == 1)
                        .map(|i| a[i])
                        .collect()
                })
                .collect();
            let split = SplitAntichain {
                antichain: a.clone(),
                pieces,
            };
            partitions_checked += 1;
            countable_decided.push(weakly_decides(poset, filter_nodes, &split));
        }
    }
    let countable_all = countable_decided.iter().all(|&d| d);
    Ok(PosetDiagnostics {
        splits,
        decided,
        all_decided,
        ro_ultra,
        theorem_matches,
        countable: CountableShadow {
            partitions_checked,
            decided: countable_decided,
            all_decided: countable_all,
            finite_shadow: true,
        },
    })
}

//! Finite posets, separativity, and regular-open completions.
//!
//! The completion identifies regular open sets of a finite poset with sets
//! of minimal elements; `ro_oracle` is the definitional fallback that
//! enumerates every downward-closed set and tests `U = int(cl(U))` in the
//! cone topology. The two must agree, and tests hold them to that.

use crate::{Algebra, Element, KernelError, Result};

/// Node limit for the definitional oracle (2^n subset enumeration).
const ORACLE_NODE_LIMIT: usize = 16;

/// A finite poset. The input `leq` pairs are generators: the constructor
/// takes the reflexive-transitive closure and rejects antisymmetry
/// violations (cycles through distinct nodes).
///
/// Downward cones `{q : q ≤ p}` are the basic opens of the cone topology,
/// so open = downward-closed throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    nodes: Vec<String>,
    below: Vec<u64>, // below[i] = mask of j with j ≤ i, including i
}

impl Poset {
    pub fn new(nodes: Vec<String>, leq: &[(usize, usize)]) -> Result<Self> {
        let n = nodes.len();
        if n == 0 {
            return Err(KernelError::NotPartialOrder("no nodes".into()));
        }
        if n > 60 {
            return Err(KernelError::TooLarge(format!("{n} poset nodes")));
        }
        let mut rel = vec![0u64; n]; // rel[j] = mask of i with i ≤ j
        for (j, row) in rel.iter_mut().enumerate() {
            *row |= 1 << j;
        }
        for &(p, q) in leq {
            if p >= n || q >= n {
                return Err(KernelError::NotPartialOrder(format!(
                    "pair ({p},{q}) out of range for {n} nodes"
                )));
            }
            rel[q] |= 1 << p;
        }
        // Transitive closure: i ≤ k and k ≤ j imply i ≤ j.
        loop {
            let mut changed = false;
            for j in 0..n {
                let mut row = rel[j];
                for k in 0..n {
                    if rel[j] >> k & 1 == 1 {
                        row |= rel[k];
                    }
                }
                if row != rel[j] {
                    rel[j] = row;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rel[j] >> i & 1 == 1 && rel[i] >> j & 1 == 1 {
                    return Err(KernelError::NotPartialOrder(format!(
                        "cycle through {} and {}",
                        nodes[i], nodes[j]
                    )));
                }
            }
        }
        Ok(Poset { nodes, below: rel })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_name(&self, i: usize) -> &str {
        &self.nodes[i]
    }

    /// `i ≤ j` in the closed order.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[j] >> i & 1 == 1
    }

    /// Mask of nodes `≤ i` (the downward cone).
    pub fn cone(&self, i: usize) -> u64 {
        self.below[i]
    }

    /// Nodes with nothing strictly below them.
    pub fn minimal_nodes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.below[i] == 1 << i).collect()
    }

    /// Two nodes are compatible iff they share a lower bound.
    pub fn compatible(&self, i: usize, j: usize) -> bool {
        self.below[i] & self.below[j] != 0
    }

    /// Separative: whenever `q ≰ p` there is `r ≤ q` incompatible with `p`.
    /// Checked and reported, never required; non-separative posets simply
    /// identify more nodes in the completion.
    pub fn is_separative(&self) -> bool {
        let n = self.len();
        for p in 0..n {
            for q in 0..n {
                if self.leq(q, p) {
                    continue;
                }
                let witness = (0..n).any(|r| self.leq(r, q) && !self.compatible(r, p));
                if !witness {
                    return false;
                }
            }
        }
        true
    }

    /// Downward-closed (= open in the cone topology)?
    pub fn is_open(&self, set: u64) -> bool {
        (0..self.len()).all(|i| set >> i & 1 == 0 || self.below[i] & !set == 0)
    }

    /// Largest open subset: nodes whose whole cone lies inside.
    pub fn interior(&self, set: u64) -> u64 {
        let mut out = 0u64;
        for i in 0..self.len() {
            if self.below[i] & !set == 0 {
                out |= 1 << i;
            }
        }
        out
    }

    /// Smallest closed superset: nodes whose cone meets the set.
    pub fn closure(&self, set: u64) -> u64 {
        let mut out = 0u64;
        for i in 0..self.len() {
            if self.below[i] & set != 0 {
                out |= 1 << i;
            }
        }
        out
    }

    /// Regular open: `U = int(cl(U))`.
    pub fn is_regular_open(&self, set: u64) -> bool {
        self.is_open(set) && set == self.interior(self.closure(set))
    }

    /// Regularization of an arbitrary set.
    pub fn regularize(&self, set: u64) -> u64 {
        self.interior(self.closure(set))
    }

    /// Completion via the minimal-element characterization: one atom per
    /// minimal node, `e(p)` = the minimal nodes below `p`. `e` is
    /// order-preserving, never 0, and its image is dense.
    pub fn ro_completion(&self) -> Result<RoCompletion> {
        let minimal = self.minimal_nodes();
        let labels: Vec<String> = minimal.iter().map(|&m| self.nodes[m].clone()).collect();
        let algebra = Algebra::labeled(labels)?;
        let embed = (0..self.len())
            .map(|p| {
                let mut mask = 0u64;
                for (k, &m) in minimal.iter().enumerate() {
                    if self.leq(m, p) {
                        mask |= 1 << k;
                    }
                }
                Element::from_mask(mask, minimal.len())
            })
            .collect();
        Ok(RoCompletion {
            algebra,
            minimal,
            embed,
        })
    }

    /// Definitional oracle: enumerate all downward-closed sets, keep the
    /// regular ones, and read the algebra off them. Must be isomorphic to
    /// [`Poset::ro_completion`]'s output; `check_ro_agreement` verifies it.
    pub fn ro_oracle(&self) -> Result<RoOracle> {
        let n = self.len();
        if n > ORACLE_NODE_LIMIT {
            return Err(KernelError::TooLarge(format!(
                "{n} nodes is past the oracle's exhaustive range"
            )));
        }
        let mut regular_opens = Vec::new();
        for set in 0u64..(1 << n) {
            if self.is_open(set) && set == self.interior(self.closure(set)) {
                regular_opens.push(set);
            }
        }
        // Atoms of the regular-open algebra: minimal nonzero members. Each
        // contains exactly one minimal node of the poset; order atoms by it
        // so oracle coordinates line up with the completion's.
        let mut atoms: Vec<u64> = regular_opens
            .iter()
            .copied()
            .filter(|&u| {
                u != 0
                    && regular_opens
                        .iter()
                        .all(|&v| v == 0 || v == u || v & !u != 0)
            })
            .collect();
        let min_mask: u64 = self.minimal_nodes().iter().map(|&m| 1u64 << m).sum();
        atoms.sort_by_key(|&u| (u & min_mask).trailing_zeros());
        let algebra = Algebra::with_cap(atoms.len(), atoms.len().max(crate::DEFAULT_ATOM_CAP))?;
        Ok(RoOracle {
            poset: self.clone(),
            regular_opens,
            atoms,
            algebra,
        })
    }
}

/// Output of [`Poset::ro_completion`]: the completion algebra plus the dense
/// order-preserving map `e`.
#[derive(Clone, Debug)]
pub struct RoCompletion {
    algebra: Algebra,
    minimal: Vec<usize>,
    embed: Vec<Element>,
}

impl RoCompletion {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// Node indices of the minimal elements, in atom order.
    pub fn minimal_nodes(&self) -> &[usize] {
        &self.minimal
    }

    /// The dense map on node `p`.
    pub fn embed(&self, p: usize) -> Element {
        self.embed[p]
    }
}

/// Output of [`Poset::ro_oracle`]: every regular open set, the atoms among
/// them, and the algebra they generate. Lattice operations are definitional
/// (interior/closure), for cross-checking the completion.
#[derive(Clone, Debug)]
pub struct RoOracle {
    poset: Poset,
    regular_opens: Vec<u64>,
    atoms: Vec<u64>,
    algebra: Algebra,
}

impl RoOracle {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn regular_opens(&self) -> &[u64] {
        &self.regular_opens
    }

    pub fn count(&self) -> usize {
        self.regular_opens.len()
    }

    pub fn meet(&self, u: u64, v: u64) -> u64 {
        u & v
    }

    pub fn join(&self, u: u64, v: u64) -> u64 {
        self.poset.regularize(u | v)
    }

    pub fn complement(&self, u: u64) -> u64 {
        let all = (1u64 << self.poset.len()) - 1;
        self.poset.interior(all & !u)
    }

    /// A regular open as an element of the oracle algebra: the set of oracle
    /// atoms it contains.
    pub fn element_of(&self, u: u64) -> Element {
        let mut mask = 0u64;
        for (k, &a) in self.atoms.iter().enumerate() {
            if a & !u == 0 {
                mask |= 1 << k;
            }
        }
        Element::from_mask(mask, self.atoms.len())
    }
}

/// Everything `ro_completion` must agree on with the definitional oracle.
/// All fields must come back true for every poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoAgreement {
    /// Same atom count, and the oracle found exactly 2^atoms regular opens.
    pub cardinality: bool,
    /// Atom-set map regular-open → completion element is a bijection.
    pub bijective: bool,
    /// The map preserves meet, join, and complement.
    pub homomorphic: bool,
    /// `e(p)` equals the regularized cone of `p` under the map.
    pub embeds_cones: bool,
    /// `e` is order-preserving and never 0.
    pub order_preserving: bool,
    /// Every completion atom sits below some `e(p)`.
    pub dense: bool,
}

impl RoAgreement {
    pub fn all(self) -> bool {
        self.cardinality
            && self.bijective
            && self.homomorphic
            && self.embeds_cones
            && self.order_preserving
            && self.dense
    }
}

/// Run the full completion/oracle comparison for one poset.
pub fn check_ro_agreement(poset: &Poset) -> Result<RoAgreement> {
    let completion = poset.ro_completion()?;
    let oracle = poset.ro_oracle()?;
    let atoms = completion.algebra().atom_count();

    let cardinality = oracle.algebra().atom_count() == atoms
        && oracle.count() == 1usize << atoms;

    let images: Vec<Element> = oracle
        .regular_opens()
        .iter()
        .map(|&u| oracle.element_of(u))
        .collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let bijective = sorted.len() == oracle.count()
        && images.iter().all(|e| e.universe() == atoms);

    let mut homomorphic = bijective;
    if bijective {
        'outer: for (i, &u) in oracle.regular_opens().iter().enumerate() {
            if oracle.element_of(oracle.complement(u)) != !images[i] {
                homomorphic = false;
                break;
            }
            for (j, &v) in oracle.regular_opens().iter().enumerate() {
                let meet_ok = oracle.element_of(oracle.meet(u, v)) == images[i] & images[j];
                let join_ok = oracle.element_of(oracle.join(u, v)) == images[i] | images[j];
                if !meet_ok || !join_ok {
                    homomorphic = false;
                    break 'outer;
                }
            }
        }
    }

    let mut embeds_cones = true;
    let mut order_preserving = true;
    for p in 0..poset.len() {
        let e_p = completion.embed(p);
        if e_p.is_zero() {
            order_preserving = false;
        }
        if oracle.element_of(poset.regularize(poset.cone(p))) != e_p {
            embeds_cones = false;
        }
        for q in 0..poset.len() {
            if poset.leq(p, q) && !completion.embed(p).leq(completion.embed(q)) {
                order_preserving = false;
            }
        }
    }

    let dense = (0..atoms).all(|k| {
        let atom = Element::from_mask(1 << k, atoms);
        (0..poset.len()).any(|p| atom.leq(completion.embed(p)))
    });

    Ok(RoAgreement {
        cardinality,
        bijective,
        homomorphic,
        embeds_cones,
        order_preserving,
        dense,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(n: usize, leq: &[(usize, usize)]) -> Poset {
        let nodes = (0..n).map(|i| format!("p{i}")).collect();
        Poset::new(nodes, leq).unwrap()
    }

    #[test]
    fn closure_is_taken_and_cycles_rejected() {
        let p = poset(3, &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2)); // transitivity filled in
        assert!(p.leq(1, 1)); // reflexivity filled in
        let nodes = vec!["x".into(), "y".into()];
        assert!(Poset::new(nodes, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn two_incomparable_nodes() {
        let p = poset(2, &[]);
        let completion = p.ro_completion().unwrap();
        assert_eq!(completion.algebra().atom_count(), 2);
        // e injective onto the two atoms.
        assert_ne!(completion.embed(0), completion.embed(1));
        assert!(completion.embed(0).is_atom());
        let oracle = p.ro_oracle().unwrap();
        assert_eq!(oracle.count(), 4);
    }

    #[test]
    fn chain_collapses() {
        // p1 below p0: one atom, both nodes map to 1.
        let p = poset(2, &[(1, 0)]);
        let completion = p.ro_completion().unwrap();
        assert_eq!(completion.algebra().atom_count(), 1);
        assert!(completion.embed(0).is_one());
        assert!(completion.embed(1).is_one());
        assert_eq!(p.ro_oracle().unwrap().count(), 2);
    }

    #[test]
    fn discrete_three_nodes() {
        let p = poset(3, &[]);
        assert_eq!(p.ro_oracle().unwrap().count(), 8);
        assert_eq!(p.ro_completion().unwrap().algebra().atom_count(), 3);
    }

    #[test]
    fn separativity_report() {
        // Chains of length ≥ 2 are never separative.
        assert!(!poset(2, &[(1, 0)]).is_separative());
        // Antichains are separative.
        assert!(poset(3, &[]).is_separative());
        // Nonzero elements of a 2-atom algebra: separative.
        let v = poset(3, &[(1, 0), (2, 0)]);
        assert!(v.is_separative());
        // Two tops over the same two bottoms: the tops must be identified,
        // so not separative.
        let w = poset(4, &[(2, 0), (2, 1), (3, 0), (3, 1)]);
        assert!(!w.is_separative());
        assert_eq!(w.ro_completion().unwrap().algebra().atom_count(), 2);
    }

    #[test]
    fn agreement_on_handmade_posets() {
        for p in [
            poset(2, &[]),
            poset(2, &[(1, 0)]),
            poset(3, &[]),
            poset(4, &[(2, 0), (2, 1), (3, 0), (3, 1)]),
            poset(5, &[(1, 0), (2, 0), (3, 1), (3, 2), (4, 2)]),
        ] {
            let agreement = check_ro_agreement(&p).unwrap();
            assert!(agreement.all(), "disagreement on {p:?}: {agreement:?}");
        }
    }
}

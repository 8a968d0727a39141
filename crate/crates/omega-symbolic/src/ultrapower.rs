//! The quotient of eventually affine functions by the fixed ultrafilter:
//! a linearly ordered, ill-founded extension of the naturals.

use std::fmt;

use crate::func::{comparison_eq, comparison_lt, EAFunction};
use crate::upset::u_membership;

/// A finite family of functions with quotient order and embedding.
#[derive(Debug, Clone)]
pub struct SymbolicUltrapower {
    functions: Vec<EAFunction>,
}

/// Trichotomy and transitivity over the declared family, with the first
/// offending triple if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReport {
    pub total: bool,
    pub transitive: bool,
    pub violation: Option<(usize, usize, usize)>,
}

impl OrderReport {
    pub fn ok(&self) -> bool {
        self.total && self.transitive
    }
}

impl SymbolicUltrapower {
    pub fn new(functions: Vec<EAFunction>) -> SymbolicUltrapower {
        SymbolicUltrapower { functions }
    }

    pub fn functions(&self) -> &[EAFunction] {
        &self.functions
    }

    /// Same class: the agreement set is large.
    pub fn equiv(&self, i: usize, j: usize) -> bool {
        u_membership(&comparison_eq(&self.functions[i], &self.functions[j]))
    }

    /// Strict quotient order: the comparison set is large.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        u_membership(&comparison_lt(&self.functions[i], &self.functions[j]))
    }

    /// The embedding of the base: the constant function's index if the
    /// family carries it.
    pub fn class_of_constant(&self, k: u64) -> Option<usize> {
        let c = EAFunction::constant(k);
        self.functions
            .iter()
            .position(|f| u_membership(&comparison_eq(f, &c)))
    }

    /// Exactly one of `<`, `=`, `>` on every pair, and `<` composes.
    pub fn verify_order(&self) -> OrderReport {
        let n = self.functions.len();
        let mut total = true;
        let mut transitive = true;
        let mut violation = None;
        for i in 0..n {
            for j in 0..n {
                let cases =
                    [self.lt(i, j), self.equiv(i, j), self.lt(j, i)].iter().filter(|&&c| c).count();
                if cases != 1 {
                    total = false;
                    violation.get_or_insert((i, j, j));
                }
                for k in 0..n {
                    if self.lt(i, j) && self.lt(j, k) && !self.lt(i, k) {
                        transitive = false;
                        violation.get_or_insert((i, j, k));
                    }
                }
            }
        }
        OrderReport {
            total,
            transitive,
            violation,
        }
    }
}

impl fmt::Display for SymbolicUltrapower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "quotient of {} function(s):", self.functions.len())?;
        for (i, func) in self.functions.iter().enumerate() {
            writeln!(f, "  [{i}] {func}")?;
        }
        Ok(())
    }
}

/// A strictly descending chain of nonstandard elements, each above every
/// demanded standard one.
#[derive(Debug, Clone)]
pub struct IllfoundednessReport {
    /// `identity_minus(0), ..., identity_minus(depth)` in quotient order.
    pub chain: Vec<EAFunction>,
    /// Each consecutive pair strictly descends.
    pub descents_verified: bool,
    /// The chain's last element exceeds `j(m)` for all `m` up to this.
    pub standard_bound: u64,
    pub above_standard_verified: bool,
    /// The embedding preserves order on `0..=standard_bound`.
    pub embedding_order_verified: bool,
}

impl IllfoundednessReport {
    pub fn ok(&self) -> bool {
        self.descents_verified && self.above_standard_verified && self.embedding_order_verified
    }
}

/// Builds and verifies the chain `[id] > [id-1] > ... > [id-depth]`,
/// certifying the quotient ill-founded and the embedding discontinuous
/// at the top of the base order.
pub fn illfoundedness_witness(depth: u64, standard_bound: u64) -> IllfoundednessReport {
    assert!(depth >= 1, "a descent needs at least one step");
    let chain: Vec<EAFunction> = (0..=depth).map(EAFunction::identity_minus).collect();
    let descents_verified = chain
        .windows(2)
        .all(|w| u_membership(&comparison_lt(&w[1], &w[0])));
    let last = &chain[chain.len() - 1];
    let above_standard_verified = (0..=standard_bound)
        .all(|m| u_membership(&comparison_lt(&EAFunction::constant(m), last)));
    let embedding_order_verified = (0..standard_bound).all(|m| {
        u_membership(&comparison_lt(
            &EAFunction::constant(m),
            &EAFunction::constant(m + 1),
        ))
    });
    IllfoundednessReport {
        chain,
        descents_verified,
        standard_bound,
        above_standard_verified,
        embedding_order_verified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_constants_sit_below_the_identity() {
        let up = SymbolicUltrapower::new(vec![
            EAFunction::constant(3),
            EAFunction::identity(),
        ]);
        assert!(up.lt(0, 1));
        assert!(!up.lt(1, 0));
        assert!(!up.equiv(0, 1));
    }

    #[test]
    fn order_is_total_and_transitive() {
        let up = SymbolicUltrapower::new(vec![
            EAFunction::constant(0),
            EAFunction::constant(100),
            EAFunction::identity(),
            EAFunction::identity_minus(1),
            EAFunction::new(0, 2, 0, &[]).unwrap(),
            EAFunction::new(0, 1, 100, &[]).unwrap(),
            EAFunction::new(3, 1, 0, &[5, 5, 5]).unwrap(),
        ]);
        let report = up.verify_order();
        assert!(report.ok(), "{report:?}");
        // n+100 sits below 2n in the quotient.
        assert!(up.lt(5, 4));
    }

    #[test]
    fn equivalent_presentations_share_a_class() {
        let up = SymbolicUltrapower::new(vec![
            EAFunction::identity(),
            EAFunction::new(3, 1, 0, &[0, 1, 2]).unwrap(),
        ]);
        assert!(up.equiv(0, 1));
        assert_eq!(up.class_of_constant(5), None);
    }

    #[test]
    fn illfoundedness_chain_verifies() {
        let report = illfoundedness_witness(3, 20);
        assert!(report.ok());
        assert_eq!(report.chain.len(), 4);
        let shallow = illfoundedness_witness(1, 0);
        assert!(shallow.ok());
    }
}

//! Atomic values between names by double recursion.
//!
//! [`AtomicEvaluator`] memoizes on structural name pairs; the recursion is
//! exponential without sharing.  The [`reference`] module holds the same
//! recursion with no memo table, for differential testing.  A memo table
//! belongs to one evaluation session and is never shared.

use std::collections::HashMap;

use ba_kernel::{Algebra, Element};

use crate::name::Name;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AtomicRel {
    In,
    Eq,
    Subset,
}

/// Memoizing evaluator for one algebra.
pub struct AtomicEvaluator {
    algebra: Algebra,
    memo: HashMap<(AtomicRel, Name, Name), Element>,
}

impl AtomicEvaluator {
    pub fn new(algebra: &Algebra) -> Self {
        AtomicEvaluator {
            algebra: algebra.clone(),
            memo: HashMap::new(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// Value of `tau in sigma`: join over sigma's entries of (equality with
    /// the entry name) meet (the entry value).
    pub fn member(&mut self, tau: &Name, sigma: &Name) -> Result<Element> {
        self.value(AtomicRel::In, tau, sigma)
    }

    /// Value of `tau = sigma`: inclusion both ways.
    pub fn eq(&mut self, tau: &Name, sigma: &Name) -> Result<Element> {
        self.value(AtomicRel::Eq, tau, sigma)
    }

    /// Value of `tau subset sigma`: meet over the domain of tau of
    /// (membership in tau implies membership in sigma).
    pub fn subset(&mut self, tau: &Name, sigma: &Name) -> Result<Element> {
        self.value(AtomicRel::Subset, tau, sigma)
    }

    pub fn value(&mut self, rel: AtomicRel, tau: &Name, sigma: &Name) -> Result<Element> {
        let key = (rel, tau.clone(), sigma.clone());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let alg = self.algebra.clone();
        let v = match rel {
            AtomicRel::In => {
                let mut acc = alg.zero();
                for (eta, b) in sigma.entries() {
                    let eq = self.value(AtomicRel::Eq, tau, eta)?;
                    acc = alg.join(acc, alg.meet(eq, *b)?)?;
                }
                acc
            }
            AtomicRel::Eq => {
                let fwd = self.value(AtomicRel::Subset, tau, sigma)?;
                let bwd = self.value(AtomicRel::Subset, sigma, tau)?;
                alg.meet(fwd, bwd)?
            }
            AtomicRel::Subset => {
                let mut acc = alg.one();
                for eta in tau.dom() {
                    let in_tau = self.value(AtomicRel::In, eta, tau)?;
                    let in_sigma = self.value(AtomicRel::In, eta, sigma)?;
                    let implies = alg.join(alg.complement(in_tau)?, in_sigma)?;
                    acc = alg.meet(acc, implies)?;
                }
                acc
            }
        };
        self.memo.insert(key, v);
        Ok(v)
    }

    /// Number of distinct subproblems solved so far.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

/// One-shot convenience with a fresh session.
pub fn bv_atomic(rel: AtomicRel, tau: &Name, sigma: &Name) -> Result<Element> {
    AtomicEvaluator::new(tau.algebra()).value(rel, tau, sigma)
}

/// The same recursion, no memoization.  Exponential; for cross-checking.
pub mod reference {
    use super::*;

    pub fn bv_atomic(rel: AtomicRel, tau: &Name, sigma: &Name) -> Result<Element> {
        let alg = tau.algebra().clone();
        match rel {
            AtomicRel::In => {
                let mut acc = alg.zero();
                for (eta, b) in sigma.entries() {
                    let eq = bv_atomic(AtomicRel::Eq, tau, eta)?;
                    acc = alg.join(acc, alg.meet(eq, *b)?)?;
                }
                Ok(acc)
            }
            AtomicRel::Eq => {
                let fwd = bv_atomic(AtomicRel::Subset, tau, sigma)?;
                let bwd = bv_atomic(AtomicRel::Subset, sigma, tau)?;
                Ok(alg.meet(fwd, bwd)?)
            }
            AtomicRel::Subset => {
                let mut acc = alg.one();
                for eta in tau.dom() {
                    let in_tau = bv_atomic(AtomicRel::In, eta, tau)?;
                    let in_sigma = bv_atomic(AtomicRel::In, eta, sigma)?;
                    let implies = alg.join(alg.complement(in_tau)?, in_sigma)?;
                    acc = alg.meet(acc, implies)?;
                }
                Ok(acc)
            }
        }
    }
}

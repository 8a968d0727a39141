//! Seeded random formulas for sweeps.
//!
//! The generator is a pure function of its configuration and the RNG state,
//! so a fixed seed reproduces the same formula sequence on every run.

use rand::Rng;

use crate::formula::{Formula, Term};
use crate::signature::Signature;

/// Configuration for drawing random formulas.  Atoms draw their terms from
/// `free_terms` plus whatever variables are bound in scope; quantifiers bind
/// fresh variables `v0`, `v1`, ...
#[derive(Debug, Clone)]
pub struct FormulaGen {
    sig: Signature,
    free_terms: Vec<String>,
    max_depth: usize,
    allow_vcheck: bool,
}

impl FormulaGen {
    /// `free_terms` must be nonempty so an atom can always be formed.
    pub fn new(sig: Signature, free_terms: &[&str], max_depth: usize) -> Self {
        assert!(!free_terms.is_empty(), "need at least one free term");
        FormulaGen {
            sig,
            free_terms: free_terms.iter().map(|s| s.to_string()).collect(),
            max_depth,
            allow_vcheck: false,
        }
    }

    /// Also emit `@Vcheck` markers occasionally.
    pub fn with_vcheck(mut self) -> Self {
        self.allow_vcheck = true;
        self
    }

    fn term<R: Rng>(&self, rng: &mut R, bound: &[String]) -> Term {
        let total = self.free_terms.len() + bound.len();
        let k = rng.gen_range(0..total);
        if k < self.free_terms.len() {
            Term(self.free_terms[k].clone())
        } else {
            Term(bound[k - self.free_terms.len()].clone())
        }
    }

    fn atom<R: Rng>(&self, rng: &mut R, bound: &[String]) -> Formula {
        let rels: Vec<(String, usize)> = self
            .sig
            .relations()
            .map(|(n, a)| (n.to_string(), a))
            .collect();
        let fns: Vec<(String, usize)> = self
            .sig
            .functions()
            .map(|(n, a)| (n.to_string(), a))
            .collect();
        // Equality is always available; relations and function equations
        // join the draw when declared.
        let kinds = 1 + usize::from(!rels.is_empty()) + usize::from(!fns.is_empty());
        let pick = rng.gen_range(0..kinds);
        if pick == 0 || rels.is_empty() && fns.is_empty() {
            return Formula::Eq(self.term(rng, bound), self.term(rng, bound));
        }
        if pick == 1 && !rels.is_empty() {
            let (name, arity) = rels[rng.gen_range(0..rels.len())].clone();
            let args = (0..arity).map(|_| self.term(rng, bound)).collect();
            return Formula::Rel(name, args);
        }
        let (name, arity) = fns[rng.gen_range(0..fns.len())].clone();
        let args = (0..arity).map(|_| self.term(rng, bound)).collect();
        Formula::FnEq(self.term(rng, bound), name, args)
    }

    fn go<R: Rng>(&self, rng: &mut R, depth: usize, bound: &mut Vec<String>) -> Formula {
        if depth == 0 {
            return self.atom(rng, bound);
        }
        let top = if self.allow_vcheck { 16 } else { 14 };
        match rng.gen_range(0..top) {
            0 | 1 | 2 => self.atom(rng, bound),
            3 | 4 => {
                let p = self.go(rng, depth - 1, bound);
                let q = self.go(rng, depth - 1, bound);
                p.and(q)
            }
            5 | 6 => {
                let p = self.go(rng, depth - 1, bound);
                let q = self.go(rng, depth - 1, bound);
                p.or(q)
            }
            7 | 8 => self.go(rng, depth - 1, bound).negate(),
            9 => {
                let p = self.go(rng, depth - 1, bound);
                let q = self.go(rng, depth - 1, bound);
                p.implies(q)
            }
            10 | 11 => {
                let var = format!("v{}", bound.len());
                bound.push(var.clone());
                let body = self.go(rng, depth - 1, bound);
                bound.pop();
                Formula::Exists(var, Box::new(body))
            }
            12 | 13 => {
                let var = format!("v{}", bound.len());
                bound.push(var.clone());
                let body = self.go(rng, depth - 1, bound);
                bound.pop();
                Formula::Forall(var, Box::new(body))
            }
            _ => self.go(rng, depth - 1, bound).vcheck(),
        }
    }

    /// Draws one formula of depth at most `max_depth`.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Formula {
        let depth = rng.gen_range(0..=self.max_depth);
        self.go(rng, depth, &mut Vec::new())
    }
}

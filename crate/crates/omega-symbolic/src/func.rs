//! Eventually affine functions on the naturals: spanning values over the
//! singleton antichain, presented symbolically.

use std::fmt;

use crate::upset::UPSet;
use crate::{OmegaError, Result};

/// A function `n -> a*n + b` for `n >= threshold`, with explicit values
/// below the threshold.  Values are naturals everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EAFunction {
    threshold: u64,
    slope: u64,
    intercept: i64,
    exceptions: Vec<u64>,
}

impl EAFunction {
    /// `exceptions[n]` is the value at `n` for `n < threshold`.  The tail
    /// must stay nonnegative from the threshold on.
    pub fn new(threshold: u64, slope: u64, intercept: i64, exceptions: &[u64]) -> Result<EAFunction> {
        if exceptions.len() as u64 != threshold {
            return Err(OmegaError::ExceptionCount {
                threshold,
                got: exceptions.len(),
            });
        }
        let at_threshold = slope as i128 * threshold as i128 + intercept as i128;
        if at_threshold < 0 {
            return Err(OmegaError::NegativeValue { at: threshold });
        }
        Ok(EAFunction {
            threshold,
            slope,
            intercept,
            exceptions: exceptions.to_vec(),
        })
    }

    pub fn constant(k: u64) -> EAFunction {
        EAFunction::new(0, 0, k as i64, &[]).expect("constants are total")
    }

    pub fn identity() -> EAFunction {
        EAFunction::new(0, 1, 0, &[]).expect("identity is total")
    }

    /// `n -> n - k` with value 0 below `k`.
    pub fn identity_minus(k: u64) -> EAFunction {
        let exceptions = vec![0; k as usize];
        EAFunction::new(k, 1, -(k as i64), &exceptions).expect("clipped difference is total")
    }

    /// Pointwise successor.
    pub fn succ(&self) -> EAFunction {
        let exceptions: Vec<u64> = self.exceptions.iter().map(|v| v + 1).collect();
        EAFunction::new(self.threshold, self.slope, self.intercept + 1, &exceptions)
            .expect("shifting up stays nonnegative")
    }

    pub fn value(&self, n: u64) -> u64 {
        if n < self.threshold {
            self.exceptions[n as usize]
        } else {
            let v = self.slope as i128 * n as i128 + self.intercept as i128;
            debug_assert!(v >= 0, "tail invariant");
            v as u64
        }
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn slope(&self) -> u64 {
        self.slope
    }

    pub fn intercept(&self) -> i64 {
        self.intercept
    }

    pub fn exceptions(&self) -> &[u64] {
        &self.exceptions
    }
}

impl fmt::Display for EAFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.threshold > 0 {
            write!(f, "[{:?} then] ", self.exceptions)?;
        }
        match (self.slope, self.intercept) {
            (0, b) => write!(f, "n -> {b}"),
            (1, 0) => write!(f, "n -> n"),
            (1, b) => write!(f, "n -> n{b:+}"),
            (a, 0) => write!(f, "n -> {a}n"),
            (a, b) => write!(f, "n -> {a}n{b:+}"),
        }
    }
}

/// Where the affine tails settle their order: beyond this point the truth
/// of `f(n) < g(n)` no longer changes.
fn tail_settles(f: &EAFunction, g: &EAFunction) -> u64 {
    let base = f.threshold.max(g.threshold);
    let ds = g.slope as i128 - f.slope as i128;
    if ds == 0 {
        return base;
    }
    // a_f*n + b_f vs a_g*n + b_g flips at n = (b_f - b_g)/ds.
    let di = f.intercept as i128 - g.intercept as i128;
    let flip = di.div_euclid(ds) + 1;
    if flip <= 0 {
        base
    } else {
        base.max(flip as u64)
    }
}

/// The comparison set `{n : f(n) < g(n)}`, always finite or cofinite.
pub fn comparison_lt(f: &EAFunction, g: &EAFunction) -> UPSet {
    let t = tail_settles(f, g);
    let eventual = f.value(t) < g.value(t);
    let prefix: Vec<u64> = (0..t).filter(|&n| f.value(n) < g.value(n)).collect();
    UPSet::new(t, 1, if eventual { &[0] } else { &[] }, &prefix)
}

/// The agreement set `{n : f(n) = g(n)}`, always finite or cofinite.
pub fn comparison_eq(f: &EAFunction, g: &EAFunction) -> UPSet {
    let t = tail_settles(f, g);
    let eventual = f.value(t) == g.value(t);
    let prefix: Vec<u64> = (0..t).filter(|&n| f.value(n) == g.value(n)).collect();
    UPSet::new(t, 1, if eventual { &[0] } else { &[] }, &prefix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upset::u_membership;

    #[test]
    fn construction_guards() {
        assert!(EAFunction::new(2, 1, -5, &[0, 0]).is_err());
        assert!(EAFunction::new(1, 0, 3, &[]).is_err());
        assert!(EAFunction::new(5, 1, -5, &[9, 9, 9, 9, 9]).is_ok());
    }

    #[test]
    fn values() {
        let f = EAFunction::identity_minus(3);
        assert_eq!(
            (0..6).map(|n| f.value(n)).collect::<Vec<_>>(),
            vec![0, 0, 0, 0, 1, 2]
        );
        let g = EAFunction::constant(7).succ();
        assert_eq!(g.value(0), 8);
        assert_eq!(g.value(100), 8);
    }

    #[test]
    fn comparison_sets_are_finite_or_cofinite() {
        let id = EAFunction::identity();
        let c3 = EAFunction::constant(3);
        let lt = comparison_lt(&c3, &id);
        // {n : 3 < n} = {4, 5, ...}.
        assert!(lt.is_cofinite());
        assert_eq!(lt, UPSet::tail(4));
        let gt = comparison_lt(&id, &c3);
        assert_eq!(gt, UPSet::finite(&[0, 1, 2]));
        assert_eq!(comparison_eq(&id, &c3), UPSet::singleton(3));
    }

    #[test]
    fn double_slope_overtakes_shift() {
        let double = EAFunction::new(0, 2, 0, &[]).unwrap();
        let shifted = EAFunction::new(0, 1, 100, &[]).unwrap();
        let set = comparison_lt(&shifted, &double);
        // n + 100 < 2n from n = 101 on.
        assert_eq!(set, UPSet::tail(101));
        assert!(u_membership(&set));
    }

    #[test]
    fn equal_tails_agree_cofinitely() {
        let a = EAFunction::identity_minus(1);
        let b = EAFunction::new(2, 1, -1, &[7, 0]).unwrap();
        let agree = comparison_eq(&a, &b);
        assert!(agree.is_cofinite());
        assert!(!agree.contains(0));
        assert!(u_membership(&agree));
    }
}

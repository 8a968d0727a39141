//! Ultimately periodic subsets of the naturals and the fixed
//! nonprincipal ultrafilter that decides them.

use std::collections::BTreeSet;
use std::fmt;

/// An ultimately periodic subset of the naturals.
///
/// Membership of `n` is decided by the explicit `prefix` for
/// `n < threshold` and by `pattern` on `n mod period` from `threshold`
/// on.  Construction normalizes, so equal sets compare equal: the period
/// is the minimal eventual period and the threshold is minimal for it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UPSet {
    threshold: u64,
    period: u64,
    pattern: BTreeSet<u64>,
    prefix: BTreeSet<u64>,
}

// Boolean operations expand both operands to a common period; the cap
// keeps a hostile lcm from allocating unboundedly.
const PERIOD_CAP: u64 = 1 << 20;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl UPSet {
    /// Builds the set and puts it in canonical form.  Out-of-range
    /// residues are reduced, out-of-range prefix entries dropped.
    pub fn new(threshold: u64, period: u64, pattern: &[u64], prefix: &[u64]) -> UPSet {
        let period = period.max(1);
        let mut s = UPSet {
            threshold,
            period,
            pattern: pattern.iter().map(|r| r % period).collect(),
            prefix: prefix.iter().filter(|&&n| n < threshold).copied().collect(),
        };
        s.normalize();
        s
    }

    pub fn empty() -> UPSet {
        UPSet::new(0, 1, &[], &[])
    }

    pub fn all() -> UPSet {
        UPSet::new(0, 1, &[0], &[])
    }

    pub fn singleton(n: u64) -> UPSet {
        UPSet::new(n + 1, 1, &[], &[n])
    }

    pub fn finite(elements: &[u64]) -> UPSet {
        let bound = elements.iter().max().map_or(0, |m| m + 1);
        UPSet::new(bound, 1, &[], elements)
    }

    /// All multiples of `m` (everything, for `m = 0` read as period 1).
    pub fn multiples(m: u64) -> UPSet {
        UPSet::new(0, m.max(1), &[0], &[])
    }

    /// The upward tail `{k : k >= n}`.
    pub fn tail(n: u64) -> UPSet {
        UPSet::new(n, 1, &[0], &[])
    }

    pub fn contains(&self, n: u64) -> bool {
        if n < self.threshold {
            self.prefix.contains(&n)
        } else {
            self.pattern.contains(&(n % self.period))
        }
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn pattern(&self) -> &BTreeSet<u64> {
        &self.pattern
    }

    pub fn prefix(&self) -> &BTreeSet<u64> {
        &self.prefix
    }

    pub fn is_empty(&self) -> bool {
        self.pattern.is_empty() && self.prefix.is_empty()
    }

    pub fn is_all(&self) -> bool {
        *self == UPSet::all()
    }

    /// Finite sets are exactly those with an empty eventual pattern.
    pub fn is_finite(&self) -> bool {
        self.pattern.is_empty()
    }

    pub fn is_cofinite(&self) -> bool {
        self.pattern.len() == self.period as usize
    }

    /// Smallest member, if any.
    pub fn min_element(&self) -> Option<u64> {
        if let Some(&n) = self.prefix.iter().next() {
            return Some(n);
        }
        (self.threshold..self.threshold + self.period)
            .find(|&n| self.pattern.contains(&(n % self.period)))
    }

    /// Smallest member strictly above `n`; `None` only for finite sets
    /// exhausted above `n`.
    pub fn next_above(&self, n: u64) -> Option<u64> {
        if let Some(&m) = self.prefix.range(n + 1..).next() {
            return Some(m);
        }
        let start = (n + 1).max(self.threshold);
        (start..start + self.period).find(|&m| self.pattern.contains(&(m % self.period)))
    }

    /// Members in ascending order (infinite for infinite sets).
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        let mut cursor: Option<u64> = None;
        std::iter::from_fn(move || {
            let next = match cursor {
                None => {
                    if self.contains(0) {
                        Some(0)
                    } else {
                        self.next_above(0)
                    }
                }
                Some(c) => self.next_above(c),
            };
            cursor = next;
            next
        })
    }

    fn align_to(&self, threshold: u64, period: u64) -> UPSet {
        debug_assert!(threshold >= self.threshold && period % self.period == 0);
        let pattern = (0..period)
            .filter(|r| self.pattern.contains(&(r % self.period)))
            .collect();
        let prefix = (0..threshold).filter(|&n| self.contains(n)).collect();
        UPSet {
            threshold,
            period,
            pattern,
            prefix,
        }
    }

    fn zip_with(&self, other: &UPSet, op: impl Fn(bool, bool) -> bool) -> UPSet {
        let period = lcm(self.period, other.period);
        assert!(period <= PERIOD_CAP, "period blow-up past {PERIOD_CAP}");
        let threshold = self.threshold.max(other.threshold);
        let a = self.align_to(threshold, period);
        let b = other.align_to(threshold, period);
        let pattern = (0..period)
            .filter(|r| op(a.pattern.contains(r), b.pattern.contains(r)))
            .collect();
        let prefix = (0..threshold)
            .filter(|n| op(a.prefix.contains(n), b.prefix.contains(n)))
            .collect();
        let mut s = UPSet {
            threshold,
            period,
            pattern,
            prefix,
        };
        s.normalize();
        s
    }

    pub fn meet(&self, other: &UPSet) -> UPSet {
        self.zip_with(other, |x, y| x && y)
    }

    pub fn join(&self, other: &UPSet) -> UPSet {
        self.zip_with(other, |x, y| x || y)
    }

    pub fn complement(&self) -> UPSet {
        let pattern = (0..self.period)
            .filter(|r| !self.pattern.contains(r))
            .collect();
        let prefix = (0..self.threshold)
            .filter(|n| !self.prefix.contains(n))
            .collect();
        let mut s = UPSet {
            threshold: self.threshold,
            period: self.period,
            pattern,
            prefix,
        };
        s.normalize();
        s
    }

    pub fn minus(&self, other: &UPSet) -> UPSet {
        self.meet(&other.complement())
    }

    fn normalize(&mut self) {
        // Minimal eventual period divides the stored one, so scanning
        // divisors in ascending order finds it.
        for d in 1..=self.period {
            if self.period % d != 0 {
                continue;
            }
            let periodic = (0..self.period)
                .all(|r| self.pattern.contains(&r) == self.pattern.contains(&((r + d) % self.period)));
            if periodic {
                self.pattern = self.pattern.iter().filter(|&&r| r < d).copied().collect();
                self.period = d;
                break;
            }
        }
        // Pull the threshold down over prefix entries the pattern
        // already explains.
        while self.threshold > 0 {
            let n = self.threshold - 1;
            if self.prefix.contains(&n) == self.pattern.contains(&(n % self.period)) {
                self.prefix.remove(&n);
                self.threshold = n;
            } else {
                break;
            }
        }
    }
}

impl fmt::Display for UPSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix: Vec<String> = self.prefix.iter().map(u64::to_string).collect();
        let pattern: Vec<String> = self.pattern.iter().map(u64::to_string).collect();
        write!(
            f,
            "{{prefix {{{}}} | from {}: n mod {} in {{{}}}}}",
            prefix.join(","),
            self.threshold,
            self.period,
            pattern.join(",")
        )
    }
}

/// The fixed ultrafilter: a canonical set is large exactly when residue
/// zero lies in its eventual pattern, equivalently when it eventually
/// contains every multiple of its period.
pub fn u_membership(s: &UPSet) -> bool {
    s.pattern.contains(&0)
}

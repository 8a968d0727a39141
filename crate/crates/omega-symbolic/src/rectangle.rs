//! The rectangle product of the ultrafilter with itself does not
//! generate an ultrafilter on the plane: the triangle below the diagonal
//! and its complement each meet every rectangle with two large sides.

use std::fmt;

use crate::upset::{u_membership, UPSet};

/// The fixed plane set `{(i, j) : i < j}` (or its complement), with a
/// decidable rectangle-intersection procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleSet {
    /// `true` for `{i < j}`, `false` for `{i >= j}`.
    pub below_diagonal: bool,
}

impl TriangleSet {
    pub fn lower() -> TriangleSet {
        TriangleSet {
            below_diagonal: true,
        }
    }

    pub fn upper() -> TriangleSet {
        TriangleSet {
            below_diagonal: false,
        }
    }

    pub fn contains(&self, i: u64, j: u64) -> bool {
        if self.below_diagonal {
            i < j
        } else {
            i >= j
        }
    }

    /// A point of `b x c` inside the triangle, if one exists.  Decidable:
    /// only the two least relevant corners of the rectangle matter.
    pub fn meet_rectangle(&self, b: &UPSet, c: &UPSet) -> Option<(u64, u64)> {
        if self.below_diagonal {
            // Need i in b, j in c, i < j: take the least i, then any
            // larger j; only a c bounded by min(b) can refuse.
            let i = b.min_element()?;
            let j = c.next_above(i)?;
            Some((i, j))
        } else {
            // Need i >= j: take the least j, then any i at or above it.
            let j = c.min_element()?;
            let i = if b.contains(j) { Some(j) } else { b.next_above(j) }?;
            Some((i, j))
        }
    }
}

impl fmt::Display for TriangleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.below_diagonal {
            write!(f, "{{(i,j) : i < j}}")
        } else {
            write!(f, "{{(i,j) : i >= j}}")
        }
    }
}

/// One sampled rectangle with both verdicts.
#[derive(Debug, Clone)]
pub struct RectangleCase {
    pub side_b: UPSet,
    pub side_c: UPSet,
    pub point_in_triangle: (u64, u64),
    pub point_in_complement: (u64, u64),
}

/// Every sampled rectangle with two large sides meets the triangle and
/// its complement, so neither can lie in the generated filter.
#[derive(Debug, Clone)]
pub struct RectangleFailureReport {
    pub triangle: TriangleSet,
    pub cases: Vec<RectangleCase>,
    pub all_sides_infinite: bool,
    pub all_meet_both: bool,
}

impl RectangleFailureReport {
    pub fn ok(&self) -> bool {
        self.all_sides_infinite && self.all_meet_both && !self.cases.is_empty()
    }
}

/// Large ultimately periodic sets drawn from a fixed small family of
/// shapes: multiples with offsets, tails, and cofinite sets.
fn large_family() -> Vec<UPSet> {
    let mut family = vec![UPSet::all()];
    for m in 1..=6 {
        family.push(UPSet::multiples(m));
        family.push(UPSet::multiples(m).join(&UPSet::singleton(m + 7)));
        family.push(UPSet::multiples(m).meet(&UPSet::tail(3 * m)));
    }
    for n in [1, 5, 17] {
        family.push(UPSet::tail(n));
        family.push(UPSet::singleton(n).complement());
    }
    family.retain(|s| u_membership(s));
    family
}

pub fn rectangle_failure_demo() -> RectangleFailureReport {
    let triangle = TriangleSet::lower();
    let complement = TriangleSet::upper();
    let family = large_family();
    let mut cases = Vec::new();
    let mut all_sides_infinite = true;
    let mut all_meet_both = true;
    for b in &family {
        for c in &family {
            all_sides_infinite &= !b.is_finite() && !c.is_finite();
            let hit = triangle.meet_rectangle(b, c);
            let miss = complement.meet_rectangle(b, c);
            match (hit, miss) {
                (Some(p), Some(q)) => {
                    debug_assert!(b.contains(p.0) && c.contains(p.1) && p.0 < p.1);
                    debug_assert!(b.contains(q.0) && c.contains(q.1) && q.0 >= q.1);
                    cases.push(RectangleCase {
                        side_b: b.clone(),
                        side_c: c.clone(),
                        point_in_triangle: p,
                        point_in_complement: q,
                    });
                }
                _ => all_meet_both = false,
            }
        }
    }
    RectangleFailureReport {
        triangle,
        cases,
        all_sides_infinite,
        all_meet_both,
    }
}

//! Ultrafilters: principal at an atom, explicit member sets, and the one
//! symbolic handle whose deciding work lives in `omega-symbolic`.

use std::fmt;

use ba_kernel::{Algebra, Element};
use names::Filter;
use omega_symbolic::{u_membership, UPSet};

use crate::{Result, UltraError};

/// Membership decider on a Boolean algebra.  The two finite kinds decide
/// `Element`s of their own algebra; the symbolic kind decides ultimately
/// periodic subsets of the naturals and enters finite arguments only
/// through spanning functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ultrafilter {
    Principal { algebra: Algebra, atom: usize },
    Explicit { filter: Filter },
    Symbolic,
}

impl Ultrafilter {
    pub fn principal(algebra: &Algebra, atom: usize) -> Result<Ultrafilter> {
        if atom >= algebra.atom_count() {
            return Err(UltraError::Kernel(ba_kernel::KernelError::AtomOutOfRange {
                index: atom,
                atoms: algebra.atom_count(),
            }));
        }
        Ok(Ultrafilter::Principal {
            algebra: algebra.clone(),
            atom,
        })
    }

    /// Wraps an explicit member set, validating the ultrafilter laws.
    pub fn explicit(filter: Filter) -> Result<Ultrafilter> {
        if !filter.is_ultra() {
            return Err(UltraError::NotUltra(
        "explicit member set fails a law (zero, closure, or decision)".to_string(),
            ));
        }
        Ok(Ultrafilter::Explicit { filter })
    }

    /// The nonprincipal decider on ultimately periodic sets.
    pub fn symbolic() -> Ultrafilter {
        Ultrafilter::Symbolic
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Ultrafilter::Symbolic)
    }

    pub fn algebra(&self) -> Result<&Algebra> {
        match self {
            Ultrafilter::Principal { algebra, .. } => Ok(algebra),
            Ultrafilter::Explicit { filter } => Ok(filter.algebra()),
            Ultrafilter::Symbolic => Err(UltraError::SymbolicUnsupported("algebra access")),
        }
    }

    pub fn contains(&self, e: Element) -> Result<bool> {
        match self {
            Ultrafilter::Principal { algebra, atom } => Ok(algebra.atom(*atom).leq(e)),
            Ultrafilter::Explicit { filter } => Ok(filter.contains(e)),
            Ultrafilter::Symbolic => Err(UltraError::SymbolicUnsupported("element membership")),
        }
    }

    /// Membership for the symbolic kind.  Finite kinds do not decide
    /// infinite-index sets.
    pub fn contains_upset(&self, s: &UPSet) -> Result<bool> {
        match self {
            Ultrafilter::Symbolic => Ok(u_membership(s)),
            _ => Err(UltraError::BadInput(
                "a finite ultrafilter does not decide symbolic sets".to_string(),
            )),
        }
    }

    /// The generating atom.  Every ultrafilter on an atomic finite algebra
    /// is principal, so for the explicit kind this recovers the atom from
    /// the meet of all members.
    pub fn atom(&self) -> Result<usize> {
        match self {
            Ultrafilter::Principal { atom, .. } => Ok(*atom),
            Ultrafilter::Explicit { filter } => {
                let b = filter.algebra();
                let meet = b.big_meet(filter.members())?;
                let indices = meet.atom_indices();
                if indices.len() == 1 {
                    Ok(indices[0])
                } else {
                    Err(UltraError::NotUltra(format!(
                        "member meet {} is not an atom",
                        b.show(meet)
                    )))
                }
            }
            Ultrafilter::Symbolic => Err(UltraError::SymbolicUnsupported("generating atom")),
        }
    }

    /// The member set as a `names::Filter`, for interpretation maps.
    pub fn to_filter(&self) -> Result<Filter> {
        match self {
            Ultrafilter::Principal { algebra, atom } => Ok(Filter::at_atom(algebra, *atom)),
            Ultrafilter::Explicit { filter } => Ok(filter.clone()),
            Ultrafilter::Symbolic => Err(UltraError::SymbolicUnsupported("member enumeration")),
        }
    }

    /// Checks the four laws by direct sweep.  Finite kinds are exhaustive
    /// over the algebra; the symbolic kind runs a fixed panel of
    /// ultimately periodic sets, which is a sample, not a proof (the
    /// exhaustive-within-reach version lives in the omega module's
    /// randomized homomorphism test).
    pub fn laws(&self) -> Result<UltrafilterLaws> {
        match self {
            Ultrafilter::Symbolic => Ok(symbolic_panel()),
            _ => {
                let b = self.algebra()?.clone();
                let members: Vec<Element> =
                    b.elements().filter(|&e| self.contains(e).unwrap_or(false)).collect();
                let has_one = members.iter().any(|e| e.is_one());
                let no_zero = members.iter().all(|e| !e.is_zero());
                let mut meet_closed = true;
                for &x in &members {
                    for &y in &members {
                        if !self.contains(b.meet(x, y)?)? {
                            meet_closed = false;
                        }
                    }
                }
                let mut upward_closed = true;
                let mut decides = true;
                for e in b.elements() {
                    let inside = self.contains(e)?;
                    if inside {
                        for f in b.elements() {
                            if e.leq(f) && !self.contains(f)? {
                                upward_closed = false;
                            }
                        }
                    }
                    if inside == self.contains(b.complement(e)?)? {
                        decides = false;
                    }
                }
                Ok(UltrafilterLaws {
                    has_one,
                    no_zero,
                    meet_closed,
                    upward_closed,
                    decides,
                })
            }
        }
    }
}

impl fmt::Display for Ultrafilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ultrafilter::Principal { algebra, atom } => {
                write!(f, "principal at {}", algebra.label(*atom))
            }
            Ultrafilter::Explicit { filter } => {
                write!(f, "explicit with {} member(s)", filter.len())
            }
            Ultrafilter::Symbolic => f.write_str("symbolic (residue-zero decider)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UltrafilterLaws {
    pub has_one: bool,
    pub no_zero: bool,
    pub meet_closed: bool,
    pub upward_closed: bool,
    pub decides: bool,
}

impl UltrafilterLaws {
    pub fn all(self) -> bool {
        self.has_one && self.no_zero && self.meet_closed && self.upward_closed && self.decides
    }
}

/// Deterministic law panel for the symbolic decider: congruence sets, their
/// meets and joins, finite sets, and complements.
fn symbolic_panel() -> UltrafilterLaws {
    let mut panel: Vec<UPSet> = Vec::new();
    panel.push(UPSet::all());
    panel.push(UPSet::empty());
    for k in 1..=6 {
        panel.push(UPSet::multiples(k));
        panel.push(UPSet::multiples(k).complement());
        panel.push(UPSet::tail(k));
        panel.push(UPSet::singleton(k));
    }
    let mut laws = UltrafilterLaws {
        has_one: u_membership(&UPSet::all()),
        no_zero: !u_membership(&UPSet::empty()),
        meet_closed: true,
        upward_closed: true,
        decides: true,
    };
    for a in &panel {
        if u_membership(a) == u_membership(&a.complement()) {
            laws.decides = false;
        }
        for b in &panel {
            let ua = u_membership(a);
            let ub = u_membership(b);
            if ua && ub && !u_membership(&a.meet(b)) {
                laws.meet_closed = false;
            }
            if ua && !u_membership(&a.join(b)) {
                laws.upward_closed = false;
            }
        }
    }
    laws
}

/// One ultrafilter per atom; on an atomic finite algebra this is all of
/// them.
pub fn enumerate_ultrafilters(algebra: &Algebra) -> Vec<Ultrafilter> {
    (0..algebra.atom_count())
        .map(|i| Ultrafilter::Principal {
            algebra: algebra.clone(),
            atom: i,
        })
        .collect()
}

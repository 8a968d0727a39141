//! Names: finite sets of (subname, element) pairs over one algebra.

use std::cmp::Ordering;
use std::fmt;

use ba_kernel::{Algebra, Antichain, Element};

use crate::hf::HFSet;
use crate::{NamesError, Result};

/// A name over a finite Boolean algebra.  Entries are kept sorted and
/// exact-duplicate-free, so structural equality is canonical.  Entries with
/// value zero are kept: they contribute nothing to membership values but do
/// enlarge the domain, which matters for inclusion and for the power-set
/// construction.
#[derive(Clone)]
pub struct Name {
    algebra: Algebra,
    entries: Vec<(Name, Element)>,
    rank: usize,
}

impl Name {
    pub fn empty(algebra: &Algebra) -> Self {
        Name {
            algebra: algebra.clone(),
            entries: Vec::new(),
            rank: 0,
        }
    }

    /// Canonicalizes the entry list.  Every subname must live over
    /// `algebra`, as must every value.
    pub fn new(algebra: &Algebra, mut entries: Vec<(Name, Element)>) -> Result<Self> {
        for (sub, value) in &entries {
            if sub.algebra.atom_count() != algebra.atom_count() {
                return Err(NamesError::MixedAlgebras {
                    left: algebra.atom_count(),
                    right: sub.algebra.atom_count(),
                });
            }
            if !algebra.contains(*value) {
                return Err(NamesError::MixedAlgebras {
                    left: algebra.atom_count(),
                    right: value.universe(),
                });
            }
        }
        entries.sort_by(|(a, x), (b, y)| a.cmp(b).then(x.cmp(y)));
        entries.dedup_by(|(a, x), (b, y)| a == b && x == y);
        let rank = entries.iter().map(|(s, _)| s.rank + 1).max().unwrap_or(0);
        Ok(Name {
            algebra: algebra.clone(),
            entries,
            rank,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn entries(&self) -> &[(Name, Element)] {
        &self.entries
    }

    /// rank = sup of subname ranks + 1; the empty name has rank 0.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Distinct subnames, in canonical order.
    pub fn dom(&self) -> Vec<&Name> {
        let mut out: Vec<&Name> = Vec::new();
        for (sub, _) in &self.entries {
            if out.last() != Some(&sub) {
                out.push(sub);
            }
        }
        out
    }

    /// All names reachable through entries, the name itself included.
    pub fn subname_closure(&self) -> Vec<Name> {
        let mut out: Vec<Name> = Vec::new();
        let mut queue = vec![self.clone()];
        while let Some(n) = queue.pop() {
            if out.iter().all(|m| m != &n) {
                queue.extend(n.entries.iter().map(|(s, _)| s.clone()));
                out.push(n);
            }
        }
        out.sort();
        out
    }
}

// Equality and order ignore the algebra's labels: names over algebras with
// the same atom count compare structurally.
impl PartialEq for Name {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.atom_count() == other.algebra.atom_count() && self.entries == other.entries
    }
}

impl Eq for Name {}

impl Ord for Name {
    fn cmp(&self, other: &Self) -> Ordering {
        self.algebra
            .atom_count()
            .cmp(&other.algebra.atom_count())
            .then_with(|| {
                // Shorter-first, then lexicographic: a total structural
                // order that terminates without comparing ranks.
                self.entries
                    .len()
                    .cmp(&other.entries.len())
                    .then_with(|| self.entries.cmp(&other.entries))
            })
    }
}

impl PartialOrd for Name {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::hash::Hash for Name {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.algebra.atom_count().hash(state);
        for (sub, value) in &self.entries {
            sub.hash(state);
            value.mask().hash(state);
        }
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("{}");
        }
        write!(f, "{{")?;
        for (i, (sub, value)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "<{sub:?}, {}>", self.algebra.show(*value))?;
        }
        write!(f, "}}")
    }
}

/// The check name of a hereditarily finite set: every member's check name
/// with value one.
pub fn check_name(algebra: &Algebra, x: &HFSet) -> Name {
    let entries = x
        .elements()
        .iter()
        .map(|y| (check_name(algebra, y), algebra.one()))
        .collect();
    Name::new(algebra, entries).expect("check entries are same-algebra")
}

/// Mixes one name per antichain element: entries of each `names[k]` are kept
/// with their values cut down to the k-th antichain element.  The result
/// agrees with `names[k]` at least up to that element; when the antichain is
/// maximal and the mixed names are pairwise incompatible with value one, the
/// agreement is exact.
pub fn mix(antichain: &Antichain, names: &[Name]) -> Result<Name> {
    if antichain.len() != names.len() {
        return Err(NamesError::MixArity {
            antichain: antichain.len(),
            assigned: names.len(),
        });
    }
    let algebra = match names.first() {
        Some(n) => n.algebra().clone(),
        None => {
            return Err(NamesError::MixArity {
                antichain: 0,
                assigned: 0,
            });
        }
    };
    let mut entries = Vec::new();
    for (a, name) in antichain.elements().iter().zip(names) {
        if name.algebra().atom_count() != algebra.atom_count() {
            return Err(NamesError::MixedAlgebras {
                left: algebra.atom_count(),
                right: name.algebra().atom_count(),
            });
        }
        for (sub, b) in name.entries() {
            entries.push((sub.clone(), algebra.meet(*b, *a)?));
        }
    }
    Name::new(&algebra, entries)
}

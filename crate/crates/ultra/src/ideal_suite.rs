//! Working modulo an ideal: transferring filters back from the quotient,
//! choosing truly disjoint representatives for antichains mod the ideal,
//! and threading paths through level sequences of antichains mod the ideal.

use ba_kernel::{quotient, Algebra, Element, Ideal, Quotient};
use names::Filter;

use crate::{Result, UltraError};

/// Pulls a filter on the quotient algebra back to the base: the elements
/// whose classes the filter accepts.
pub fn induced_filter(
    base: &Algebra,
    q: &Quotient,
    f: &Filter,
) -> Result<Filter> {
    if f.algebra().atom_count() != q.algebra().atom_count() {
        return Err(UltraError::BadInput(
            "filter does not live on the quotient algebra".to_string(),
        ));
    }
    let members = base
        .elements()
        .filter(|&b| f.contains(q.project(b)))
        .collect();
    Ok(Filter::from_members(base, members)?)
}

fn check_antichain_mod(ideal: &Ideal, members: &[Element]) -> Result<()> {
    for (k, &a) in members.iter().enumerate() {
        if ideal.contains(a) {
            return Err(UltraError::BadInput(
                "antichain member vanishes mod the ideal".to_string(),
            ));
        }
        for &b in &members[..k] {
            // a ∧ b as a − (a − b), staying inside element ops.
            if !ideal.contains(a.minus(a.minus(b))) {
                return Err(UltraError::BadInput(
                    "two members overlap mod the ideal".to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// Searches for representatives congruent to the given antichain-mod-ideal
/// members that are truly pairwise disjoint. Exhaustive with pruning;
/// None means no such choice exists.
pub fn disjointify(
    algebra: &Algebra,
    ideal: &Ideal,
    members: &[Element],
) -> Result<Option<Vec<Element>>> {
    check_antichain_mod(ideal, members)?;
    let candidates: Vec<Vec<Element>> = members
        .iter()
        .map(|&a| {
            algebra
                .elements()
                .filter(|&b| ideal.congruent(a, b))
                .collect()
        })
        .collect();
    let mut chosen: Vec<Element> = Vec::new();
    Ok(search_disjoint(&candidates, &mut chosen))
}

fn search_disjoint(candidates: &[Vec<Element>], chosen: &mut Vec<Element>) -> Option<Vec<Element>> {
    if chosen.len() == candidates.len() {
        return Some(chosen.clone());
    }
    for &b in &candidates[chosen.len()] {
        if chosen.iter().all(|&c| c.disjoint(b)) {
            chosen.push(b);
            if let Some(found) = search_disjoint(candidates, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
    }
    None
}

/// Threads a path from `a0` through successive levels: each step picks a
/// level member below the previous one mod the ideal, and the path's true
/// meet must stay nonzero.
pub fn tree_path(
    algebra: &Algebra,
    ideal: &Ideal,
    levels: &[Vec<Element>],
    a0: Element,
) -> Result<Option<Vec<Element>>> {
    for level in levels {
        check_antichain_mod(ideal, level)?;
        // Maximal mod the ideal: the complement of the join vanishes.
        let join = algebra.big_join(level.iter().copied())?;
        if !ideal.contains(algebra.complement(join)?) {
            return Err(UltraError::BadInput(
                "a level is not maximal mod the ideal".to_string(),
            ));
        }
    }
    let first = levels.first().ok_or_else(|| {
        UltraError::BadInput("a tree needs at least one level".to_string())
    })?;
    if !first.contains(&a0) {
        return Err(UltraError::BadInput(
            "the starting condition is not on the first level".to_string(),
        ));
    }
    let mut path = vec![a0];
    Ok(extend_path(ideal, levels, &mut path, a0))
}

fn extend_path(
    ideal: &Ideal,
    levels: &[Vec<Element>],
    path: &mut Vec<Element>,
    meet: Element,
) -> Option<Vec<Element>> {
    if meet.is_zero() {
        return None;
    }
    if path.len() == levels.len() {
        return Some(path.clone());
    }
    let current = *path.last().expect("path starts at a0");
    for &next in &levels[path.len()] {
        if ideal.leq_mod(next, current) {
            path.push(next);
            let tightened = meet.minus(meet.minus(next));
            if let Some(found) = extend_path(ideal, levels, path, tightened) {
                return Some(found);
            }
            path.pop();
        }
    }
    None
}

/// One line per base ultrafilter question: does every ultrafilter on the
/// quotient pull back to an ultrafilter on the base?
#[derive(Debug, Clone)]
pub struct IdealSuiteReport {
    pub quotient_atoms: usize,
    pub ultrafilters_checked: usize,
    pub all_induced_ultra: bool,
}

pub fn ideal_suite(algebra: &Algebra, ideal: &Ideal) -> Result<IdealSuiteReport> {
    let q = quotient(algebra, ideal)?;
    let mut all_induced_ultra = true;
    let ultrafilters = Filter::all_ultrafilters(q.algebra());
    for f in &ultrafilters {
        if !induced_filter(algebra, &q, f)?.is_ultra() {
            all_induced_ultra = false;
        }
    }
    Ok(IdealSuiteReport {
        quotient_atoms: q.algebra().atom_count(),
        ultrafilters_checked: ultrafilters.len(),
        all_induced_ultra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_ideal_keeps_antichains_as_they_are() {
        let algebra = Algebra::new(3).unwrap();
        let ideal = Ideal::principal(&algebra, algebra.zero()).unwrap();
        let members = vec![algebra.atom(0), algebra.atom(1)];
        let reps = disjointify(&algebra, &ideal, &members).unwrap().unwrap();
        assert_eq!(reps, members);
    }

    #[test]
    fn quotient_antichain_lifts_to_disjoint_representatives() {
        // Killing atom 2 makes {a0+a2, a1+a2} an antichain mod the ideal
        // but not a true one; representatives must drop the shared atom.
        let algebra = Algebra::new(3).unwrap();
        let ideal = Ideal::principal(&algebra, algebra.atom(2)).unwrap();
        let members = vec![
            algebra.element_from_atoms(&[0, 2]).unwrap(),
            algebra.element_from_atoms(&[1, 2]).unwrap(),
        ];
        let reps = disjointify(&algebra, &ideal, &members).unwrap().unwrap();
        assert_eq!(reps.len(), 2);
        assert!(reps[0].disjoint(reps[1]));
        for (rep, orig) in reps.iter().zip(&members) {
            assert!(ideal.congruent(*rep, *orig));
        }
    }

    #[test]
    fn overlapping_input_is_rejected() {
        let algebra = Algebra::new(3).unwrap();
        let ideal = Ideal::principal(&algebra, algebra.zero()).unwrap();
        let members = vec![
            algebra.element_from_atoms(&[0, 1]).unwrap(),
            algebra.element_from_atoms(&[1, 2]).unwrap(),
        ];
        assert!(disjointify(&algebra, &ideal, &members).is_err());
    }

    #[test]
    fn tree_path_exists_iff_some_branch_has_nonzero_meet() {
        let algebra = Algebra::new(4).unwrap();
        let ideal = Ideal::principal(&algebra, algebra.atom(3)).unwrap();
        let top = vec![
            algebra.element_from_atoms(&[0, 1]).unwrap(),
            algebra.element_from_atoms(&[2, 3]).unwrap(),
        ];
        let bottom = vec![
            algebra.element_from_atoms(&[0]).unwrap(),
            algebra.element_from_atoms(&[1]).unwrap(),
            algebra.element_from_atoms(&[2]).unwrap(),
        ];
        let path = tree_path(&algebra, &ideal, &[top.clone(), bottom.clone()], top[0])
            .unwrap()
            .unwrap();
        assert_eq!(path.len(), 2);
        assert!(ideal.leq_mod(path[1], path[0]));

        // A level whose atom-2 coverage drags in atom 0 leaves no
        // continuation below the {2,3} branch.
        let blocking = vec![
            algebra.element_from_atoms(&[0, 2]).unwrap(),
            algebra.element_from_atoms(&[1]).unwrap(),
        ];
        let second = tree_path(&algebra, &ideal, &[top.clone(), blocking], top[1]).unwrap();
        assert!(second.is_none());
    }

    #[test]
    fn induced_ultrafilters_stay_ultra_up_to_four_atoms() {
        for atoms in 2..=4usize {
            let algebra = Algebra::new(atoms).unwrap();
            for killed in 0..atoms {
                let ideal = Ideal::principal(&algebra, algebra.atom(killed)).unwrap();
                let report = ideal_suite(&algebra, &ideal).unwrap();
                assert_eq!(report.quotient_atoms, atoms - 1);
                assert!(report.all_induced_ultra, "{report:?}");
            }
        }
    }
}

//! Two-step iteration of ultrafilters: composing a base ultrafilter with a
//! fiber ultrafilter into one on the iteration algebra, and decomposing back.

use ba_kernel::Iteration;
use names::Filter;

use crate::{Result, Ultrafilter, UltraError};

/// Composes a base ultrafilter with an ultrafilter on the fiber over its
/// atom. The result is principal at the combined atom.
pub fn iteration_ultrafilter(
    iter: &Iteration,
    u0: &Ultrafilter,
    u1: &Ultrafilter,
) -> Result<Ultrafilter> {
    let base_atom = u0.atom()?;
    let fiber_atom = u1.atom()?;
    let fiber_size = iter.fiber_size(base_atom);
    if u1.algebra()?.atom_count() != fiber_size {
        return Err(UltraError::BadInput(format!(
            "fiber ultrafilter lives on {} atoms but the fiber over base atom {} has {}",
            u1.algebra()?.atom_count(),
            base_atom,
            fiber_size
        )));
    }
    Ultrafilter::principal(iter.algebra(), iter.atom_index(base_atom, fiber_atom))
}

/// Splits an ultrafilter on the iteration algebra into its base part and
/// its fiber part.
pub fn iteration_decompose(
    iter: &Iteration,
    u: &Ultrafilter,
) -> Result<(Ultrafilter, Ultrafilter)> {
    let (base_atom, fiber_atom) = iter.atom_pair(u.atom()?);
    let base = ba_kernel::Algebra::new(iter.base_atom_count())?;
    let fiber = ba_kernel::Algebra::new(iter.fiber_size(base_atom))?;
    Ok((
        Ultrafilter::principal(&base, base_atom)?,
        Ultrafilter::principal(&fiber, fiber_atom)?,
    ))
}

/// Projects an iteration ultrafilter to the base by membership of embedded
/// base elements, without peeking at the selected atom.
pub fn iteration_project(iter: &Iteration, u: &Ultrafilter) -> Result<Ultrafilter> {
    let base = ba_kernel::Algebra::new(iter.base_atom_count())?;
    let mut hit = None;
    for i in 0..iter.base_atom_count() {
        if u.contains(iter.embed_base(base.atom(i)))? {
            if hit.is_some() {
                return Err(UltraError::NotUltra(
                    "two embedded base atoms are large".to_string(),
                ));
            }
            hit = Some(i);
        }
    }
    match hit {
        Some(i) => Ultrafilter::principal(&base, i),
        None => Err(UltraError::NotUltra(
            "no embedded base atom is large".to_string(),
        )),
    }
}

/// Round-trip evidence for the composition: every ultrafilter on the
/// iteration algebra decomposes, recomposes to itself, projects to its
/// base part, and is generated by the embedded base filter together with
/// the fiber constraint.
#[derive(Debug, Clone)]
pub struct IterationRoundTrip {
    pub composed_atoms: usize,
    pub all_recovered: bool,
    pub projection_matches: bool,
    pub generated_filter_matches: bool,
}

impl IterationRoundTrip {
    pub fn ok(&self) -> bool {
        self.all_recovered && self.projection_matches && self.generated_filter_matches
    }
}

pub fn iteration_round_trip(iter: &Iteration) -> Result<IterationRoundTrip> {
    let algebra = iter.algebra();
    let mut all_recovered = true;
    let mut projection_matches = true;
    let mut generated_filter_matches = true;
    let total = algebra.atom_count();

    for k in 0..total {
        let u = Ultrafilter::principal(algebra, k)?;
        let (u0, u1) = iteration_decompose(iter, &u)?;
        let back = iteration_ultrafilter(iter, &u0, &u1)?;
        if back.atom()? != k {
            all_recovered = false;
        }
        if iteration_project(iter, &u)?.atom()? != u0.atom()? {
            projection_matches = false;
        }

        // The composed ultrafilter is the upward closure of the embedded
        // base members together with the selected fiber constraint: the
        // element that keeps the whole fiber over every other base atom
        // and only the selected piece over the selected one.
        let (base_atom, fiber_atom) = iter.atom_pair(k);
        let mut constraint_atoms = Vec::new();
        for j in 0..total {
            let (b, f) = iter.atom_pair(j);
            if b != base_atom || f == fiber_atom {
                constraint_atoms.push(j);
            }
        }
        let constraint = algebra.element_from_atoms(&constraint_atoms)?;
        let base = u0.algebra()?;
        let mut generators = vec![constraint];
        for b in base.elements() {
            if u0.contains(b)? {
                generators.push(iter.embed_base(b));
            }
        }
        let generated = Filter::principal(algebra, algebra.big_meet(generators)?)?;
        for e in algebra.elements() {
            if generated.contains(e) != u.contains(e)? {
                generated_filter_matches = false;
            }
        }
    }

    Ok(IterationRoundTrip {
        composed_atoms: total,
        all_recovered,
        projection_matches,
        generated_filter_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ba_kernel::{iteration_algebra, Algebra};

    #[test]
    fn uneven_fibers_compose_and_decompose() {
        let base = Algebra::new(3).unwrap();
        let fibers = vec![
            Algebra::new(2).unwrap(),
            Algebra::new(1).unwrap(),
            Algebra::new(3).unwrap(),
        ];
        let iter = iteration_algebra(&base, &fibers).unwrap();
        let report = iteration_round_trip(&iter).unwrap();
        assert_eq!(report.composed_atoms, 6);
        assert!(report.ok(), "{report:?}");
    }

    #[test]
    fn fiber_on_the_wrong_algebra_is_rejected() {
        let base = Algebra::new(2).unwrap();
        let fibers = vec![Algebra::new(2).unwrap(), Algebra::new(3).unwrap()];
        let iter = iteration_algebra(&base, &fibers).unwrap();
        let u0 = Ultrafilter::principal(&base, 0).unwrap();
        let wrong = Algebra::new(3).unwrap();
        let u1 = Ultrafilter::principal(&wrong, 2).unwrap();
        assert!(iteration_ultrafilter(&iter, &u0, &u1).is_err());
    }

    #[test]
    fn projection_agrees_with_the_decomposed_base_part() {
        let base = Algebra::new(2).unwrap();
        let fibers = vec![Algebra::new(2).unwrap(), Algebra::new(2).unwrap()];
        let iter = iteration_algebra(&base, &fibers).unwrap();
        for k in 0..4 {
            let u = Ultrafilter::principal(iter.algebra(), k).unwrap();
            let (u0, _) = iteration_decompose(&iter, &u).unwrap();
            let projected = iteration_project(&iter, &u).unwrap();
            assert_eq!(projected.atom().unwrap(), u0.atom().unwrap());
        }
    }
}

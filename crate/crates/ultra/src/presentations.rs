//! The two presentations of the same quotient: spanning functions modulo
//! the ultrafilter on one side, name classes on the other, tied together by
//! mixing each function's values over its domain.

use ba_kernel::{Antichain, Algebra};
use names::{check_name, mix, HFSet, Name, NamePool};

use crate::quotient::quotient_model;
use crate::spanning::{sf_equiv, SpanningFunction};
use crate::{QuotientModel, Result, Ultrafilter, UltraError};

/// Pool seeded with every mixture of fragment values over each of the given
/// maximal antichains, so the mixing map lands inside the pool for any
/// function on any of them.
pub fn mixing_pool(
    algebra: &Algebra,
    fragment_rank: usize,
    antichains: &[Antichain],
) -> Result<NamePool> {
    let fragment = HFSet::all_up_to_rank(fragment_rank);
    let mut seeds: Vec<Name> = Vec::new();
    for chain in antichains {
        for assignment in value_tuples(fragment.len(), chain.len()) {
            let ingredients: Vec<Name> = assignment
                .iter()
                .map(|&v| check_name(algebra, &fragment[v]))
                .collect();
            seeds.push(mix(chain, &ingredients)?);
        }
    }
    Ok(NamePool::new(algebra, &seeds, fragment_rank)?)
}

/// The mixture name of a spanning function with fragment values.
pub fn function_name(f: &SpanningFunction, algebra: &Algebra) -> Result<Name> {
    let ingredients: Vec<Name> = f
        .values()
        .iter()
        .map(|v| check_name(algebra, v))
        .collect();
    Ok(mix(f.domain(), &ingredients)?)
}

/// The transfer map and its verification sweep.
#[derive(Debug, Clone)]
pub struct PresentationIso {
    /// Every function from the atom antichain into the fragment.
    pub functions: Vec<SpanningFunction>,
    /// Function index to quotient class.
    pub pi: Vec<usize>,
    pub function_classes: usize,
    pub name_classes: usize,
    pub well_defined: bool,
    pub injective_on_classes: bool,
    pub surjective: bool,
    pub membership_preserved: bool,
    pub commutes_with_embeddings: bool,
}

impl PresentationIso {
    pub fn ok(&self) -> bool {
        self.well_defined
            && self.injective_on_classes
            && self.surjective
            && self.membership_preserved
            && self.commutes_with_embeddings
    }
}

/// Builds the map from spanning-function classes over the atom antichain to
/// the quotient's name classes and verifies it is an isomorphism commuting
/// with both canonical embeddings.  The quotient must come from a pool that
/// contains every atom-antichain mixture of fragment values (see
/// [`mixing_pool`]).
pub fn presentations_iso(q: &QuotientModel) -> Result<PresentationIso> {
    let b = q.pool().algebra().clone();
    let u = q.ultra().clone();
    let fragment = HFSet::all_up_to_rank(q.pool().fragment_rank());
    let atoms = Antichain::atoms(&b);

    let mut functions = Vec::new();
    let mut pi = Vec::new();
    for assignment in value_tuples(fragment.len(), atoms.len()) {
        let values: Vec<HFSet> = assignment.iter().map(|&v| fragment[v].clone()).collect();
        let f = SpanningFunction::new(atoms.clone(), values)?;
        let tau = function_name(&f, &b)?;
        let class = q.class_of_name(&tau).ok_or_else(|| {
            UltraError::BadInput(
                "pool misses a mixture; build the quotient over a mixing pool".to_string(),
            )
        })?;
        functions.push(f);
        pi.push(class);
    }

    let n = functions.len();
    let mut well_defined = true;
    let mut injective_on_classes = true;
    let mut membership_preserved = true;
    for i in 0..n {
        for j in 0..n {
            let equiv = sf_equiv(&functions[i], &functions[j], &u)?;
            if equiv != (pi[i] == pi[j]) {
                if equiv {
                    well_defined = false;
                } else {
                    injective_on_classes = false;
                }
            }
            let mut member_positions = b.zero();
            for (k, &a) in atoms.elements().iter().enumerate() {
                if functions[j].values()[k].contains(&functions[i].values()[k]) {
                    member_positions = b.join(member_positions, a)?;
                }
            }
            let span_member = u.contains(member_positions)?;
            if span_member != q.member(pi[i], pi[j]) {
                membership_preserved = false;
            }
        }
    }

    let surjective = (0..q.class_count()).all(|c| pi.contains(&c));

    let mut commutes_with_embeddings = true;
    for x in &fragment {
        let constant = SpanningFunction::constant(&b, x.clone());
        let via_function = {
            let tau = function_name(&sf_reduce_to_atoms(&constant, &atoms)?, &b)?;
            q.class_of_name(&tau)
        };
        let direct = q.j(x)?;
        if via_function != Some(direct) {
            commutes_with_embeddings = false;
        }
    }

    let function_classes = {
        let mut seen: Vec<usize> = pi.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    };

    Ok(PresentationIso {
        functions,
        pi,
        function_classes,
        name_classes: q.class_count(),
        well_defined,
        injective_on_classes,
        surjective,
        membership_preserved,
        commutes_with_embeddings,
    })
}

fn sf_reduce_to_atoms(f: &SpanningFunction, atoms: &Antichain) -> Result<SpanningFunction> {
    crate::spanning::sf_reduce(f, atoms)
}

/// Builds the standard setup in one call: mixing pool over the atom
/// antichain, quotient, and the verified transfer map.
pub fn presentations_setup(
    algebra: &Algebra,
    u: &Ultrafilter,
    fragment_rank: usize,
) -> Result<(QuotientModel, PresentationIso)> {
    let pool = mixing_pool(algebra, fragment_rank, &[Antichain::atoms(algebra)])?;
    let q = quotient_model(&pool, u)?;
    let iso = presentations_iso(&q)?;
    Ok((q, iso))
}

/// All tuples in `0..values` of the given length.
fn value_tuples(values: usize, length: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..length {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..values).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate_ultrafilters;

    #[test]
    fn constant_functions_land_on_check_classes() {
        let b = Algebra::new(2).unwrap();
        let u = Ultrafilter::principal(&b, 0).unwrap();
        let (q, iso) = presentations_setup(&b, &u, 1).unwrap();
        assert!(iso.ok(), "{iso:?}");
        // The constant-empty function is one of the enumerated functions.
        let empty_idx = iso
            .functions
            .iter()
            .position(|f| f.values().iter().all(HFSet::is_empty))
            .unwrap();
        assert_eq!(iso.pi[empty_idx], q.j(&HFSet::empty()).unwrap());
    }

    #[test]
    fn transfer_map_is_an_isomorphism_for_every_ultrafilter() {
        for atoms in 1..=3 {
            let b = Algebra::new(atoms).unwrap();
            for u in enumerate_ultrafilters(&b) {
                let (q, iso) = presentations_setup(&b, &u, 1).unwrap();
                assert!(iso.ok(), "{atoms} atoms, {u}: {iso:?}");
                assert_eq!(iso.function_classes, iso.name_classes);
                assert!(q.class_count() > 0);
            }
        }
    }

    #[test]
    fn selected_atom_determines_the_image_class() {
        let b = Algebra::new(2).unwrap();
        let u = Ultrafilter::principal(&b, 1).unwrap();
        let (q, iso) = presentations_setup(&b, &u, 1).unwrap();
        for (f, &class) in iso.functions.iter().zip(&iso.pi) {
            // Under a principal ultrafilter the class is the value at the
            // selected atom.
            let expected = q.j(&f.values()[1]).unwrap();
            assert_eq!(class, expected);
        }
    }
}

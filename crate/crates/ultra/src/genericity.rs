//! Degree-of-genericity diagnostics: triviality of finite quotients, the
//! symbolic witness that the ω-stage quotient is proper, descent chains,
//! and genericity relative to a declared antichain family.

use ba_kernel::{Algebra, Antichain, Element};
use names::HFSet;
use omega_symbolic::{comparison_eq, u_membership, EAFunction, UPSet};

use crate::limit::DirectLimitSystem;
use crate::{QuotientModel, Result, Ultrafilter, UltraError};

/// Outcome of the triviality probe. On a finite algebra the embedding is
/// onto and the report says so; on the symbolic handle a non-surjectivity
/// witness is produced instead.
#[derive(Debug, Clone)]
pub struct TrivialityReport {
    pub symbolic: bool,
    /// Finite case: the embedding is a bijection onto the crisp classes
    /// and preserves membership.
    pub iso_verified: Option<bool>,
    pub degree_of_genericity: String,
    /// Symbolic case: the class with no constant preimage.
    pub witness: Option<String>,
    pub constants_checked: u64,
}

impl TrivialityReport {
    pub fn ok(&self) -> bool {
        if self.symbolic {
            self.witness.is_some()
        } else {
            self.iso_verified == Some(true)
        }
    }
}

/// Finite quotients are trivial: the embedding hits every class in the
/// crisp fragment and the report degree is "none". The symbolic decider
/// escapes this by exhibiting a function unequal to every constant.
pub fn generic_triviality_check(
    quotient: Option<&QuotientModel>,
    u: &Ultrafilter,
    constants_to_check: u64,
) -> Result<TrivialityReport> {
    if u.is_symbolic() {
        for k in 0..constants_to_check {
            let agreement = comparison_eq(&EAFunction::identity(), &EAFunction::constant(k));
            if !agreement.is_finite() || u_membership(&agreement) {
                return Err(UltraError::NotUltra(format!(
                    "identity collapses onto the constant {k}"
                )));
            }
        }
        return Ok(TrivialityReport {
            symbolic: true,
            iso_verified: None,
            degree_of_genericity: format!(
                "proper extension: [id] differs from the first {constants_to_check} constants"
            ),
            witness: Some("the identity function's class has no constant preimage".to_string()),
            constants_checked: constants_to_check,
        });
    }

    let q = quotient.ok_or_else(|| {
        UltraError::BadInput("finite triviality check needs a quotient model".to_string())
    })?;
    let rank = q.pool().fragment_rank();
    let fragment = HFSet::all_up_to_rank(rank);
    let mut classes = Vec::new();
    let mut iso = true;
    for x in &fragment {
        let c = q.j(x)?;
        if classes.contains(&c) {
            iso = false;
        }
        classes.push(c);
    }
    // Onto the crisp classes: everything the fragment predicate admits is
    // an embedded point.
    for c in 0..q.class_count() {
        if q.in_vcheck(c) && !classes.contains(&c) {
            iso = false;
        }
    }
    for (i, x) in fragment.iter().enumerate() {
        for (k, y) in fragment.iter().enumerate() {
            if q.member(classes[i], classes[k]) != y.contains(x) {
                iso = false;
            }
        }
    }
    Ok(TrivialityReport {
        symbolic: false,
        iso_verified: Some(iso),
        degree_of_genericity: "none — trivial ultrapower".to_string(),
        witness: None,
        constants_checked: 0,
    })
}

/// Per-antichain outcome of the relative-genericity search: one chosen
/// refinement piece per member of the coarse antichain.
#[derive(Debug, Clone)]
pub struct RelativeGenericityReport {
    pub coarse: Antichain,
    /// One selection per declared refinement, parallel to the coarse
    /// antichain's member list; None when the search failed.
    pub selections: Vec<Option<Vec<Element>>>,
    pub generic: bool,
}

/// For each declared refinement C of A, picks c_a ≤ a for every a ∈ A so
/// that the join of the choices is large.
pub fn relative_genericity(
    u: &Ultrafilter,
    coarse: &Antichain,
    refinements: &[Antichain],
) -> Result<RelativeGenericityReport> {
    let algebra = u.algebra()?;
    let mut selections = Vec::new();
    let mut generic = true;
    for fine in refinements {
        if !fine.refines(coarse) {
            return Err(UltraError::BadFamily(
                "a declared antichain does not refine the coarse one".to_string(),
            ));
        }
        // One candidate list per coarse member; the large piece of the
        // fine antichain pins down the choice below its coarse parent.
        let mut choice: Vec<Option<Element>> = vec![None; coarse.elements().len()];
        for &c in fine.elements() {
            if u.contains(c)? {
                let parent = coarse
                    .elements()
                    .iter()
                    .position(|&a| c.leq(a))
                    .expect("refinement member has a coarse parent");
                choice[parent] = Some(c);
            }
        }
        for (slot, &a) in choice.iter_mut().zip(coarse.elements()) {
            if slot.is_none() {
                *slot = fine.elements().iter().copied().find(|c| c.leq(a));
            }
        }
        let chosen: Option<Vec<Element>> = choice.into_iter().collect();
        let verified = match &chosen {
            Some(picks) => {
                picks.iter().zip(coarse.elements()).all(|(c, &a)| c.leq(a))
                    && u.contains(algebra.big_join(picks.iter().copied())?)?
            }
            None => false,
        };
        if !verified {
            generic = false;
            selections.push(None);
        } else {
            selections.push(chosen);
        }
    }
    Ok(RelativeGenericityReport {
        coarse: coarse.clone(),
        selections,
        generic,
    })
}

/// The three-way equivalence at one declared antichain: relative
/// genericity, surjectivity of the connecting maps out of it, and the
/// limit collapsing onto its factor.
#[derive(Debug, Clone)]
pub struct ClassicalIffReport {
    pub relatively_generic: bool,
    pub projections_surjective: bool,
    pub limit_matches_factor: bool,
    pub equivalence_holds: bool,
}

pub fn classical_iff_check(
    system: &DirectLimitSystem,
    coarse_index: usize,
) -> Result<ClassicalIffReport> {
    let antichains = system.antichains();
    let coarse = antichains
        .get(coarse_index)
        .ok_or_else(|| UltraError::BadInput("antichain index out of range".to_string()))?;
    let refining: Vec<usize> = (0..antichains.len())
        .filter(|&i| antichains[i].refines(coarse))
        .collect();
    let refinement_list: Vec<Antichain> =
        refining.iter().map(|&i| antichains[i].clone()).collect();
    let relatively_generic =
        relative_genericity(system.ultra(), coarse, &refinement_list)?.generic;

    let mut projections_surjective = true;
    for &fine in &refining {
        let target_classes = system.factors()[fine].class_count();
        let source_classes = system.factors()[coarse_index].class_count();
        let mut hit = vec![false; target_classes];
        for c in 0..source_classes {
            hit[system.connect(coarse_index, fine, c)?] = true;
        }
        if hit.iter().any(|h| !h) {
            projections_surjective = false;
        }
    }

    let finest = system.finest()?;
    let source = &system.factors()[coarse_index];
    let target = &system.factors()[finest];
    let mut limit_matches_factor = source.class_count() == target.class_count();
    let mut image = vec![usize::MAX; source.class_count()];
    for c in 0..source.class_count() {
        image[c] = system.connect(coarse_index, finest, c)?;
    }
    for c1 in 0..source.class_count() {
        for c2 in 0..c1 {
            if image[c1] == image[c2] {
                limit_matches_factor = false;
            }
        }
    }
    for c1 in 0..source.class_count() {
        for c2 in 0..source.class_count() {
            if source.member(c1, c2) != target.member(image[c1], image[c2]) {
                limit_matches_factor = false;
            }
        }
    }

    let equivalence_holds = relatively_generic == projections_surjective
        && projections_surjective == limit_matches_factor;
    Ok(ClassicalIffReport {
        relatively_generic,
        projections_surjective,
        limit_matches_factor,
        equivalence_holds,
    })
}

/// A descending chain through an ultrafilter, with the verifier's verdict.
#[derive(Debug, Clone)]
pub struct Descent {
    pub elements: Vec<Element>,
}

#[derive(Debug, Clone)]
pub struct DescentReport {
    pub descending: bool,
    pub strict: bool,
    pub through_filter: bool,
    /// Successive differences; pairwise disjoint exactly when the chain
    /// descends.
    pub differences_form_antichain: bool,
    pub meet: Element,
}

impl DescentReport {
    pub fn ok(&self) -> bool {
        self.descending && self.through_filter && self.differences_form_antichain
    }
}

impl Descent {
    pub fn verify(&self, u: &Ultrafilter) -> Result<DescentReport> {
        let algebra = u.algebra()?;
        let descending = self
            .elements
            .windows(2)
            .all(|w| w[1].leq(w[0]));
        let strict = descending && self.elements.windows(2).all(|w| w[1] != w[0]);
        let mut through_filter = true;
        for &e in &self.elements {
            if !u.contains(e)? {
                through_filter = false;
            }
        }
        let differences: Vec<Element> = self
            .elements
            .windows(2)
            .map(|w| w[0].minus(w[1]))
            .collect();
        let mut differences_form_antichain = true;
        for i in 0..differences.len() {
            for j in 0..i {
                if !differences[i].disjoint(differences[j]) {
                    differences_form_antichain = false;
                }
            }
        }
        let meet = algebra.big_meet(self.elements.iter().copied())?;
        Ok(DescentReport {
            descending,
            strict,
            through_filter,
            differences_form_antichain,
            meet,
        })
    }
}

/// Exhaustive search for a strict descent through U from the unit with
/// meet zero. On a finite algebra none exists, and the report degree must
/// match the triviality check.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub chains_examined: usize,
    pub nontrivial_descents: usize,
    pub degree_of_genericity: String,
}

pub fn descent_spectrum(algebra: &Algebra, u: &Ultrafilter) -> Result<SpectrumReport> {
    let mut stack: Vec<Vec<Element>> = vec![vec![algebra.one()]];
    let mut chains_examined = 0;
    let mut nontrivial = 0;
    while let Some(chain) = stack.pop() {
        chains_examined += 1;
        let last = *chain.last().expect("chains start nonempty");
        if algebra
            .big_meet(chain.iter().copied())
            .map(|m| m.is_zero())
            .unwrap_or(false)
        {
            nontrivial += 1;
        }
        for e in algebra.elements() {
            if e != last && e.leq(last) && u.contains(e)? {
                let mut next = chain.clone();
                next.push(e);
                stack.push(next);
            }
        }
    }
    // A chain through the filter never reaches meet zero here: every link
    // contains the filter's atom.
    let degree = if nontrivial == 0 {
        "none — trivial ultrapower".to_string()
    } else {
        format!("{nontrivial} descending chains reach meet zero")
    };
    Ok(SpectrumReport {
        chains_examined,
        nontrivial_descents: nontrivial,
        degree_of_genericity: degree,
    })
}

/// The genuine infinite descent the finite spectra cannot exhibit: tails
/// of ω, strictly descending through the residue decider, with empty
/// pointwise intersection.
#[derive(Debug, Clone)]
pub struct OmegaDescent {
    pub sets: Vec<UPSet>,
    pub strictly_descending: bool,
    pub through_filter: bool,
    pub empty_intersection: bool,
}

impl OmegaDescent {
    pub fn ok(&self) -> bool {
        self.strictly_descending && self.through_filter && self.empty_intersection
    }
}

pub fn omega_descent_demo(length: u64) -> OmegaDescent {
    let sets: Vec<UPSet> = (0..length).map(UPSet::tail).collect();
    let strictly_descending = sets
        .windows(2)
        .all(|w| w[1].minus(&w[0]).is_empty() && w[1] != w[0]);
    let through_filter = sets.iter().all(u_membership);
    // Every point eventually falls out of the chain, so the meet is empty
    // even though every link is cofinite.
    let empty_intersection = (0..length).all(|m| m + 1 >= length || !sets[(m + 1) as usize].contains(m));
    OmegaDescent {
        sets,
        strictly_descending,
        through_filter,
        empty_intersection,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::quotient_model;
    use names::NamePool;

    #[test]
    fn finite_quotients_are_trivial_for_every_ultrafilter() {
        let algebra = Algebra::new(3).unwrap();
        let pool = NamePool::new(&algebra, &[], 1).unwrap();
        for atom in 0..3 {
            let u = Ultrafilter::principal(&algebra, atom).unwrap();
            let q = quotient_model(&pool, &u).unwrap();
            let report = generic_triviality_check(Some(&q), &u, 0).unwrap();
            assert!(report.ok(), "{report:?}");
            assert_eq!(report.degree_of_genericity, "none — trivial ultrapower");
        }
    }

    #[test]
    fn symbolic_decider_escapes_all_constants() {
        let u = Ultrafilter::symbolic();
        let report = generic_triviality_check(None, &u, 64).unwrap();
        assert!(report.symbolic);
        assert!(report.ok(), "{report:?}");
        assert_eq!(report.constants_checked, 64);
    }

    #[test]
    fn principal_ultrafilters_are_generic_relative_to_every_antichain() {
        let algebra = Algebra::new(4).unwrap();
        let coarse = Antichain::new(
            &algebra,
            vec![
                algebra.element_from_atoms(&[0, 1]).unwrap(),
                algebra.element_from_atoms(&[2, 3]).unwrap(),
            ],
        )
        .unwrap();
        let refinements = vec![coarse.clone(), Antichain::atoms(&algebra)];
        for atom in 0..4 {
            let u = Ultrafilter::principal(&algebra, atom).unwrap();
            let report = relative_genericity(&u, &coarse, &refinements).unwrap();
            assert!(report.generic, "atom {atom}: {report:?}");
        }
    }

    #[test]
    fn non_refining_family_is_rejected() {
        let algebra = Algebra::new(4).unwrap();
        let coarse = Antichain::new(
            &algebra,
            vec![
                algebra.element_from_atoms(&[0, 1]).unwrap(),
                algebra.element_from_atoms(&[2, 3]).unwrap(),
            ],
        )
        .unwrap();
        let sideways = Antichain::new(
            &algebra,
            vec![
                algebra.element_from_atoms(&[0, 2]).unwrap(),
                algebra.element_from_atoms(&[1, 3]).unwrap(),
            ],
        )
        .unwrap();
        let u = Ultrafilter::principal(&algebra, 0).unwrap();
        assert!(relative_genericity(&u, &coarse, &[sideways]).is_err());
    }

    #[test]
    fn descent_verifier_and_finite_spectrum() {
        let algebra = Algebra::new(4).unwrap();
        let u = Ultrafilter::principal(&algebra, 0).unwrap();
        let chain = Descent {
            elements: vec![
                algebra.one(),
                algebra.element_from_atoms(&[0, 1, 2]).unwrap(),
                algebra.element_from_atoms(&[0, 1]).unwrap(),
                algebra.element_from_atoms(&[0]).unwrap(),
            ],
        };
        let report = chain.verify(&u).unwrap();
        assert!(report.ok() && report.strict, "{report:?}");
        assert_eq!(report.meet, algebra.atom(0));

        let spectrum = descent_spectrum(&algebra, &u).unwrap();
        assert_eq!(spectrum.nontrivial_descents, 0);
        assert_eq!(spectrum.degree_of_genericity, "none — trivial ultrapower");
    }

    #[test]
    fn omega_tails_descend_with_empty_meet() {
        let demo = omega_descent_demo(12);
        assert!(demo.ok(), "{demo:?}");
    }
}

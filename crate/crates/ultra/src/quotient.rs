//! The quotient of a name pool by an ultrafilter: restricted equivalence
//! classes with induced membership and ground-fragment predicates, and the
//! canonical embedding of ground sets.

use ba_kernel::Element;
use fol::{BValuedStructure, ClassicalModel};
use names::{check_name, val, HFSet, NamePool};

use crate::{Result, Ultrafilter, UltraError};

/// Classes of pool names under "equality lands in the ultrafilter", with
/// membership and fragment predicates induced the same way.  Each class is
/// keyed by its minimal-rank member; ties break by structural order.
#[derive(Debug, Clone)]
pub struct QuotientModel {
    pool: NamePool,
    ultra: Ultrafilter,
    structure: BValuedStructure,
    class_of: Vec<usize>,
    reps: Vec<usize>,
    membership: Vec<Vec<bool>>,
    vcheck: Vec<bool>,
}

/// Builds the quotient and verifies on the way that equality-in-the-filter
/// is a congruence for the induced relations; a violation is reported as an
/// error because it would mean the decider is not actually an ultrafilter.
pub fn quotient_model(pool: &NamePool, ultra: &Ultrafilter) -> Result<QuotientModel> {
    let b = ultra.algebra()?;
    if b.atom_count() != pool.algebra().atom_count() {
        return Err(UltraError::MixedAlgebras {
            left: b.atom_count(),
            right: pool.algebra().atom_count(),
        });
    }
    let structure = pool.structure()?;
    let n = pool.len();
    let in_u = |e: Element| -> Result<bool> { ultra.contains(e) };

    // Union by the equality table; single pass suffices because the
    // relation is transitive (verified below via the congruence sweep).
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut assigned = None;
        for (c, &r) in reps.iter().enumerate() {
            if in_u(structure.eq_value(r, i)?)? {
                assigned = Some(c);
                break;
            }
        }
        match assigned {
            Some(c) => {
                class_of[i] = c;
                let names = pool.names();
                let cur = reps[c];
                let better = (names[i].rank(), &names[i]) < (names[cur].rank(), &names[cur]);
                if better {
                    reps[c] = i;
                }
            }
            None => {
                class_of[i] = reps.len();
                reps.push(i);
            }
        }
    }

    let classes = reps.len();
    let mut membership = vec![vec![false; classes]; classes];
    for (c1, &r1) in reps.iter().enumerate() {
        for (c2, &r2) in reps.iter().enumerate() {
            membership[c1][c2] = in_u(structure.relation_value("in", &[r1, r2])?)?;
        }
    }
    let mut vcheck = vec![false; classes];
    for (c, &r) in reps.iter().enumerate() {
        vcheck[c] = in_u(structure.relation_value("inV", &[r])?)?;
    }

    // Congruence sweep: every member of a class must induce the same
    // relations as the representative, and equality-in-the-filter must be
    // exactly "same class".
    for i in 0..n {
        for j in 0..n {
            let eq = in_u(structure.eq_value(i, j)?)?;
            if eq != (class_of[i] == class_of[j]) {
                return Err(UltraError::NotUltra(format!(
                    "equality classes are not transitive at pool names {i}, {j}"
                )));
            }
            let mem = in_u(structure.relation_value("in", &[i, j])?)?;
            if mem != membership[class_of[i]][class_of[j]] {
                return Err(UltraError::NotUltra(format!(
                    "membership is not a class invariant at pool names {i}, {j}"
                )));
            }
        }
        let inv = in_u(structure.relation_value("inV", &[i])?)?;
        if inv != vcheck[class_of[i]] {
            return Err(UltraError::NotUltra(format!(
                "fragment predicate is not a class invariant at pool name {i}"
            )));
        }
    }

    Ok(QuotientModel {
        pool: pool.clone(),
        ultra: ultra.clone(),
        structure,
        class_of,
        reps,
        membership,
        vcheck,
    })
}

impl QuotientModel {
    pub fn pool(&self) -> &NamePool {
        &self.pool
    }

    pub fn ultra(&self) -> &Ultrafilter {
        &self.ultra
    }

    /// The pool's evaluated structure, shared so satisfaction checks do not
    /// rebuild the atomic tables.
    pub fn structure(&self) -> &BValuedStructure {
        &self.structure
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of_index(&self, pool_index: usize) -> usize {
        self.class_of[pool_index]
    }

    pub fn class_of_name(&self, name: &names::Name) -> Option<usize> {
        self.pool.index_of(name).map(|i| self.class_of[i])
    }

    /// Pool index of the canonical representative.
    pub fn rep_index(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn rep(&self, class: usize) -> &names::Name {
        &self.pool.names()[self.reps[class]]
    }

    pub fn member(&self, c1: usize, c2: usize) -> bool {
        self.membership[c1][c2]
    }

    pub fn in_vcheck(&self, class: usize) -> bool {
        self.vcheck[class]
    }

    /// Classes of the ground-fragment submodel, ascending.
    pub fn vcheck_classes(&self) -> Vec<usize> {
        (0..self.class_count()).filter(|&c| self.vcheck[c]).collect()
    }

    /// The canonical embedding: a ground set goes to the class of its check
    /// name, which must lie in the pool's fragment.
    pub fn j(&self, x: &HFSet) -> Result<usize> {
        let name = check_name(self.pool.algebra(), x);
        self.class_of_name(&name).ok_or(UltraError::OutsideFragment {
            rank: x.rank(),
            cap: self.pool.fragment_rank(),
        })
    }

    /// Two-valued view of the whole quotient: membership and the fragment
    /// predicate as plain relations on class indices.
    pub fn classical_view(&self) -> Result<ClassicalModel> {
        let n = self.class_count();
        let mut m = ClassicalModel::new(n);
        let mut in_tuples: Vec<Vec<usize>> = Vec::new();
        let mut inv_tuples: Vec<Vec<usize>> = Vec::new();
        for c1 in 0..n {
            if self.vcheck[c1] {
                inv_tuples.push(vec![c1]);
            }
            for c2 in 0..n {
                if self.membership[c1][c2] {
                    in_tuples.push(vec![c1, c2]);
                }
            }
        }
        let in_refs: Vec<&[usize]> = in_tuples.iter().map(Vec::as_slice).collect();
        let inv_refs: Vec<&[usize]> = inv_tuples.iter().map(Vec::as_slice).collect();
        m.set_relation("in", 2, &in_refs)?;
        m.set_relation("inV", 1, &inv_refs)?;
        Ok(m)
    }

    /// Two-valued view of the fragment submodel only: universe = classes
    /// satisfying the fragment predicate, relations induced.  Returns the
    /// model together with the class index of each submodel element.
    pub fn vcheck_view(&self) -> Result<(ClassicalModel, Vec<usize>)> {
        let sub = self.vcheck_classes();
        let mut m = ClassicalModel::new(sub.len());
        let mut in_tuples: Vec<Vec<usize>> = Vec::new();
        let mut inv_tuples: Vec<Vec<usize>> = Vec::new();
        for (i1, &c1) in sub.iter().enumerate() {
            inv_tuples.push(vec![i1]);
            for (i2, &c2) in sub.iter().enumerate() {
                if self.membership[c1][c2] {
                    in_tuples.push(vec![i1, i2]);
                }
            }
        }
        let in_refs: Vec<&[usize]> = in_tuples.iter().map(Vec::as_slice).collect();
        let inv_refs: Vec<&[usize]> = inv_tuples.iter().map(Vec::as_slice).collect();
        m.set_relation("in", 2, &in_refs)?;
        m.set_relation("inV", 1, &inv_refs)?;
        Ok((m, sub))
    }

    /// Every fragment-predicate class is also reachable through a name
    /// whose fragment value is exactly one, and conversely.
    pub fn vcheck_classes_have_crisp_witnesses(&self) -> Result<bool> {
        for c in 0..self.class_count() {
            let mut witness = false;
            for i in 0..self.pool.len() {
                if self.class_of[i] != c {
                    continue;
                }
                if self.structure.relation_value("inV", &[i])?.is_one() {
                    witness = true;
                    break;
                }
            }
            if witness != self.vcheck[c] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Oracle for a principal ultrafilter: the quotient must collapse to
    /// interpretation along the atom's filter, relation for relation.
    pub fn fiber_report(&self) -> Result<FiberReport> {
        let atom = self.ultra.atom()?;
        let filter = names::Filter::at_atom(self.pool.algebra(), atom);
        let values: Vec<HFSet> = self
            .pool
            .names()
            .iter()
            .map(|n| val(n, &filter))
            .collect();
        let fragment: Vec<&HFSet> = self.pool.fragment().iter().map(|(h, _)| h).collect();
        let mut report = FiberReport {
            classes: self.class_count(),
            eq_matches: true,
            member_matches: true,
            vcheck_matches: true,
        };
        for i in 0..self.pool.len() {
            for j in 0..self.pool.len() {
                let same_class = self.class_of[i] == self.class_of[j];
                if same_class != (values[i] == values[j]) {
                    report.eq_matches = false;
                }
                let member = self.membership[self.class_of[i]][self.class_of[j]];
                if member != values[j].contains(&values[i]) {
                    report.member_matches = false;
                }
            }
            let inv = self.vcheck[self.class_of[i]];
            if inv != fragment.contains(&&values[i]) {
                report.vcheck_matches = false;
            }
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberReport {
    pub classes: usize,
    pub eq_matches: bool,
    pub member_matches: bool,
    pub vcheck_matches: bool,
}

impl FiberReport {
    pub fn ok(self) -> bool {
        self.eq_matches && self.member_matches && self.vcheck_matches
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate_ultrafilters;
    use ba_kernel::Algebra;

    #[test]
    fn fragment_pool_quotient_collapses_to_the_fragment() {
        let b = Algebra::new(2).unwrap();
        let pool = NamePool::new(&b, &[], 2).unwrap();
        for u in enumerate_ultrafilters(&b) {
            let q = quotient_model(&pool, &u).unwrap();
            assert_eq!(q.class_count(), pool.fragment().len());
            assert!(q.fiber_report().unwrap().ok());
            assert!(q.vcheck_classes_have_crisp_witnesses().unwrap());
        }
    }

    #[test]
    fn embedding_sends_the_empty_set_to_its_check_class() {
        let b = Algebra::new(2).unwrap();
        let pool = NamePool::new(&b, &[], 1).unwrap();
        let u = Ultrafilter::principal(&b, 0).unwrap();
        let q = quotient_model(&pool, &u).unwrap();
        let c = q.j(&HFSet::empty()).unwrap();
        assert_eq!(q.rep(c), &check_name(&b, &HFSet::empty()));
        assert!(q.in_vcheck(c));
    }

    #[test]
    fn mixture_classes_follow_the_selected_ingredient() {
        use ba_kernel::Antichain;
        use names::mix;
        let b = Algebra::new(2).unwrap();
        let zero = check_name(&b, &HFSet::empty());
        let one = check_name(&b, &HFSet::von_neumann(1));
        let chain = Antichain::atoms(&b);
        let tau = mix(&chain, &[zero.clone(), one.clone()]).unwrap();
        let pool = NamePool::new(&b, &[tau.clone()], 1).unwrap();
        let u0 = Ultrafilter::principal(&b, 0).unwrap();
        let q0 = quotient_model(&pool, &u0).unwrap();
        assert_eq!(q0.class_of_name(&tau), q0.class_of_name(&zero));
        let u1 = Ultrafilter::principal(&b, 1).unwrap();
        let q1 = quotient_model(&pool, &u1).unwrap();
        assert_eq!(q1.class_of_name(&tau), q1.class_of_name(&one));
    }

    #[test]
    fn representatives_have_minimal_rank() {
        let b = Algebra::new(2).unwrap();
        let pool = NamePool::new(&b, &[], 2).unwrap();
        let u = Ultrafilter::principal(&b, 1).unwrap();
        let q = quotient_model(&pool, &u).unwrap();
        for c in 0..q.class_count() {
            let rep_rank = q.rep(c).rank();
            for i in 0..pool.len() {
                if q.class_of_index(i) == c {
                    assert!(rep_rank <= pool.names()[i].rank());
                }
            }
        }
    }

    #[test]
    fn symbolic_ultrafilters_do_not_form_finite_quotients() {
        let b = Algebra::new(2).unwrap();
        let pool = NamePool::new(&b, &[], 1).unwrap();
        assert!(quotient_model(&pool, &Ultrafilter::symbolic()).is_err());
    }
}

//! Factor ultrapowers over maximal antichains, the induced power-set
//! ultrafilters, connecting maps along refinements, the direct limit of the
//! declared system, and extender-style representation of limit elements.

use ba_kernel::{common_refinement, Algebra, Antichain, Element};
use names::{generic_name, membership_value, AtomicEvaluator, HFSet};

use crate::presentations::{function_name, mixing_pool};
use crate::quotient::quotient_model;
use crate::spanning::{sf_reduce, SpanningFunction};
use crate::{QuotientModel, Result, Ultrafilter, UltraError};

/// The ultrafilter induced on the power set of a maximal antichain:
/// a subset is large exactly when its join is.  On a finite algebra this
/// concentrates on one position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowersetUltrafilter {
    antichain: Antichain,
    selected: usize,
}

/// Finds the concentration point and checks it is unique.
pub fn induced_u_a(u: &Ultrafilter, a: &Antichain) -> Result<PowersetUltrafilter> {
    if !a.is_maximal() {
        return Err(UltraError::BadFamily(
            "induced ultrafilter needs a maximal antichain".to_string(),
        ));
    }
    let mut hits = Vec::new();
    for (i, &e) in a.elements().iter().enumerate() {
        if u.contains(e)? {
            hits.push(i);
        }
    }
    match hits.as_slice() {
        [one] => Ok(PowersetUltrafilter {
            antichain: a.clone(),
            selected: *one,
        }),
        _ => Err(UltraError::NotUltra(format!(
            "{} antichain member(s) are large; exactly one must be",
            hits.len()
        ))),
    }
}

impl PowersetUltrafilter {
    pub fn antichain(&self) -> &Antichain {
        &self.antichain
    }

    /// Position index the ultrafilter concentrates on.
    pub fn selected(&self) -> usize {
        self.selected
    }

    pub fn contains(&self, positions: &[usize]) -> bool {
        positions.contains(&self.selected)
    }

    /// Sweeps all subsets against the defining criterion: a subset is a
    /// member exactly when its join lies in the base ultrafilter.
    pub fn verify_against(&self, u: &Ultrafilter) -> Result<bool> {
        let b = u.algebra()?;
        let n = self.antichain.len();
        for mask in 0u64..(1 << n) {
            let positions: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let join = b.big_join(
                positions.iter().map(|&i| self.antichain.elements()[i]),
            )?;
            if u.contains(join)? != self.contains(&positions) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The ultrapower of the ground fragment by the induced ultrafilter of one
/// antichain: all functions from positions to fragment values, identified
/// when they agree on a large set of positions.
#[derive(Debug, Clone)]
pub struct FactorModel {
    antichain: Antichain,
    u_a: PowersetUltrafilter,
    functions: Vec<SpanningFunction>,
    class_of: Vec<usize>,
    reps: Vec<usize>,
    membership: Vec<Vec<bool>>,
}

impl FactorModel {
    pub fn new(u: &Ultrafilter, a: &Antichain, fragment: &[HFSet]) -> Result<FactorModel> {
        let u_a = induced_u_a(u, a)?;
        let mut functions = Vec::new();
        for tuple in tuples(fragment.len(), a.len()) {
            let values: Vec<HFSet> = tuple.iter().map(|&v| fragment[v].clone()).collect();
            functions.push(SpanningFunction::new(a.clone(), values)?);
        }
        let n = functions.len();
        let agree_positions = |f: &SpanningFunction, g: &SpanningFunction| -> Vec<usize> {
            (0..a.len())
                .filter(|&k| f.values()[k] == g.values()[k])
                .collect()
        };
        let mut class_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..n {
            let found = reps
                .iter()
                .position(|&r| u_a.contains(&agree_positions(&functions[r], &functions[i])));
            match found {
                Some(c) => class_of[i] = c,
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
                let member_positions: Vec<usize> = (0..a.len())
                    .filter(|&k| functions[r2].values()[k].contains(&functions[r1].values()[k]))
                    .collect();
                membership[c1][c2] = u_a.contains(&member_positions);
            }
        }
        Ok(FactorModel {
            antichain: a.clone(),
            u_a,
            functions,
            class_of,
            reps,
            membership,
        })
    }

    pub fn antichain(&self) -> &Antichain {
        &self.antichain
    }

    pub fn u_a(&self) -> &PowersetUltrafilter {
        &self.u_a
    }

    pub fn functions(&self) -> &[SpanningFunction] {
        &self.functions
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of_index(&self, function_index: usize) -> usize {
        self.class_of[function_index]
    }

    pub fn rep(&self, class: usize) -> &SpanningFunction {
        &self.functions[self.reps[class]]
    }

    pub fn member(&self, c1: usize, c2: usize) -> bool {
        self.membership[c1][c2]
    }

    /// Class of an arbitrary function on the same antichain.
    pub fn class_of_function(&self, f: &SpanningFunction) -> Result<usize> {
        if f.domain() != &self.antichain {
            return Err(UltraError::BadDomain(
                "function lives on a different antichain".to_string(),
            ));
        }
        for (c, &r) in self.reps.iter().enumerate() {
            let agree: Vec<usize> = (0..self.antichain.len())
                .filter(|&k| f.values()[k] == self.functions[r].values()[k])
                .collect();
            if self.u_a.contains(&agree) {
                return Ok(c);
            }
        }
        Err(UltraError::BadInput(
            "function with values outside the declared fragment".to_string(),
        ))
    }

    /// Embedding of the ground fragment: class of the constant function.
    pub fn embed(&self, x: &HFSet) -> Result<usize> {
        let values = vec![x.clone(); self.antichain.len()];
        self.class_of_function(&SpanningFunction::new(self.antichain.clone(), values)?)
    }
}

/// A declared family of maximal antichains, closed under common refinement,
/// with one factor ultrapower per antichain.
#[derive(Debug, Clone)]
pub struct DirectLimitSystem {
    algebra: Algebra,
    ultra: Ultrafilter,
    fragment: Vec<HFSet>,
    fragment_rank: usize,
    antichains: Vec<Antichain>,
    factors: Vec<FactorModel>,
}

impl DirectLimitSystem {
    /// Closes the declared family under common refinement (always adding
    /// the trivial antichain) and builds every factor.
    pub fn new(
        algebra: &Algebra,
        u: &Ultrafilter,
        fragment_rank: usize,
        declared: &[Antichain],
    ) -> Result<DirectLimitSystem> {
        let mut antichains: Vec<Antichain> = vec![Antichain::unit(algebra)];
        for a in declared {
            if !a.is_maximal() {
                return Err(UltraError::BadFamily(
                    "declared antichain is not maximal".to_string(),
                ));
            }
            if !antichains.contains(a) {
                antichains.push(a.clone());
            }
        }
        // Finite closure: keep adding pairwise common refinements until
        // nothing new appears.
        loop {
            let mut added = false;
            let snapshot = antichains.clone();
            for x in &snapshot {
                for y in &snapshot {
                    let (r, _, _) = common_refinement(x, y)?;
                    if !antichains.contains(&r) {
                        antichains.push(r);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        // Coarse to fine, deterministically.
        antichains.sort_by_key(|a| (a.len(), a.elements().to_vec()));
        let fragment = HFSet::all_up_to_rank(fragment_rank);
        let factors = antichains
            .iter()
            .map(|a| FactorModel::new(u, a, &fragment))
            .collect::<Result<Vec<_>>>()?;
        Ok(DirectLimitSystem {
            algebra: algebra.clone(),
            ultra: u.clone(),
            fragment,
            fragment_rank,
            antichains,
            factors,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn ultra(&self) -> &Ultrafilter {
        &self.ultra
    }

    pub fn fragment(&self) -> &[HFSet] {
        &self.fragment
    }

    pub fn antichains(&self) -> &[Antichain] {
        &self.antichains
    }

    pub fn factors(&self) -> &[FactorModel] {
        &self.factors
    }

    /// Index of the finest declared antichain: the one refining all
    /// others.  Closure under common refinement guarantees it exists.
    pub fn finest(&self) -> Result<usize> {
        for (i, a) in self.antichains.iter().enumerate() {
            if self.antichains.iter().all(|b| a.refines(b)) {
                return Ok(i);
            }
        }
        Err(UltraError::BadFamily(
            "no finest antichain; family is not refinement-closed".to_string(),
        ))
    }

    /// The connecting map between two factors: reduce a representative
    /// along the refinement and take its class.
    pub fn connect(&self, from: usize, to: usize, class: usize) -> Result<usize> {
        let fine = &self.antichains[to];
        if !fine.refines(&self.antichains[from]) {
            return Err(UltraError::BadFamily(
                "connecting map runs against refinement".to_string(),
            ));
        }
        let reduced = sf_reduce(self.factors[from].rep(class), fine)?;
        self.factors[to].class_of_function(&reduced)
    }

    /// The quotient model this system's limit should reproduce: built over
    /// a pool seeded with every mixture over every declared antichain.
    pub fn reference_quotient(&self) -> Result<QuotientModel> {
        let pool = mixing_pool(&self.algebra, self.fragment_rank, &self.antichains)?;
        quotient_model(&pool, &self.ultra)
    }

    /// Limit map: the class of the function's mixture name in the
    /// reference quotient.
    pub fn to_quotient(
        &self,
        q: &QuotientModel,
        factor: usize,
        class: usize,
    ) -> Result<usize> {
        let tau = function_name(self.factors[factor].rep(class), &self.algebra)?;
        q.class_of_name(&tau).ok_or_else(|| {
            UltraError::BadInput("mixture outside the reference pool".to_string())
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct FactorMapsReport {
    pub antichains: usize,
    pub refining_pairs: usize,
    pub maps_well_defined: bool,
    pub triangles_commute: bool,
    pub embeddings_commute: bool,
    pub limit_commutes: bool,
    pub limit_matches_quotient: bool,
    pub induced_verified: bool,
}

impl FactorMapsReport {
    pub fn ok(&self) -> bool {
        self.maps_well_defined
            && self.triangles_commute
            && self.embeddings_commute
            && self.limit_commutes
            && self.limit_matches_quotient
            && self.induced_verified
    }
}

/// Verifies the whole diagram: connecting maps are well defined on
/// classes, triangles among them commute, the fragment embeddings thread
/// through, the maps into the finest factor agree with the maps into the
/// reference quotient, and that quotient is reached bijectively with
/// membership preserved.
pub fn factor_maps(system: &DirectLimitSystem) -> Result<FactorMapsReport> {
    let mut report = FactorMapsReport {
        antichains: system.antichains().len(),
        ..FactorMapsReport::default()
    };
    report.maps_well_defined = true;
    report.triangles_commute = true;
    report.embeddings_commute = true;
    report.limit_commutes = true;
    report.induced_verified = true;

    let q = system.reference_quotient()?;
    let finest = system.finest()?;
    let k = system.antichains().len();

    for i in 0..k {
        if !system.factors()[i].u_a().verify_against(system.ultra())? {
            report.induced_verified = false;
        }
    }

    let refines = |i: usize, j: usize| system.antichains()[j].refines(&system.antichains()[i]);

    for i in 0..k {
        for j in 0..k {
            if !refines(i, j) {
                continue;
            }
            report.refining_pairs += 1;
            // Well-definedness: every member of a class lands where the
            // representative does.
            for (fi, f) in system.factors()[i].functions().iter().enumerate() {
                let class = system.factors()[i].class_of_index(fi);
                let via_rep = system.connect(i, j, class)?;
                let reduced = sf_reduce(f, &system.antichains()[j])?;
                let direct = system.factors()[j].class_of_function(&reduced)?;
                if via_rep != direct {
                    report.maps_well_defined = false;
                }
            }
            // Embeddings thread through the connecting maps.
            for x in system.fragment() {
                let start = system.factors()[i].embed(x)?;
                let threaded = system.connect(i, j, start)?;
                let direct = system.factors()[j].embed(x)?;
                if threaded != direct {
                    report.embeddings_commute = false;
                }
            }
            // Triangles.
            for l in 0..k {
                if !refines(j, l) {
                    continue;
                }
                for c in 0..system.factors()[i].class_count() {
                    let two_step = system.connect(j, l, system.connect(i, j, c)?)?;
                    let one_step = system.connect(i, l, c)?;
                    if two_step != one_step {
                        report.triangles_commute = false;
                    }
                }
            }
            // Limit maps through the finest antichain.
            for c in 0..system.factors()[i].class_count() {
                let through = system.to_quotient(&q, finest, system.connect(i, finest, c)?)?;
                let direct = system.to_quotient(&q, i, c)?;
                if through != direct {
                    report.limit_commutes = false;
                }
            }
        }
    }

    // The finest factor is the limit; compare it with the quotient.
    let limit = &system.factors()[finest];
    let mut image: Vec<usize> = Vec::new();
    let mut bijective = true;
    for c in 0..limit.class_count() {
        let target = system.to_quotient(&q, finest, c)?;
        if image.contains(&target) {
            bijective = false;
        }
        image.push(target);
    }
    let surjective = (0..q.class_count()).all(|c| image.contains(&c));
    let mut membership_matches = true;
    for c1 in 0..limit.class_count() {
        for c2 in 0..limit.class_count() {
            if limit.member(c1, c2) != q.member(image[c1], image[c2]) {
                membership_matches = false;
            }
        }
    }
    report.limit_matches_quotient = bijective && surjective && membership_matches;
    Ok(report)
}

/// Extender-style representation of a quotient element: an antichain, a
/// function on it, and the selector position the generic class picks out.
#[derive(Debug, Clone)]
pub struct ExtenderRep {
    pub antichain_index: usize,
    pub function: SpanningFunction,
    /// The unique antichain member the generic name makes large.
    pub selector: Element,
    pub selector_unique: bool,
    pub round_trip: bool,
}

/// Represents a quotient class over the system's finest antichain and
/// verifies the round trip: evaluating the function at the selector
/// reproduces the class.
pub fn extender_rep(
    system: &DirectLimitSystem,
    q: &QuotientModel,
    class: usize,
) -> Result<ExtenderRep> {
    if class >= q.class_count() {
        return Err(UltraError::ClassOutOfRange {
            index: class,
            classes: q.class_count(),
        });
    }
    let finest = system.finest()?;
    let factor = &system.factors()[finest];
    let mut function = None;
    for c in 0..factor.class_count() {
        if system.to_quotient(q, finest, c)? == class {
            function = Some(factor.rep(c).clone());
            break;
        }
    }
    let function = function.ok_or_else(|| {
        UltraError::BadInput("class not reached by the declared system".to_string())
    })?;

    // The selector is found through the generic name's membership values,
    // not by peeking at the ultrafilter's atom.
    let b = system.algebra();
    let gdot = generic_name(b);
    let mut ev = AtomicEvaluator::new(b);
    let mut hits = Vec::new();
    for &a in factor.antichain().elements() {
        let value = membership_value(b, &gdot, a, &mut ev)?;
        if system.ultra().contains(value)? {
            hits.push(a);
        }
    }
    let selector_unique = hits.len() == 1;
    let selector = *hits.first().ok_or_else(|| {
        UltraError::NotUltra("no antichain member is generically selected".to_string())
    })?;

    let value_at_selector = function
        .value_at(selector)
        .ok_or_else(|| UltraError::BadDomain("selector outside the domain".to_string()))?;
    let round_trip = q.j(value_at_selector)? == class;
    Ok(ExtenderRep {
        antichain_index: finest,
        function,
        selector,
        selector_unique,
        round_trip,
    })
}

fn tuples(values: usize, length: usize) -> Vec<Vec<usize>> {
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
    fn trivial_antichain_gives_the_base_fragment() {
        let b = Algebra::new(2).unwrap();
        let u = Ultrafilter::principal(&b, 0).unwrap();
        let fragment = HFSet::all_up_to_rank(1);
        let factor = FactorModel::new(&u, &Antichain::unit(&b), &fragment).unwrap();
        assert_eq!(factor.class_count(), fragment.len());
        let u_a = factor.u_a();
        assert_eq!(u_a.selected(), 0);
        assert!(u_a.verify_against(&u).unwrap());
    }

    #[test]
    fn atom_antichain_factor_collapses_to_evaluation() {
        let b = Algebra::new(3).unwrap();
        let u = Ultrafilter::principal(&b, 1).unwrap();
        let fragment = HFSet::all_up_to_rank(1);
        let factor = FactorModel::new(&u, &Antichain::atoms(&b), &fragment).unwrap();
        // Classes are exactly the values at the selected atom.
        assert_eq!(factor.class_count(), fragment.len());
        for (i, f) in factor.functions().iter().enumerate() {
            let class = factor.class_of_index(i);
            assert_eq!(factor.rep(class).values()[1], f.values()[1]);
        }
    }

    #[test]
    fn whole_diagram_commutes_on_small_systems() {
        for atoms in 1..=3 {
            let b = Algebra::new(atoms).unwrap();
            let family = Antichain::all_maximal(&b);
            for u in enumerate_ultrafilters(&b) {
                let system = DirectLimitSystem::new(&b, &u, 1, &family).unwrap();
                let report = factor_maps(&system).unwrap();
                assert!(report.ok(), "{atoms} atoms, {u}: {report:?}");
            }
        }
    }

    #[test]
    fn every_class_round_trips_through_its_extender() {
        let b = Algebra::new(3).unwrap();
        let family = Antichain::all_maximal(&b);
        for u in enumerate_ultrafilters(&b) {
            let system = DirectLimitSystem::new(&b, &u, 1, &family).unwrap();
            let q = system.reference_quotient().unwrap();
            for class in 0..q.class_count() {
                let rep = extender_rep(&system, &q, class).unwrap();
                assert!(rep.selector_unique);
                assert!(rep.round_trip, "class {class} under {u}");
            }
        }
    }
}

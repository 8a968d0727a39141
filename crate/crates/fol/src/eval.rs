//! The evaluation recursion and the fullness probe.

use std::collections::BTreeMap;

use ba_kernel::Element;

use crate::formula::{Formula, Term};
use crate::structure::BValuedStructure;
use crate::{FolError, Result};

/// An evaluated truth value together with the pool it was computed against.
/// Quantifiers range over the declared pool and nothing else, so the value
/// is only comparable between runs that agree on the pool.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Element,
    /// Size of the pool ordinary quantifiers ranged over.
    pub pool_size: usize,
    /// Size of the `@Vcheck` sub-pool, when the structure declares one.
    pub relativized_pool_size: Option<usize>,
}

struct Evaluator<'a> {
    s: &'a BValuedStructure,
    assignment: &'a BTreeMap<String, usize>,
    // Innermost binding last; shadows the assignment.
    env: Vec<(String, usize)>,
}

impl<'a> Evaluator<'a> {
    fn resolve(&self, t: &Term) -> Result<usize> {
        if let Some(&(_, i)) = self.env.iter().rev().find(|(v, _)| v == &t.0) {
            return Ok(i);
        }
        if let Some(&i) = self.assignment.get(&t.0) {
            if i >= self.s.pool_size() {
                return Err(FolError::NameOutOfRange {
                    index: i,
                    pool: self.s.pool_size(),
                });
            }
            return Ok(i);
        }
        // A free identifier may mention a declared name directly.
        self.s
            .name_index(&t.0)
            .ok_or_else(|| FolError::UnassignedVariable(t.0.clone()))
    }

    fn resolve_all(&self, args: &[Term]) -> Result<Vec<usize>> {
        args.iter().map(|t| self.resolve(t)).collect()
    }

    fn pool(&self, relativized: bool) -> Result<Vec<usize>> {
        if relativized {
            match self.s.relativized_pool() {
                Some(p) => Ok(p.to_vec()),
                None => Err(FolError::NoRelativizedPool),
            }
        } else {
            Ok((0..self.s.pool_size()).collect())
        }
    }

    fn eval(&mut self, f: &Formula, relativized: bool) -> Result<Element> {
        let alg = self.s.algebra();
        match f {
            Formula::Rel(name, args) => {
                let idx = self.resolve_all(args)?;
                self.s.relation_value(name, &idx)
            }
            Formula::Eq(s, t) => {
                let (i, j) = (self.resolve(s)?, self.resolve(t)?);
                self.s.eq_value(i, j)
            }
            Formula::FnEq(y, name, args) => {
                let yi = self.resolve(y)?;
                let idx = self.resolve_all(args)?;
                self.s.function_value(name, yi, &idx)
            }
            Formula::And(p, q) => {
                let pv = self.eval(p, relativized)?;
                let qv = self.eval(q, relativized)?;
                alg.meet(pv, qv).map_err(Into::into)
            }
            Formula::Or(p, q) => {
                let pv = self.eval(p, relativized)?;
                let qv = self.eval(q, relativized)?;
                alg.join(pv, qv).map_err(Into::into)
            }
            Formula::Not(p) => {
                let pv = self.eval(p, relativized)?;
                alg.complement(pv).map_err(Into::into)
            }
            Formula::Implies(p, q) => {
                let pv = self.eval(p, relativized)?;
                let qv = self.eval(q, relativized)?;
                alg.join(alg.complement(pv)?, qv).map_err(Into::into)
            }
            Formula::Exists(x, p) => {
                let mut acc = alg.zero();
                for t in self.pool(relativized)? {
                    self.env.push((x.clone(), t));
                    let v = self.eval(p, relativized);
                    self.env.pop();
                    acc = alg.join(acc, v?)?;
                }
                Ok(acc)
            }
            Formula::Forall(x, p) => {
                let mut acc = alg.one();
                for t in self.pool(relativized)? {
                    self.env.push((x.clone(), t));
                    let v = self.eval(p, relativized);
                    self.env.pop();
                    acc = alg.meet(acc, v?)?;
                }
                Ok(acc)
            }
            Formula::Vcheck(p) => {
                // Surfacing a missing sub-pool here, before any quantifier is
                // reached, keeps the failure close to the marker.
                if self.s.relativized_pool().is_none() {
                    return Err(FolError::NoRelativizedPool);
                }
                self.eval(p, true)
            }
        }
    }
}

/// Evaluates `f` against `s` under `assignment` (variable to name index).
/// Free identifiers not covered by the assignment are looked up as declared
/// names; anything still unresolved is an error.
pub fn boolean_value(
    s: &BValuedStructure,
    f: &Formula,
    assignment: &BTreeMap<String, usize>,
) -> Result<Evaluation> {
    let mut ev = Evaluator {
        s,
        assignment,
        env: Vec::new(),
    };
    let value = ev.eval(f, false)?;
    Ok(Evaluation {
        value,
        pool_size: s.pool_size(),
        relativized_pool_size: s.relativized_pool().map(<[usize]>::len),
    })
}

/// Whether an existential is attained by a single instance.
#[derive(Debug, Clone, PartialEq)]
pub struct FullnessReport {
    /// The value of `exists var. f`.
    pub target: Element,
    /// First name whose instance value equals the target, if any.
    pub witness: Option<usize>,
    /// Instance value per name, in pool order.
    pub per_name: Vec<Element>,
    pub pool_size: usize,
}

impl FullnessReport {
    pub fn is_full(&self) -> bool {
        self.witness.is_some()
    }

    pub fn describe(&self, s: &BValuedStructure) -> String {
        match self.witness {
            Some(i) => format!(
                "full: [{}] attains the join {}",
                s.name(i),
                s.algebra().show(self.target)
            ),
            None => {
                let parts: Vec<String> = self
                    .per_name
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| format!("{}:{}", s.name(i), s.algebra().show(v)))
                    .collect();
                format!(
                    "not full: join is {} but instances are {}",
                    s.algebra().show(self.target),
                    parts.join(", ")
                )
            }
        }
    }
}

/// Probes whether `exists var. f` is attained by one of the declared names:
/// computes the join, then every single-instance value, and reports the
/// first name (in pool order) that reaches the join, or the full instance
/// list when none does.  Other free variables of `f` come from `assignment`.
pub fn fullness_witness(
    s: &BValuedStructure,
    f: &Formula,
    var: &str,
    assignment: &BTreeMap<String, usize>,
) -> Result<FullnessReport> {
    let alg = s.algebra();
    let mut per_name = Vec::with_capacity(s.pool_size());
    let mut target = alg.zero();
    for t in 0..s.pool_size() {
        let mut extended = assignment.clone();
        extended.insert(var.to_string(), t);
        let v = boolean_value(s, f, &extended)?.value;
        per_name.push(v);
        target = alg.join(target, v)?;
    }
    let witness = per_name.iter().position(|&v| v == target);
    Ok(FullnessReport {
        target,
        witness,
        per_name,
        pool_size: s.pool_size(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::signature::Signature;
    use ba_kernel::Algebra;

    fn empty() -> BTreeMap<String, usize> {
        BTreeMap::new()
    }

    /// Two names over two atoms with [p = q] = {a0}, R(p) = 1, R(q) = {a0}.
    /// R agrees on the overlap of p and q, so the laws hold.
    fn sample() -> (Algebra, BValuedStructure, Signature) {
        let b = Algebra::new(2).unwrap();
        let mut sig = Signature::membership();
        sig.add_relation("R", 1).unwrap();
        let mut s = BValuedStructure::discrete(b.clone(), sig.clone(), &["p", "q"]).unwrap();
        s.set_eq(0, 1, b.atom(0)).unwrap();
        s.set_relation("R", &[0], b.one()).unwrap();
        s.set_relation("R", &[1], b.atom(0)).unwrap();
        (b, s, sig)
    }

    /// Identity equality with R(p) = {a0}, R(q) = {a1}: the instance values
    /// are the two atoms, so their join is attained by no single name.
    fn atom_valued() -> (Algebra, BValuedStructure, Signature) {
        let b = Algebra::new(2).unwrap();
        let mut sig = Signature::new();
        sig.add_relation("R", 1).unwrap();
        let mut s = BValuedStructure::discrete(b.clone(), sig.clone(), &["p", "q"]).unwrap();
        s.set_relation("R", &[0], b.atom(0)).unwrap();
        s.set_relation("R", &[1], b.atom(1)).unwrap();
        (b, s, sig)
    }

    #[test]
    fn self_equality_is_one() {
        let (b, s, sig) = sample();
        let f = parse("p = p", &sig).unwrap();
        let ev = boolean_value(&s, &f, &empty()).unwrap();
        assert_eq!(ev.value, b.one());
        assert_eq!(ev.pool_size, 2);
        assert_eq!(ev.relativized_pool_size, None);
    }

    #[test]
    fn contradiction_is_zero() {
        let (b, s, sig) = sample();
        let f = parse("R(p) & !R(p)", &sig).unwrap();
        assert_eq!(boolean_value(&s, &f, &empty()).unwrap().value, b.zero());
    }

    #[test]
    fn congruence_instance_is_one() {
        let (b, s, sig) = sample();
        // The structure passes the laws, so this must come out 1.
        assert!(crate::laws::check_laws(&s).unwrap().passes());
        let f = parse("p = q & R(p) -> R(q)", &sig).unwrap();
        assert_eq!(boolean_value(&s, &f, &empty()).unwrap().value, b.one());
    }

    #[test]
    fn exists_joins_over_the_pool() {
        let (b, s, sig) = sample();
        let f = parse("exists x. R(x)", &sig).unwrap();
        assert_eq!(boolean_value(&s, &f, &empty()).unwrap().value, b.one());
        let g = parse("forall x. R(x)", &sig).unwrap();
        assert_eq!(boolean_value(&s, &g, &empty()).unwrap().value, b.atom(0));
    }

    #[test]
    fn assignment_and_direct_names() {
        let (b, s, sig) = sample();
        let f = parse("R(x)", &sig).unwrap();
        let mut asg = empty();
        asg.insert("x".to_string(), 1);
        assert_eq!(boolean_value(&s, &f, &asg).unwrap().value, b.atom(0));
        // Unassigned and not a name: error.
        assert_eq!(
            boolean_value(&s, &f, &empty()),
            Err(FolError::UnassignedVariable("x".into()))
        );
        // Out-of-range assignment: error.
        let mut bad = empty();
        bad.insert("x".to_string(), 7);
        assert!(matches!(
            boolean_value(&s, &f, &bad),
            Err(FolError::NameOutOfRange { index: 7, pool: 2 })
        ));
    }

    #[test]
    fn bound_variable_shadows_assignment_and_names() {
        let (b, s, sig) = sample();
        // p is a declared name, but the binder reinterprets it.
        let f = parse("exists p. R(p)", &sig).unwrap();
        assert_eq!(boolean_value(&s, &f, &empty()).unwrap().value, b.one());
    }

    #[test]
    fn vcheck_restricts_the_pool() {
        let (b, mut s, sig) = sample();
        let f = parse("(exists x. R(x)) @Vcheck", &sig).unwrap();
        assert_eq!(
            boolean_value(&s, &f, &empty()),
            Err(FolError::NoRelativizedPool)
        );
        s.set_relativized_pool(vec![1]).unwrap();
        let ev = boolean_value(&s, &f, &empty()).unwrap();
        assert_eq!(ev.value, b.atom(0));
        assert_eq!(ev.relativized_pool_size, Some(1));
        // Outside the marker the full pool is still used.
        let g = parse("exists x. R(x)", &sig).unwrap();
        assert_eq!(boolean_value(&s, &g, &empty()).unwrap().value, b.one());
    }

    #[test]
    fn fullness_pool_of_atoms_is_not_full() {
        // Names valued {a0} and {a1}: the join 1 is not attained.
        let (b, s, sig) = atom_valued();
        assert!(crate::laws::check_laws(&s).unwrap().passes());
        let f = parse("R(x)", &sig).unwrap();
        let rep = fullness_witness(&s, &f, "x", &empty()).unwrap();
        assert_eq!(rep.target, b.one());
        assert!(!rep.is_full());
        assert_eq!(rep.per_name, vec![b.atom(0), b.atom(1)]);
        assert!(rep.describe(&s).starts_with("not full"));
    }

    #[test]
    fn fullness_on_single_atom_algebra() {
        // Two-valued algebra: some instance always attains the join.
        let b = Algebra::new(1).unwrap();
        let mut sig = Signature::new();
        sig.add_relation("R", 1).unwrap();
        for bits in 0..4u32 {
            let mut s =
                BValuedStructure::discrete(b.clone(), sig.clone(), &["p", "q"]).unwrap();
            for i in 0..2 {
                let v = if bits & (1 << i) != 0 { b.one() } else { b.zero() };
                s.set_relation("R", &[i as usize], v).unwrap();
            }
            let f = parse("R(x)", &sig).unwrap();
            let rep = fullness_witness(&s, &f, "x", &empty()).unwrap();
            assert!(rep.is_full(), "bits {bits:02b}");
        }
    }
}

//! Ordinary two-valued models and the product construction built from them.
//!
//! These serve as an independent reference point: a [`ClassicalModel`] is
//! evaluated by Tarskian recursion with quantifiers over its finite
//! universe, and [`ultraproduct_structure`] assembles finitely many models
//! into a [`BValuedStructure`] over the powerset algebra of the index set,
//! with one name per choice function and coordinatewise atomic tables.

use std::collections::BTreeMap;

use ba_kernel::Algebra;
use itertools::Itertools;

use crate::formula::{Formula, Term};
use crate::signature::Signature;
use crate::structure::BValuedStructure;
use crate::{FolError, Result};

#[derive(Debug, Clone)]
struct BoolTable {
    arity: usize,
    size: usize,
    data: Vec<bool>,
}

impl BoolTable {
    fn new(size: usize, arity: usize) -> Self {
        BoolTable {
            arity,
            size,
            data: vec![false; size.pow(arity as u32)],
        }
    }

    fn index(&self, args: &[usize]) -> Result<usize> {
        if args.len() != self.arity {
            return Err(FolError::BadStructure(format!(
                "expected {} argument(s), got {}",
                self.arity,
                args.len()
            )));
        }
        let mut idx = 0;
        for &a in args {
            if a >= self.size {
                return Err(FolError::BadStructure(format!(
                    "element {a} outside universe of size {}",
                    self.size
                )));
            }
            idx = idx * self.size + a;
        }
        Ok(idx)
    }
}

/// A finite two-valued structure with universe `{0, ..., size - 1}`.
/// Equality is literal identity of elements.
#[derive(Debug, Clone)]
pub struct ClassicalModel {
    size: usize,
    relations: BTreeMap<String, BoolTable>,
    // Total maps: args tuple (dense index) to element.
    functions: BTreeMap<String, (usize, Vec<usize>)>,
}

impl ClassicalModel {
    pub fn new(size: usize) -> Self {
        assert!(size > 0, "empty universes are not supported");
        ClassicalModel {
            size,
            relations: BTreeMap::new(),
            functions: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Declares `name` and marks exactly `tuples` as holding.
    pub fn set_relation(&mut self, name: &str, arity: usize, tuples: &[&[usize]]) -> Result<()> {
        let mut table = BoolTable::new(self.size, arity);
        for t in tuples {
            let idx = table.index(t)?;
            table.data[idx] = true;
        }
        self.relations.insert(name.to_string(), table);
        Ok(())
    }

    /// Declares a total function by its value table in argument-tuple order
    /// (dense row-major over the universe).
    pub fn set_function(&mut self, name: &str, arity: usize, values: &[usize]) -> Result<()> {
        let expect = self.size.pow(arity as u32);
        if values.len() != expect {
            return Err(FolError::BadStructure(format!(
                "function `{name}` needs {expect} value(s), got {}",
                values.len()
            )));
        }
        if let Some(&bad) = values.iter().find(|&&v| v >= self.size) {
            return Err(FolError::BadStructure(format!(
                "function `{name}` maps into {bad}, outside the universe"
            )));
        }
        self.functions
            .insert(name.to_string(), (arity, values.to_vec()));
        Ok(())
    }

    pub fn holds(&self, name: &str, args: &[usize]) -> Result<bool> {
        match self.relations.get(name) {
            Some(t) => Ok(t.data[t.index(args)?]),
            None => Err(FolError::BadStructure(format!(
                "relation `{name}` not interpreted"
            ))),
        }
    }

    pub fn apply(&self, name: &str, args: &[usize]) -> Result<usize> {
        match self.functions.get(name) {
            Some((arity, values)) => {
                let t = BoolTable::new(self.size, *arity);
                Ok(values[t.index(args)?])
            }
            None => Err(FolError::BadStructure(format!(
                "function `{name}` not interpreted"
            ))),
        }
    }

    /// Tarskian truth under `assignment`.  Quantifiers range over the whole
    /// universe; every free variable must be assigned.  The `@Vcheck` marker
    /// is transparent here: a plain model has nothing to relativize to.
    pub fn eval(&self, f: &Formula, assignment: &BTreeMap<String, usize>) -> Result<bool> {
        fn resolve(
            t: &Term,
            env: &[(String, usize)],
            assignment: &BTreeMap<String, usize>,
        ) -> Result<usize> {
            if let Some(&(_, v)) = env.iter().rev().find(|(x, _)| x == &t.0) {
                return Ok(v);
            }
            assignment
                .get(&t.0)
                .copied()
                .ok_or_else(|| FolError::UnassignedVariable(t.0.clone()))
        }
        fn walk(
            m: &ClassicalModel,
            f: &Formula,
            env: &mut Vec<(String, usize)>,
            assignment: &BTreeMap<String, usize>,
        ) -> Result<bool> {
            match f {
                Formula::Rel(name, args) => {
                    let vals = args
                        .iter()
                        .map(|t| resolve(t, env, assignment))
                        .collect::<Result<Vec<_>>>()?;
                    m.holds(name, &vals)
                }
                Formula::Eq(s, t) => {
                    Ok(resolve(s, env, assignment)? == resolve(t, env, assignment)?)
                }
                Formula::FnEq(y, name, args) => {
                    let yv = resolve(y, env, assignment)?;
                    let vals = args
                        .iter()
                        .map(|t| resolve(t, env, assignment))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(m.apply(name, &vals)? == yv)
                }
                Formula::And(p, q) => {
                    Ok(walk(m, p, env, assignment)? && walk(m, q, env, assignment)?)
                }
                Formula::Or(p, q) => {
                    Ok(walk(m, p, env, assignment)? || walk(m, q, env, assignment)?)
                }
                Formula::Not(p) => Ok(!walk(m, p, env, assignment)?),
                Formula::Implies(p, q) => {
                    Ok(!walk(m, p, env, assignment)? || walk(m, q, env, assignment)?)
                }
                Formula::Exists(x, p) => {
                    for v in 0..m.size {
                        env.push((x.clone(), v));
                        let r = walk(m, p, env, assignment);
                        env.pop();
                        if r? {
                            return Ok(true);
                        }
                    }
                    Ok(false)
                }
                Formula::Forall(x, p) => {
                    for v in 0..m.size {
                        env.push((x.clone(), v));
                        let r = walk(m, p, env, assignment);
                        env.pop();
                        if !r? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }
                Formula::Vcheck(p) => walk(m, p, env, assignment),
            }
        }
        walk(self, f, &mut Vec::new(), assignment)
    }
}

/// Cap on the number of choice functions a product may declare as names.
pub const PRODUCT_NAME_LIMIT: usize = 4096;

/// Builds the product of `models` as a structure over the powerset algebra
/// of the index set.  Names are the choice functions through the factor
/// universes, labeled `f0_2` for the function picking 0 then 2; the returned
/// vector lists each name's values per factor, in pool order.  Atomic tables
/// are coordinatewise: the value of an atomic statement is the set of
/// indices where it holds classically.
pub fn ultraproduct_structure(
    models: &[ClassicalModel],
    sig: &Signature,
) -> Result<(BValuedStructure, Vec<Vec<usize>>)> {
    if models.is_empty() {
        return Err(FolError::BadStructure("no factor models".into()));
    }
    let count: usize = models.iter().map(ClassicalModel::size).product();
    if count > PRODUCT_NAME_LIMIT {
        return Err(FolError::BadStructure(format!(
            "product would declare {count} names (limit {PRODUCT_NAME_LIMIT})"
        )));
    }
    let algebra = Algebra::new(models.len())?;
    let choices: Vec<Vec<usize>> = models
        .iter()
        .map(|m| (0..m.size()).collect::<Vec<_>>())
        .multi_cartesian_product()
        .collect();
    let labels: Vec<String> = choices
        .iter()
        .map(|c| format!("f{}", c.iter().map(usize::to_string).join("_")))
        .collect();
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut s = BValuedStructure::new(algebra.clone(), sig.clone(), &label_refs)?;

    let agreement = |pred: &dyn Fn(usize) -> Result<bool>| -> Result<ba_kernel::Element> {
        let mut acc = algebra.zero();
        for i in 0..models.len() {
            if pred(i)? {
                acc = algebra.join(acc, algebra.atom(i))?;
            }
        }
        Ok(acc)
    };

    for (g, gc) in choices.iter().enumerate() {
        for (h, hc) in choices.iter().enumerate() {
            let v = agreement(&|i| Ok(gc[i] == hc[i]))?;
            s.set_eq_raw(g, h, v)?;
        }
    }
    let rels: Vec<(String, usize)> = sig
        .relations()
        .map(|(n, a)| (n.to_string(), a))
        .collect();
    for (name, arity) in rels {
        for args in (0..choices.len()).permutations_with_repetition(arity) {
            let v = agreement(&|i| {
                let point: Vec<usize> = args.iter().map(|&g| choices[g][i]).collect();
                models[i].holds(&name, &point)
            })?;
            s.set_relation(&name, &args, v)?;
        }
    }
    let fns: Vec<(String, usize)> = sig
        .functions()
        .map(|(n, a)| (n.to_string(), a))
        .collect();
    for (name, arity) in fns {
        for y in 0..choices.len() {
            for args in (0..choices.len()).permutations_with_repetition(arity) {
                let v = agreement(&|i| {
                    let point: Vec<usize> = args.iter().map(|&g| choices[g][i]).collect();
                    Ok(models[i].apply(&name, &point)? == choices[y][i])
                })?;
                s.set_function(&name, y, &args, v)?;
            }
        }
    }
    Ok((s, choices))
}

trait PermutationsWithRepetition: Sized {
    fn permutations_with_repetition(self, k: usize) -> Vec<Vec<usize>>;
}

impl PermutationsWithRepetition for std::ops::Range<usize> {
    fn permutations_with_repetition(self, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        std::iter::repeat(self)
            .take(k)
            .multi_cartesian_product()
            .collect()
    }
}

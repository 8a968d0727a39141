//! Explicit validation of the equality and function laws.
//!
//! Atomic tables are caller data, so nothing guarantees they behave like
//! equality.  [`check_laws`] checks every instance of every law over the
//! declared pool and reports each violation with the witness tuple that
//! breaks it.  Evaluation of a failing structure is still permitted; the
//! caller decides what a failed gate means.

use std::fmt;

use ba_kernel::Element;
use itertools::Itertools;

use crate::structure::BValuedStructure;
use crate::Result;

/// The laws a well-behaved structure satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Law {
    /// `[s = s] = 1`.
    EqReflexive,
    /// `[s = t] = [t = s]`.
    EqSymmetric,
    /// `[s = t] & [t = u] <= [s = u]`.
    EqTransitive,
    /// `[s1 = t1] & ... & [sk = tk] & [R(s...)] <= [R(t...)]`.
    RelCongruence,
    /// `[y = y'] & [s1 = t1] & ... & [y = f(s...)] <= [y' = f(t...)]`.
    FnCongruence,
    /// `join over y of [y = f(s...)] = 1`.
    FnTotal,
    /// `[y = f(s...)] & [y' = f(s...)] <= [y = y']`.
    FnFunctional,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::EqReflexive => "equality reflexivity",
            Law::EqSymmetric => "equality symmetry",
            Law::EqTransitive => "equality transitivity",
            Law::RelCongruence => "relation congruence",
            Law::FnCongruence => "function congruence",
            Law::FnTotal => "function totality",
            Law::FnFunctional => "functionality",
        };
        f.write_str(s)
    }
}

/// One broken law instance.  `witness` lists the name indices in the order
/// the law's statement mentions them; `lhs <= rhs` is what failed (for the
/// equational laws, `lhs = rhs` is what failed).
#[derive(Debug, Clone, PartialEq)]
pub struct LawViolation {
    pub law: Law,
    pub symbol: Option<String>,
    pub witness: Vec<usize>,
    pub lhs: Element,
    pub rhs: Element,
}

impl LawViolation {
    /// Human-readable rendering with the structure's name identifiers.
    pub fn describe(&self, s: &BValuedStructure) -> String {
        let names = self
            .witness
            .iter()
            .map(|&i| s.name(i))
            .collect::<Vec<_>>()
            .join(", ");
        let sym = match &self.symbol {
            Some(sym) => format!(" [{sym}]"),
            None => String::new(),
        };
        format!(
            "{}{sym} fails at ({names}): {} vs {}",
            self.law,
            s.algebra().show(self.lhs),
            s.algebra().show(self.rhs),
        )
    }
}

/// Outcome of the law gate: every checked instance, every violation.
#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub violations: Vec<LawViolation>,
    /// Number of law instances examined.
    pub checked: usize,
}

impl LawReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    /// Laws with at least one violation, deduplicated.
    pub fn broken_laws(&self) -> Vec<Law> {
        let mut laws: Vec<Law> = self.violations.iter().map(|v| v.law).collect();
        laws.sort();
        laws.dedup();
        laws
    }

    pub fn describe(&self, s: &BValuedStructure) -> String {
        if self.passes() {
            format!("all {} law instances hold", self.checked)
        } else {
            let lines: Vec<String> = self.violations.iter().map(|v| v.describe(s)).collect();
            format!(
                "{} of {} law instances fail:\n{}",
                self.violations.len(),
                self.checked,
                lines.join("\n")
            )
        }
    }
}

fn tuples(pool: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    std::iter::repeat(0..pool)
        .take(k)
        .multi_cartesian_product()
        .collect()
}

/// Checks every instance of every law against `s`'s tables.
pub fn check_laws(s: &BValuedStructure) -> Result<LawReport> {
    let alg = s.algebra();
    let n = s.pool_size();
    let mut violations = Vec::new();
    let mut checked = 0usize;

    for i in 0..n {
        checked += 1;
        let v = s.eq_value(i, i)?;
        if v != alg.one() {
            violations.push(LawViolation {
                law: Law::EqReflexive,
                symbol: None,
                witness: vec![i],
                lhs: v,
                rhs: alg.one(),
            });
        }
    }

    for i in 0..n {
        for j in 0..n {
            checked += 1;
            let ij = s.eq_value(i, j)?;
            let ji = s.eq_value(j, i)?;
            if ij != ji {
                violations.push(LawViolation {
                    law: Law::EqSymmetric,
                    symbol: None,
                    witness: vec![i, j],
                    lhs: ij,
                    rhs: ji,
                });
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checked += 1;
                let lhs = alg.meet(s.eq_value(i, j)?, s.eq_value(j, k)?)?;
                let rhs = s.eq_value(i, k)?;
                if !lhs.leq(rhs) {
                    violations.push(LawViolation {
                        law: Law::EqTransitive,
                        symbol: None,
                        witness: vec![i, j, k],
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }

    let rels: Vec<(String, usize)> = s
        .signature()
        .relations()
        .map(|(name, a)| (name.to_string(), a))
        .collect();
    for (name, arity) in rels {
        // Witness layout: s1..sk then t1..tk.
        for st in tuples(n, 2 * arity) {
            checked += 1;
            let (sv, tv) = st.split_at(arity);
            let mut lhs = s.relation_value(&name, sv)?;
            for (&si, &ti) in sv.iter().zip(tv) {
                lhs = alg.meet(lhs, s.eq_value(si, ti)?)?;
            }
            let rhs = s.relation_value(&name, tv)?;
            if !lhs.leq(rhs) {
                violations.push(LawViolation {
                    law: Law::RelCongruence,
                    symbol: Some(name.clone()),
                    witness: st,
                    lhs,
                    rhs,
                });
            }
        }
    }

    let fns: Vec<(String, usize)> = s
        .signature()
        .functions()
        .map(|(name, a)| (name.to_string(), a))
        .collect();
    for (name, arity) in &fns {
        // Witness layout: y, y', s1..sk, t1..tk.
        for yy_st in tuples(n, 2 + 2 * arity) {
            checked += 1;
            let (y, y2) = (yy_st[0], yy_st[1]);
            let (sv, tv) = yy_st[2..].split_at(*arity);
            let mut lhs = alg.meet(s.eq_value(y, y2)?, s.function_value(name, y, sv)?)?;
            for (&si, &ti) in sv.iter().zip(tv) {
                lhs = alg.meet(lhs, s.eq_value(si, ti)?)?;
            }
            let rhs = s.function_value(name, y2, tv)?;
            if !lhs.leq(rhs) {
                violations.push(LawViolation {
                    law: Law::FnCongruence,
                    symbol: Some(name.clone()),
                    witness: yy_st,
                    lhs,
                    rhs,
                });
            }
        }
    }

    for (name, arity) in &fns {
        for sv in tuples(n, *arity) {
            checked += 1;
            let mut join = alg.zero();
            for y in 0..n {
                join = alg.join(join, s.function_value(name, y, &sv)?)?;
            }
            if join != alg.one() {
                violations.push(LawViolation {
                    law: Law::FnTotal,
                    symbol: Some(name.clone()),
                    witness: sv,
                    lhs: join,
                    rhs: alg.one(),
                });
            }
        }
    }

    for (name, arity) in &fns {
        // Witness layout: y, y', s1..sk.
        for yy_s in tuples(n, 2 + *arity) {
            checked += 1;
            let (y, y2) = (yy_s[0], yy_s[1]);
            let sv = &yy_s[2..];
            let lhs = alg.meet(
                s.function_value(name, y, sv)?,
                s.function_value(name, y2, sv)?,
            )?;
            let rhs = s.eq_value(y, y2)?;
            if !lhs.leq(rhs) {
                violations.push(LawViolation {
                    law: Law::FnFunctional,
                    symbol: Some(name.clone()),
                    witness: yy_s,
                    lhs,
                    rhs,
                });
            }
        }
    }

    Ok(LawReport {
        violations,
        checked,
    })
}

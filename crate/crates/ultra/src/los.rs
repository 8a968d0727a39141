//! Satisfaction transfer between the quotient and the Boolean values: truth
//! of a formula at classes coincides with the formula's value landing in
//! the ultrafilter, in the plain form over the whole quotient and in the
//! relativized form over the ground-fragment submodel.

use std::collections::BTreeMap;

use fol::{boolean_value, Formula};

use crate::{QuotientModel, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LosFailure {
    pub formula: String,
    /// Pool index per free variable, in variable order.
    pub assignment: Vec<(String, usize)>,
    pub relativized: bool,
    pub truth: bool,
    pub value_in_filter: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LosReport {
    pub plain_instances: usize,
    pub relativized_instances: usize,
    pub failures: Vec<LosFailure>,
}

impl LosReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, other: LosReport) {
        self.plain_instances += other.plain_instances;
        self.relativized_instances += other.relativized_instances;
        self.failures.extend(other.failures);
    }
}

/// One plain instance: truth at the classes of the assigned names versus
/// the formula's value landing in the ultrafilter.
pub fn los_instance(
    model: &QuotientModel,
    phi: &Formula,
    assignment: &BTreeMap<String, usize>,
) -> Result<(bool, bool)> {
    let classical = model.classical_view()?;
    let class_assignment: BTreeMap<String, usize> = assignment
        .iter()
        .map(|(v, &i)| (v.clone(), model.class_of_index(i)))
        .collect();
    let truth = classical.eval(phi, &class_assignment)?;
    let value = boolean_value(model.structure(), phi, assignment)?.value;
    Ok((truth, model.ultra().contains(value)?))
}

/// Sweeps every assignment of the formula's free variables.  Plain
/// instances draw from the whole pool; relativized instances draw from
/// names whose class satisfies the fragment predicate, and compare truth
/// in the fragment submodel against the relativized value.
pub fn los_check(model: &QuotientModel, phi: &Formula) -> Result<LosReport> {
    let free: Vec<String> = phi.free_vars().into_iter().collect();
    let classical = model.classical_view()?;
    let (sub_model, sub_classes) = model.vcheck_view()?;
    let relativized = phi.clone().vcheck();
    let pool_len = model.pool().len();
    let mut report = LosReport::default();

    for indices in assignments(pool_len, free.len()) {
        let assignment: BTreeMap<String, usize> = free
            .iter()
            .cloned()
            .zip(indices.iter().copied())
            .collect();
        let class_assignment: BTreeMap<String, usize> = free
            .iter()
            .cloned()
            .zip(indices.iter().map(|&i| model.class_of_index(i)))
            .collect();
        let truth = classical.eval(phi, &class_assignment)?;
        let value = boolean_value(model.structure(), phi, &assignment)?.value;
        let in_filter = model.ultra().contains(value)?;
        report.plain_instances += 1;
        if truth != in_filter {
            report.failures.push(LosFailure {
                formula: format!("{phi:?}"),
                assignment: free.iter().cloned().zip(indices.iter().copied()).collect(),
                relativized: false,
                truth,
                value_in_filter: in_filter,
            });
        }

        // Relativized form only where every free variable's class lies in
        // the submodel.
        let sub_positions: Option<BTreeMap<String, usize>> = free
            .iter()
            .zip(indices.iter())
            .map(|(v, &i)| {
                let class = model.class_of_index(i);
                sub_classes
                    .iter()
                    .position(|&c| c == class)
                    .map(|p| (v.clone(), p))
            })
            .collect();
        if let Some(sub_assignment) = sub_positions {
            let sub_truth = sub_model.eval(phi, &sub_assignment)?;
            let rel_value = boolean_value(model.structure(), &relativized, &assignment)?.value;
            let rel_in_filter = model.ultra().contains(rel_value)?;
            report.relativized_instances += 1;
            if sub_truth != rel_in_filter {
                report.failures.push(LosFailure {
                    formula: format!("{phi:?}"),
                    assignment: free.iter().cloned().zip(indices.iter().copied()).collect(),
                    relativized: true,
                    truth: sub_truth,
                    value_in_filter: rel_in_filter,
                });
            }
        }
    }
    Ok(report)
}

/// All tuples in `0..pool` of the given length, lexicographic.
fn assignments(pool: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..pool).map(move |i| {
                    let mut next = prefix.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    out
}

//! `eval`: Boolean value of each scenario formula, plus the equality and
//! function law audit of whichever structure the values came from.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::Args;
use fol::{boolean_value, check_laws, BValuedStructure};
use serde::Serialize;
use ultra::mixing_pool;

use crate::report::{
    algebra_json, element_json, kv, mark, section, AlgebraJson, CheckSummary, ElementJson,
    REPORT_SCHEMA,
};
use crate::{check_requested, load_scenario, validate_checks, CliError, CliResult, Format, Limits};

const KNOWN_CHECKS: [&str; 2] = ["values", "laws"];

#[derive(Args)]
pub struct EvalArgs {
    /// Scenario file (JSON)
    #[arg(long)]
    pub scenario: PathBuf,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest algebra the run will accept
    #[arg(long, default_value_t = 6)]
    pub max_atoms: usize,
    /// Override the scenario's name-pool rank
    #[arg(long)]
    pub pool_rank: Option<usize>,
    /// Largest formula depth the run will accept
    #[arg(long, default_value_t = 3)]
    pub depth: usize,
    /// Recorded for report provenance; eval itself samples nothing
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FormulaValue {
    pub text: String,
    pub value: ElementJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_ultrafilter: Option<bool>,
    pub pool_size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub seed: u64,
    /// `pool` when values come from the name-pool structure, `structure`
    /// when the scenario carried explicit tables.
    pub source: &'static str,
    pub algebra: AlgebraJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ultrafilter: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pool_rank: Option<usize>,
    pub pool_size: usize,
    pub formulas: Vec<FormulaValue>,
    pub warnings: Vec<String>,
    pub checks: CheckSummary,
}

impl EvalReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        section(&mut out, "eval");
        kv(&mut out, "algebra atoms", self.algebra.atoms);
        if let Some(u) = &self.ultrafilter {
            kv(&mut out, "ultrafilter", u);
        }
        kv(&mut out, "source", self.source);
        if let Some(rank) = self.pool_rank {
            kv(&mut out, "pool rank", rank);
        }
        kv(&mut out, "pool size", self.pool_size);
        if !self.formulas.is_empty() {
            section(&mut out, "values");
            for f in &self.formulas {
                let membership = match f.in_ultrafilter {
                    Some(true) => "  (in U)",
                    Some(false) => "  (not in U)",
                    None => "",
                };
                kv(
                    &mut out,
                    &f.text,
                    format!("{}{}", f.value.show, membership),
                );
            }
        }
        section(&mut out, "warnings");
        if self.warnings.is_empty() {
            kv(&mut out, "none", "");
        }
        for w in &self.warnings {
            kv(&mut out, "law", w);
        }
        section(&mut out, "summary");
        kv(&mut out, "checks run", self.checks.total);
        kv(&mut out, "checks failed", self.checks.failed);
        kv(&mut out, "result", mark(self.checks.failed == 0));
        out
    }
}

pub fn run(args: &EvalArgs) -> CliResult<(EvalReport, bool)> {
    let limits = Limits {
        max_atoms: args.max_atoms,
        max_depth: args.depth,
    };
    let (scenario, rank) = load_scenario(&args.scenario, &limits, args.pool_rank)?;
    validate_checks(&scenario.checks, &KNOWN_CHECKS)?;

    // Carrier: explicit tables when given, the name-pool structure
    // otherwise.
    let (structure, source, pool_rank): (BValuedStructure, &'static str, Option<usize>) =
        match &scenario.structure {
            Some((_, s)) => (s.clone(), "structure", None),
            None => {
                let pool = mixing_pool(&scenario.algebra, rank, &scenario.antichains)?;
                (pool.structure()?, "pool", Some(rank))
            }
        };

    let mut formulas = Vec::new();
    let mut total = 0;
    let mut failed = 0;
    if check_requested(&scenario.checks, "values") {
        for (phi, text) in scenario.formulas.iter().zip(&scenario.formula_texts) {
            let value = boolean_value(&structure, phi, &BTreeMap::new())?;
            let in_ultrafilter = match &scenario.ultra {
                Some(u) if !u.is_symbolic() => Some(u.contains(value.value)?),
                _ => None,
            };
            formulas.push(FormulaValue {
                text: text.clone(),
                value: element_json(&scenario.algebra, value.value),
                in_ultrafilter,
                pool_size: value.pool_size,
            });
            total += 1;
        }
    }

    let mut warnings = Vec::new();
    if check_requested(&scenario.checks, "laws") {
        let laws = check_laws(&structure)?;
        total += 1;
        if !laws.passes() {
            failed += 1;
            for v in &laws.violations {
                warnings.push(v.describe(&structure));
            }
        }
    }

    let report = EvalReport {
        schema: REPORT_SCHEMA,
        command: "eval",
        seed: args.seed,
        source,
        algebra: algebra_json(&scenario.algebra),
        ultrafilter: scenario.ultra.as_ref().map(|u| u.to_string()),
        pool_rank,
        pool_size: structure.pool_size(),
        formulas,
        warnings,
        checks: CheckSummary { total, failed },
    };
    let passed = failed == 0;
    Ok((report, passed))
}

//! `ultrapower`: build the quotient of the scenario's pool by its
//! ultrafilter, then run the requested checks: satisfaction transfer over
//! the scenario formulas plus a sampled batch, generic triviality, the
//! spanning-function presentation, and commutativity of the direct-limit
//! diagram over the declared antichain family.

use std::path::PathBuf;

use clap::Args;
use fol::FormulaGen;
use names::NamePool;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;
use ultra::{
    factor_maps, generic_triviality_check, los_check, mixing_pool, presentations_setup,
    quotient_model, DirectLimitSystem, LosReport, Ultrafilter,
};

use crate::report::{algebra_json, kv, mark, section, AlgebraJson, CheckSummary, REPORT_SCHEMA};
use crate::{check_requested, load_scenario, validate_checks, CliError, CliResult, Format, Limits};

const KNOWN_CHECKS: [&str; 4] = ["los", "triviality", "presentations", "limit"];

/// Failure listings are capped so a badly broken run stays readable; the
/// full count is always reported.
const MAX_LISTED_FAILURES: usize = 20;

#[derive(Args)]
pub struct UltrapowerArgs {
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
    /// Depth bound: guards scenario formulas and bounds the sampled ones
    #[arg(long, default_value_t = 3)]
    pub depth: usize,
    /// Sampled formulas added to the transfer sweep
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Seed for the formula sampler
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuotientJson {
    pub classes: usize,
    pub vcheck_classes: usize,
    pub pool_size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct LosJson {
    pub formulas_checked: usize,
    pub plain_instances: usize,
    pub relativized_instances: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrivialityJson {
    pub verdict: String,
    pub degree_of_genericity: String,
    pub embedding_bijective: Option<bool>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationsJson {
    pub functions: usize,
    pub function_classes: usize,
    pub name_classes: usize,
    pub well_defined: bool,
    pub injective_on_classes: bool,
    pub surjective: bool,
    pub membership_preserved: bool,
    pub commutes_with_embeddings: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorRow {
    pub antichain: Vec<String>,
    pub classes: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitJson {
    pub declared_antichains: usize,
    pub total_antichains: usize,
    pub refining_pairs: usize,
    pub factors: Vec<FactorRow>,
    pub maps_well_defined: bool,
    pub triangles_commute: bool,
    pub embeddings_commute: bool,
    pub limit_commutes: bool,
    pub limit_matches_quotient: bool,
    pub induced_verified: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct UltrapowerReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub algebra: AlgebraJson,
    pub ultrafilter: String,
    pub pool_rank: usize,
    pub quotient: QuotientJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub los: Option<LosJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triviality: Option<TrivialityJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentations: Option<PresentationsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<LimitJson>,
    pub checks: CheckSummary,
}

impl UltrapowerReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        section(&mut out, "ultrapower");
        kv(&mut out, "algebra atoms", self.algebra.atoms);
        kv(&mut out, "ultrafilter", &self.ultrafilter);
        kv(&mut out, "pool rank", self.pool_rank);
        kv(&mut out, "pool size", self.quotient.pool_size);
        kv(&mut out, "classes", self.quotient.classes);
        kv(&mut out, "crisp classes", self.quotient.vcheck_classes);
        if let Some(los) = &self.los {
            section(&mut out, "transfer");
            kv(&mut out, "formulas checked", los.formulas_checked);
            kv(&mut out, "plain instances", los.plain_instances);
            kv(&mut out, "relativized instances", los.relativized_instances);
            kv(&mut out, "failures", los.failure_count);
            for f in &los.failures {
                kv(&mut out, "failure", f);
            }
            kv(&mut out, "result", mark(los.pass));
        }
        if let Some(t) = &self.triviality {
            section(&mut out, "triviality");
            kv(&mut out, "verdict", &t.verdict);
            kv(&mut out, "degree of genericity", &t.degree_of_genericity);
            kv(&mut out, "result", mark(t.pass));
        }
        if let Some(p) = &self.presentations {
            section(&mut out, "presentations");
            kv(&mut out, "functions", p.functions);
            kv(&mut out, "function classes", p.function_classes);
            kv(&mut out, "name classes", p.name_classes);
            kv(&mut out, "well defined", mark(p.well_defined));
            kv(&mut out, "injective", mark(p.injective_on_classes));
            kv(&mut out, "surjective", mark(p.surjective));
            kv(&mut out, "membership preserved", mark(p.membership_preserved));
            kv(&mut out, "commutes with j", mark(p.commutes_with_embeddings));
            kv(&mut out, "result", mark(p.pass));
        }
        if let Some(l) = &self.limit {
            section(&mut out, "direct limit");
            kv(&mut out, "declared antichains", l.declared_antichains);
            kv(&mut out, "total antichains", l.total_antichains);
            kv(&mut out, "refining pairs", l.refining_pairs);
            for row in &l.factors {
                kv(
                    &mut out,
                    &format!("factor {{{}}}", row.antichain.join(", ")),
                    format!("{} classes", row.classes),
                );
            }
            kv(&mut out, "maps well defined", mark(l.maps_well_defined));
            kv(&mut out, "triangles commute", mark(l.triangles_commute));
            kv(&mut out, "embeddings commute", mark(l.embeddings_commute));
            kv(&mut out, "limit commutes", mark(l.limit_commutes));
            kv(&mut out, "matches quotient", mark(l.limit_matches_quotient));
            kv(&mut out, "induced verified", mark(l.induced_verified));
            kv(&mut out, "result", mark(l.pass));
        }
        section(&mut out, "summary");
        kv(&mut out, "checks run", self.checks.total);
        kv(&mut out, "checks failed", self.checks.failed);
        kv(&mut out, "result", mark(self.checks.failed == 0));
        out
    }
}

pub fn run(args: &UltrapowerArgs) -> CliResult<(UltrapowerReport, bool)> {
    let limits = Limits {
        max_atoms: args.max_atoms,
        max_depth: args.depth,
    };
    let (scenario, rank) = load_scenario(&args.scenario, &limits, args.pool_rank)?;
    validate_checks(&scenario.checks, &KNOWN_CHECKS)?;
    if scenario.structure.is_some() {
        return Err(CliError::Input(
            "ultrapower runs on an algebra or poset scenario, not explicit tables".into(),
        ));
    }
    let u: Ultrafilter = scenario
        .ultra
        .clone()
        .expect("carrier scenarios always carry an ultrafilter");
    if u.is_symbolic() {
        return Err(CliError::Input(
            "the finite quotient needs a finite ultrafilter; countable-index behavior lives in demo-omega"
                .into(),
        ));
    }

    let pool = mixing_pool(&scenario.algebra, rank, &scenario.antichains)?;
    let model = quotient_model(&pool, &u)?;
    let quotient = QuotientJson {
        classes: model.class_count(),
        vcheck_classes: model.vcheck_classes().len(),
        pool_size: pool.len(),
    };

    let mut total = 0;
    let mut failed = 0;
    let mut bump = |pass: bool, total: &mut usize, failed: &mut usize| {
        *total += 1;
        if !pass {
            *failed += 1;
        }
    };

    let los = if check_requested(&scenario.checks, "los") {
        let mut rng = ChaCha20Rng::seed_from_u64(args.seed);
        let gen = FormulaGen::new(NamePool::signature(), &["x", "y"], args.depth);
        let mut sweep = LosReport::default();
        let mut formulas_checked = 0;
        for phi in &scenario.formulas {
            sweep.absorb(los_check(&model, phi)?);
            formulas_checked += 1;
        }
        for _ in 0..args.samples {
            let phi = gen.sample(&mut rng);
            sweep.absorb(los_check(&model, &phi)?);
            formulas_checked += 1;
        }
        let pass = sweep.ok();
        bump(pass, &mut total, &mut failed);
        let failure_count = sweep.failures.len();
        let failures = sweep
            .failures
            .iter()
            .take(MAX_LISTED_FAILURES)
            .map(|f| {
                format!(
                    "{} at {:?} ({}): truth {} vs value-in-filter {}",
                    f.formula,
                    f.assignment,
                    if f.relativized { "relativized" } else { "plain" },
                    f.truth,
                    f.value_in_filter
                )
            })
            .collect();
        Some(LosJson {
            formulas_checked,
            plain_instances: sweep.plain_instances,
            relativized_instances: sweep.relativized_instances,
            failure_count,
            failures,
            pass,
        })
    } else {
        None
    };

    let triviality = if check_requested(&scenario.checks, "triviality") {
        let t = generic_triviality_check(Some(&model), &u, 8)?;
        let pass = t.ok();
        bump(pass, &mut total, &mut failed);
        let verdict = if pass {
            "trivial ultrapower (generic)".to_string()
        } else {
            "triviality not established".to_string()
        };
        Some(TrivialityJson {
            verdict,
            degree_of_genericity: t.degree_of_genericity.clone(),
            embedding_bijective: t.iso_verified,
            pass,
        })
    } else {
        None
    };

    let presentations = if check_requested(&scenario.checks, "presentations") {
        let (_, iso) = presentations_setup(&scenario.algebra, &u, rank)?;
        let pass = iso.ok();
        bump(pass, &mut total, &mut failed);
        Some(PresentationsJson {
            functions: iso.functions.len(),
            function_classes: iso.function_classes,
            name_classes: iso.name_classes,
            well_defined: iso.well_defined,
            injective_on_classes: iso.injective_on_classes,
            surjective: iso.surjective,
            membership_preserved: iso.membership_preserved,
            commutes_with_embeddings: iso.commutes_with_embeddings,
            pass,
        })
    } else {
        None
    };

    let limit = if check_requested(&scenario.checks, "limit") {
        let system = DirectLimitSystem::new(&scenario.algebra, &u, rank, &scenario.antichains)?;
        let maps = factor_maps(&system)?;
        let pass = maps.ok();
        bump(pass, &mut total, &mut failed);
        let factors = system
            .antichains()
            .iter()
            .zip(system.factors())
            .map(|(a, f)| FactorRow {
                antichain: a
                    .elements()
                    .iter()
                    .map(|&e| scenario.algebra.show(e))
                    .collect(),
                classes: f.class_count(),
            })
            .collect();
        Some(LimitJson {
            declared_antichains: scenario.antichains.len(),
            total_antichains: system.antichains().len(),
            refining_pairs: maps.refining_pairs,
            factors,
            maps_well_defined: maps.maps_well_defined,
            triangles_commute: maps.triangles_commute,
            embeddings_commute: maps.embeddings_commute,
            limit_commutes: maps.limit_commutes,
            limit_matches_quotient: maps.limit_matches_quotient,
            induced_verified: maps.induced_verified,
            pass,
        })
    } else {
        None
    };

    let report = UltrapowerReport {
        schema: REPORT_SCHEMA,
        command: "ultrapower",
        seed: args.seed,
        algebra: algebra_json(&scenario.algebra),
        ultrafilter: u.to_string(),
        pool_rank: rank,
        quotient,
        los,
        triviality,
        presentations,
        limit,
        checks: CheckSummary { total, failed },
    };
    let passed = failed == 0;
    Ok((report, passed))
}

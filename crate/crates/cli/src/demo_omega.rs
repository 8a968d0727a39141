//! `demo-omega`: the countable-index demonstrations that finite algebras
//! cannot exhibit.  Three sections: the nonprincipality witnesses, the
//! descending chain above every standard point, and the rectangle meets
//! showing product largeness is not decided coordinatewise.

use clap::Args;
use omega_symbolic::{
    illfoundedness_witness, rectangle_failure_demo, u_membership, witness_suite, TriangleSet,
    UPSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::report::{kv, mark, section, CheckSummary, REPORT_SCHEMA};
use crate::Format;

/// `j(m)` must sit below the chain's last element for every `m` up to
/// this bound.
const STANDARD_BOUND: u64 = 50;

#[derive(Args)]
pub struct DemoArgs {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Length of the descending chain
    #[arg(long, default_value_t = 10)]
    pub depth: u64,
    /// Sampled large rectangles; 0 skips the sampled block
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Seed for rectangle sampling
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub missed_antichain: bool,
    pub chain_all_large: bool,
    pub chain_finite_meets_nonzero: bool,
    pub chain_empty_meet: bool,
    pub descent_strict: bool,
    pub descent_spectrum: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DescentJson {
    pub depth: u64,
    pub standard_bound: u64,
    pub descents_verified: bool,
    pub above_standard: bool,
    pub embedding_order_preserved: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RectangleJson {
    pub fixed_cases: usize,
    pub fixed_pass: bool,
    pub sampled: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampled_notice: Option<String>,
    pub sampled_all_meet_both: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DemoReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub witness: WitnessJson,
    pub descent: DescentJson,
    pub rectangle: RectangleJson,
    pub checks: CheckSummary,
}

impl DemoReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        section(&mut out, "demo-omega");
        section(&mut out, "witnesses");
        kv(&mut out, "missed antichain", mark(self.witness.missed_antichain));
        kv(&mut out, "chain all large", mark(self.witness.chain_all_large));
        kv(
            &mut out,
            "finite meets nonzero",
            mark(self.witness.chain_finite_meets_nonzero),
        );
        kv(&mut out, "empty full meet", mark(self.witness.chain_empty_meet));
        kv(&mut out, "descent strict", mark(self.witness.descent_strict));
        kv(
            &mut out,
            "descent spectrum",
            self.witness.descent_spectrum.join(", "),
        );
        kv(&mut out, "result", mark(self.witness.pass));
        section(&mut out, "descending chain");
        kv(&mut out, "depth", self.descent.depth);
        kv(&mut out, "standard bound", self.descent.standard_bound);
        kv(&mut out, "descents verified", mark(self.descent.descents_verified));
        kv(&mut out, "above every j(m)", mark(self.descent.above_standard));
        kv(
            &mut out,
            "j order preserved",
            mark(self.descent.embedding_order_preserved),
        );
        kv(&mut out, "result", mark(self.descent.pass));
        section(&mut out, "rectangles");
        kv(&mut out, "fixed cases", self.rectangle.fixed_cases);
        kv(&mut out, "fixed result", mark(self.rectangle.fixed_pass));
        match &self.rectangle.sampled_notice {
            Some(notice) => kv(&mut out, "sampled", notice),
            None => {
                kv(&mut out, "sampled", self.rectangle.sampled);
                kv(
                    &mut out,
                    "sampled meet both",
                    mark(self.rectangle.sampled_all_meet_both),
                );
            }
        }
        kv(&mut out, "result", mark(self.rectangle.pass));
        section(&mut out, "summary");
        kv(&mut out, "checks run", self.checks.total);
        kv(&mut out, "checks failed", self.checks.failed);
        kv(&mut out, "result", mark(self.checks.failed == 0));
        out
    }
}

/// A canonical set whose eventual pattern keeps residue zero, hence large
/// and infinite; canonicalization can shrink the period but never drops
/// residue zero.
fn random_large_upset<R: Rng>(rng: &mut R) -> UPSet {
    let period = rng.gen_range(1..=6u64);
    let mut pattern = vec![0u64];
    for r in 1..period {
        if rng.gen_bool(0.35) {
            pattern.push(r);
        }
    }
    let threshold = rng.gen_range(0..=6u64);
    let mut prefix = Vec::new();
    for n in 0..threshold {
        if rng.gen_bool(0.3) {
            prefix.push(n);
        }
    }
    UPSet::new(threshold, period, &pattern, &prefix)
}

pub fn run(args: &DemoArgs) -> (DemoReport, bool) {
    let ws = witness_suite();
    let witness = WitnessJson {
        missed_antichain: ws.missed_antichain_checked,
        chain_all_large: ws.chain_all_large,
        chain_finite_meets_nonzero: ws.chain_finite_meet_nonzero,
        chain_empty_meet: ws.chain_empty_meet_checked,
        descent_strict: ws.descent_strict,
        descent_spectrum: ws.descent_spectrum.clone(),
        pass: ws.ok(),
    };

    let depth = args.depth.max(1);
    let ill = illfoundedness_witness(depth, STANDARD_BOUND);
    let descent = DescentJson {
        depth,
        standard_bound: ill.standard_bound,
        descents_verified: ill.descents_verified,
        above_standard: ill.above_standard_verified,
        embedding_order_preserved: ill.embedding_order_verified,
        pass: ill.ok(),
    };

    let fixed = rectangle_failure_demo();
    let lower = TriangleSet::lower();
    let upper = TriangleSet::upper();
    let mut sampled_all_meet_both = true;
    let mut rng = ChaCha20Rng::seed_from_u64(args.seed);
    let sampled_notice = if args.samples == 0 {
        Some("skipped (--samples 0)".to_string())
    } else {
        for _ in 0..args.samples {
            let b = random_large_upset(&mut rng);
            let c = random_large_upset(&mut rng);
            debug_assert!(u_membership(&b) && u_membership(&c));
            let hits_lower = lower.meet_rectangle(&b, &c).is_some();
            let hits_upper = upper.meet_rectangle(&b, &c).is_some();
            sampled_all_meet_both &= hits_lower && hits_upper;
        }
        None
    };
    let sampled_ok = sampled_notice.is_some() || sampled_all_meet_both;
    let rectangle = RectangleJson {
        fixed_cases: fixed.cases.len(),
        fixed_pass: fixed.ok(),
        sampled: args.samples,
        sampled_notice,
        sampled_all_meet_both,
        pass: fixed.ok() && sampled_ok,
    };

    let sections = [witness.pass, descent.pass, rectangle.pass];
    let checks = CheckSummary {
        total: sections.len(),
        failed: sections.iter().filter(|&&p| !p).count(),
    };
    let report = DemoReport {
        schema: REPORT_SCHEMA,
        command: "demo-omega",
        seed: args.seed,
        witness,
        descent,
        rectangle,
        checks,
    };
    let passed = checks.failed == 0;
    (report, passed)
}

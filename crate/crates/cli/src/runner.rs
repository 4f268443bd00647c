//! The `check` pipeline: filter the registry, sample every selected
//! identity, run the checks in parallel across identities (samples stay
//! sequential within one identity so residual ordering is reproducible),
//! and assemble the report.

use identities::{
    registry, run_identity, sample_domain, CheckResult, Identity, IdentityOutcome, ParamSample,
    Verdict,
};
use rayon::prelude::*;
use rug::Float;

use crate::config::RunConfig;
use crate::globs::matches_any;
use crate::report::{
    CheckRecord, ConfigEcho, IdentitySummary, Report, Totals, ToolStamp, SCHEMA_VERSION,
};
use crate::textfmt::fmt_sci;
use crate::CmdError;

pub struct CheckRun {
    pub report: Report,
    /// True when no check ended in `fails` or `eval-error`.
    pub clean: bool,
}

pub fn execute(cfg: &RunConfig) -> Result<CheckRun, CmdError> {
    let ctx = cfg.context()?;
    let tol = ctx
        .parse_float(&cfg.tolerance)
        .map_err(|e| CmdError::Usage(e.to_string()))?;

    let mut selected: Vec<&'static Identity> = registry()
        .iter()
        .filter(|i| matches_any(&cfg.identity_filter, i.id))
        .collect();
    selected.sort_by_key(|i| i.id);

    let run_one = |ident: &&'static Identity| -> IdentityOutcome {
        match sample_domain(ident.id, cfg.samples_per_identity as usize, cfg.seed) {
            Ok(samples) => run_identity(ident, &samples, &tol, &ctx),
            // Sampling trouble is an evaluation problem, not a crash.
            Err(e) => IdentityOutcome {
                identity_id: ident.id.to_string(),
                results: vec![CheckResult {
                    identity_id: ident.id.to_string(),
                    sample: ParamSample::new(cfg.seed),
                    lhs_value: None,
                    rhs_value: None,
                    abs_residual: None,
                    rel_residual: None,
                    verdict: Verdict::EvalError,
                    route_notes: format!("sampling failed: {e}"),
                }],
                alternate_applied: false,
                alternate_holds: false,
            },
        }
    };

    let outcomes: Vec<IdentityOutcome> = match cfg.jobs {
        0 => selected.par_iter().map(run_one).collect(),
        n => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CmdError::Usage(format!("cannot build a {n}-thread pool: {e}")))?
            .install(|| selected.par_iter().map(run_one).collect()),
    };

    Ok(assemble(cfg, &selected, &outcomes))
}

fn verdict_count(results: &[CheckResult], v: Verdict) -> usize {
    results.iter().filter(|r| r.verdict == v).count()
}

fn worst(results: &[CheckResult], pick: impl Fn(&CheckResult) -> Option<&Float>) -> Option<String> {
    let mut best: Option<&Float> = None;
    for r in results {
        if let Some(x) = pick(r) {
            if best.map_or(true, |b| x > b) {
                best = Some(x);
            }
        }
    }
    best.map(|f| fmt_sci(f, 3))
}

fn summary_verdict(s: &IdentitySummary) -> &'static str {
    if s.fails > 0 {
        "fails"
    } else if s.eval_errors > 0 {
        "eval-error"
    } else if s.suspected_discrepancies > 0 {
        "suspected-discrepancy"
    } else {
        "holds"
    }
}

fn assemble(cfg: &RunConfig, selected: &[&'static Identity], outcomes: &[IdentityOutcome]) -> CheckRun {
    let mut totals = Totals::default();
    let mut identities = Vec::with_capacity(selected.len());
    let mut checks = Vec::new();
    let mut clean = true;

    for (ident, outcome) in selected.iter().zip(outcomes) {
        let results = &outcome.results;
        let mut summary = IdentitySummary {
            id: ident.id.to_string(),
            title: ident.title.to_string(),
            tier: ident.tier.name().to_string(),
            anchor: ident.anchor.to_string(),
            verdict: String::new(),
            checks: results.len(),
            holds: verdict_count(results, Verdict::Holds),
            fails: verdict_count(results, Verdict::Fails),
            suspected_discrepancies: verdict_count(results, Verdict::SuspectedDiscrepancy),
            eval_errors: verdict_count(results, Verdict::EvalError),
            worst_abs_residual: worst(results, |r| r.abs_residual.as_ref()),
            worst_rel_residual: worst(results, |r| r.rel_residual.as_ref()),
            alternate_applied: outcome.alternate_applied,
            alternate_holds: outcome.alternate_holds,
            alternate_reading: if outcome.alternate_applied {
                ident.alt.as_ref().map(|a| a.description.to_string())
            } else {
                None
            },
            route_notes: ident.route_notes.to_string(),
        };
        summary.verdict = summary_verdict(&summary).to_string();
        if summary.fails > 0 || summary.eval_errors > 0 {
            clean = false;
        }

        totals.identities += 1;
        totals.checks += summary.checks;
        totals.holds += summary.holds;
        totals.fails += summary.fails;
        totals.suspected_discrepancies += summary.suspected_discrepancies;
        totals.eval_errors += summary.eval_errors;

        for (i, r) in results.iter().enumerate() {
            checks.push(CheckRecord {
                identity_id: ident.id.to_string(),
                sample_index: i,
                sample: r.sample.describe(),
                verdict: r.verdict.name().to_string(),
                abs_residual: r.abs_residual.as_ref().map(|f| fmt_sci(f, 3)),
                rel_residual: r.rel_residual.as_ref().map(|f| fmt_sci(f, 3)),
                note: r.route_notes.clone(),
            });
        }
        identities.push(summary);
    }

    let report = Report {
        schema: SCHEMA_VERSION,
        tool: ToolStamp::current(),
        config: ConfigEcho::from_config(cfg),
        totals,
        identities,
        checks,
    };
    CheckRun { report, clean }
}

//! Numerical verdicts: compare the two sides of an identity on a sample.

use rug::ops::Pow;
use rug::Float;

use mpcore::{ComplexValue, Error, PrecisionContext, Result};

use crate::registry::lookup;
use crate::types::{CheckResult, Identity, Kind, ParamSample, SideFn, Tier, Verdict};

/// Factor count used when a limit identity is checked through `check`.
pub const DEFAULT_TRUNCATION: i64 = 12;

/// Truncation depths at which a bound identity must hold strictly.
pub const BOUND_DEPTHS: i64 = 10;

/// Failing samples required before a systematic failure is adjudicated as a
/// suspected discrepancy rather than a stray numerical artifact. Every
/// failing sample has already been confirmed at two precision levels by the
/// escalation pass inside `check`.
pub const SYSTEMATIC_FAILURE_MIN: usize = 10;

/// Extra digits for the confirmation pass before a `fails` verdict.
const ESCALATION_DIGITS: u32 = 20;

fn fabs(prec: u32, x: &Float) -> Float {
    Float::with_val(prec, x.abs_ref())
}

/// Componentwise residuals. Each component is measured relatively when its
/// scale is significant at the current precision and absolutely otherwise;
/// the reported residuals are the worst component.
fn residuals(lhs: &ComplexValue, rhs: &ComplexValue, ctx: &PrecisionContext) -> (Float, Float) {
    let prec = ctx.prec_bits();
    let floor = ctx.pow10(-i64::from(ctx.digits()) / 2);
    let component = |a: &Float, b: &Float| -> (Float, Float) {
        let diff = fabs(prec, &Float::with_val(prec, a - b));
        let scale = fabs(prec, a).max(&fabs(prec, b));
        let rel = if scale > floor {
            Float::with_val(prec, &diff / &scale)
        } else {
            diff.clone()
        };
        (diff, rel)
    };
    let (abs_re, rel_re) = component(lhs.re(), rhs.re());
    let (abs_im, rel_im) = component(lhs.im(), rhs.im());
    (abs_re.max(&abs_im), rel_re.max(&rel_im))
}

fn eval_pair(
    lhs: SideFn,
    rhs: SideFn,
    sample: &ParamSample,
    ctx: &PrecisionContext,
) -> Result<(ComplexValue, ComplexValue)> {
    let l = lhs(sample, ctx)?;
    let r = rhs(sample, ctx)?;
    if !l.is_finite() || !r.is_finite() {
        return Err(Error::non_converged(
            "side evaluation produced a non-finite value",
        ));
    }
    Ok((l, r))
}

fn outcome(
    ident: &Identity,
    sample: &ParamSample,
    lhs: ComplexValue,
    rhs: ComplexValue,
    abs: Float,
    rel: Float,
    verdict: Verdict,
    note: String,
) -> CheckResult {
    CheckResult {
        identity_id: ident.id.to_owned(),
        sample: sample.clone(),
        lhs_value: Some(lhs),
        rhs_value: Some(rhs),
        abs_residual: Some(abs),
        rel_residual: Some(rel),
        verdict,
        route_notes: note,
    }
}

/// Compare two closed expressions. A residual over tolerance is confirmed
/// at higher precision before it becomes a failure, so rounding-limited
/// first passes still land on `holds`.
fn check_finite(
    ident: &Identity,
    lhs_fn: SideFn,
    rhs_fn: SideFn,
    sample: &ParamSample,
    tol: &Float,
    ctx: &PrecisionContext,
) -> CheckResult {
    let (lhs, rhs) = match eval_pair(lhs_fn, rhs_fn, sample, ctx) {
        Ok(pair) => pair,
        Err(e) => return CheckResult::error(ident.id, sample, e.to_string()),
    };
    let (abs, rel) = residuals(&lhs, &rhs, ctx);
    if rel <= *tol {
        let note = format!("{}; residual within tolerance", ident.route_notes);
        return outcome(ident, sample, lhs, rhs, abs, rel, Verdict::Holds, note);
    }
    let hi = ctx.escalated(ESCALATION_DIGITS);
    let (lhs2, rhs2) = match eval_pair(lhs_fn, rhs_fn, sample, &hi) {
        Ok(pair) => pair,
        Err(e) => {
            return CheckResult::error(
                ident.id,
                sample,
                format!("escalated confirmation pass failed: {e}"),
            )
        }
    };
    let (abs2, rel2) = residuals(&lhs2, &rhs2, &hi);
    if rel2 <= *tol {
        let note = format!(
            "{}; held after escalating by {ESCALATION_DIGITS} digits",
            ident.route_notes
        );
        outcome(ident, sample, lhs2, rhs2, abs2, rel2, Verdict::Holds, note)
    } else {
        let note = format!(
            "residual {} persists at {} working digits",
            rel2.to_string_radix(10, Some(3)),
            hi.working_digits()
        );
        outcome(ident, sample, lhs2, rhs2, abs2, rel2, Verdict::Fails, note)
    }
}

/// Compare a truncated product against its closed-form limit, widening the
/// comparison tolerance by a geometric tail extrapolated from the observed
/// partial-product deltas.
///
/// The log-factors of several products oscillate strongly from one index to
/// the next (the cosine-ratio family can swing by two orders), so a single
/// last-delta extrapolation is unreliable. Instead the deltas are fitted
/// against the identity's structural ratio r with a max envelope
/// C = max_p delta_p / r^p, predicting the unseen tail as C r^N / (1-r).
fn check_infinite_inner(
    ident: &Identity,
    truncation: i64,
    sample: &ParamSample,
    ctx: &PrecisionContext,
) -> CheckResult {
    let (num, den) = match ident.kind.tail_ratio() {
        Some(r) => r,
        None => {
            return CheckResult::error(
                ident.id,
                sample,
                format!("{} is not a limit identity", ident.id),
            )
        }
    };
    let factor = match ident.factor {
        Some(f) => f,
        None => {
            return CheckResult::error(
                ident.id,
                sample,
                format!("{} has no per-factor evaluator", ident.id),
            )
        }
    };
    let prec = ctx.prec_bits();
    let mut acc = ComplexValue::one(ctx);
    let mut deltas: Vec<Float> = Vec::with_capacity(truncation as usize);
    for p in 0..truncation {
        let f = match factor(sample, p, ctx) {
            Ok(f) => f,
            Err(e) => return CheckResult::error(ident.id, sample, e.to_string()),
        };
        let next = &acc * &f;
        if !next.is_finite() {
            return CheckResult::error(ident.id, sample, "partial product lost finiteness".into());
        }
        deltas.push((&next - &acc).abs());
        acc = next;
    }
    let limit = match (ident.rhs)(sample, ctx) {
        Ok(v) if v.is_finite() => v,
        Ok(_) => {
            return CheckResult::error(ident.id, sample, "limit evaluated non-finite".to_owned())
        }
        Err(e) => return CheckResult::error(ident.id, sample, e.to_string()),
    };
    let scale = acc.abs().max(&limit.abs());
    let noise = Float::with_val(prec, &scale * &ctx.pow10(-(i64::from(ctx.working_digits()) - 5)));
    let ratio = Float::with_val(prec, num) / Float::with_val(prec, den);

    // Contraction guard: after N factors the delta must have decayed by at
    // least a third of the orders the structural ratio predicts. Genuinely
    // non-converging partials keep O(1) deltas and trip this.
    let d_last = deltas.last().expect("truncation >= 4").clone();
    let decay_floor = Float::with_val(
        prec,
        &scale * &Float::with_val(prec, (&ratio).pow((truncation / 3) as i32)),
    );
    if d_last > noise && d_last > decay_floor {
        return CheckResult::error(
            ident.id,
            sample,
            format!(
                "partial products are not contracting at depth {truncation} (last delta {})",
                d_last.to_string_radix(10, Some(3))
            ),
        );
    }

    let mut envelope = Float::new(prec);
    let mut rp = Float::with_val(prec, 1);
    for d in &deltas {
        let candidate = Float::with_val(prec, d / &rp);
        envelope = envelope.max(&candidate);
        rp = Float::with_val(prec, &rp * &ratio);
    }
    // rp is now ratio^N; factor 4 absorbs envelope estimation error.
    let tail = Float::with_val(prec, &envelope * &rp)
        / Float::with_val(prec, 1u32 - &ratio)
        * 4u32;

    let residual = (&acc - &limit).abs();
    let allowed = Float::with_val(prec, &scale * &ctx.tol()) + &tail;
    let floor = ctx.pow10(-i64::from(ctx.digits()) / 2);
    let rel = if scale > floor {
        Float::with_val(prec, &residual / &scale)
    } else {
        residual.clone()
    };
    let verdict = if residual <= allowed {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let note = format!(
        "partial product at depth {truncation}; tail allowance {}",
        tail.to_string_radix(10, Some(3))
    );
    outcome(ident, sample, acc, limit, residual, rel, verdict, note)
}

/// Strict-inequality check: every truncation depth up to `BOUND_DEPTHS`
/// must stay below the closed-form bound by more than rounding noise.
fn check_bound_inner(
    ident: &Identity,
    sample: &ParamSample,
    ctx: &PrecisionContext,
) -> CheckResult {
    let factor = match ident.factor {
        Some(f) => f,
        None => {
            return CheckResult::error(
                ident.id,
                sample,
                format!("{} has no per-factor evaluator", ident.id),
            )
        }
    };
    let bound = match (ident.rhs)(sample, ctx) {
        Ok(v) if v.is_finite() => v,
        Ok(_) => {
            return CheckResult::error(ident.id, sample, "bound evaluated non-finite".to_owned())
        }
        Err(e) => return CheckResult::error(ident.id, sample, e.to_string()),
    };
    let prec = ctx.prec_bits();
    let bound_scale = fabs(prec, bound.re());
    let mut acc = ComplexValue::one(ctx);
    let mut worst: Option<(Float, ComplexValue, i64)> = None;
    for p in 0..BOUND_DEPTHS {
        acc = match factor(sample, p, ctx) {
            Ok(f) => &acc * &f,
            Err(e) => return CheckResult::error(ident.id, sample, e.to_string()),
        };
        if !acc.is_finite() {
            return CheckResult::error(ident.id, sample, "partial product lost finiteness".into());
        }
        // Signed relative margin: negative while the bound holds strictly.
        let margin = Float::with_val(prec, acc.re() - bound.re()) / &bound_scale;
        let beat = match &worst {
            Some((w, _, _)) => margin > *w,
            None => true,
        };
        if beat {
            worst = Some((margin, acc.clone(), p + 1));
        }
    }
    let (margin, at_partial, at_depth) = worst.expect("BOUND_DEPTHS > 0");
    let clearance = ctx.pow10(-i64::from(ctx.digits()) / 2);
    let strict = margin < Float::with_val(prec, -&clearance);
    let abs = fabs(prec, &Float::with_val(prec, at_partial.re() - bound.re()));
    let verdict = if strict { Verdict::Holds } else { Verdict::Fails };
    let note = format!(
        "strict upper bound over depths 1..={BOUND_DEPTHS}; tightest margin {} at depth {at_depth}",
        margin.to_string_radix(10, Some(3))
    );
    outcome(ident, sample, at_partial, bound, abs, margin, verdict, note)
}

fn check_with(
    ident: &Identity,
    sample: &ParamSample,
    tol: &Float,
    ctx: &PrecisionContext,
) -> CheckResult {
    match ident.kind {
        Kind::Finite => check_finite(ident, ident.lhs, ident.rhs, sample, tol, ctx),
        Kind::Bound => check_bound_inner(ident, sample, ctx),
        Kind::InfiniteThird | Kind::InfiniteNinth => {
            check_infinite_inner(ident, DEFAULT_TRUNCATION, sample, ctx)
        }
    }
}

fn tolerance_floor(ctx: &PrecisionContext) -> Float {
    ctx.pow10(-i64::from(ctx.digits()) + 10)
}

/// Check one identity on one sample.
///
/// `tol` must honor the resolvable floor 10^(10 - digits). Evaluation
/// problems never escape as errors; they land in an `eval-error` result.
pub fn check(
    id: &str,
    sample: &ParamSample,
    tol: &Float,
    ctx: &PrecisionContext,
) -> Result<CheckResult> {
    let ident = lookup(id).ok_or_else(|| Error::invalid(format!("unknown identity id {id:?}")))?;
    if *tol < tolerance_floor(ctx) {
        return Err(Error::invalid(format!(
            "tolerance is below the resolvable floor for {} digits",
            ctx.digits()
        )));
    }
    Ok(check_with(ident, sample, tol, ctx))
}

/// Check a limit identity at an explicit truncation depth.
pub fn check_infinite(
    id: &str,
    truncation: i64,
    sample: &ParamSample,
    ctx: &PrecisionContext,
) -> Result<CheckResult> {
    let ident = lookup(id).ok_or_else(|| Error::invalid(format!("unknown identity id {id:?}")))?;
    if !ident.kind.is_limit() {
        return Err(Error::invalid(format!("{id} is not a limit identity")));
    }
    if truncation < 4 {
        return Err(Error::invalid(
            "truncation must be at least 4 to estimate the tail",
        ));
    }
    Ok(check_infinite_inner(ident, truncation, sample, ctx))
}

/// Aggregate result of running one identity over a sample batch.
pub struct IdentityOutcome {
    pub identity_id: String,
    pub results: Vec<CheckResult>,
    /// The alternate reading was evaluated (systematic primary failure).
    pub alternate_applied: bool,
    /// The alternate reading held on every sample the primary failed.
    pub alternate_holds: bool,
}

/// Run an identity across a sample batch and adjudicate systematic failures.
///
/// Isolated failures stay `fails`. When at least `SYSTEMATIC_FAILURE_MIN`
/// samples fail (each confirmed at two precision levels), the statement as
/// encoded is in question rather than the arithmetic: a registered alternate
/// reading is auto-tested, and verdicts become `suspected-discrepancy` when
/// the alternate holds, or for non-core identities even without one.
pub fn run_identity(
    ident: &Identity,
    samples: &[ParamSample],
    tol: &Float,
    ctx: &PrecisionContext,
) -> IdentityOutcome {
    let mut results: Vec<CheckResult> = samples
        .iter()
        .map(|sample| check_with(ident, sample, tol, ctx))
        .collect();
    let failing: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, r)| r.verdict == Verdict::Fails)
        .map(|(i, _)| i)
        .collect();
    let mut alternate_applied = false;
    let mut alternate_holds = false;
    if failing.len() >= SYSTEMATIC_FAILURE_MIN {
        if let Some(alt) = &ident.alt {
            alternate_applied = true;
            alternate_holds = failing.iter().all(|&i| {
                check_finite(ident, alt.lhs, alt.rhs, &samples[i], tol, ctx).verdict
                    == Verdict::Holds
            });
            if alternate_holds {
                for &i in &failing {
                    results[i].verdict = Verdict::SuspectedDiscrepancy;
                    results[i].route_notes = format!(
                        "statement fails as printed on {} samples at two precision levels; {}",
                        failing.len(),
                        alt.description
                    );
                }
            }
        }
        if !alternate_holds && ident.tier != Tier::Core {
            for &i in &failing {
                results[i].verdict = Verdict::SuspectedDiscrepancy;
                results[i].route_notes = format!(
                    "systematic failure on {} samples at two precision levels; no reading tried so far reconciles the two sides",
                    failing.len()
                );
            }
        }
    }
    IdentityOutcome {
        identity_id: ident.id.to_owned(),
        results,
        alternate_applied,
        alternate_holds,
    }
}

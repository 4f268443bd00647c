//! Behavioral tests for the checker: pinned reference values, verdict
//! semantics, pole handling, and the discrepancy adjudication path.

use identities::{
    check, check_infinite, eval_side, lookup, run_identity, sample_domain, ParamSample, Side,
    Verdict,
};
use mpcore::{ComplexValue, PrecisionContext};
use rug::Float;

fn ctx50() -> PrecisionContext {
    PrecisionContext::new(50).unwrap()
}

fn real_sample(ctx: &PrecisionContext, name: &str, decimal: &str) -> ParamSample {
    ParamSample::new(0).with(
        name,
        ComplexValue::from_real(ctx.parse_float(decimal).unwrap()),
    )
}

#[test]
fn degenerate_cosecant_sum_holds() {
    let ctx = ctx50();
    let sample = real_sample(&ctx, "m", "1.1").with_int("n", 4);
    let tol = ctx.pow10(-40);
    let result = check("DEG-CC", &sample, &tol, &ctx).unwrap();
    assert_eq!(result.verdict, Verdict::Holds, "{}", result.route_notes);
    assert!(result.rel_residual.unwrap() <= tol);
}

#[test]
fn degenerate_sine_sum_matches_pinned_value() {
    // Both sides at m = 0.7, n = 3, pinned to 60 digits.
    let expected = "-0.31515693560686879971082213096751492911208620337037177721654063";
    let ctx = PrecisionContext::new(55).unwrap();
    let sample = real_sample(&ctx, "m", "0.7").with_int("n", 3);
    let want = ctx.parse_float(expected).unwrap();
    for side in [Side::Lhs, Side::Rhs] {
        let v = eval_side("DEG-SS", side, &sample, &ctx).unwrap();
        let diff = Float::with_val(ctx.prec_bits(), v.re() - &want).abs();
        assert!(diff < ctx.pow10(-52), "side {side:?} diff {diff}");
        assert!(v.im().is_zero() || v.im().clone().abs() < ctx.pow10(-52));
    }
}

#[test]
fn secant_pole_surfaces_as_eval_error() {
    // sec(3 m) blows up at m = pi/6; the guard must catch it.
    let ctx = ctx50();
    let m = specfun::constants::pi(&ctx) / 6u32;
    let sample = ParamSample::new(0)
        .with("m", ComplexValue::from_real(m))
        .with_int("n", 1);
    let tol = ctx.pow10(-40);
    let result = check("DEG-SS", &sample, &tol, &ctx).unwrap();
    assert_eq!(result.verdict, Verdict::EvalError);
    assert!(result.route_notes.contains("pole"), "{}", result.route_notes);
}

#[test]
fn apery_difference_holds_and_matches_pinned_value() {
    let ctx = ctx50();
    let sample = ParamSample::new(0).with_int("n", 3);
    let tol = ctx.pow10(-40);
    let result = check("AP-SS", &sample, &tol, &ctx).unwrap();
    assert_eq!(result.verdict, Verdict::Holds);
    let pinned = ctx
        .parse_float("0.18945706614111368485489841182051861024800300872428")
        .unwrap();
    let rhs = result.rhs_value.unwrap();
    let diff = Float::with_val(ctx.prec_bits(), rhs.re() - &pinned).abs();
    assert!(diff < ctx.pow10(-45), "diff {diff}");
}

#[test]
fn glaisher_difference_matches_pinned_value() {
    let expected = "-0.0852585565541270931632950793068671283462262954384510565505";
    let ctx = PrecisionContext::new(55).unwrap();
    let sample = ParamSample::new(0);
    let want = ctx.parse_float(expected).unwrap();
    for side in [Side::Lhs, Side::Rhs] {
        let v = eval_side("GK-SS", side, &sample, &ctx).unwrap();
        let diff = Float::with_val(ctx.prec_bits(), v.re() - &want).abs();
        assert!(diff < ctx.pow10(-52), "side {side:?} diff {diff}");
    }
}

#[test]
fn theorem_cc_at_k_zero_reduces_to_the_degenerate_sum() {
    let ctx = ctx50();
    let m = ComplexValue::from_f64(&ctx, 0.4, 0.3);
    let thm = ParamSample::new(0)
        .with("m", m.clone())
        .with_int("k", 0)
        .with_int("a", 1)
        .with_int("n", 2);
    let deg = ParamSample::new(0).with("m", m).with_int("n", 2);
    let lhs_thm = eval_side("THM-CC", Side::Lhs, &thm, &ctx).unwrap();
    let lhs_deg = eval_side("DEG-CC", Side::Lhs, &deg, &ctx).unwrap();
    let rotated = &ComplexValue::i(&ctx) * &lhs_deg;
    let diff = (&lhs_thm - &rotated).abs();
    assert!(diff < ctx.pow10(-45), "diff {diff}");
}

#[test]
fn theorem_checks_hold_at_forced_integer_orders() {
    let ctx = ctx50();
    let tol = ctx.pow10(-40);
    for id in ["THM-SS", "THM-CC", "THM-SS1"] {
        // first five samples carry k = 0, 1, 2, -1, -2
        for sample in &sample_domain(id, 5, 4242).unwrap() {
            let result = check(id, sample, &tol, &ctx).unwrap();
            assert_eq!(
                result.verdict,
                Verdict::Holds,
                "{id} k={} [{}] {}",
                sample.integer("k").unwrap(),
                sample.describe(),
                result.route_notes
            );
        }
    }
}

#[test]
fn binomial_restatement_matches_the_product_form() {
    let ctx = ctx50();
    let tol = ctx.pow10(-40);
    for sample in &sample_domain("POLY-BINOM", 20, 31).unwrap() {
        let result = check("POLY-BINOM", sample, &tol, &ctx).unwrap();
        assert_eq!(
            result.verdict,
            Verdict::Holds,
            "[{}] {}",
            sample.describe(),
            result.route_notes
        );
    }
}

#[test]
fn escalation_shrinks_residuals_of_true_identities() {
    let lo = PrecisionContext::new(50).unwrap();
    let hi = PrecisionContext::new(80).unwrap();
    let sample = real_sample(&lo, "m", "0.7").with_int("n", 3);
    let gap = |ctx: &PrecisionContext| {
        let l = eval_side("DEG-SS", Side::Lhs, &sample, ctx).unwrap();
        let r = eval_side("DEG-SS", Side::Rhs, &sample, ctx).unwrap();
        (&l - &r).abs()
    };
    let g_lo = gap(&lo);
    let g_hi = gap(&hi);
    let shrink = Float::with_val(hi.prec_bits(), &g_lo * &hi.pow10(-10));
    assert!(
        g_hi <= shrink,
        "residual must drop by 10 orders: {g_lo} -> {g_hi}"
    );
}

#[test]
fn infinite_products_converge_at_depth_twelve() {
    let ctx = ctx50();
    let cp = ParamSample::new(0)
        .with("m", ComplexValue::from_f64(&ctx, 0.3, 0.0))
        .with("r", ComplexValue::from_f64(&ctx, 0.5, 0.0));
    let result = check_infinite("CP-SS-INF", 12, &cp, &ctx).unwrap();
    assert_eq!(result.verdict, Verdict::Holds, "{}", result.route_notes);

    let gp = ParamSample::new(0).with("a", ComplexValue::from_f64(&ctx, 1.3, 0.0));
    let result = check_infinite("GP-SS-INF", 12, &gp, &ctx).unwrap();
    assert_eq!(result.verdict, Verdict::Holds, "{}", result.route_notes);

    let poly = ParamSample::new(0).with("z", ComplexValue::from_f64(&ctx, 0.4, 0.0));
    let result = check_infinite("POLY-INF", 12, &poly, &ctx).unwrap();
    assert_eq!(result.verdict, Verdict::Holds, "{}", result.route_notes);
    // this product collapses to exactly 1
    let one = ComplexValue::one(&ctx);
    let rhs = result.rhs_value.unwrap();
    assert!((&rhs - &one).abs() < ctx.pow10(-49));
}

#[test]
fn check_infinite_rejects_bad_arguments() {
    let ctx = ctx50();
    let sample = ParamSample::new(0).with("a", ComplexValue::from_f64(&ctx, 1.3, 0.0));
    assert!(check_infinite("GP-SS-INF", 3, &sample, &ctx).is_err());
    assert!(check_infinite("GP-SS", 12, &sample, &ctx).is_err());
    assert!(check_infinite("NOPE", 12, &sample, &ctx).is_err());
}

#[test]
fn check_rejects_unresolvable_tolerances() {
    let ctx = ctx50();
    let sample = real_sample(&ctx, "m", "1.1").with_int("n", 4);
    let too_tight = ctx.pow10(-45);
    assert!(check("DEG-CC", &sample, &too_tight, &ctx).is_err());
    let at_floor = ctx.pow10(-40);
    assert!(check("DEG-CC", &sample, &at_floor, &ctx).is_ok());
}

#[test]
fn unknown_identity_is_an_error() {
    let ctx = ctx50();
    let sample = ParamSample::new(0);
    let tol = ctx.pow10(-40);
    assert!(check("NOPE", &sample, &tol, &ctx).is_err());
    assert!(eval_side("NOPE", Side::Lhs, &sample, &ctx).is_err());
}

#[test]
fn bound_identity_holds_with_negative_margin() {
    let ctx = ctx50();
    let tol = ctx.pow10(-40);
    let sample = ParamSample::new(0).with("a", ComplexValue::from_f64(&ctx, 1.7, 0.0));
    let result = check("QG-CC1-BOUND", &sample, &tol, &ctx).unwrap();
    assert_eq!(result.verdict, Verdict::Holds, "{}", result.route_notes);
    let margin = result.rel_residual.unwrap();
    assert!(margin.is_sign_negative(), "strict bound margin: {margin}");
}

#[test]
fn first_order_catalan_ladder_holds_at_deep_truncations() {
    let ctx = ctx50();
    let tol = ctx.pow10(-40);
    for n in [4, 5] {
        let sample = ParamSample::new(0).with_int("n", n);
        let result = check("CAT-SS1-B", &sample, &tol, &ctx).unwrap();
        assert_eq!(result.verdict, Verdict::Holds, "n={n}: {}", result.route_notes);
    }
}

#[test]
fn discrepant_statement_adjudicates_to_suspected_discrepancy() {
    let ctx = ctx50();
    let tol = ctx.pow10(-40);
    let ident = lookup("CC-COSCOS").unwrap();
    let samples = sample_domain("CC-COSCOS", 12, 5).unwrap();

    // one sample in isolation: honest failure, confirmed at two precisions
    let single = check("CC-COSCOS", &samples[0], &tol, &ctx).unwrap();
    assert_eq!(single.verdict, Verdict::Fails);

    // a full batch: systematic failure plus a working alternate reading
    let outcome = run_identity(ident, &samples, &tol, &ctx);
    assert!(outcome.alternate_applied);
    assert!(outcome.alternate_holds);
    for r in &outcome.results {
        assert_eq!(r.verdict, Verdict::SuspectedDiscrepancy, "{}", r.route_notes);
        assert!(!r.route_notes.is_empty());
    }
}

#[test]
fn run_identity_keeps_isolated_failures_as_fails() {
    // Fewer failing samples than the adjudication threshold must stay
    // `fails` even for an identity with an alternate reading.
    let ctx = ctx50();
    let tol = ctx.pow10(-40);
    let ident = lookup("CC-COSCOS").unwrap();
    let samples = sample_domain("CC-COSCOS", 4, 5).unwrap();
    let outcome = run_identity(ident, &samples, &tol, &ctx);
    assert!(!outcome.alternate_applied);
    for r in &outcome.results {
        assert_eq!(r.verdict, Verdict::Fails);
    }
}

//! The Lerch transcendent Phi(z, s, v) = sum_{n>=0} z^n (v+n)^(-s) and its
//! partial derivative in s.
//!
//! Evaluation is routed by argument shape. The default selector picks the
//! cheapest reliable method; every route is also callable directly through
//! [`lerch_phi_forced`] so independent routes can be cross-checked on
//! overlapping domains.
//!
//! Domain policy: v must avoid the poles 0, -1, -2, ...; |z| may not exceed
//! 1 (beyond rounding slack); z = 1 additionally needs Re(s) > 1. Negative
//! integer s uses the closed rational form and accepts any z != 1. Complex
//! powers are principal throughout, so non-integer real v < 0 follows the
//! same continuation as the underlying Hurwitz zeta.

use std::fmt;

use rug::Float;

use mpcore::{
    sum_series, unit_circle_sum, ComplexValue, Error, PrecisionContext, Result, SeriesMode,
};

use crate::constants;
use crate::gamma::gamma;
use crate::hurwitz::{hurwitz_zeta, hurwitz_zeta_sderiv};

/// Largest |s| handled by the negative-integer closed form.
pub const MAX_NEG_INT_ORDER: u32 = 64;

/// Slack for membership tests on the unit circle.
const UNIT_CIRCLE_SLACK: f64 = 1e-8;
/// Above this |z| the direct series is too slow and quadrature takes over
/// when the integral representation applies.
const SERIES_DIRECT_LIMIT: f64 = 0.98;

/// How a Lerch value was (or should be) computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalRoute {
    /// Plain power series, |z| safely inside the unit disc.
    SeriesDirect,
    /// Accelerated summation on the unit circle.
    SeriesAccelerated,
    /// Rational closed form for s a nonpositive integer.
    NegIntClosedForm,
    /// Reduction to Hurwitz zeta values at z = 1 or z = -1.
    ZetaReduction,
    /// Double-exponential quadrature of the integral representation.
    Quadrature,
}

impl EvalRoute {
    pub const ALL: [EvalRoute; 5] = [
        EvalRoute::SeriesDirect,
        EvalRoute::SeriesAccelerated,
        EvalRoute::NegIntClosedForm,
        EvalRoute::ZetaReduction,
        EvalRoute::Quadrature,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EvalRoute::SeriesDirect => "series-direct",
            EvalRoute::SeriesAccelerated => "series-accelerated",
            EvalRoute::NegIntClosedForm => "neg-int-closed-form",
            EvalRoute::ZetaReduction => "zeta-reduction",
            EvalRoute::Quadrature => "quadrature",
        }
    }
}

impl fmt::Display for EvalRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Validated argument triple for the Lerch transcendent.
#[derive(Debug, Clone)]
pub struct LerchArgs {
    pub z: ComplexValue,
    pub s: ComplexValue,
    pub v: ComplexValue,
}

impl LerchArgs {
    /// Checks the argument invariants shared by every route:
    /// finite inputs, v off the nonpositive integers, and Re(s) > 1
    /// whenever z = 1.
    pub fn new(z: ComplexValue, s: ComplexValue, v: ComplexValue) -> Result<Self> {
        if !z.is_finite() || !s.is_finite() || !v.is_finite() {
            return Err(Error::invalid("lerch arguments must be finite"));
        }
        if let Some(k) = v.as_small_integer(1 << 40) {
            if k <= 0 {
                return Err(Error::domain(format!(
                    "lerch parameter v = {k} hits a pole of the series"
                )));
            }
        }
        if is_one(&z) && s.re().to_f64() <= 1.0 {
            return Err(Error::domain("lerch at z = 1 requires Re(s) > 1"));
        }
        Ok(LerchArgs { z, s, v })
    }
}

fn is_one(z: &ComplexValue) -> bool {
    z.im().is_zero() && *z.re() == 1u32
}

fn is_minus_one(z: &ComplexValue) -> bool {
    z.im().is_zero() && *z.re() == -1i32
}

fn nonpositive_small_int(s: &ComplexValue) -> Option<u32> {
    let k = s.as_small_integer(i64::from(MAX_NEG_INT_ORDER))?;
    if k <= 0 {
        Some((-k) as u32)
    } else {
        None
    }
}

/// Evaluates Phi(z, s, v), reporting which route was used.
pub fn lerch_phi(args: &LerchArgs, ctx: &PrecisionContext) -> Result<(ComplexValue, EvalRoute)> {
    let az = args.z.abs().to_f64();
    if az > 1.0 + UNIT_CIRCLE_SLACK {
        return Err(Error::domain(format!(
            "lerch series needs |z| <= 1, got |z| = {az}"
        )));
    }

    if args.z.is_zero() {
        let ms = -args.s.clone();
        return Ok((args.v.pow(&ms)?, EvalRoute::SeriesDirect));
    }

    if let Some(k) = nonpositive_small_int(&args.s) {
        if !is_one(&args.z) {
            let value = lerch_phi_neg_int(&args.z, k, &args.v, ctx)?;
            return Ok((value, EvalRoute::NegIntClosedForm));
        }
    }

    if is_one(&args.z) {
        // LerchArgs::new guarantees Re(s) > 1 here.
        let value = hurwitz_zeta(&args.s, &args.v, ctx)?;
        return Ok((value, EvalRoute::ZetaReduction));
    }

    if is_minus_one(&args.z) {
        if args.s.as_small_integer(4) == Some(1) {
            let value = alternating_s1(&args.v, ctx)?;
            return Ok((value, EvalRoute::SeriesAccelerated));
        }
        let value = zeta_reduction_minus_one(&args.s, &args.v, ctx)?;
        return Ok((value, EvalRoute::ZetaReduction));
    }

    if az <= SERIES_DIRECT_LIMIT {
        let value = series_direct(&args.z, &args.s, &args.v, ctx)?;
        return Ok((value, EvalRoute::SeriesDirect));
    }

    if (az - 1.0).abs() <= UNIT_CIRCLE_SLACK {
        if args.s.re().to_f64() <= 0.0 {
            return Err(Error::domain(
                "lerch on the unit circle needs Re(s) > 0 (or integer s <= 0)",
            ));
        }
        let value = unit_circle(&args.z, &args.s, &args.v, ctx)?;
        return Ok((value, EvalRoute::SeriesAccelerated));
    }

    // 0.98 < |z| < 1: prefer the integral when it applies.
    if args.s.re().to_f64() > 0.0 && args.v.re().to_f64() > 0.0 {
        let value = quadrature(&args.z, &args.s, &args.v, ctx)?;
        return Ok((value, EvalRoute::Quadrature));
    }
    let value = series_direct(&args.z, &args.s, &args.v, ctx)?;
    Ok((value, EvalRoute::SeriesDirect))
}

/// Evaluates Phi through one specific route, erroring if the arguments are
/// outside that route's reach. Exists so distinct routes can be compared on
/// their overlap.
pub fn lerch_phi_forced(
    route: EvalRoute,
    args: &LerchArgs,
    ctx: &PrecisionContext,
) -> Result<ComplexValue> {
    match route {
        EvalRoute::SeriesDirect => {
            let az = args.z.abs().to_f64();
            if az > 1.0 - 1e-10 {
                return Err(Error::domain("direct series needs |z| < 1"));
            }
            series_direct(&args.z, &args.s, &args.v, ctx)
        }
        EvalRoute::SeriesAccelerated => {
            let az = args.z.abs().to_f64();
            if (az - 1.0).abs() > UNIT_CIRCLE_SLACK || is_one(&args.z) {
                return Err(Error::domain("accelerated series needs |z| = 1, z != 1"));
            }
            if is_minus_one(&args.z) && args.s.as_small_integer(4) == Some(1) {
                return alternating_s1(&args.v, ctx);
            }
            if args.s.re().to_f64() <= 0.0 {
                return Err(Error::domain("accelerated series needs Re(s) > 0"));
            }
            unit_circle(&args.z, &args.s, &args.v, ctx)
        }
        EvalRoute::NegIntClosedForm => {
            let k = nonpositive_small_int(&args.s)
                .ok_or_else(|| Error::invalid("closed form needs integer s in [-64, 0]"))?;
            lerch_phi_neg_int(&args.z, k, &args.v, ctx)
        }
        EvalRoute::ZetaReduction => {
            if is_one(&args.z) {
                return hurwitz_zeta(&args.s, &args.v, ctx);
            }
            if is_minus_one(&args.z) {
                if args.s.as_small_integer(4) == Some(1) {
                    return Err(Error::domain("zeta reduction at z = -1 is singular at s = 1"));
                }
                return zeta_reduction_minus_one(&args.s, &args.v, ctx);
            }
            Err(Error::invalid("zeta reduction applies only at z = 1 or z = -1"))
        }
        EvalRoute::Quadrature => {
            if args.s.re().to_f64() <= 0.0 || args.v.re().to_f64() <= 0.0 {
                return Err(Error::domain("quadrature needs Re(s) > 0 and Re(v) > 0"));
            }
            if args.z.im().to_f64().abs() <= 1e-12 && args.z.re().to_f64() >= 1.0 - 1e-12 {
                return Err(Error::domain("quadrature excludes the branch cut z in [1, inf)"));
            }
            quadrature(&args.z, &args.s, &args.v, ctx)
        }
    }
}

/// Closed form for nonpositive integer order: Phi(z, -k, v) is a degree-k
/// polynomial over (1-z)^(k+1). The polynomial is grown by applying the
/// operator (v + z d/dz) k times, which is exact in the coefficients.
pub fn lerch_phi_neg_int(
    z: &ComplexValue,
    k: u32,
    v: &ComplexValue,
    ctx: &PrecisionContext,
) -> Result<ComplexValue> {
    if k > MAX_NEG_INT_ORDER {
        return Err(Error::invalid(format!(
            "closed form supports s >= -{MAX_NEG_INT_ORDER}, got s = -{k}"
        )));
    }
    if is_one(z) {
        return Err(Error::domain("Phi(1, -k, v) is a pole of the closed form"));
    }

    // P_{j+1}(z) = z(1-z) P_j'(z) + (j+1) z P_j(z) + v (1-z) P_j(z), P_0 = 1,
    // which in coefficients reads
    //   new_i = a_i (v + i) + a_{i-1} (j + 2 - i - v).
    let mut coeffs = vec![ComplexValue::one(ctx)];
    for j in 0..k {
        let mut next = Vec::with_capacity(coeffs.len() + 1);
        for i in 0..=coeffs.len() {
            let mut acc = ComplexValue::zero(ctx);
            if i < coeffs.len() {
                let weight = v + &ComplexValue::from_int(ctx, i as i64);
                acc = &acc + &(&coeffs[i] * &weight);
            }
            if i >= 1 {
                let weight = &ComplexValue::from_int(ctx, (j as i64) + 2 - (i as i64)) - v;
                acc = &acc + &(&coeffs[i - 1] * &weight);
            }
            next.push(acc);
        }
        coeffs = next;
    }

    let mut poly = coeffs.last().expect("coefficient list is nonempty").clone();
    for i in (0..coeffs.len() - 1).rev() {
        poly = &(&poly * z) + &coeffs[i];
    }
    let one_minus_z = &ComplexValue::one(ctx) - z;
    poly.div(&one_minus_z.powi(i64::from(k) + 1)?)
}

/// d/ds Phi(z, s, v).
pub fn lerch_phi_sderiv(args: &LerchArgs, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let az = args.z.abs().to_f64();
    if az > 1.0 + UNIT_CIRCLE_SLACK {
        return Err(Error::domain(format!(
            "lerch series needs |z| <= 1, got |z| = {az}"
        )));
    }

    if args.z.is_zero() {
        // d/ds v^(-s) = -Log(v) v^(-s).
        let ms = -args.s.clone();
        let log_v = args.v.ln()?;
        return Ok(-(&args.v.pow(&ms)? * &log_v));
    }

    if is_one(&args.z) {
        return hurwitz_zeta_sderiv(&args.s, &args.v, ctx);
    }

    if is_minus_one(&args.z) {
        if args.s.as_small_integer(4) == Some(1) {
            // The reduction below is singular at s = 1; differentiate the
            // analytic continuation numerically instead.
            let f = |s: &ComplexValue| Ok(lerch_phi_at_s(args, s, ctx)?);
            return mpcore::fd_derivative(f, &args.s, ctx);
        }
        // Phi(-1, s, v) = 2^(-s) (zeta(s, v/2) - zeta(s, (v+1)/2)), so the
        // s-derivative picks up a -ln 2 factor plus the zeta' difference.
        let half = ctx.float(0.5);
        let va = args.v.mul_f(&half);
        let vb = (&args.v + &ComplexValue::one(ctx)).mul_f(&half);
        let za = hurwitz_zeta(&args.s, &va, ctx)?;
        let zb = hurwitz_zeta(&args.s, &vb, ctx)?;
        let da = hurwitz_zeta_sderiv(&args.s, &va, ctx)?;
        let db = hurwitz_zeta_sderiv(&args.s, &vb, ctx)?;
        let ln2 = constants::ln2(ctx);
        let scale = (-args.s.clone()).mul_f(&ln2).exp();
        let inner = &(&da - &db) - &(&za - &zb).mul_f(&ln2);
        return Ok(&scale * &inner);
    }

    if az <= SERIES_DIRECT_LIMIT {
        // Term-wise: d/ds (v+n)^(-s) = -Log(v+n) (v+n)^(-s).
        let ms = -args.s.clone();
        let mut zpow = ComplexValue::one(ctx);
        let res = sum_series(
            |n| {
                let vn = &args.v + &ComplexValue::from_int(ctx, n as i64);
                let log_vn = vn.ln().expect("v+n is never zero");
                let term = -(&(&vn.pow(&ms).expect("v+n is never zero") * &log_vn) * &zpow);
                zpow = &zpow * &args.z;
                term
            },
            SeriesMode::Direct,
            ctx,
        );
        if !res.converged {
            return Err(Error::non_converged("lerch s-derivative series did not converge"));
        }
        return Ok(res.value);
    }

    let f = |s: &ComplexValue| Ok(lerch_phi_at_s(args, s, ctx)?);
    mpcore::fd_derivative(f, &args.s, ctx)
}

fn lerch_phi_at_s(
    args: &LerchArgs,
    s: &ComplexValue,
    ctx: &PrecisionContext,
) -> Result<ComplexValue> {
    let shifted = LerchArgs::new(args.z.clone(), s.clone(), args.v.clone())?;
    Ok(lerch_phi(&shifted, ctx)?.0)
}

fn series_direct(
    z: &ComplexValue,
    s: &ComplexValue,
    v: &ComplexValue,
    ctx: &PrecisionContext,
) -> Result<ComplexValue> {
    let ms = -s.clone();
    let mut zpow = ComplexValue::one(ctx);
    let res = sum_series(
        |n| {
            let vn = v + &ComplexValue::from_int(ctx, n as i64);
            let term = &vn.pow(&ms).expect("v+n is never zero") * &zpow;
            zpow = &zpow * z;
            term
        },
        SeriesMode::Direct,
        ctx,
    );
    if !res.converged {
        return Err(Error::non_converged("lerch power series did not converge"));
    }
    Ok(res.value)
}

fn unit_circle(
    z: &ComplexValue,
    s: &ComplexValue,
    v: &ComplexValue,
    ctx: &PrecisionContext,
) -> Result<ComplexValue> {
    let res = unit_circle_sum(
        |n, c| {
            let ms = -s.with_prec(c.prec_bits());
            let vn = &v.with_prec(c.prec_bits()) + &ComplexValue::from_int(c, n as i64);
            vn.pow(&ms).expect("v+n is never zero")
        },
        z,
        ctx,
    )?;
    if !res.converged {
        return Err(Error::non_converged("unit-circle acceleration did not converge"));
    }
    Ok(res.value)
}

/// Phi(-1, 1, v) by accelerated alternating summation of 1/(v+n).
fn alternating_s1(v: &ComplexValue, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let res = sum_series(
        |n| {
            let vn = v + &ComplexValue::from_int(ctx, n as i64);
            let mag = vn.recip().expect("v+n is never zero");
            if n % 2 == 0 {
                mag
            } else {
                -mag
            }
        },
        SeriesMode::AlternatingAccelerated,
        ctx,
    );
    if !res.converged {
        return Err(Error::non_converged("alternating series for Phi(-1, 1, v) did not converge"));
    }
    Ok(res.value)
}

/// Phi(-1, s, v) = 2^(-s) (zeta(s, v/2) - zeta(s, (v+1)/2)), valid by
/// continuation everywhere except s = 1 where the zeta poles cancel only
/// in the limit.
fn zeta_reduction_minus_one(
    s: &ComplexValue,
    v: &ComplexValue,
    ctx: &PrecisionContext,
) -> Result<ComplexValue> {
    let half = ctx.float(0.5);
    let va = v.mul_f(&half);
    let vb = (v + &ComplexValue::one(ctx)).mul_f(&half);
    let za = hurwitz_zeta(s, &va, ctx)?;
    let zb = hurwitz_zeta(s, &vb, ctx)?;
    let scale = (-s.clone()).mul_f(&constants::ln2(ctx)).exp();
    Ok(&scale * &(&za - &zb))
}

/// Integral representation
///   Phi(z, s, v) = (1/Gamma(s)) int_0^inf t^(s-1) e^(-v t) / (1 - z e^(-t)) dt,
/// Re(s) > 0, Re(v) > 0, z off [1, inf), evaluated with the exp-sinh
/// substitution t = exp((pi/2) sinh u) and the trapezoid rule, halving the
/// step until two consecutive refinements agree.
fn quadrature(
    z: &ComplexValue,
    s: &ComplexValue,
    v: &ComplexValue,
    ctx: &PrecisionContext,
) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let c = constants::pi(ctx) / 2u32;
    let eps = ctx.eps();
    let tol = Float::with_val(prec, &eps * &ctx.float(32.0));
    let u_max = 9.5f64;

    let integrand = |u: &Float| -> Result<Option<ComplexValue>> {
        let ln_t = Float::with_val(prec, u.sinh_ref()) * &c;
        let t = Float::with_val(prec, ln_t.exp_ref());
        if !t.is_finite() || t.is_zero() {
            return Ok(None);
        }
        // Work with t^s e^(-v t): the extra factor of t is the Jacobian's
        // dt = t (pi/2) cosh u du, folded in to keep exponents tame.
        let exponent = &s.mul_f(&ln_t) - &v.mul_f(&t);
        if exponent.re().to_f64() < -1e7 {
            return Ok(None);
        }
        let weight = Float::with_val(prec, u.cosh_ref()) * &c;
        let e_neg_t = Float::with_val(prec, (-t).exp_ref());
        let denom = &ComplexValue::one(ctx) - &z.mul_f(&e_neg_t);
        if denom.abs().to_f64() < 1e-10 {
            return Err(Error::domain(
                "quadrature node fell on the integrand pole 1 = z e^(-t)",
            ));
        }
        let value = exponent.exp().mul_f(&weight).div(&denom)?;
        Ok(Some(value))
    };

    // Sums F(k h) over k = start, start+step, ... walking away from the
    // origin, stopping once terms stay negligible past |u| > 3.
    let walk = |h: &Float, start: i64, step: i64, acc: &mut ComplexValue| -> Result<()> {
        let mut negligible = 0;
        let mut k = start;
        loop {
            let u = Float::with_val(prec, k) * h;
            let uf = u.to_f64().abs();
            if uf > u_max {
                break;
            }
            match integrand(&u)? {
                Some(term) => {
                    let small = term.abs() <= Float::with_val(prec, &eps * &acc.abs()).max(&eps);
                    *acc = &*acc + &term;
                    negligible = if small { negligible + 1 } else { 0 };
                }
                None => negligible += 1,
            }
            if negligible >= 3 && uf > 3.0 {
                break;
            }
            k += step;
        }
        Ok(())
    };

    let mut h = ctx.float(0.5);
    let mut acc = ComplexValue::zero(ctx);
    walk(&h, 0, 1, &mut acc)?;
    walk(&h, -1, -1, &mut acc)?;
    let mut estimate = acc.mul_f(&h);

    let mut prev_delta: Option<Float> = None;
    for _level in 0..12 {
        h = Float::with_val(prec, &h / 2u32);
        let mut mid = ComplexValue::zero(ctx);
        walk(&h, 1, 2, &mut mid)?;
        walk(&h, -1, -2, &mut mid)?;
        let refined = &estimate.mul_f(&ctx.float(0.5)) + &mid.mul_f(&h);
        let delta = (&refined - &estimate).abs();
        let gauge = Float::with_val(prec, &tol * &refined.abs()).max(&tol);
        let done = delta <= gauge
            && prev_delta
                .as_ref()
                .map(|d| *d <= Float::with_val(prec, 64u32 * &gauge))
                .unwrap_or(false);
        estimate = refined;
        if done {
            let g = gamma(s, ctx)?;
            return estimate.div(&g);
        }
        prev_delta = Some(delta);
    }
    Err(Error::non_converged("exp-sinh quadrature did not stabilize"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygamma::polygamma;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    fn cv(c: &PrecisionContext, re: f64, im: f64) -> ComplexValue {
        ComplexValue::from_f64(c, re, im)
    }

    // Exact-decimal arguments, for comparison against values frozen from
    // decimal inputs (f64 literals would differ in the last ~17th digit).
    fn cvd(c: &PrecisionContext, re: &str, im: &str) -> ComplexValue {
        ComplexValue::new(c.parse_float(re).unwrap(), c.parse_float(im).unwrap())
    }

    fn args(z: ComplexValue, s: ComplexValue, v: ComplexValue) -> LerchArgs {
        LerchArgs::new(z, s, v).unwrap()
    }

    fn assert_close(got: &ComplexValue, want: &ComplexValue, c: &PrecisionContext, scale: f64) {
        let diff = (got - want).abs();
        let bound = Float::with_val(c.prec_bits(), &c.tol() * &c.float(scale));
        let rel = diff / want.abs().max(&c.one());
        assert!(rel < bound, "mismatch: got {got}, want {want}");
    }

    #[test]
    fn neg_int_order_zero_is_geometric() {
        let c = ctx();
        let z = ComplexValue::from_int(&c, 1)
            .div(&ComplexValue::from_int(&c, 3))
            .unwrap();
        let got = lerch_phi_neg_int(&z, 0, &cv(&c, 7.0, 0.0), &c).unwrap();
        let want = cv(&c, 1.5, 0.0);
        assert_close(&got, &want, &c, 1e-5);
    }

    #[test]
    fn neg_int_order_one_matches_geometric_derivative() {
        let c = ctx();
        let z = cv(&c, 0.5, 0.0);
        let got = lerch_phi_neg_int(&z, 1, &ComplexValue::one(&c), &c).unwrap();
        assert_close(&got, &cv(&c, 4.0, 0.0), &c, 1e-5);
    }

    #[test]
    fn neg_int_route_agrees_with_direct_series() {
        let c = ctx();
        for k in 0u32..=6 {
            let z = cv(&c, -0.37, 0.22);
            let v = cv(&c, 0.8, -0.3);
            let closed = lerch_phi_neg_int(&z, k, &v, &c).unwrap();
            let a = args(z, ComplexValue::from_int(&c, -i64::from(k)), v);
            let series = lerch_phi_forced(EvalRoute::SeriesDirect, &a, &c).unwrap();
            assert_close(&closed, &series, &c, 1e-4);
        }
    }

    #[test]
    fn route_selection_matches_expectations() {
        let c = ctx();
        let cases = [
            (cv(&c, 0.0, 0.0), cv(&c, 2.5, 0.0), EvalRoute::SeriesDirect),
            (cv(&c, -0.85, 0.0), cv(&c, -3.0, 0.0), EvalRoute::NegIntClosedForm),
            (cv(&c, 1.0, 0.0), cv(&c, 2.0, 0.0), EvalRoute::ZetaReduction),
            (cv(&c, -1.0, 0.0), cv(&c, 2.0, 0.0), EvalRoute::ZetaReduction),
            (cv(&c, -1.0, 0.0), cv(&c, 1.0, 0.0), EvalRoute::SeriesAccelerated),
            (cv(&c, 0.6, 0.0), cv(&c, 1.0, 0.0), EvalRoute::SeriesDirect),
        ];
        for (z, s, want) in cases {
            let a = args(z, s, cv(&c, 1.25, 0.0));
            let (_, route) = lerch_phi(&a, &c).unwrap();
            assert_eq!(route, want);
        }
    }

    #[test]
    fn half_geometric_log_value() {
        let c = ctx();
        let a = args(cv(&c, 0.5, 0.0), ComplexValue::one(&c), ComplexValue::one(&c));
        let (got, route) = lerch_phi(&a, &c).unwrap();
        assert_eq!(route, EvalRoute::SeriesDirect);
        let want = ComplexValue::from_real(
            c.parse_float("1.38629436111989061883446424291635313615100026872051050824136")
                .unwrap(),
        );
        assert_close(&got, &want, &c, 1e-5);
    }

    #[test]
    fn eta_value_at_minus_one() {
        let c = ctx();
        let a = args(cv(&c, -1.0, 0.0), cv(&c, 2.0, 0.0), ComplexValue::one(&c));
        let (got, route) = lerch_phi(&a, &c).unwrap();
        assert_eq!(route, EvalRoute::ZetaReduction);
        let want = ComplexValue::from_real(
            c.parse_float("0.82246703342411321823620758332301259460947495060339921886777911")
                .unwrap(),
        );
        assert_close(&got, &want, &c, 1e-5);
    }

    #[test]
    fn fully_complex_spot_value() {
        let c = ctx();
        let a = args(cvd(&c, "0.3", "0.4"), cv(&c, 2.5, -1.0), cv(&c, 1.25, 0.5));
        let (got, route) = lerch_phi(&a, &c).unwrap();
        assert_eq!(route, EvalRoute::SeriesDirect);
        let want = ComplexValue::new(
            c.parse_float("0.26419869864565289680587308610655595446246280817220253096")
                .unwrap(),
            c.parse_float("-0.14876673189545421690912306888594620796174029250058244391")
                .unwrap(),
        );
        assert_close(&got, &want, &c, 1e-5);
    }

    #[test]
    fn negative_cubic_spot_value() {
        let c = ctx();
        let a = args(cvd(&c, "-0.85", "0"), cv(&c, -3.0, 0.0), cvd(&c, "2.2", "0"));
        let (got, route) = lerch_phi(&a, &c).unwrap();
        assert_eq!(route, EvalRoute::NegIntClosedForm);
        let want = ComplexValue::from_real(
            c.parse_float("2.1383646762471313830562048831450446359731101009998607377")
                .unwrap(),
        );
        assert_close(&got, &want, &c, 1e-5);
    }

    #[test]
    fn unit_circle_spot_value() {
        let c = ctx();
        let theta = cvd(&c, "0", "0.7").exp();
        let a = args(theta, cv(&c, 2.0, 0.0), cv(&c, 0.75, 0.0));
        let (got, route) = lerch_phi(&a, &c).unwrap();
        assert_eq!(route, EvalRoute::SeriesAccelerated);
        let want = ComplexValue::new(
            c.parse_float("1.9553601164810488561291194620591277160602289345694469264")
                .unwrap(),
            c.parse_float("0.37566979365557362139335847541848068527459652633127362523")
                .unwrap(),
        );
        assert_close(&got, &want, &c, 1e-4);
    }

    #[test]
    fn alternating_harmonic_matches_digamma_form() {
        let c = ctx();
        let v = cv(&c, 1.0 / 3.0, 0.0);
        let a = args(cv(&c, -1.0, 0.0), ComplexValue::one(&c), v.clone());
        let (got, route) = lerch_phi(&a, &c).unwrap();
        assert_eq!(route, EvalRoute::SeriesAccelerated);
        // Phi(-1, 1, v) = (psi((v+1)/2) - psi(v/2)) / 2.
        let half = c.float(0.5);
        let hi = polygamma(0, &(&v + &ComplexValue::one(&c)).mul_f(&half), &c).unwrap();
        let lo = polygamma(0, &v.mul_f(&half), &c).unwrap();
        let want = (&hi - &lo).mul_f(&half);
        assert_close(&got, &want, &c, 1e-5);
    }

    #[test]
    fn quadrature_agrees_with_series_inside_disc() {
        let c = ctx();
        let a = args(cv(&c, 0.6, 0.3), cv(&c, 2.2, 0.8), cv(&c, 0.9, -0.2));
        let direct = lerch_phi_forced(EvalRoute::SeriesDirect, &a, &c).unwrap();
        let quad = lerch_phi_forced(EvalRoute::Quadrature, &a, &c).unwrap();
        assert_close(&quad, &direct, &c, 1e-3);
    }

    #[test]
    fn high_modulus_routes_to_quadrature() {
        let c = ctx();
        let a = args(cv(&c, 0.991, 0.0), cv(&c, 2.0, 0.0), cv(&c, 1.0, 0.0));
        let (got, route) = lerch_phi(&a, &c).unwrap();
        assert_eq!(route, EvalRoute::Quadrature);
        let series = lerch_phi_forced(EvalRoute::SeriesDirect, &a, &c).unwrap();
        assert_close(&got, &series, &c, 1e-2);
    }

    #[test]
    fn recurrence_spot_check() {
        let c = ctx();
        let z = cv(&c, 0.45, -0.35);
        let s = cv(&c, 1.7, 0.6);
        let v = cv(&c, 0.85, 0.4);
        let a = args(z.clone(), s.clone(), v.clone());
        let shifted = args(z.clone(), s.clone(), &v + &ComplexValue::one(&c));
        let lhs = lerch_phi(&a, &c).unwrap().0;
        let rhs = &(&z * &lerch_phi(&shifted, &c).unwrap().0) + &v.pow(&-s).unwrap();
        assert_close(&lhs, &rhs, &c, 1e-4);
    }

    #[test]
    fn sderiv_series_spot_value() {
        let c = ctx();
        let a = args(cv(&c, 0.5, 0.0), cv(&c, 2.0, 0.0), ComplexValue::one(&c));
        let got = lerch_phi_sderiv(&a, &c).unwrap();
        let want = ComplexValue::from_real(
            c.parse_float("-0.1346295193927842497522801429737649428800304032212234885")
                .unwrap(),
        );
        assert_close(&got, &want, &c, 1e-4);
    }

    #[test]
    fn sderiv_negative_order_positive_v() {
        let c = ctx();
        let a = args(cv(&c, -1.0, 0.0), cv(&c, -1.0, 0.0), cv(&c, 0.5, 0.0));
        let got = lerch_phi_sderiv(&a, &c).unwrap();
        let want = ComplexValue::from_real(
            c.parse_float("0.291560904030818780138384456468").unwrap(),
        );
        let diff = (&got - &want).abs();
        assert!(diff < c.pow10(-28), "got {got}");
    }

    #[test]
    fn sderiv_negative_order_negative_v_continuation() {
        let c = ctx();
        let a = args(cv(&c, -1.0, 0.0), cv(&c, -1.0, 0.0), cv(&c, -0.5, 0.0));
        let got = lerch_phi_sderiv(&a, &c).unwrap();
        let half_pi = constants::pi(&c) / 2u32;
        let want = ComplexValue::new(
            c.parse_float("-0.638134494310791434847000517197").unwrap(),
            Float::with_val(c.prec_bits(), half_pi),
        );
        let diff = (&got - &want).abs();
        assert!(diff < c.pow10(-28), "got {got}");
    }

    #[test]
    fn domain_errors_are_reported() {
        let c = ctx();
        assert!(LerchArgs::new(cv(&c, 0.5, 0.0), cv(&c, 2.0, 0.0), cv(&c, 0.0, 0.0)).is_err());
        assert!(LerchArgs::new(cv(&c, 0.5, 0.0), cv(&c, 2.0, 0.0), cv(&c, -3.0, 0.0)).is_err());
        assert!(LerchArgs::new(cv(&c, 1.0, 0.0), cv(&c, 1.0, 0.0), cv(&c, 0.5, 0.0)).is_err());
        let a = args(cv(&c, 1.5, 0.0), cv(&c, 2.0, 0.0), cv(&c, 0.5, 0.0));
        assert!(lerch_phi(&a, &c).is_err());
        assert!(lerch_phi_neg_int(&cv(&c, 0.5, 0.0), 65, &cv(&c, 1.0, 0.0), &c).is_err());
    }
}

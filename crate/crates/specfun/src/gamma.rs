use rug::Float;

use mpcore::{ComplexValue, Error, PrecisionContext, Result};

use crate::bernoulli::bernoulli;
use crate::constants;

/// How far right the argument must sit before the Stirling tail is applied.
///
/// The asymptotic error floor behaves like exp(-2*pi*Re(w)), so reaching
/// 10^-W demands Re(w) >= W*ln(10)/(2*pi); the 1.25 factor buys margin.
/// The |Im| clamp keeps arg(w) <= pi/4, where the tail's sector growth
/// stays below the guard digits.
fn stirling_target(z: &ComplexValue, ctx: &PrecisionContext) -> f64 {
    let w = ctx.working_digits() as f64;
    let base = 1.25 * w * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI);
    let im = z.im().to_f64().abs();
    base.max(im).max(8.0)
}

fn stirling_series(w: &ComplexValue, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let eps = ctx.eps();

    let ln_w = w.ln()?;
    let w_minus_half = w - &ComplexValue::from_real(ctx.float(0.5));
    let ln_two_pi = {
        let two_pi = Float::with_val(prec, 2u32 * constants::pi(ctx));
        two_pi.ln()
    };
    let mut acc = &(&w_minus_half * &ln_w) - w;
    acc = &acc + &ComplexValue::from_real(Float::with_val(prec, &ln_two_pi / 2u32));

    let w_inv = w.recip()?;
    let w_inv2 = &w_inv * &w_inv;
    let mut upow = w_inv;
    let cap = (3.5 * w.abs().to_f64() + 10.0) as usize;
    let mut converged = false;
    for k in 1..=cap {
        let coeff = bernoulli(2 * k) / rug::Rational::from((2 * k * (2 * k - 1)) as u64);
        let c = Float::with_val(prec, coeff);
        let term = upow.mul_f(&c);
        acc = &acc + &term;
        let scale = Float::with_val(prec, acc.abs().max(&ctx.one()));
        if term.abs() <= Float::with_val(prec, &eps * &scale) {
            converged = true;
            break;
        }
        upow = &upow * &w_inv2;
    }
    if !converged {
        return Err(Error::non_converged(
            "Stirling tail failed to reach target accuracy",
        ));
    }
    Ok(acc)
}

/// Principal log-gamma on the plane cut along the negative real axis.
///
/// Small arguments are walked rightward with log Gamma(z) =
/// log Gamma(z+N) - sum_j Log(z+j) (the principal-log form of the
/// recurrence is valid on the whole cut plane), then the Stirling
/// asymptotic finishes the job. Points on the cut itself take the
/// upper-boundary value, consistent with Im(log) in (-pi, pi].
pub fn log_gamma(z: &ComplexValue, ctx: &PrecisionContext) -> Result<ComplexValue> {
    if !z.is_finite() {
        return Err(Error::invalid("log_gamma of a non-finite argument"));
    }
    if let Some(n) = z.as_small_integer(1 << 40) {
        if n <= 0 {
            return Err(Error::domain(format!("log_gamma pole at z = {n}")));
        }
    }
    let target = stirling_target(z, ctx);
    let re = z.re().to_f64();
    let shift = if re >= target {
        0usize
    } else {
        (target - re).ceil() as usize + 1
    };

    let mut log_acc = ComplexValue::zero(ctx);
    let mut base = z.clone();
    for _ in 0..shift {
        log_acc = &log_acc + &base.ln()?;
        base = &base + &ComplexValue::one(ctx);
    }
    let st = stirling_series(&base, ctx)?;
    Ok(&st - &log_acc)
}

/// Gamma function on the cut plane, poles excluded.
///
/// Arguments left of Re(z) = 1/2 go through the reflection formula
/// Gamma(z) Gamma(1-z) = pi / sin(pi z), which also covers negative
/// non-integer reals exactly where the log-gamma branch cut sits.
pub fn gamma(z: &ComplexValue, ctx: &PrecisionContext) -> Result<ComplexValue> {
    if !z.is_finite() {
        return Err(Error::invalid("gamma of a non-finite argument"));
    }
    if let Some(n) = z.as_small_integer(1 << 40) {
        if n <= 0 {
            return Err(Error::domain(format!("gamma pole at z = {n}")));
        }
    }
    if z.re().to_f64() >= 0.5 {
        return Ok(log_gamma(z, ctx)?.exp());
    }
    let one = ComplexValue::one(ctx);
    let reflected = &one - z;
    let lg = log_gamma(&reflected, ctx)?;
    let pi = ComplexValue::from_real(constants::pi(ctx));
    let pi_z = z.mul_f(pi.re());
    let denom = &pi_z.sin() * &lg.exp();
    pi.div(&denom)
}

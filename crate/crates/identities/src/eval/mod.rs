//! Evaluators for both sides of every registry identity.
//!
//! Conventions shared by all submodules: every function takes a parameter
//! sample and a precision context and produces a complex value at the
//! context's working precision; powers of negative or complex bases are
//! principal-branch throughout; p-indexed sums run through compensated
//! accumulation, products through plain multiplication.

pub mod constant_sums;
pub mod degenerate;
pub mod functional;
pub mod gamma_products;
pub mod phi_products;
pub mod poly;
pub mod theorems;
pub mod trig_products;

use mpcore::{ComplexValue, Error, PrecisionContext, Result};
use rug::ops::Pow;
use rug::{Float, Integer};
use specfun::{lerch_phi, lerch_phi_sderiv, LerchArgs};

use crate::types::ParamSample;

/// base^e at working precision; exact whenever the result fits the mantissa.
pub(crate) fn ipow(ctx: &PrecisionContext, base: u32, e: i64) -> Float {
    let mag = Integer::from(base).pow(e.unsigned_abs() as u32);
    let f = Float::with_val(ctx.prec_bits(), &mag);
    if e < 0 {
        f.recip()
    } else {
        f
    }
}

/// 3^e.
pub(crate) fn p3(ctx: &PrecisionContext, e: i64) -> Float {
    ipow(ctx, 3, e)
}

/// base^e for a positive real base and real exponent.
pub(crate) fn fpow(ctx: &PrecisionContext, base: &Float, e: &Float) -> Float {
    Float::with_val(ctx.prec_bits(), base.pow(e))
}

pub(crate) fn int(ctx: &PrecisionContext, n: i64) -> ComplexValue {
    ComplexValue::from_int(ctx, n)
}

pub(crate) fn fratio(ctx: &PrecisionContext, num: i64, den: i64) -> Float {
    Float::with_val(ctx.prec_bits(), num) / Float::with_val(ctx.prec_bits(), den)
}

pub(crate) fn rf(x: Float) -> ComplexValue {
    ComplexValue::from_real(x)
}

/// i*z.
pub(crate) fn times_i(z: &ComplexValue) -> ComplexValue {
    ComplexValue::new(-z.im().clone(), z.re().clone())
}

/// exp(i*t*m) for a real scale t and complex m.
pub(crate) fn cis(m: &ComplexValue, t: &Float) -> ComplexValue {
    times_i(&m.mul_f(t)).exp()
}

/// exp(i*theta) for real theta.
pub(crate) fn cis_f(ctx: &PrecisionContext, theta: &Float) -> ComplexValue {
    let (s, c) = theta.clone().sin_cos(Float::new(ctx.prec_bits()));
    ComplexValue::new(c, s)
}

/// Log(i*c) for real c > 0, i.e. ln c + i*pi/2.
pub(crate) fn log_i_times(ctx: &PrecisionContext, c: &Float) -> ComplexValue {
    let half_pi = specfun::constants::pi(ctx) / 2u32;
    ComplexValue::new(c.clone().ln(), half_pi)
}

/// Rejects denominators that collapsed to the rounding floor; that is how a
/// pole of sec/csc/cot manifests after the abscissa has been rounded to
/// binary, so the honest answer is a domain error rather than a huge value.
pub(crate) fn guard_pole(ctx: &PrecisionContext, x: &Float, label: &str) -> Result<()> {
    let floor = ctx.pow10(-((ctx.working_digits() / 2) as i64));
    if x.clone().abs() < floor {
        return Err(Error::domain(format!(
            "{label} is within rounding distance of a pole"
        )));
    }
    Ok(())
}

pub(crate) fn guard_pole_cx(ctx: &PrecisionContext, z: &ComplexValue, label: &str) -> Result<()> {
    guard_pole(ctx, &z.abs(), label)
}

/// Phi(z, s, v).
pub(crate) fn phi(
    ctx: &PrecisionContext,
    z: ComplexValue,
    s: ComplexValue,
    v: ComplexValue,
) -> Result<ComplexValue> {
    let args = LerchArgs::new(z, s, v)?;
    Ok(lerch_phi(&args, ctx)?.0)
}

/// d/ds Phi(z, s, v) for small integer z and s.
pub(crate) fn phips(ctx: &PrecisionContext, z: i64, s: i64, v: ComplexValue) -> Result<ComplexValue> {
    let args = LerchArgs::new(int(ctx, z), int(ctx, s), v)?;
    lerch_phi_sderiv(&args, ctx)
}

pub(crate) fn gam_f(ctx: &PrecisionContext, x: Float) -> Result<ComplexValue> {
    specfun::gamma(&ComplexValue::from_real(x), ctx)
}

/// psi^(1) at a real abscissa.
pub(crate) fn trigamma(ctx: &PrecisionContext, x: Float) -> Result<ComplexValue> {
    specfun::polygamma(1, &ComplexValue::from_real(x), ctx)
}

/// Product of factor(p) over p in [0, n).
pub(crate) fn product_over(
    sample: &ParamSample,
    ctx: &PrecisionContext,
    n: i64,
    factor: fn(&ParamSample, i64, &PrecisionContext) -> Result<ComplexValue>,
) -> Result<ComplexValue> {
    let mut acc = ComplexValue::one(ctx);
    for p in 0..n {
        acc = &acc * &factor(sample, p, ctx)?;
    }
    Ok(acc)
}

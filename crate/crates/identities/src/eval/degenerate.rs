//! Degenerate (order-zero) trigonometric sums over geometric angles 3^p m.
//!
//! The sampled domain keeps m real, but the evaluators accept complex m so
//! the order-k reductions can be exercised on the same abscissae as the full
//! theorems.

use mpcore::{ComplexValue, CompensatedSum, PrecisionContext, Result};
use rug::Float;

use super::{guard_pole_cx, int, p3, times_i};
use crate::types::ParamSample;

fn scaled_m(sample: &ParamSample, ctx: &PrecisionContext, e: i64) -> Result<ComplexValue> {
    Ok(sample.cx("m", ctx)?.mul_f(&p3(ctx, e)))
}

/// sum_{p<n} 3^-p sin^3(3^p m) sec(3^{p+1} m)
pub fn deg_ss_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let a = scaled_m(sample, ctx, p)?;
        let c = a.mul_f(&Float::with_val(ctx.prec_bits(), 3)).cos();
        guard_pole_cx(ctx, &c, "sec(3^{p+1} m)")?;
        let s = a.sin();
        let cube = &(&s * &s) * &s;
        acc.add(&cube.mul_f(&p3(ctx, -p)).div(&c)?);
    }
    Ok(acc.value())
}

/// (3/8) (3^-n tan(3^n m) - tan m)
pub fn deg_ss_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let m = sample.cx("m", ctx)?;
    let an = scaled_m(sample, ctx, n)?;
    guard_pole_cx(ctx, &an.cos(), "cos(3^n m)")?;
    guard_pole_cx(ctx, &m.cos(), "cos m")?;
    let d = an.tan()?.mul_f(&p3(ctx, -n)) - m.tan()?;
    Ok(d.mul_f(&super::fratio(ctx, 3, 8)))
}

/// sum_{p<n} cos(2 3^p m) csc(3^{p+1} m)
pub fn deg_cc_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let a = scaled_m(sample, ctx, p)?;
        let c = a.mul_f(&Float::with_val(prec, 2)).cos();
        let s = a.mul_f(&Float::with_val(prec, 3)).sin();
        guard_pole_cx(ctx, &s, "csc(3^{p+1} m)")?;
        acc.add(&c.div(&s)?);
    }
    Ok(acc.value())
}

/// (csc m - csc(3^n m)) / 2
pub fn deg_cc_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let s0 = sample.cx("m", ctx)?.sin();
    let sn = scaled_m(sample, ctx, n)?.sin();
    guard_pole_cx(ctx, &s0, "csc m")?;
    guard_pole_cx(ctx, &sn, "csc(3^n m)")?;
    Ok((s0.recip()? - sn.recip()?).mul_f(&super::fratio(ctx, 1, 2)))
}

/// sum_{p<n} 3^-p (1 - 2 cos(2 3^p m) - 2i sin(2 3^p m) - i (3^{p+1} - 4) tan(3^p m))
///             / (2 cos(2 3^p m) - 1)
pub fn deg_ss1_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let two = Float::with_val(prec, 2);
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let a = scaled_m(sample, ctx, p)?;
        let dbl = a.mul_f(&two);
        let c2 = dbl.cos();
        let s2 = dbl.sin();
        guard_pole_cx(ctx, &a.cos(), "tan(3^p m)")?;
        let tn = a.tan()?;
        let den = c2.mul_f(&two) - int(ctx, 1);
        guard_pole_cx(ctx, &den, "1/(2 cos(2 3^p m) - 1)")?;
        let coeff = p3(ctx, p + 1) - 4u32;
        let num = int(ctx, 1) - c2.mul_f(&two) - times_i(&s2.mul_f(&two)) - times_i(&tn.mul_f(&coeff));
        acc.add(&num.div(&den)?.mul_f(&p3(ctx, -p)));
    }
    Ok(acc.value())
}

/// (3/2) (3^-n - 1) (1 + i tan(3^n m))
pub fn deg_ss1_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let an = scaled_m(sample, ctx, n)?;
    guard_pole_cx(ctx, &an.cos(), "cos(3^n m)")?;
    let one_plus = int(ctx, 1) + times_i(&an.tan()?);
    let scale = (p3(ctx, -n) - 1u32) * Float::with_val(prec, 3) / 2u32;
    Ok(one_plus.mul_f(&scale))
}

//! Order-k geometric-angle series for sin/cos kernels, expressed through
//! Phi(z, -k, v) with z on a damped unit circle (Im m > 0 keeps |z| < 1).

use mpcore::{ComplexValue, CompensatedSum, PrecisionContext, Result};
use rug::Float;

use super::{int, p3, phi, rf, times_i};
use crate::types::ParamSample;

/// e^{i c m}
fn e_im(m: &ComplexValue, c: &Float) -> ComplexValue {
    super::cis(m, c)
}

fn common(
    sample: &ParamSample,
    ctx: &PrecisionContext,
) -> Result<(ComplexValue, ComplexValue, Float, Float, i64)> {
    let m = sample.cx("m", ctx)?;
    let k = sample.cx("k", ctx)?;
    let a = sample.real("a", ctx)?;
    let n = sample.integer("n")?;
    let log_a = a.ln();
    Ok((m, k, log_a, Float::with_val(ctx.prec_bits(), 6), n))
}

/// (i c)^k for real c > 0
fn i_pow_k(ctx: &PrecisionContext, c: &Float, k: &ComplexValue) -> Result<ComplexValue> {
    ComplexValue::new(Float::new(ctx.prec_bits()), c.clone()).pow(k)
}

/// v = (base - i log_a / 3^p) / 6
fn v_shift(ctx: &PrecisionContext, base: i64, log_a: &Float, t3: &Float, six: &Float) -> Result<ComplexValue> {
    let ratio = Float::with_val(ctx.prec_bits(), log_a / t3);
    (int(ctx, base) - times_i(&rf(ratio))).div_f(six)
}

pub fn thm_ss_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let (m, k, log_a, six, n) = common(sample, ctx)?;
    let prec = ctx.prec_bits();
    let lk = rf(log_a.clone()).pow(&k)?;
    let two_k = int(ctx, 2).pow(&k)?;
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let t3 = p3(ctx, p);
        let z = -e_im(&m, &Float::with_val(prec, 6u32 * &t3));
        let neg_k = -&k;
        let f1 = phi(ctx, z.clone(), neg_k.clone(), v_shift(ctx, 2, &log_a, &t3, &six)?)?;
        let f2 = phi(ctx, z.clone(), neg_k.clone(), v_shift(ctx, 4, &log_a, &t3, &six)?)?;
        let f3 = phi(ctx, z, neg_k, v_shift(ctx, 6, &log_a, &t3, &six)?)?;
        let q = e_im(&m, &Float::with_val(prec, 2u32 * &t3));
        let q2 = &q * &q;
        let inner = &(&q * &f2 - f1) * &int(ctx, 3) - &(&q2 * &f3) * &int(ctx, 2);
        let angular = i_pow_k(ctx, &Float::with_val(prec, 3u32 * &t3), &k)?;
        let term = &lk + &(&(&two_k * &angular) * &(&q * &inner));
        acc.add(&term.div_f(&t3)?);
    }
    Ok(acc.value())
}

pub fn thm_ss_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let (m, k, log_a, _six, n) = common(sample, ctx)?;
    let prec = ctx.prec_bits();
    let t3n = p3(ctx, n);
    let lk = rf(log_a.clone()).pow(&k)?;
    let term1 = lk.mul_f(&Float::with_val(prec, &t3n - 1u32));
    let half_l = Float::with_val(prec, &log_a / 2u32);

    let qn = e_im(&m, &Float::with_val(prec, 2u32 * &t3n));
    let vn = int(ctx, 1) - times_i(&rf(Float::with_val(prec, &half_l / &t3n)));
    let pn = phi(ctx, -qn.clone(), -&k, vn)?;
    let head = &i_pow_k(ctx, &t3n, &k)? * &(&qn * &pn);

    let q1 = e_im(&m, &Float::with_val(prec, 2));
    let v1 = int(ctx, 1) - times_i(&rf(half_l));
    let p1 = phi(ctx, -q1.clone(), -&k, v1)?;
    let tail = (&ComplexValue::i(ctx).pow(&k)? * &(&q1 * &p1)).mul_f(&t3n);

    let term2 = &(head - tail) * &int(ctx, 2).pow(&(&k + &int(ctx, 1)))?;
    Ok((term1 + term2).mul_f(&Float::with_val(prec, p3(ctx, 1 - n) / 2u32)))
}

pub fn thm_cc_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let (m, k, log_a, six, n) = common(sample, ctx)?;
    let prec = ctx.prec_bits();
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let t3 = p3(ctx, p);
        let z = e_im(&m, &Float::with_val(prec, 6u32 * &t3));
        let neg_k = -&k;
        let f1 = phi(ctx, z.clone(), neg_k.clone(), v_shift(ctx, 1, &log_a, &t3, &six)?)?;
        let f5 = phi(ctx, z, neg_k, v_shift(ctx, 5, &log_a, &t3, &six)?)?;
        let q = e_im(&m, &t3);
        let q4 = q.powi(4)?;
        let angular = i_pow_k(ctx, &Float::with_val(prec, 3u32 * &t3), &k)?;
        acc.add(&(&angular * &(&q * &(f1 + &q4 * &f5))));
    }
    Ok(acc.value())
}

pub fn thm_cc_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let (m, k, log_a, _six, n) = common(sample, ctx)?;
    let prec = ctx.prec_bits();
    let t3n = p3(ctx, n);
    let two = Float::with_val(prec, 2);

    let v1 = (int(ctx, 1) - times_i(&rf(log_a.clone()))).div_f(&two)?;
    let p1 = phi(ctx, e_im(&m, &two), -&k, v1)?;
    let head = &ComplexValue::i(ctx).pow(&k)? * &(&e_im(&m, &Float::with_val(prec, 1)) * &p1);

    let ratio = Float::with_val(prec, &log_a / &t3n);
    let vn = (int(ctx, 1) - times_i(&rf(ratio))).div_f(&two)?;
    let pn = phi(ctx, e_im(&m, &Float::with_val(prec, 2u32 * &t3n)), -&k, vn)?;
    let tail = &i_pow_k(ctx, &t3n, &k)? * &(&e_im(&m, &t3n) * &pn);

    Ok(head - tail)
}

pub fn thm_ss1_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let m = sample.cx("m", ctx)?;
    let k = sample.cx("k", ctx)?;
    let a = sample.real("a", ctx)?;
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let six = Float::with_val(prec, 6);
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let t3 = p3(ctx, p);
        let z = -e_im(&m, &Float::with_val(prec, 6u32 * &t3));
        let neg_k = -&k;
        let a_t3 = Float::with_val(prec, &a / &t3);
        let vb = |add: i64| -> Result<ComplexValue> {
            (rf(a_t3.clone()) + int(ctx, add)).div_f(&six)
        };
        let q = e_im(&m, &Float::with_val(prec, 2u32 * &t3));
        let f3 = phi(ctx, z.clone(), neg_k.clone(), vb(6)?)?;
        // the 3 (3^p - 1) coefficient vanishes at p = 0
        let bracket = if p == 0 {
            -&(&(&q * &q) * &f3) * &int(ctx, 2)
        } else {
            let tm1 = Float::with_val(prec, &t3 - 1u32);
            let c0 = Float::with_val(prec, 3u32 * &tm1);
            let f1 = phi(ctx, z.clone(), neg_k.clone(), vb(2)?)?;
            let f2 = phi(ctx, z, neg_k, vb(4)?)?;
            (f1 - &q * &f2).mul_f(&c0) - &(&(&q * &q) * &f3) * &int(ctx, 2)
        };
        let angular = i_pow_k(ctx, &Float::with_val(prec, 3u32 * &t3), &k)?;
        acc.add(&(&angular * &(&q * &bracket)).div_f(&t3)?);
    }
    Ok(acc.value())
}

pub fn thm_ss1_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let m = sample.cx("m", ctx)?;
    let k = sample.cx("k", ctx)?;
    let a = sample.real("a", ctx)?;
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let t3n = p3(ctx, n);
    let v = rf(Float::with_val(prec, &a / &Float::with_val(prec, 2u32 * &t3n))) + int(ctx, 1);
    let pn = phi(ctx, -e_im(&m, &Float::with_val(prec, 2u32 * &t3n)), -&k, v)?;
    let km1 = &k - &int(ctx, 1);
    let angular = i_pow_k(ctx, &t3n, &km1)?;
    let q = e_im(&m, &Float::with_val(prec, 2u32 * &t3n));
    let tm1 = Float::with_val(prec, &t3n - 1u32);
    let scale = Float::with_val(prec, 3u32 * &tm1);
    Ok(-times_i(&(&angular * &(&q * &pn)).mul_f(&scale)))
}

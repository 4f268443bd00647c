//! Telescoping products of gamma-function quotients over triadic scalings
//! of a positive parameter a. Bases can pass through negative real values,
//! so powers are taken in the complex plane (principal branch) exactly as
//! the closed forms on the right demand.

use mpcore::{ComplexValue, PrecisionContext, Result};
use rug::Float;

use super::{fpow, fratio, gam_f, int, ipow, p3, product_over, rf};
use crate::types::ParamSample;

fn a_of(sample: &ParamSample, ctx: &PrecisionContext) -> Result<Float> {
    sample.real("a", ctx)
}

/// principal-branch x^e for real x of either sign
fn cpow(x: &ComplexValue, e: &Float) -> Result<ComplexValue> {
    x.pow_f(e)
}

// ---------------------------------------------------------------- GP-SS

pub fn gp_ss_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let prec = ctx.prec_bits();
    let b = Float::with_val(prec, &a * &p3(ctx, -p - 1));
    let half = fratio(ctx, 1, 2);

    let g_num = gam_f(ctx, Float::with_val(prec, &b + &half))?;
    let g_den = gam_f(ctx, Float::with_val(prec, &b + 1u32))?;
    let f1 = cpow(&g_num.div(&g_den)?, &Float::with_val(prec, 2u32 * &p3(ctx, -p - 1)))?;

    let num = &(&gam_f(ctx, Float::with_val(prec, &b + &fratio(ctx, 1, 6)))?
        * &gam_f(ctx, Float::with_val(prec, &b + &fratio(ctx, 5, 6)))?)
        * &rf(ipow(ctx, 9, p + 1));
    let at = Float::with_val(prec, &a * &p3(ctx, -p));
    let d1 = Float::with_val(prec, &p3(ctx, p) - &a);
    let d2 = Float::with_val(prec, 2u32 * &p3(ctx, p)) - &a;
    let g3 = gam_f(ctx, Float::with_val(prec, &at - 2u32) / 3u32)?;
    let g4 = gam_f(ctx, Float::with_val(prec, &at - 1u32) / 3u32)?;
    let den = &(&g3 * &g4).mul_f(&d1) * &rf(d2);
    let f2 = cpow(&num.div(&den)?, &p3(ctx, -p))?;

    Ok(&f1 * &f2)
}

pub fn gp_ss_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, gp_ss_factor)
}

pub fn gp_ss_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let t = p3(ctx, -n);
    let half = fratio(ctx, 1, 2);

    let lead_e = Float::with_val(prec, 1u32 - &t) * fratio(ctx, 3, 4);
    let lead = fpow(ctx, &Float::with_val(prec, 3), &lead_e);
    let g1 = gam_f(ctx, Float::with_val(prec, &a + &half))?;
    let g2 = gam_f(ctx, Float::with_val(prec, &a + 1u32))?;
    let at = Float::with_val(prec, &a * &t);
    let g3 = gam_f(ctx, Float::with_val(prec, &at + 1u32))?;
    let g4 = gam_f(ctx, Float::with_val(prec, &at + &half))?;
    let tail = cpow(&g3.div(&g4)?, &t)?;
    Ok((&g1.div(&g2)? * &tail).mul_f(&lead))
}

pub fn gp_ss_limit(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let prec = ctx.prec_bits();
    let lead = fpow(ctx, &Float::with_val(prec, 3), &fratio(ctx, 3, 4));
    let g1 = gam_f(ctx, Float::with_val(prec, &a + &fratio(ctx, 1, 2)))?;
    let g2 = gam_f(ctx, Float::with_val(prec, &a + 1u32))?;
    Ok(g1.div(&g2)?.mul_f(&lead))
}

// ---------------------------------------------------------------- QG-SS

pub fn qg_ss_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let prec = ctx.prec_bits();
    let t = p3(ctx, -p);
    let at = Float::with_val(prec, &a * &t);
    let at3 = Float::with_val(prec, &at / 3u32);

    let pow3_e = Float::with_val(prec, &at + &Float::with_val(prec, 2 * p as i32));
    let num = gam_f(ctx, Float::with_val(prec, &at3 - 1u32))?
        .mul_f(&fpow(ctx, &Float::with_val(prec, 3), &pow3_e));

    let quad = Float::with_val(prec, &a * &a) - Float::with_val(prec, &a * &p3(ctx, p + 1))
        + Float::with_val(prec, 2u32 * &ipow(ctx, 9, p));
    let g_mid = gam_f(ctx, Float::with_val(prec, &at3 + 1u32))?;
    let g_mid_pow = cpow(&g_mid, &fratio(ctx, 2, 3))?;
    let g_tail = gam_f(ctx, Float::with_val(prec, &at - &Float::with_val(prec, 3)))?;
    let den = (&g_mid_pow * &g_tail).mul_f(&quad);

    cpow(&num.div(&den)?, &t)
}

pub fn qg_ss_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, qg_ss_factor)
}

pub fn qg_ss_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let t = p3(ctx, -n);

    // E = (1/8) 9^-n (9 a (9^n - 1) + 8 3^n (3^{n+1} - n - 3))
    let nine_n = ipow(ctx, 9, n);
    let inner1 = Float::with_val(prec, &nine_n - 1u32) * Float::with_val(prec, 9u32 * &a);
    let inner2 = Float::with_val(prec, &p3(ctx, n + 1) - &Float::with_val(prec, (n + 3) as i32))
        * Float::with_val(prec, 8u32 * &p3(ctx, n));
    let e = Float::with_val(prec, &inner1 + &inner2) * ipow(ctx, 9, -n) / 8u32;

    let lead = fpow(ctx, &Float::with_val(prec, 3), &e);
    let a_t = fpow(ctx, &a, &t);
    let g1 = cpow(&gam_f(ctx, Float::with_val(prec, &a * &t))?, &t)?;
    let g2 = gam_f(ctx, Float::with_val(prec, &a + 1u32))?;
    g1.div(&g2).map(|q| q.mul_f(&Float::with_val(prec, &lead * &a_t)))
}

pub fn qg_ss_limit(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let prec = ctx.prec_bits();
    let e = Float::with_val(prec, 9u32 * &a) / 8u32 + 3u32;
    let lead = fpow(ctx, &Float::with_val(prec, 3), &e);
    let g = gam_f(ctx, Float::with_val(prec, &a + 1u32))?;
    Ok(g.recip()?.mul_f(&lead))
}

// ---------------------------------------------------------------- GP-CC

pub fn gp_cc_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let prec = ctx.prec_bits();
    let at = Float::with_val(prec, &a * &p3(ctx, -p));
    let g1 = gam_f(ctx, Float::with_val(prec, &at + 1u32) / 6u32)?;
    let g5 = gam_f(ctx, Float::with_val(prec, &at + 5u32) / 6u32)?;
    let two_pi = Float::with_val(prec, 2u32 * &specfun::constants::pi(ctx));
    (&g1 * &g5).div_f(&two_pi)
}

pub fn gp_cc_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, gp_cc_factor)
}

pub fn gp_cc_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let t = p3(ctx, -n);
    let e = Float::with_val(prec, 1u32 - &t) * Float::with_val(prec, &a * &fratio(ctx, -3, 4));
    let lead = fpow(ctx, &Float::with_val(prec, 3), &e);
    let g1 = gam_f(ctx, Float::with_val(prec, &a + 1u32) / 2u32)?;
    let at = Float::with_val(prec, &a * &t);
    let g2 = gam_f(ctx, Float::with_val(prec, &at + 1u32) / 2u32)?;
    g1.div(&g2).map(|q| q.mul_f(&lead))
}

pub fn gp_cc_limit(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let prec = ctx.prec_bits();
    let e = Float::with_val(prec, &a * &fratio(ctx, -3, 4));
    let lead = fpow(ctx, &Float::with_val(prec, 3), &e);
    let g = gam_f(ctx, Float::with_val(prec, &a + 1u32) / 2u32)?;
    let sqrt_pi = specfun::constants::pi(ctx).sqrt();
    g.div_f(&sqrt_pi).map(|q| q.mul_f(&lead))
}

// ---------------------------------------------------------------- QG-CC1

pub fn qg_cc1_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let prec = ctx.prec_bits();
    let ta = Float::with_val(prec, &a * &p3(ctx, -p));
    let g7 = gam_f(ctx, Float::with_val(prec, &ta + 7u32) / 12u32)?;
    let g11 = gam_f(ctx, Float::with_val(prec, &ta + 11u32) / 12u32)?;
    let shifted = Float::with_val(prec, &a + &p3(ctx, p)) * p3(ctx, -p - 1) / 4u32;
    let gs = gam_f(ctx, shifted)?;
    let g5 = gam_f(ctx, Float::with_val(prec, &ta + 5u32) / 12u32)?;
    let base = (&g7 * &g11).div(&(&gs * &g5))?;
    if p % 2 == 0 {
        Ok(base)
    } else {
        base.recip()
    }
}

pub fn qg_cc1_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, qg_cc1_factor)
}

pub fn qg_cc1_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let ta = Float::with_val(prec, &a * &p3(ctx, -n));
    let sign = if n % 2 == 0 { 1i64 } else { -1 };
    let lead_e = Float::with_val(prec, (sign - 1) as i32) / 4u32;
    let lead = fpow(ctx, &Float::with_val(prec, 3), &lead_e);
    let g_hi = gam_f(ctx, Float::with_val(prec, &a + 3u32) / 4u32)?;
    let g_lo = gam_f(ctx, Float::with_val(prec, &a + 1u32) / 4u32)?;
    let q1 = gam_f(ctx, Float::with_val(prec, &ta + 1u32) / 4u32)?;
    let q3 = gam_f(ctx, Float::with_val(prec, &ta + 3u32) / 4u32)?;
    let quotient = if sign == 1 { q1.div(&q3)? } else { q3.div(&q1)? };
    (&g_hi.mul_f(&lead) * &quotient).div(&g_lo)
}

/// Strict upper bound for every partial product of QG-CC1.
pub fn qg_cc1_bound(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let prec = ctx.prec_bits();
    let quarter = gam_f(ctx, fratio(ctx, 1, 4))?;
    let three_quarter = gam_f(ctx, fratio(ctx, 3, 4))?;
    let g_hi = gam_f(ctx, Float::with_val(prec, &a + 3u32) / 4u32)?;
    let g_lo = gam_f(ctx, Float::with_val(prec, &a + 1u32) / 4u32)?;
    (&quarter * &g_hi).div(&(&three_quarter * &g_lo))
}

// ---------------------------------------------------------------- GP-SS1

pub fn gp_ss1a_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let prec = ctx.prec_bits();
    let tp = p3(ctx, -p);
    let tp1 = p3(ctx, -p - 1);
    let ta = Float::with_val(prec, &a * &tp);
    let two_tp1 = Float::with_val(prec, 2u32 * &tp1);

    let f1_base = int(ctx, 1) - rf(Float::with_val(prec, 2u32 * &p3(ctx, p + 1)) / &a);
    let f1 = cpow(&f1_base, &two_tp1)?;

    let g_num = gam_f(ctx, Float::with_val(prec, &ta - 6u32) / 12u32)?;
    let g_den = gam_f(ctx, Float::with_val(prec, &a * &tp1) / 4u32)?;
    let f2 = cpow(&g_num.div(&g_den)?, &two_tp1)?;

    let pow3_e = Float::with_val(prec, &ta / &Float::with_val(prec, -4))
        + Float::with_val(prec, (-2 * p) as i32)
        + fratio(ctx, 3, 2);
    let lead = fpow(ctx, &Float::with_val(prec, 3), &pow3_e);
    let quad = Float::with_val(prec, &a * &a)
        - Float::with_val(prec, &a * &Float::with_val(prec, 4u32 * &p3(ctx, p + 1)))
        + Float::with_val(prec, 32u32 * &ipow(ctx, 9, p));
    let g_top = gam_f(ctx, Float::with_val(prec, &ta / 4u32) - 3u32)?;
    let d1 = gam_f(ctx, Float::with_val(prec, &a * &tp1) / 4u32 - 1u32)?;
    let d2 = gam_f(ctx, Float::with_val(prec, &ta + 2u32) / 12u32)?;
    let d3 = gam_f(ctx, Float::with_val(prec, &ta + 10u32) / 12u32)?;
    let base3 = g_top
        .mul_f(&Float::with_val(prec, &lead * &quad))
        .div(&(&(&d1 * &d2) * &d3))?;
    let f3 = cpow(&base3, &Float::with_val(prec, 1u32 - &tp))?;

    Ok(&(&f1 * &f2) * &f3)
}

pub fn gp_ss1a_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, gp_ss1a_factor)
}

pub fn gp_ss1a_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let tn = p3(ctx, -n);
    let pi = specfun::constants::pi(ctx);

    let e2 = Float::with_val(prec, (2 * n - 3) as i32 + &Float::with_val(prec, 3u32 * &tn))
        * fratio(ctx, 3, 2);
    let e3 = Float::with_val(prec, (3 - 2 * n) as i32 - &Float::with_val(prec, 3u32 * &tn))
        / 4u32;
    let epi = Float::with_val(prec, 1u32 - &tn) * fratio(ctx, 3, 2)
        - Float::with_val(prec, n as i32);
    let lead = fpow(ctx, &Float::with_val(prec, 2), &e2)
        * fpow(ctx, &Float::with_val(prec, 3), &e3)
        * fpow(ctx, &pi, &epi);

    let two3n = Float::with_val(prec, 2u32 * &p3(ctx, n));
    let base = int(ctx, 1) - rf(Float::with_val(prec, &two3n / &a));
    let neg_tn = Float::with_val(prec, -&tn);
    let branch = cpow(&base, &neg_tn)?;

    let ta = Float::with_val(prec, &a * &tn);
    let g_num = gam_f(ctx, Float::with_val(prec, &ta - 2u32) / 4u32)?;
    let g_den = gam_f(ctx, Float::with_val(prec, &ta / 4u32))?;
    let tail = cpow(&g_num.div(&g_den)?, &Float::with_val(prec, 1u32 - &tn))?;

    let amp = Float::with_val(prec, &a - &two3n) / &a;
    Ok((&branch * &tail).mul_f(&Float::with_val(prec, &lead * &amp)))
}

pub fn gp_ss1b_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let prec = ctx.prec_bits();
    let tp = p3(ctx, -p);
    let tp1 = p3(ctx, -p - 1);
    let ta = Float::with_val(prec, &a * &tp);
    let two_thirds = fratio(ctx, 2, 3);

    let g = gam_f(ctx, Float::with_val(prec, &a * &tp1) / 2u32)?;
    let core = rf(Float::with_val(prec, &a * &tp1)).pow_f(&two_thirds)?;
    let g23 = cpow(&g, &two_thirds)?;
    let lin = Float::with_val(prec, &ta - &Float::with_val(prec, 4))
        * Float::with_val(prec, &ta - &Float::with_val(prec, 2));
    let g4 = gam_f(ctx, Float::with_val(prec, &ta - 4u32) / 6u32)?;
    let g2 = gam_f(ctx, Float::with_val(prec, &ta - 2u32) / 6u32)?;
    let base = (&(&(&core * &g23) * &g4) * &g2).mul_f(&lin);
    let powed = cpow(&base, &Float::with_val(prec, 1u32 - &tp))?;
    powed.div(&g23)
}

pub fn gp_ss1b_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, gp_ss1b_factor)
}

pub fn gp_ss1b_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let a = a_of(sample, ctx)?;
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let tn = p3(ctx, -n);
    let pi = specfun::constants::pi(ctx);

    // E3 = (1/16) 9^-n (4 3^n (2 (5 3^n - 2) n - 9 (3^n - 1)) - 3 a (9^n - 4 3^n + 3)) - n(n+1)/3
    let p3n = p3(ctx, n);
    let nine_n = ipow(ctx, 9, n);
    let t1 = Float::with_val(prec, 5u32 * &p3n) - 2u32;
    let t2 = Float::with_val(prec, &t1 * &Float::with_val(prec, (2 * n) as i32))
        - Float::with_val(prec, 9u32 * &Float::with_val(prec, &p3n - 1u32));
    let t3 = Float::with_val(prec, 4u32 * &p3n) * &t2;
    let t4 = Float::with_val(prec, &nine_n - &Float::with_val(prec, 4u32 * &p3n)) + 3u32;
    let t5 = Float::with_val(prec, 3u32 * &a) * &t4;
    let e3 = Float::with_val(prec, &t3 - &t5) * ipow(ctx, 9, -n) / 16u32
        - Float::with_val(prec, (n * (n + 1)) as i32) / 3u32;

    let e2 = Float::with_val(prec, (2 * n - 3) as i32 + &Float::with_val(prec, 3u32 * &tn))
        * fratio(ctx, 3, 2);
    let epi = Float::with_val(prec, &tn - 1u32) * fratio(ctx, 3, 2)
        + Float::with_val(prec, n as i32);
    let lead = fpow(ctx, &Float::with_val(prec, 2), &e2)
        * fpow(ctx, &pi, &epi)
        * fpow(ctx, &Float::with_val(prec, 3), &e3)
        * fpow(ctx, &a, &Float::with_val(prec, (2 * n) as i32 / &Float::with_val(prec, 3)));

    let g = gam_f(ctx, Float::with_val(prec, &a * &tn) / 2u32)?;
    let tail = cpow(&g.mul_f(&a), &Float::with_val(prec, &tn - 1u32))?;
    Ok(tail.mul_f(&lead))
}

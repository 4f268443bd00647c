//! Finite geometric-angle sums whose closed forms evaluate the classical
//! constants: Catalan's constant, Glaisher's constant and zeta(3).
//!
//! Angles are integer multiples of pi, so many circular factors sit at
//! exact values (+-1, 0); they are still computed from the working-precision
//! pi because the first-order rounding terms cancel between the two sides.

use mpcore::{ComplexValue, CompensatedSum, PrecisionContext, Result};
use rug::ops::Pow;
use rug::Float;

use super::{cis_f, fratio, int, ipow, log_i_times, p3, phips, rf, trigamma};
use crate::types::ParamSample;

fn pi_f(ctx: &PrecisionContext) -> Float {
    specfun::constants::pi(ctx)
}

fn catalan_f(ctx: &PrecisionContext) -> Float {
    specfun::constants::catalan(ctx)
}

/// (j + t)/12 for integer j and exact triadic t
fn twelfth(ctx: &PrecisionContext, j: i64, t: &Float) -> Float {
    let prec = ctx.prec_bits();
    Float::with_val(prec, j + t) / 12u32
}

// ---------------------------------------------------------------- CAT-CC-1

pub fn cat_cc1_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let tp = p3(ctx, -p);
        let s = trigamma(ctx, twelfth(ctx, 2, &tp))? + trigamma(ctx, twelfth(ctx, 10, &tp))?;
        acc.add(&s.mul_f(&ipow(ctx, 9, -p)));
    }
    Ok(acc.value())
}

pub fn cat_cc1_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let tn = p3(ctx, -n);
    let pg = trigamma(ctx, Float::with_val(prec, 2u32 + &tn) / 4u32)?;
    let pi = pi_f(ctx);
    let base = Float::with_val(prec, &pi * &pi) - Float::with_val(prec, 8u32 * &catalan_f(ctx));
    let inner = rf(base) - pg.mul_f(&ipow(ctx, 9, -n));
    Ok(inner.mul_f(&Float::with_val(prec, 9)))
}

// ---------------------------------------------------------------- CAT-SS

pub fn cat_ss_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let tp = p3(ctx, -p);
        let g = |j: i64| trigamma(ctx, twelfth(ctx, j, &tp));
        let mut s = (g(2)? - g(4)?).mul_f(&Float::with_val(prec, 3));
        s = s + g(6)?.mul_f(&Float::with_val(prec, 2));
        s = s + (g(10)? - g(8)?).mul_f(&Float::with_val(prec, 3));
        let last = g(12)? + rf(Float::with_val(prec, 8u32 * &ipow(ctx, 9, p + 1)));
        s = s - last.mul_f(&Float::with_val(prec, 2));
        acc.add(&s.mul_f(&ipow(ctx, 27, -p)));
    }
    Ok(acc.value())
}

pub fn cat_ss_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let tn = p3(ctx, -n);
    let p3n = p3(ctx, n);
    let coef = Float::with_val(prec, 1u32 + &p3n)
        - Float::with_val(prec, 2u32 * &Float::with_val(prec, &catalan_f(ctx) * &p3n));
    let head = Float::with_val(prec, 8u32 * &ipow(ctx, 9, n)) * coef;
    let quarter = Float::with_val(prec, &tn / 4u32);
    let g1 = trigamma(ctx, Float::with_val(prec, 1u32 + &quarter))?;
    let g2 = trigamma(ctx, Float::with_val(prec, 2u32 + &tn) / 4u32)?;
    Ok((rf(head) + g1 - g2).mul_f(&ipow(ctx, 27, 1 - n)))
}

// ---------------------------------------------------------------- CAT-SS-2

pub fn cat_ss2_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let tp = p3(ctx, -p);
        let v = |j: i64| rf(Float::with_val(prec, j - &tp) / 6u32);
        let d1 = phips(ctx, -1, -1, v(2))?;
        let d2 = phips(ctx, -1, -1, v(4))?;
        let d3 = phips(ctx, -1, -1, v(6))?;
        let mut s = (d1 - d2).mul_f(&Float::with_val(prec, 18));
        s = s + d3.mul_f(&Float::with_val(prec, 12));
        s = s + log_i_times(ctx, &p3(ctx, p + 1)).mul_f(&tp);
        acc.add(&s);
    }
    Ok(acc.value())
}

pub fn cat_ss2_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let tn = p3(ctx, -n);
    let pi = pi_f(ctx);
    let v = rf(Float::with_val(prec, 1u32 - &Float::with_val(prec, &tn / 2u32)));
    let d = phips(ctx, -1, -1, v)?;
    let head = d.mul_f(&Float::with_val(prec, -6i32 * &pi));
    let cat = rf(Float::with_val(prec, 6u32 * &catalan_f(ctx)));
    let log_coef = Float::with_val(prec, 1u32 - &tn) * &pi * fratio(ctx, 3, 2);
    let tail = log_i_times(ctx, &p3(ctx, n)).mul_f(&log_coef);
    (head + cat + tail).div_f(&pi)
}

// ---------------------------------------------------------------- CAT-CC-2

fn zeta_prime2(ctx: &PrecisionContext, v: Float) -> Result<ComplexValue> {
    specfun::hurwitz_zeta_sderiv(&int(ctx, 2), &rf(v), ctx)
}

pub fn cat_cc2_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let tp = p3(ctx, -p);
        let z1 = zeta_prime2(ctx, twelfth(ctx, 2, &Float::with_val(prec, -&tp)))?;
        let half_tp = Float::with_val(prec, &tp / 2u32);
        let z2 = zeta_prime2(ctx, Float::with_val(prec, 5u32 - &half_tp) / 6u32)?;
        let neg = Float::with_val(prec, -&tp);
        let g = trigamma(ctx, twelfth(ctx, 2, &neg))? + trigamma(ctx, twelfth(ctx, 10, &neg))?;
        let s = z1 + z2 - &log_i_times(ctx, &p3(ctx, p + 1)) * &g;
        acc.add(&s.mul_f(&ipow(ctx, 9, -p)));
    }
    Ok(acc.value())
}

pub fn cat_cc2_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let tn = p3(ctx, -n);
    let pi = pi_f(ctx);
    let half_arg = Float::with_val(prec, 2u32 - &tn) / 4u32;
    let z_shift = zeta_prime2(ctx, half_arg.clone())?;
    let z_quarter = zeta_prime2(ctx, fratio(ctx, 1, 4))?;
    let pi2 = Float::with_val(prec, &pi * &pi);
    let bracket = Float::with_val(prec, 8u32 * &catalan_f(ctx)) + pi2;
    let imag = ComplexValue::new(Float::new(prec), Float::with_val(prec, &pi * &bracket) / 2u32);
    let g = trigamma(ctx, half_arg)?;
    let log_term = (&log_i_times(ctx, &p3(ctx, n)) * &g).mul_f(&ipow(ctx, 9, -n));
    let inner = z_quarter - z_shift.mul_f(&ipow(ctx, 9, -n)) - imag + log_term;
    Ok(inner.mul_f(&Float::with_val(prec, 9)))
}

// ---------------------------------------------------------------- GK-CC

pub fn gk_cc_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let pi = pi_f(ctx);
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let t3 = p3(ctx, p);
        let tp = p3(ctx, -p);
        let th_half = Float::with_val(prec, &pi * &t3) / 2u32;
        let (sh, ch) = th_half.clone().sin_cos(Float::new(prec));
        let th_5half = Float::with_val(prec, 5u32 * &th_half);
        let (s5, c5) = th_5half.sin_cos(Float::new(prec));
        let cf = Float::with_val(prec, &pi * &t3).cos();

        let two_cf = Float::with_val(prec, 2u32 * &cf) + 1u32;
        let sin_sq = sh.clone().square();
        let pref = (Float::with_val(prec, 8u32 * &two_cf.square()) * sin_sq).recip();

        let combo = Float::with_val(prec, 5u32 * &ch) + &c5;
        let t1c = ComplexValue::new(
            Float::with_val(prec, &t3 * &combo),
            -Float::with_val(prec, &sh + &s5),
        );
        let term1 = (&log_i_times(ctx, &p3(ctx, p + 1)) * &t1c)
            .mul_f(&Float::with_val(prec, 2));

        let damp = cis_f(ctx, &(Float::with_val(prec, -5i32 * &Float::with_val(prec, &pi * &t3)) / 2u32));
        let em = cis_f(ctx, &Float::with_val(prec, 3u32 * &Float::with_val(prec, &pi * &t3)))
            - int(ctx, 1);
        let sq = &em * &em;
        let va = rf(Float::with_val(prec, 1u32 + &tp) / 6u32);
        let vb = rf(Float::with_val(prec, 5u32 + &tp) / 6u32);
        let fa = phips(ctx, -1, -1, va)?;
        let fb = phips(ctx, -1, -1, vb)?;
        let rot = cis_f(ctx, &Float::with_val(prec, 2u32 * &Float::with_val(prec, &pi * &t3)));
        let inner = fa + &rot * &fb;
        let term2 = (&(&damp * &sq) * &inner).mul_f(&Float::with_val(prec, 6u32 * &t3));

        acc.add(&(term1 - term2).mul_f(&pref));
    }
    Ok(acc.value())
}

pub fn gk_cc_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let pi = pi_f(ctx);
    let t3 = p3(ctx, n);
    let tn = p3(ctx, -n);
    let th_half = Float::with_val(prec, &pi * &t3) / 2u32;
    let (sh, ch) = th_half.sin_cos(Float::new(prec));
    let cf = Float::with_val(prec, &pi * &t3).cos();

    let v = rf(Float::with_val(prec, 1u32 + &tn) / 2u32);
    let h1 = (&cis_f(ctx, &(Float::with_val(prec, &pi * &t3) / 2u32)) * &phips(ctx, -1, -1, v)?)
        .mul_f(&Float::with_val(prec, -&t3));

    // ln(A^3 / (2^{1/3} e^{1/4}))
    let glaisher = specfun::constants::glaisher(ctx);
    let k = Float::with_val(prec, 3u32 * &glaisher.ln())
        - Float::with_val(prec, &specfun::constants::ln2(ctx) / 3u32)
        - fratio(ctx, 1, 4);
    let h2 = ComplexValue::new(Float::new(prec), k);

    let lead = Float::with_val(prec, &pi * &Float::with_val(prec, &cf - 1u32));
    let dir = ComplexValue::new(Float::with_val(prec, &t3 * &ch), Float::with_val(prec, -&sh));
    let num = rf(lead) + (&log_i_times(ctx, &t3) * &dir).mul_f(&Float::with_val(prec, 4));
    let den = Float::with_val(prec, 8u32 * &Float::with_val(prec, &cf - 1u32));
    let h3 = num.div_f(&den)?;

    Ok(h1 + h2 + h3)
}

// ---------------------------------------------------------------- AP-CC

pub fn ap_cc_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let pi = pi_f(ctx);
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let tp = p3(ctx, -p);
        let th = Float::with_val(prec, &pi * &p3(ctx, p + 1)) / 2u32;
        let csc3 = Float::with_val(prec, (&th.sin()).pow(-3i32));
        let va = rf(Float::with_val(prec, 1u32 + &tp) / 6u32);
        let vb = rf(Float::with_val(prec, 5u32 + &tp) / 6u32);
        let fa = phips(ctx, -1, -2, va)?;
        let fb = phips(ctx, -1, -2, vb)?;
        let nine = Float::with_val(prec, 4u32 * &ipow(ctx, 9, p + 1));
        let log_coef = Float::with_val(prec, 5u32 * &ipow(ctx, 9, p)) - 1u32;
        let s = (fa + fb).mul_f(&nine) + log_i_times(ctx, &p3(ctx, p + 1)).mul_f(&log_coef);
        acc.add(&s.mul_f(&csc3));
    }
    Ok(acc.value())
}

pub fn ap_cc_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let pi = pi_f(ctx);
    let tn = p3(ctx, -n);
    let th = Float::with_val(prec, &pi * &p3(ctx, n)) / 2u32;
    let csc3 = Float::with_val(prec, (&th.sin()).pow(-3i32));
    let v = rf(Float::with_val(prec, 1u32 + &tn) / 2u32);
    let f = phips(ctx, -1, -2, v)?;
    let head = f.mul_f(&Float::with_val(prec, 4u32 * &Float::with_val(prec, &ipow(ctx, 9, n) * &csc3)));
    let log_coef = Float::with_val(prec, &ipow(ctx, 9, n) - 1u32) * &csc3 / 2u32;
    let mid = log_i_times(ctx, &p3(ctx, n)).mul_f(&log_coef);
    let apery = specfun::constants::apery(ctx);
    let tail = Float::with_val(prec, 7u32 * &apery) / Float::with_val(prec, &pi * &pi);
    Ok(head + mid - rf(tail))
}

// ---------------------------------------------------------------- CAT-CC-3

pub fn cat_cc3_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let pi = pi_f(ctx);
    let f16 = phips(ctx, -1, -1, rf(fratio(ctx, 1, 6)))?;
    let f56 = phips(ctx, -1, -1, rf(fratio(ctx, 5, 6)))?;
    let hoisted = (f16 + f56).mul_f(&Float::with_val(prec, -12));
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let t3 = p3(ctx, p);
        let pit3 = Float::with_val(prec, &pi * &t3);
        let th_half = Float::with_val(prec, &pit3 / 2u32);
        let ch = th_half.clone().cos();
        let c5 = Float::with_val(prec, 5u32 * &th_half).cos();
        let big = Float::with_val(prec, 3u32 * &pit3) / 2u32;
        let csc2 = Float::with_val(prec, (&big.sin()).pow(-2i32));
        let spin = Float::with_val(prec, 5u32 * &pit3) / 2u32;
        let em = cis_f(ctx, &Float::with_val(prec, -&spin));
        let ep = cis_f(ctx, &spin);
        let combo = Float::with_val(prec, 5u32 * &ch) + &c5;
        let inner = &hoisted + &(&ep * &log_i_times(ctx, &p3(ctx, p + 1))).mul_f(&combo);
        acc.add(&(&em * &inner).mul_f(&Float::with_val(prec, &t3 * &csc2)));
    }
    Ok(acc.value())
}

pub fn cat_cc3_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let pi = pi_f(ctx);
    let t3 = p3(ctx, n);
    let pit3 = Float::with_val(prec, &pi * &t3);
    let th_half = Float::with_val(prec, &pit3 / 2u32);
    let (sh, ch) = th_half.clone().sin_cos(Float::new(prec));
    let cf = pit3.clone().cos();

    let swing = cis_f(ctx, &th_half).mul_f(&Float::with_val(prec, &t3 * &sh.square()));
    let part1 = (swing - ComplexValue::i(ctx)).mul_f(&Float::with_val(prec, 4u32 * &catalan_f(ctx)));
    let part2 = log_i_times(ctx, &t3).mul_f(&Float::with_val(prec, &pit3 * &ch));
    let den = Float::with_val(prec, &pi * &Float::with_val(prec, &cf - 1u32));
    (part1 + part2).mul_f(&Float::with_val(prec, 2)).div_f(&den)
}

// ---------------------------------------------------------------- GK-SS / AP-SS

pub fn gk_ss_lhs(_sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let third = phips(ctx, -1, -1, rf(fratio(ctx, 1, 3)))?;
    let two_thirds = phips(ctx, -1, -1, rf(fratio(ctx, 2, 3)))?;
    Ok(third - two_thirds)
}

/// ln(2^{2/9} 3^{1/12} e^{1/6} / A^2)
pub fn gk_ss_rhs(_sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let ln2 = specfun::constants::ln2(ctx);
    let ln3 = Float::with_val(prec, 3).ln();
    let val = Float::with_val(prec, &ln2 * &fratio(ctx, 2, 9))
        + Float::with_val(prec, &ln3 / 12u32)
        + fratio(ctx, 1, 6)
        - Float::with_val(prec, 2u32 * &specfun::constants::glaisher(ctx).ln());
    Ok(rf(val))
}

pub fn ap_ss_lhs(_sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let two_thirds = phips(ctx, -1, -2, rf(fratio(ctx, 2, 3)))?;
    let third = phips(ctx, -1, -2, rf(fratio(ctx, 1, 3)))?;
    Ok(two_thirds - third)
}

/// 14 zeta(3) / (9 pi^2)
pub fn ap_ss_rhs(_sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let pi = pi_f(ctx);
    let num = Float::with_val(prec, 14u32 * &specfun::constants::apery(ctx));
    let den = Float::with_val(prec, 9u32 * &Float::with_val(prec, &pi * &pi));
    Ok(rf(num / den))
}

// ---------------------------------------------------------------- order-1 ladders

pub fn cat_ss1a_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let pj = p3(ctx, n - p - 1);
        let pq = p3(ctx, n - p);
        let quarter = Float::with_val(prec, &pj / 4u32);
        let g_head = trigamma(ctx, Float::with_val(prec, 1u32 - &quarter))?;
        let g_a = trigamma(ctx, Float::with_val(prec, &fratio(ctx, 5, 6) - &quarter))?;
        let g_b = trigamma(ctx, Float::with_val(prec, 4u32 - &pq) / 12u32)?;
        let g_mid = trigamma(ctx, Float::with_val(prec, 6u32 - &pq) / 12u32)?;
        let g_c = trigamma(ctx, Float::with_val(prec, 2u32 - &pq) / 12u32)?;
        let g_d = trigamma(ctx, Float::with_val(prec, 8u32 - &pq) / 12u32)?;
        let tm1 = Float::with_val(prec, &p3(ctx, p) - 1u32);
        let half3 = Float::with_val(prec, 3u32 * &tm1) / 2u32;
        let s = g_head - g_mid + ((g_a - g_b) + (g_c - g_d)).mul_f(&half3);
        acc.add(&s.mul_f(&ipow(ctx, 27, -p)));
    }
    Ok(acc.value())
}

pub fn cat_ss1a_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let tm1 = Float::with_val(prec, &p3(ctx, n) - 1u32);
    let coef = Float::with_val(prec, 8u32 * &Float::with_val(prec, &catalan_f(ctx) * &p3(ctx, 3 - 3 * n)));
    Ok(rf(Float::with_val(prec, -&Float::with_val(prec, &coef * &tm1))))
}

pub fn gk_ss1_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let d = gk_ss_lhs(sample, ctx)?;
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let tm1 = Float::with_val(prec, &p3(ctx, p) - 1u32);
        let s = d.mul_f(&Float::with_val(prec, 6u32 * &tm1))
            + log_i_times(ctx, &p3(ctx, p + 1)).mul_f(&p3(ctx, p));
        acc.add(&s);
    }
    Ok(acc.value())
}

pub fn gk_ss1_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    // ln(16 e^3 / A^36)
    let k = Float::with_val(prec, 4u32 * &specfun::constants::ln2(ctx)) + 3u32
        - Float::with_val(prec, 36u32 * &specfun::constants::glaisher(ctx).ln());
    let lead = Float::with_val(prec, &p3(ctx, n) - &Float::with_val(prec, (2 * n + 1) as i32));
    let tm1 = Float::with_val(prec, &p3(ctx, n) - 1u32);
    let tail = log_i_times(ctx, &p3(ctx, n)).mul_f(&Float::with_val(prec, 3u32 * &tm1));
    Ok((rf(Float::with_val(prec, &lead * &k)) + tail).mul_f(&fratio(ctx, 1, 6)))
}

pub fn ap_ss1_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let two_thirds = phips(ctx, -1, -2, rf(fratio(ctx, 2, 3)))?;
    let third = phips(ctx, -1, -2, rf(fratio(ctx, 1, 3)))?;
    let d = third - two_thirds;
    let mut coef = Float::new(prec);
    for p in 0..n {
        let tm1 = Float::with_val(prec, &p3(ctx, p) - 1u32);
        coef += Float::with_val(prec, &p3(ctx, p) * &tm1);
    }
    Ok(d.mul_f(&coef))
}

pub fn ap_ss1_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let pi = pi_f(ctx);
    let poly = Float::with_val(prec, &ipow(ctx, 9, n) - &Float::with_val(prec, 4u32 * &p3(ctx, n))) + 3u32;
    let num = Float::with_val(prec, 7u32 * &Float::with_val(prec, &poly * &specfun::constants::apery(ctx)));
    let den = Float::with_val(prec, 36u32 * &Float::with_val(prec, &pi * &pi));
    Ok(rf(-(num / den)))
}

pub fn cat_ss1b_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let mut acc = CompensatedSum::new(ctx);
    for p in 0..n {
        let pj = p3(ctx, n - p - 1);
        let pq = p3(ctx, n - p);
        let head_v = rf(Float::with_val(prec, 1u32 - &Float::with_val(prec, &pj / 2u32)));
        let f_head = phips(ctx, -1, -1, head_v)?.mul_f(&Float::with_val(prec, 12));
        let v2 = rf(Float::with_val(prec, 2u32 - &pq) / 6u32);
        let v4 = rf(Float::with_val(prec, 4u32 - &pq) / 6u32);
        let tm1 = Float::with_val(prec, &p3(ctx, p) - 1u32);
        let swing = (phips(ctx, -1, -1, v4)? - phips(ctx, -1, -1, v2)?)
            .mul_f(&Float::with_val(prec, 18u32 * &tm1));
        let gap = Float::with_val(prec, &p3(ctx, n) - &Float::with_val(prec, 3u32 * &ipow(ctx, 9, p)));
        let logs = log_i_times(ctx, &p3(ctx, p + 1)).mul_f(&Float::with_val(prec, &p3(ctx, -p) * &gap));
        acc.add(&(f_head + swing + logs));
    }
    Ok(acc.value())
}

pub fn cat_ss1b_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    let prec = ctx.prec_bits();
    let tm1 = Float::with_val(prec, &p3(ctx, n) - 1u32);
    let num = Float::with_val(prec, 6u32 * &Float::with_val(prec, &catalan_f(ctx) * &tm1));
    Ok(rf(num / pi_f(ctx)))
}

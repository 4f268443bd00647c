//! Products of circular and hyperbolic ratios over geometric angles,
//! including the scaled variants whose truncations converge to elementary
//! limits. Real positive bases stay in real arithmetic; the one reading
//! with sign-indefinite bases goes through principal-branch complex powers.

use mpcore::{ComplexValue, PrecisionContext, Result};
use rug::ops::Pow;
use rug::Float;

use super::{fpow, fratio, guard_pole, int, ipow, p3, product_over, rf};
use crate::types::ParamSample;

fn cosh_at(prec: u32, x: &Float, scale: &Float) -> Float {
    Float::with_val(prec, x * scale).cosh()
}

fn tanh_at(prec: u32, x: &Float, scale: &Float) -> Float {
    Float::with_val(prec, x * scale).tanh()
}

// ---------------------------------------------------------------- CP-SS / ELL

/// (cos(3^p m)/cos(3^p r))^16 (1 - 2cos(2 3^p r))^2 / (1 - 2cos(2 3^p m))^2
fn cp_base(ctx: &PrecisionContext, m: &Float, r: &Float, p: i64) -> Result<Float> {
    let prec = ctx.prec_bits();
    let t3 = p3(ctx, p);
    let cm = Float::with_val(prec, m * &t3).cos();
    let cr = Float::with_val(prec, r * &t3).cos();
    guard_pole(ctx, &cr, "cos(3^p r)")?;
    let c2m = Float::with_val(prec, 2u32 * &Float::with_val(prec, m * &t3)).cos();
    let c2r = Float::with_val(prec, 2u32 * &Float::with_val(prec, r * &t3)).cos();
    let dm = Float::with_val(prec, 1u32 - &Float::with_val(prec, 2u32 * &c2m));
    let dr = Float::with_val(prec, 1u32 - &Float::with_val(prec, 2u32 * &c2r));
    guard_pole(ctx, &dm, "1 - 2cos(2 3^p m)")?;
    let ratio1 = Float::with_val(prec, &cm / &cr);
    let ratio2 = Float::with_val(prec, &dr / &dm);
    Ok(Float::with_val(prec, (&ratio1).pow(16i32)) * Float::with_val(prec, (&ratio2).pow(2i32)))
}

pub fn cp_ss_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let m = sample.real("m", ctx)?;
    let r = sample.real("r", ctx)?;
    let base = cp_base(ctx, &m, &r, p)?;
    Ok(rf(fpow(ctx, &base, &ipow(ctx, 9, -p))))
}

pub fn cp_ss_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, cp_ss_factor)
}

pub fn cp_ss_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.real("m", ctx)?;
    let r = sample.real("r", ctx)?;
    let n = sample.integer("n")?;
    let cr = r.clone().cos();
    guard_pole(ctx, &cr, "cos r")?;
    let head_ratio = Float::with_val(prec, &m.clone().cos() / &cr);
    let head = fpow(ctx, &head_ratio, &Float::with_val(prec, 18));
    let t3n = p3(ctx, n);
    let cnm = Float::with_val(prec, &m * &t3n).cos();
    guard_pole(ctx, &cnm, "cos(3^n m)")?;
    let cnr = Float::with_val(prec, &r * &t3n).cos();
    let tail_base = Float::with_val(prec, &cnr / &cnm);
    let tail_e = Float::with_val(prec, 2u32 * &p3(ctx, 2 - 2 * n));
    let tail = rf(tail_base).pow_f(&tail_e)?;
    Ok(tail.mul_f(&head))
}

pub fn cp_ss_inf_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let m = sample.real("m", ctx)?;
    let r = sample.real("r", ctx)?;
    let base = cp_base(ctx, &m, &r, p)?;
    let e = Float::with_val(ctx.prec_bits(), &ipow(ctx, 9, -p) / 18u32);
    Ok(rf(fpow(ctx, &base, &e)))
}

pub fn cp_ss_inf_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, cp_ss_inf_factor)
}

pub fn cp_ss_limit(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let m = sample.real("m", ctx)?;
    let r = sample.real("r", ctx)?;
    let cr = r.cos();
    guard_pole(ctx, &cr, "cos r")?;
    Ok(rf(Float::with_val(ctx.prec_bits(), &m.cos() / &cr)))
}

fn ell_angles(sample: &ParamSample, ctx: &PrecisionContext) -> Result<(Float, Float)> {
    let prec = ctx.prec_bits();
    let k = sample.real("k", ctx)?;
    let a = sample.real("a", ctx)?;
    let b = sample.real("b", ctx)?;
    let u = Float::with_val(prec, &k * &a.sin());
    let v = Float::with_val(prec, &k * &b.sin());
    Ok((u, v))
}

pub fn ell_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let (u, v) = ell_angles(sample, ctx)?;
    let base = cp_base(ctx, &u, &v, p)?;
    let e = Float::with_val(ctx.prec_bits(), &ipow(ctx, 9, -p) / 18u32);
    Ok(rf(fpow(ctx, &base, &e)))
}

pub fn ell_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, ell_factor)
}

pub fn ell_limit(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let (u, v) = ell_angles(sample, ctx)?;
    let cv = v.cos();
    guard_pole(ctx, &cv, "cos(k sin b)")?;
    Ok(rf(Float::with_val(ctx.prec_bits(), &u.cos() / &cv)))
}

// ---------------------------------------------------------------- CJ-SS

fn cj_base(ctx: &PrecisionContext, m: &Float, p: i64) -> Float {
    let prec = ctx.prec_bits();
    let t3m = Float::with_val(prec, m * &p3(ctx, p));
    let decay = Float::with_val(prec, -6i32 * &t3m).exp() + 1u32;
    let head = fpow(ctx, &decay, &fratio(ctx, 2, 3));
    let ch = t3m.clone().cosh().square();
    let den = Float::with_val(prec, 2u32 * &Float::with_val(prec, 2u32 * &t3m).cosh()) - 1u32;
    Float::with_val(prec, &head * &ch) / den
}

pub fn cj_ss_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let m = sample.real("m", ctx)?;
    Ok(rf(fpow(ctx, &cj_base(ctx, &m, p), &ipow(ctx, 9, -p))))
}

pub fn cj_ss_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, cj_ss_factor)
}

pub fn cj_ss_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.real("m", ctx)?;
    let n = sample.integer("n")?;
    let tq = p3(ctx, 1 - 2 * n);
    let lead_e = Float::with_val(prec, 1u32 + &tq) * fratio(ctx, 3, 4);
    let lead = fpow(ctx, &Float::with_val(prec, 2), &lead_e);
    let ch3 = Float::with_val(prec, (&m.clone().cosh()).pow(3i32));
    let e3m = Float::with_val(prec, 3u32 * &m).exp();
    let decay = Float::with_val(prec, -2i32 * &Float::with_val(prec, &m * &p3(ctx, n))).exp() + 1u32;
    let den = e3m * fpow(ctx, &decay, &tq);
    Ok(rf(Float::with_val(prec, &lead * &ch3) / den))
}

pub fn cj_ss_inf_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let m = sample.real("m", ctx)?;
    let e = Float::with_val(ctx.prec_bits(), &ipow(ctx, 9, -p) / 3u32);
    Ok(rf(fpow(ctx, &cj_base(ctx, &m, p), &e)))
}

pub fn cj_ss_inf_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, cj_ss_inf_factor)
}

pub fn cj_ss_limit(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.real("m", ctx)?;
    let num = Float::with_val(prec, -2i32 * &m).exp() + 1u32;
    let den = fpow(ctx, &Float::with_val(prec, 2), &fratio(ctx, 3, 4));
    Ok(rf(num / den))
}

// ---------------------------------------------------------------- TH-CC

pub fn th_cc_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.real("m", ctx)?;
    let r = sample.real("r", ctx)?;
    let t3 = p3(ctx, p);
    let two_t3 = Float::with_val(prec, 2u32 * &t3);
    let chm = cosh_at(prec, &m, &two_t3);
    let chr = cosh_at(prec, &r, &two_t3);
    let num = Float::with_val(prec, 2u32 * &chm) + 1u32;
    let den = Float::with_val(prec, 2u32 * &chm) - 1u32;
    let num2 = Float::with_val(prec, 2u32 * &chr) - 1u32;
    let den2 = Float::with_val(prec, 2u32 * &chr) + 1u32;
    let f1 = Float::with_val(prec, &num * &num2) / Float::with_val(prec, &den * &den2);
    let tp = p3(ctx, -p);
    let head = fpow(ctx, &f1, &tp);
    let ratio = Float::with_val(prec, &tanh_at(prec, &r, &t3) / &tanh_at(prec, &m, &t3));
    let tail = fpow(ctx, &ratio, &Float::with_val(prec, 2u32 * &tp));
    Ok(rf(head * tail))
}

pub fn th_cc_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, th_cc_factor)
}

pub fn th_cc_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.real("m", ctx)?;
    let r = sample.real("r", ctx)?;
    let n = sample.integer("n")?;
    let t3n = p3(ctx, n);
    let ratio_n = Float::with_val(prec, &tanh_at(prec, &m, &t3n) / &tanh_at(prec, &r, &t3n));
    let head = fpow(ctx, &ratio_n, &p3(ctx, 1 - n));
    let base = Float::with_val(prec, &r.tanh() / &m.tanh());
    Ok(rf(head * Float::with_val(prec, (&base).pow(3i32))))
}

pub fn th_cc_limit(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.real("m", ctx)?;
    let r = sample.real("r", ctx)?;
    let base = Float::with_val(prec, &r.tanh() / &m.tanh());
    Ok(rf(Float::with_val(prec, (&base).pow(3i32))))
}

// ---------------------------------------------------------------- CH-SS1

pub fn ch_ss1a_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.real("m", ctx)?;
    let r = sample.real("r", ctx)?;
    let t3 = p3(ctx, p);
    let two_t3 = Float::with_val(prec, 2u32 * &t3);
    let am = Float::with_val(prec, 2u32 * &cosh_at(prec, &m, &two_t3)) - 1u32;
    let ar = Float::with_val(prec, 2u32 * &cosh_at(prec, &r, &two_t3)) - 1u32;
    let cr_cm = Float::with_val(prec, &cosh_at(prec, &r, &t3) / &cosh_at(prec, &m, &t3));
    let base = Float::with_val(prec, &am / &ar) * Float::with_val(prec, (&cr_cm).pow(2i32));
    let e1 = Float::with_val(prec, &p3(ctx, 1 - 2 * p) * &Float::with_val(prec, &t3 - 1u32));
    let head = fpow(ctx, &base, &e1);
    let t3_next = p3(ctx, p + 1);
    let ratio = Float::with_val(prec, &cosh_at(prec, &m, &t3_next) / &cosh_at(prec, &r, &t3_next));
    let tail = fpow(ctx, &ratio, &Float::with_val(prec, 2u32 * &ipow(ctx, 9, -p)));
    Ok(rf(head * tail))
}

pub fn ch_ss1a_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, ch_ss1a_factor)
}

pub fn ch_ss1a_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.real("m", ctx)?;
    let r = sample.real("r", ctx)?;
    let n = sample.integer("n")?;
    let t3n = p3(ctx, n);
    let ratio = Float::with_val(prec, &cosh_at(prec, &m, &t3n) / &cosh_at(prec, &r, &t3n));
    let e = Float::with_val(prec, &ipow(ctx, 9, 1 - n) * &Float::with_val(prec, &t3n - 1u32));
    Ok(rf(fpow(ctx, &ratio, &e)))
}

pub fn ch_ss1b_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let x = sample.real("x", ctx)?;
    let t3 = p3(ctx, p);
    let two_t3 = Float::with_val(prec, 2u32 * &t3);
    let third = Float::with_val(prec, &two_t3 / 3u32);
    let num = Float::with_val(prec, 1i32 - &Float::with_val(prec, 2u32 * &cosh_at(prec, &x, &two_t3)));
    let den = Float::with_val(prec, 1i32 - &Float::with_val(prec, 2u32 * &cosh_at(prec, &x, &third)));
    let nine_p = ipow(ctx, 9, -p);
    let e1 = Float::with_val(prec, &p3(ctx, p + 1) - 1u32) * Float::with_val(prec, &nine_p / 2u32);
    let f1 = fpow(ctx, &Float::with_val(prec, &num / &den), &e1);
    let t3_third = Float::with_val(prec, &t3 / 3u32);
    let ratio = Float::with_val(prec, &cosh_at(prec, &x, &t3_third) / &cosh_at(prec, &x, &t3));
    let e2 = Float::with_val(prec, &p3(ctx, p + 1) - 4u32) * &nine_p;
    let f2 = fpow(ctx, &ratio, &e2);
    Ok(rf(f1 * f2))
}

pub fn ch_ss1b_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, ch_ss1b_factor)
}

pub fn ch_ss1b_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let x = sample.real("x", ctx)?;
    let n = sample.integer("n")?;
    let ratio = Float::with_val(
        prec,
        &cosh_at(prec, &x, &p3(ctx, n)) / &cosh_at(prec, &x, &p3(ctx, n - 1)),
    );
    let e = Float::with_val(prec, &p3(ctx, n) - 1u32) * Float::with_val(prec, &ipow(ctx, 9, 1 - n) / 2u32);
    Ok(rf(fpow(ctx, &ratio, &e)))
}

// ---------------------------------------------------------------- CC-COSCOS

pub fn coscos_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let x = sample.real("x", ctx)?;
    let half = fratio(ctx, 1, 2);
    let tp = tanh_at(prec, &x, &Float::with_val(prec, &p3(ctx, p) * &half));
    let tp1 = tanh_at(prec, &x, &Float::with_val(prec, &p3(ctx, p + 1) * &half));
    let s3 = Float::with_val(prec, 3).sqrt();
    let scale = Float::with_val(prec, 2u32 * &p3(ctx, -p - 1));

    let a = ComplexValue::new(s3.clone(), tp.clone());
    let b = ComplexValue::new(s3.clone(), Float::with_val(prec, -3i32 * &tp1));
    let c = ComplexValue::new(s3.clone(), Float::with_val(prec, -3i32 * &tp));
    let d = ComplexValue::new(s3.clone(), tp1.clone());
    let f1 = (&a * &b).div(&(&c * &d))?.pow_f(&p3(ctx, -p - 1))?;

    let f2 = fpow(ctx, &Float::with_val(prec, &tp1 / &tp), &scale);

    let arg1 = (int(ctx, 1) - ComplexValue::new(Float::new(prec), Float::with_val(prec, &s3 * &tp)))
        .mul_f(&half);
    let arg2 = (int(ctx, 1) - ComplexValue::new(Float::new(prec), Float::with_val(prec, &s3 * &tp1)))
        .mul_f(&half);
    let dexp = (arg1.atanh()? - arg2.atanh()?).mul_f(&scale);
    let f3 = dexp.exp();

    Ok(&f1.mul_f(&f2) * &f3)
}

/// as-printed reading: factors through p = n inclusive
pub fn coscos_lhs_primary(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n + 1, coscos_factor)
}

pub fn coscos_rhs_primary(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let x = sample.real("x", ctx)?;
    let n = sample.integer("n")?;
    let third = Float::with_val(prec, &x / 3u32);
    let c = third.cos();
    let num = Float::with_val(prec, 2u32 * &c) + 1u32;
    let den = Float::with_val(prec, 2u32 * &c) - 1u32;
    guard_pole(ctx, &den, "2 cos(x/3) - 1")?;

    let half = fratio(ctx, 1, 2);
    let a1 = Float::with_val(prec, &x * &Float::with_val(prec, &p3(ctx, n - 1) * &half));
    let a2 = Float::with_val(prec, &x * &Float::with_val(prec, &p3(ctx, n) * &half));
    let (s1, c1) = a1.sin_cos(Float::new(prec));
    let (s2, c2) = a2.sin_cos(Float::new(prec));
    guard_pole(ctx, &c1, "tan(3^{n-1} x/2)")?;
    guard_pole(ctx, &s2, "cot(3^n x/2)")?;
    let base = Float::with_val(prec, &s1 / &c1) * Float::with_val(prec, &c2 / &s2);
    let tail = rf(base).pow_f(&p3(ctx, -n))?;
    Ok(tail.mul_f(&Float::with_val(prec, &num / &den)))
}

/// repaired reading: factors through p < n, hyperbolic closed form
pub fn coscos_lhs_alt(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, coscos_factor)
}

pub fn coscos_rhs_alt(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let x = sample.real("x", ctx)?;
    let n = sample.integer("n")?;
    let ch = x.clone().cosh();
    let num = Float::with_val(prec, 2u32 * &ch) + 1u32;
    let den = Float::with_val(prec, 2u32 * &ch) - 1u32;
    let half = fratio(ctx, 1, 2);
    let tn = tanh_at(prec, &x, &Float::with_val(prec, &p3(ctx, n) * &half));
    let tn1 = tanh_at(prec, &x, &Float::with_val(prec, &p3(ctx, n + 1) * &half));
    let base = Float::with_val(prec, &tn / &tn1);
    let tail = fpow(ctx, &base, &p3(ctx, -n));
    Ok(rf(tail * Float::with_val(prec, &num / &den)))
}

pub fn coscos_limit(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let x = sample.real("x", ctx)?;
    let ch = x.cosh();
    let num = Float::with_val(prec, 2u32 * &ch) + 1u32;
    let den = Float::with_val(prec, 2u32 * &ch) - 1u32;
    Ok(rf(num / den))
}

//! Binomial-power products in a complex variable z inside the unit disk.

use mpcore::{sum_series, ComplexValue, Error, PrecisionContext, Result, SeriesMode};
use rug::Float;

use super::{int, p3, product_over};
use crate::types::ParamSample;

fn pow3_int(p: i64) -> i64 {
    3i64.pow(p as u32)
}

/// (1/2) 3^{1-2n} (3^n - 1)
fn alpha(ctx: &PrecisionContext, n: i64) -> Float {
    let prec = ctx.prec_bits();
    let tm1 = Float::with_val(prec, &p3(ctx, n) - 1u32);
    Float::with_val(prec, &p3(ctx, 1 - 2 * n) * &tm1) / 2u32
}

pub fn poly_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let z = sample.cx("z", ctx)?;
    let w = z.powi(pow3_int(p))?;
    let f1 = (w + int(ctx, 1)).pow_f(&p3(ctx, -2 * p - 1))?;
    if p == 0 {
        return Ok(f1);
    }
    let u = z.powi(pow3_int(p - 1))?;
    let num = (&(&(&u - &int(ctx, 1)) * &u) + &int(ctx, 1)).sqrt();
    let den = u + int(ctx, 1);
    let tm1 = Float::with_val(prec, &p3(ctx, p) - 1u32);
    let e = Float::with_val(prec, &super::ipow(ctx, 9, -p) * &tm1);
    let f2 = num.div(&den)?.pow_f(&e)?;
    Ok(&f1 * &f2)
}

pub fn poly_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, poly_factor)
}

pub fn poly_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let z = sample.cx("z", ctx)?;
    let n = sample.integer("n")?;
    let x = z.powi(pow3_int(n - 1))?;
    (x + int(ctx, 1)).pow_f(&alpha(ctx, n))
}

/// sum_p binom(alpha, p) x^p with x = z^{3^{n-1}}
pub fn poly_binom_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let z = sample.cx("z", ctx)?;
    let n = sample.integer("n")?;
    let x = z.powi(pow3_int(n - 1))?;
    let a = alpha(ctx, n);

    let mut coef = Float::with_val(prec, 1);
    let mut xp = ComplexValue::one(ctx);
    let term = move |p: usize| {
        let t = xp.mul_f(&coef);
        let step = Float::with_val(prec, &a - &Float::with_val(prec, p as u32))
            / Float::with_val(prec, (p + 1) as u32);
        coef = Float::with_val(prec, &coef * &step);
        xp = &xp * &x;
        t
    };
    let out = sum_series(term, SeriesMode::Direct, ctx);
    if !out.converged {
        return Err(Error::non_converged("binomial series did not settle"));
    }
    Ok(out.value)
}

pub fn poly_limit(_sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    Ok(ComplexValue::one(ctx))
}

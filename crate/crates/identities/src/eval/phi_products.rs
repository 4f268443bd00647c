//! Exponentials of Phi(z, 1, v) sums that telescope into products of
//! elementary factors.

use mpcore::{ComplexValue, PrecisionContext, Result};
use rug::Float;

use super::{cis, fpow, int, p3, phi, product_over, rf};
use crate::types::ParamSample;

pub fn pp1_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.real("m", ctx)?;
    let t3m = Float::with_val(prec, &m * &p3(ctx, p));
    let z = rf(Float::with_val(prec, -6i32 * &t3m).exp());
    let tp = p3(ctx, -p);
    let v1 = rf(Float::with_val(prec, &tp + 1u32) / 6u32);
    let v5 = rf(Float::with_val(prec, &tp + 5u32) / 6u32);
    let one = int(ctx, 1);
    let f1 = phi(ctx, z.clone(), one.clone(), v1)?;
    let f5 = phi(ctx, z, one, v5)?;
    let swell = rf(Float::with_val(prec, 4u32 * &t3m).exp());
    let damp = Float::with_val(prec, -5i32 * &t3m).exp();
    let inner = (&swell * &f1 + f5).mul_f(&Float::with_val(prec, &damp * &tp));
    Ok(inner.exp())
}

pub fn pp1_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, pp1_factor)
}

pub fn pp1_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.real("m", ctx)?;
    let n = sample.integer("n")?;
    let em = m.clone().exp();
    let three_em = Float::with_val(prec, 3u32 * &em);

    let coth = m.clone().tanh().recip();
    let head = fpow(ctx, &Float::with_val(prec, &coth + 1u32), &three_em)
        * fpow(ctx, &Float::with_val(prec, 2), &Float::with_val(prec, -&three_em));

    let t3n = p3(ctx, n);
    let tn = p3(ctx, -n);
    let zn = rf(Float::with_val(prec, -2i32 * &Float::with_val(prec, &m * &t3n)).exp());
    let vn = rf(Float::with_val(prec, &tn + 1u32) / 2u32);
    let f = phi(ctx, zn, int(ctx, 1), vn)?;
    let damp = Float::with_val(prec, -&Float::with_val(prec, &m * &t3n)).exp();
    let scale = Float::with_val(prec, &p3(ctx, 1 - n) * &damp);
    let tail = (-f.mul_f(&scale)).exp();
    Ok(tail.mul_f(&head))
}

pub fn pp2_factor(sample: &ParamSample, p: i64, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.cx("m", ctx)?;
    let n = sample.integer("n")?;
    let t3 = p3(ctx, p);
    let z = cis(&m, &Float::with_val(prec, 6u32 * &t3));
    let vshift = p3(ctx, n - p);
    let v1 = rf(Float::with_val(prec, &vshift + 1u32) / 6u32);
    let v5 = rf(Float::with_val(prec, &vshift + 5u32) / 6u32);
    let one = int(ctx, 1);
    let f1 = phi(ctx, z.clone(), one.clone(), v1)?;
    let f5 = phi(ctx, z, one, v5)?;
    let q4 = cis(&m, &Float::with_val(prec, 4u32 * &t3));
    let lead = cis(&m, &t3).mul_f(&p3(ctx, -p));
    let inner = &lead * &(f1 + &q4 * &f5);
    Ok(inner.exp())
}

pub fn pp2_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let n = sample.integer("n")?;
    product_over(sample, ctx, n, pp2_factor)
}

pub fn pp2_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let m = sample.cx("m", ctx)?;
    let n = sample.integer("n")?;
    let t3n = p3(ctx, n);
    let two_t3n = Float::with_val(prec, 2u32 * &t3n);

    let base = int(ctx, 1) - cis(&m, &two_t3n);
    let expo = cis(&m, &Float::with_val(prec, -&t3n)).mul_f(&p3(ctx, 1 - n));
    let head = base.pow(&expo)?;

    let v = rf(Float::with_val(prec, &t3n + 1u32) / 2u32);
    let f = phi(ctx, cis(&m, &Float::with_val(prec, 2)), int(ctx, 1), v)?;
    let tail = (&(&cis(&m, &Float::with_val(prec, 1)) * &f) * &int(ctx, 3)).exp();
    Ok(&head * &tail)
}

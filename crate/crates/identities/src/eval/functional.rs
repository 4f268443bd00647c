//! Multiplication-type functional equations relating Phi(z, s, a) to
//! Phi at z^3 and z^9 with shifted parameters.

use mpcore::{ComplexValue, PrecisionContext, Result};

use super::{int, phi};
use crate::types::ParamSample;

fn args(
    sample: &ParamSample,
    ctx: &PrecisionContext,
) -> Result<(ComplexValue, ComplexValue, ComplexValue)> {
    Ok((
        sample.cx("z", ctx)?,
        sample.cx("s", ctx)?,
        sample.cx("a", ctx)?,
    ))
}

fn shifted(a: &ComplexValue, ctx: &PrecisionContext, add: i64, den: i64) -> Result<ComplexValue> {
    (a + &int(ctx, add)).div(&int(ctx, den))
}

/// Phi(z, s, a), the common left side
pub fn fe_lhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let (z, s, a) = args(sample, ctx)?;
    phi(ctx, z, s, a)
}

/// 3^-s (Phi(z^3, s, a/3) + z Phi(z^3, s, (a+1)/3) + z^2 Phi(z^3, s, (a+2)/3))
pub fn fe3_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let (z, s, a) = args(sample, ctx)?;
    let z3 = z.powi(3)?;
    let p0 = phi(ctx, z3.clone(), s.clone(), shifted(&a, ctx, 0, 3)?)?;
    let p1 = phi(ctx, z3.clone(), s.clone(), shifted(&a, ctx, 1, 3)?)?;
    let p2 = phi(ctx, z3, s.clone(), shifted(&a, ctx, 2, 3)?)?;
    let inner = p0 + &z * &(p1 + &z * &p2);
    let scale = int(ctx, 3).pow(&-&s)?;
    Ok(&scale * &inner)
}

fn nine_group(
    z: &ComplexValue,
    s: &ComplexValue,
    a: &ComplexValue,
    ctx: &PrecisionContext,
) -> Result<ComplexValue> {
    let z9 = z.powi(9)?;
    let q2 = phi(ctx, z9.clone(), s.clone(), shifted(a, ctx, 2, 9)?)?;
    let q8 = phi(ctx, z9.clone(), s.clone(), shifted(a, ctx, 8, 9)?)?;
    let q5 = phi(ctx, z9, s.clone(), shifted(a, ctx, 5, 9)?)?;
    Ok(q2 + &z.powi(6)? * &q8 + &z.powi(3)? * &q5)
}

fn fe9_rhs(
    sample: &ParamSample,
    ctx: &PrecisionContext,
    mid_coeff: i64,
    nine_coeff: i64,
) -> Result<ComplexValue> {
    let (z, s, a) = args(sample, ctx)?;
    let z3 = z.powi(3)?;
    let p0 = phi(ctx, z3.clone(), s.clone(), shifted(&a, ctx, 0, 3)?)?;
    let p1 = phi(ctx, z3.clone(), s.clone(), shifted(&a, ctx, 1, 3)?)?;
    let p2 = phi(ctx, z3, s.clone(), shifted(&a, ctx, 2, 3)?)?;
    let three_s = int(ctx, 3).pow(&s)?;
    let trio = &p0 * &int(ctx, 3) + &z * &(&p1 * &int(ctx, 3) + &(&z * &p2) * &int(ctx, mid_coeff));
    let tail = &(&z.powi(2)? * &nine_group(&z, &s, &a, ctx)?) * &int(ctx, nine_coeff);
    let exp = -&(&s * &int(ctx, 2)) - int(ctx, 1);
    let scale = int(ctx, 3).pow(&exp)?;
    Ok(&scale * &(&three_s * &trio + tail))
}

/// Nine-term splitting, variant with +2 z^2 Phi(z^3, s, (a+2)/3) inside the cubic group
pub fn fe9a_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    fe9_rhs(sample, ctx, 2, 1)
}

/// Nine-term splitting, variant with -z^2 Phi(z^3, s, (a+2)/3) and a 4x ninth-power group
pub fn fe9b_rhs(sample: &ParamSample, ctx: &PrecisionContext) -> Result<ComplexValue> {
    fe9_rhs(sample, ctx, -1, 4)
}

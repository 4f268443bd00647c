use rug::{Float, Integer, Rational};

use mpcore::{ComplexValue, Error, PrecisionContext, Result};

use crate::bernoulli::bernoulli;

/// Highest derivative order the asymptotic machinery is tuned for; the
/// identity corpus never goes past psi^(1).
pub const MAX_POLYGAMMA_ORDER: u32 = 4;

fn asymptotic_target(z: &ComplexValue, ctx: &PrecisionContext) -> f64 {
    let w = ctx.working_digits() as f64;
    let base = 1.25 * w * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI);
    base.max(z.im().to_f64().abs()).max(8.0)
}

fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// psi^(n)(w) for Re(w) past the asymptotic target:
/// psi(w) ~ Log w - 1/(2w) - sum B_2k/(2k) w^(-2k), and for n >= 1
/// psi^(n)(w) ~ (-1)^(n-1) [ (n-1)!/w^n + n!/(2 w^(n+1))
///                           + sum B_2k (2k+n-1)!/(2k)! w^(-2k-n) ].
fn asymptotic(order: u32, w: &ComplexValue, ctx: &PrecisionContext) -> Result<ComplexValue> {
    let prec = ctx.prec_bits();
    let eps = ctx.eps();
    let n = order as usize;

    let w_inv = w.recip()?;
    let w_inv2 = &w_inv * &w_inv;

    let mut acc;
    let mut upow;
    if n == 0 {
        acc = w.ln()?;
        acc = &acc - &w_inv.mul_f(&ctx.float(0.5));
        // Series terms run w^(-2k) starting at k=1.
        upow = w_inv2.clone();
    } else {
        let lead = w.powi(-(n as i64))?;
        let next = &lead * &w_inv;
        let f_nm1 = Float::with_val(prec, factorial(order - 1));
        let f_n_half = Float::with_val(prec, Rational::from((factorial(order), Integer::from(2))));
        acc = lead.mul_f(&f_nm1);
        acc = &acc + &next.mul_f(&f_n_half);
        // Series terms run w^(-2k-n) starting at k=1.
        upow = &next * &w_inv;
    }

    let cap = (3.5 * w.abs().to_f64() + 10.0) as usize;
    let mut converged = false;
    for k in 1..=cap {
        let coeff: Rational = if n == 0 {
            // The digamma series enters with an overall minus sign.
            -(bernoulli(2 * k) / Rational::from(2 * k as u64))
        } else {
            // (2k+n-1)! / (2k)! = product of (2k+1)..(2k+n-1)
            let mut rising = Integer::from(1);
            for i in (2 * k + 1)..(2 * k + n) {
                rising *= i as u64;
            }
            bernoulli(2 * k) * Rational::from(rising)
        };
        let term = upow.mul_f(&Float::with_val(prec, coeff));
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
            "polygamma asymptotic tail failed to converge",
        ));
    }
    // Apply the (-1)^(n-1) prefactor for derivative orders >= 1.
    if n >= 1 && n % 2 == 0 {
        Ok(-&acc)
    } else {
        Ok(acc)
    }
}

/// Polygamma function psi^(order)(z) on the complex plane minus the poles
/// at non-positive integers. Orders above MAX_POLYGAMMA_ORDER are rejected
/// rather than extrapolated.
///
/// psi^(n) is meromorphic (no branch cut), so the recurrence
/// psi^(n)(z) = psi^(n)(z+1) - (-1)^n n!/z^(n+1) walks any argument --
/// including negative non-integer reals -- rightward to the asymptotic
/// region without branch bookkeeping.
pub fn polygamma(order: u32, z: &ComplexValue, ctx: &PrecisionContext) -> Result<ComplexValue> {
    if order > MAX_POLYGAMMA_ORDER {
        return Err(Error::invalid(format!(
            "polygamma order {order} exceeds supported maximum {MAX_POLYGAMMA_ORDER}"
        )));
    }
    if !z.is_finite() {
        return Err(Error::invalid("polygamma of a non-finite argument"));
    }
    if let Some(n) = z.as_small_integer(1 << 40) {
        if n <= 0 {
            return Err(Error::domain(format!("polygamma pole at z = {n}")));
        }
    }
    let prec = ctx.prec_bits();
    let target = asymptotic_target(z, ctx);
    let re = z.re().to_f64();
    let shift = if re >= target {
        0usize
    } else {
        (target - re).ceil() as usize + 1
    };

    let mut correction = ComplexValue::zero(ctx);
    let mut base = z.clone();
    for _ in 0..shift {
        correction = &correction + &base.powi(-(order as i64 + 1))?;
        base = &base + &ComplexValue::one(ctx);
    }
    let tail = asymptotic(order, &base, ctx)?;

    // Subtract (-1)^n n! sum_j (z+j)^-(n+1).
    let scaled = correction.mul_f(&Float::with_val(prec, factorial(order)));
    if order % 2 == 0 {
        Ok(&tail - &scaled)
    } else {
        Ok(&tail + &scaled)
    }
}

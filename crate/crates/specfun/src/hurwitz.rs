use rug::{Float, Integer, Rational};

use mpcore::{ComplexValue, CompensatedSum, Error, PrecisionContext, Result};

use crate::bernoulli::bernoulli;

/// Euler-Maclaurin evaluation of zeta(s, v), optionally with the
/// s-derivative, sharing one pass over the data:
///
///   zeta(s,v) = sum_{n<N} (v+n)^-s + u^(1-s)/(s-1) + u^-s/2
///             + sum_{k=1..K} B_2k/(2k)! (s)_{2k-1} u^(-s-2k+1),   u = v+N.
///
/// Powers are principal throughout: for negative real v the first few
/// summands pick up Log(v+n) = ln|v+n| + i*pi, which is exactly the
/// continuation the Lerch reduction formulas need. K is fixed at half the
/// working digits and N is scaled so the k-th tail term has dropped below
/// eps by then; if the tail misbehaves anyway, N escalates once before the
/// evaluation reports failure.
fn em_eval(
    s: &ComplexValue,
    v: &ComplexValue,
    ctx: &PrecisionContext,
    want_deriv: bool,
) -> Result<(ComplexValue, Option<ComplexValue>)> {
    if !s.is_finite() || !v.is_finite() {
        return Err(Error::invalid("hurwitz_zeta of a non-finite argument"));
    }
    if let Some(n) = v.as_small_integer(1 << 40) {
        if n <= 0 {
            return Err(Error::domain(format!("hurwitz_zeta pole at v = {n}")));
        }
    }
    let one = ComplexValue::one(ctx);
    if (s - &one).is_zero() {
        return Err(Error::domain("hurwitz_zeta pole at s = 1"));
    }

    // For Re(s) < 0 the leading block grows like N^|Re(s)| and cancels
    // against the integral term, so the evaluation runs at escalated
    // precision sized to the cancellation and rounds back at the end.
    let re_s = s.re().to_f64();
    let extra = if re_s < 0.5 {
        let loss = (1.5 - re_s.min(0.0)) * (0.62 * ctx.working_digits() as f64 + 30.0).log10();
        loss.ceil() as u32 + 6
    } else {
        0
    };
    let work = ctx.escalated(extra);

    let w = work.working_digits() as f64;
    let s_mag = s.abs().to_f64();
    let base_m = (0.62 * w).max(14.0);
    let m_target = base_m + 0.45 * s_mag + 0.2 * s.im().to_f64().abs();

    let s_w = s.with_prec(work.prec_bits());
    let v_w = v.with_prec(work.prec_bits());
    let mut n_shift = {
        let re_v = v.re().to_f64();
        if re_v >= m_target {
            0usize
        } else {
            (m_target - re_v).ceil() as usize + 1
        }
    };

    for attempt in 0..2 {
        match em_attempt(&s_w, &v_w, n_shift, &work, want_deriv) {
            Ok((value, deriv)) => {
                return Ok((
                    value.with_prec(ctx.prec_bits()),
                    deriv.map(|d| d.with_prec(ctx.prec_bits())),
                ))
            }
            Err(Error::NonConverged(_)) if attempt == 0 => {
                n_shift += m_target.ceil() as usize + 8;
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::non_converged(
        "Euler-Maclaurin tail failed after escalating N",
    ))
}

fn em_attempt(
    s: &ComplexValue,
    v: &ComplexValue,
    n_shift: usize,
    ctx: &PrecisionContext,
    want_deriv: bool,
) -> Result<(ComplexValue, Option<ComplexValue>)> {
    let prec = ctx.prec_bits();
    let eps = ctx.eps();
    let neg_s = -s;
    let k_cap = (ctx.working_digits() as usize / 2).max(12);

    // Leading block sum_{n<N} (v+n)^-s, with the derivative accumulating
    // -Log(v+n) (v+n)^-s alongside.
    let mut head = CompensatedSum::new(ctx);
    let mut dhead = CompensatedSum::new(ctx);
    let mut vn = v.clone();
    let one = ComplexValue::one(ctx);
    for _ in 0..n_shift {
        let p = vn.pow(&neg_s)?;
        if want_deriv {
            dhead.add(&-&(&vn.ln()? * &p));
        }
        head.add(&p);
        vn = &vn + &one;
    }
    let u = vn;
    let ln_u = u.ln()?;
    let a = u.pow(&neg_s)?;

    // Integral term u^(1-s)/(s-1) and boundary term u^-s/2.
    let s_minus_1 = s - &one;
    let u_pow_1ms = &u * &a;
    let t1 = u_pow_1ms.div(&s_minus_1)?;
    let t2 = a.mul_f(&ctx.float(0.5));

    let mut total = CompensatedSum::new(ctx);
    total.add(&t1);
    total.add(&t2);

    let mut dtotal = CompensatedSum::new(ctx);
    if want_deriv {
        // d/ds [u^(1-s)/(s-1)] = u^(1-s) (-Log u/(s-1) - 1/(s-1)^2)
        let inv = s_minus_1.recip()?;
        let bracket = &(-&(&ln_u * &inv)) - &(&inv * &inv);
        dtotal.add(&(&u_pow_1ms * &bracket));
        dtotal.add(&-&(&ln_u * &t2));
    }

    // Bernoulli tail with incremental Pochhammer pair P = (s)_m and its
    // s-derivative; the pair form keeps the derivative exact even when a
    // factor of P vanishes at negative integer s.
    let u_inv = u.recip()?;
    let u_inv2 = &u_inv * &u_inv;
    let mut upow = &a * &u_inv;
    let mut poch = s.clone();
    let mut dpoch = one.clone();
    let mut m = 1usize;
    let mut converged = false;
    let mut bsum = CompensatedSum::new(ctx);
    let mut dbsum = CompensatedSum::new(ctx);
    let mut run_scale = ctx.one();

    for k in 1..=k_cap {
        let coeff = bernoulli(2 * k) / Rational::from(Integer::from(Integer::factorial(2 * k as u32)));
        let c = Float::with_val(prec, coeff);
        let term = (&poch * &upow).mul_f(&c);
        bsum.add(&term);
        let mut gauge = term.abs();
        if want_deriv {
            let dterm = (&(&dpoch * &upow) - &(&(&poch * &upow) * &ln_u)).mul_f(&c);
            dbsum.add(&dterm);
            gauge = gauge.max(&dterm.abs());
        }
        run_scale = run_scale.max(&gauge);
        if gauge <= Float::with_val(prec, &eps * &run_scale).max(&eps) {
            converged = true;
            break;
        }
        // Advance (s)_m -> (s)_{m+2} and u^(-s-m) -> u^(-s-m-2).
        for _ in 0..2 {
            let sm = s + &ComplexValue::from_int(ctx, m as i64);
            dpoch = &(&dpoch * &sm) + &poch;
            poch = &poch * &sm;
            m += 1;
        }
        upow = &upow * &u_inv2;
    }
    if !converged {
        return Err(Error::non_converged("Euler-Maclaurin tail did not settle"));
    }

    total.add(&bsum.value());
    let value = &head.value() + &total.value();
    if want_deriv {
        dtotal.add(&dbsum.value());
        let deriv = &dhead.value() + &dtotal.value();
        Ok((value, Some(deriv)))
    } else {
        Ok((value, None))
    }
}

/// Hurwitz zeta zeta(s, v) for complex s != 1 and v off the non-positive
/// integers, analytically continued in s by Euler-Maclaurin summation.
pub fn hurwitz_zeta(s: &ComplexValue, v: &ComplexValue, ctx: &PrecisionContext) -> Result<ComplexValue> {
    em_eval(s, v, ctx, false).map(|(value, _)| value)
}

/// s-derivative zeta'(s, v), computed by differentiating every term of the
/// same Euler-Maclaurin formula analytically (no finite differences).
pub fn hurwitz_zeta_sderiv(
    s: &ComplexValue,
    v: &ComplexValue,
    ctx: &PrecisionContext,
) -> Result<ComplexValue> {
    em_eval(s, v, ctx, true).map(|(_, deriv)| deriv.expect("derivative requested"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::bernoulli_poly;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    fn rel_err(got: &ComplexValue, want: &ComplexValue, c: &PrecisionContext) -> Float {
        let diff = (got - want).abs();
        let scale = want.abs().max(&c.one());
        Float::with_val(c.prec_bits(), diff / scale)
    }

    #[test]
    fn basel_value() {
        let c = ctx();
        let got = hurwitz_zeta(&ComplexValue::from_int(&c, 2), &ComplexValue::one(&c), &c).unwrap();
        let pi2_6 = Float::with_val(c.prec_bits(), crate::constants::pi(&c).square() / 6u32);
        let want = ComplexValue::from_real(pi2_6);
        assert!(rel_err(&got, &want, &c) < c.tol());
    }

    #[test]
    fn zeta_at_zero_is_half_minus_v() {
        let c = ctx();
        let v = ComplexValue::from_f64(&c, 0.3, 0.0);
        let got = hurwitz_zeta(&ComplexValue::zero(&c), &v, &c).unwrap();
        let want = ComplexValue::from_f64(&c, 0.2, 0.0);
        assert!(rel_err(&got, &want, &c) < c.tol());
    }

    #[test]
    fn negative_integer_orders_match_bernoulli_polynomials() {
        let c = ctx();
        let points = [
            ComplexValue::from_f64(&c, 0.25, 0.0),
            ComplexValue::from_f64(&c, 0.7, 0.3),
            ComplexValue::from_f64(&c, -0.6, 0.0),
            ComplexValue::from_f64(&c, 1.5, -0.8),
        ];
        for v in &points {
            for n in 0..=6u32 {
                let s = ComplexValue::from_int(&c, -(n as i64));
                let got = hurwitz_zeta(&s, v, &c).unwrap();
                let want = -&bernoulli_poly(n as usize + 1, v, &c)
                    .div_f(&c.float_i(n as i64 + 1))
                    .unwrap();
                assert!(
                    rel_err(&got, &want, &c) < c.tol(),
                    "n = {n}, v = {v}"
                );
            }
        }
    }

    #[test]
    fn frozen_complex_point() {
        let c = ctx();
        let s = ComplexValue::from_f64(&c, 2.5, -1.5);
        let v = ComplexValue::from_f64(&c, 0.75, 0.0);
        let got = hurwitz_zeta(&s, &v, &c).unwrap();
        let want = ComplexValue::new(
            c.parse_float("1.966215664403719248655887375554438231674747217219364256")
                .unwrap(),
            c.parse_float("-0.55241852412055238735814287866886987785116201871571081938")
                .unwrap(),
        );
        assert!(rel_err(&got, &want, &c) < c.tol());
    }

    #[test]
    fn sderiv_frozen_points() {
        let c = ctx();
        let cases = [
            ("2", "0.3", "12.341930688885219926949293237555377172512884598964573728"),
            ("-1", "1", "-0.16542114370045092921391966024278064276403638033520178367"),
        ];
        for (s, v, want) in cases {
            let got = hurwitz_zeta_sderiv(
                &ComplexValue::from_real(c.parse_float(s).unwrap()),
                &ComplexValue::from_real(c.parse_float(v).unwrap()),
                &c,
            )
            .unwrap();
            let w = ComplexValue::from_real(c.parse_float(want).unwrap());
            assert!(rel_err(&got, &w, &c) < c.tol(), "s = {s}");
        }
    }

    #[test]
    fn sderiv_at_zero_gives_half_log_two_pi() {
        let c = ctx();
        let got = hurwitz_zeta_sderiv(&ComplexValue::zero(&c), &ComplexValue::one(&c), &c).unwrap();
        let two_pi = Float::with_val(c.prec_bits(), 2u32 * crate::constants::pi(&c));
        let want = ComplexValue::from_real(Float::with_val(c.prec_bits(), -two_pi.ln() / 2u32));
        assert!(rel_err(&got, &want, &c) < c.tol());
    }

    #[test]
    fn pole_inputs_error() {
        let c = ctx();
        let v = ComplexValue::from_f64(&c, 0.4, 0.0);
        assert!(hurwitz_zeta(&ComplexValue::one(&c), &v, &c).is_err());
        assert!(hurwitz_zeta(&ComplexValue::from_int(&c, 2), &ComplexValue::from_int(&c, -2), &c).is_err());
    }
}

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::float::Constant;
use rug::{Float, Integer};

use mpcore::{ComplexValue, PrecisionContext};

use crate::hurwitz::{hurwitz_zeta, hurwitz_zeta_sderiv};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Pi,
    Ln2,
    EulerGamma,
    Catalan,
    Glaisher,
    Apery,
}

/// Constants are pure functions of precision, so one process-wide map
/// keyed by (constant, bit precision) serves every context.
fn cache() -> &'static Mutex<HashMap<(Kind, u32), Float>> {
    static CACHE: OnceLock<Mutex<HashMap<(Kind, u32), Float>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached<F>(kind: Kind, ctx: &PrecisionContext, compute: F) -> Float
where
    F: FnOnce() -> Float,
{
    let key = (kind, ctx.prec_bits());
    if let Some(hit) = cache().lock().expect("constant cache poisoned").get(&key) {
        return hit.clone();
    }
    let value = compute();
    cache()
        .lock()
        .expect("constant cache poisoned")
        .insert(key, value.clone());
    value
}

/// pi at the context's working precision (MPFR's builtin).
pub fn pi(ctx: &PrecisionContext) -> Float {
    cached(Kind::Pi, ctx, || {
        Float::with_val(ctx.prec_bits(), Constant::Pi)
    })
}

/// ln 2 at the context's working precision (MPFR's builtin).
pub fn ln2(ctx: &PrecisionContext) -> Float {
    cached(Kind::Ln2, ctx, || {
        Float::with_val(ctx.prec_bits(), Constant::Log2)
    })
}

/// Euler's constant gamma (MPFR's builtin).
pub fn euler_gamma(ctx: &PrecisionContext) -> Float {
    cached(Kind::EulerGamma, ctx, || {
        Float::with_val(ctx.prec_bits(), Constant::Euler)
    })
}

/// Catalan's constant C (MPFR's builtin).
pub fn catalan(ctx: &PrecisionContext) -> Float {
    cached(Kind::Catalan, ctx, || {
        Float::with_val(ctx.prec_bits(), Constant::Catalan)
    })
}

/// Glaisher-Kinkelin constant A = exp(1/12 - zeta'(-1)).
pub fn glaisher(ctx: &PrecisionContext) -> Float {
    cached(Kind::Glaisher, ctx, || {
        let s = ComplexValue::from_int(ctx, -1);
        let v = ComplexValue::one(ctx);
        let zp = hurwitz_zeta_sderiv(&s, &v, ctx)
            .expect("zeta'(-1) evaluation cannot fail on fixed arguments");
        let twelfth = Float::with_val(ctx.prec_bits(), 1) / 12u32;
        Float::with_val(ctx.prec_bits(), twelfth - zp.re()).exp()
    })
}

/// Apery's constant zeta(3), via the Euler-Maclaurin zeta machinery.
pub fn apery(ctx: &PrecisionContext) -> Float {
    cached(Kind::Apery, ctx, || {
        let s = ComplexValue::from_int(ctx, 3);
        let v = ComplexValue::one(ctx);
        let z3 = hurwitz_zeta(&s, &v, ctx)
            .expect("zeta(3) evaluation cannot fail on fixed arguments");
        let (re, _) = z3.into_parts();
        re
    })
}

/// pi by the Brent-Salamin arithmetic-geometric mean iteration;
/// the independent cross-check route for the MPFR builtin.
pub fn pi_agm(ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec_bits() + 64;
    let mut a = Float::with_val(prec, 1);
    let mut b = Float::with_val(prec, 2u32).recip().sqrt();
    let mut t = Float::with_val(prec, 0.25f64);
    let mut p = Float::with_val(prec, 1);
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32 - 8)));
    loop {
        let an = Float::with_val(prec, &a + &b) / 2u32;
        let diff = Float::with_val(prec, &a - &an);
        b = Float::with_val(prec, &a * &b).sqrt();
        t -= Float::with_val(prec, &p * &diff.clone().square());
        p *= 2u32;
        a = an;
        if Float::with_val(prec, &a - &b).abs() <= eps {
            break;
        }
    }
    let sum = Float::with_val(prec, &a + &b);
    let num = sum.square();
    let result = num / (Float::with_val(prec, 4u32 * &t));
    Float::with_val(ctx.prec_bits(), result)
}

/// Catalan's constant by a central-binomial series,
/// C = (pi/8) ln(2+sqrt 3) + (3/8) sum 1/(binom(2n,n) (2n+1)^2).
pub fn catalan_series(ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec_bits() + 32;
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32 - 8)));
    let mut sum = Float::new(prec);
    let mut binom = Integer::from(1);
    let mut n = 0u64;
    loop {
        let denom = Float::with_val(prec, &binom * Integer::from((2 * n + 1) * (2 * n + 1)));
        let term = Float::with_val(prec, denom.recip_ref());
        sum += &term;
        if term <= eps {
            break;
        }
        // C(2n+2, n+1) = C(2n, n) * 2(2n+1)/(n+1), exactly.
        binom *= 2 * (2 * n + 1);
        binom /= n + 1;
        n += 1;
    }
    let three_eighths = Float::with_val(prec, 3u32) / 8u32;
    let sqrt3 = Float::with_val(prec, 3u32).sqrt();
    let log_part = Float::with_val(prec, 2u32 + sqrt3).ln();
    let pi_p = Float::with_val(prec, Constant::Pi);
    let value = pi_p / 8u32 * log_part + three_eighths * sum;
    Float::with_val(ctx.prec_bits(), value)
}

/// Euler's gamma by the Brent-McMillan Bessel-ratio scheme:
/// gamma = A(n)/B(n) - ln n with A = sum H_k (n^k/k!)^2, B = sum (n^k/k!)^2,
/// n sized so the O(e^(-4n)) error clears the working digits.
pub fn euler_gamma_bm(ctx: &PrecisionContext) -> Float {
    let wd = ctx.working_digits() as f64;
    let n = ((wd * std::f64::consts::LN_10 + 25.0) / 4.0).ceil() as u32;
    let prec = ctx.prec_bits() + 64;
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32 - 8)));

    let nf = Float::with_val(prec, n);
    let mut term = Float::with_val(prec, 1);
    let mut h = Float::new(prec);
    let mut a = Float::new(prec);
    let mut b = Float::with_val(prec, 1);
    for k in 1..(16 * n as usize) {
        let ratio = Float::with_val(prec, &nf / Float::with_val(prec, k as u32));
        term *= ratio.square();
        h += Float::with_val(prec, k as u32).recip();
        a += Float::with_val(prec, &term * &h);
        b += &term;
        if k as u32 > n {
            let gauge = Float::with_val(prec, &term * &h);
            if gauge <= Float::with_val(prec, &eps * &b) {
                break;
            }
        }
    }
    let value = a / b - nf.ln();
    Float::with_val(ctx.prec_bits(), value)
}

/// Glaisher-Kinkelin constant by the gamma/zeta'(2) route:
/// ln A = (gamma + ln 2pi - 6 zeta'(2)/pi^2) / 12, with zeta'(2) recovered
/// from the accelerated alternating series for eta'(2). Fully independent
/// of the Euler-Maclaurin path used by `glaisher`.
pub fn glaisher_gamma_route(ctx: &PrecisionContext) -> Float {
    let work = ctx.escalated(10);
    let prec = work.prec_bits();

    // eta'(2) = sum_{n>=1} (-1)^n ln(n)/n^2, accelerated.
    let eta_prime = mpcore::sum_series(
        |k| {
            let n = (k + 1) as i64;
            let ln_n = work.float_i(n).ln();
            let mag = Float::with_val(prec, ln_n / work.float_i(n * n));
            let signed = if k % 2 == 1 { mag } else { -mag };
            ComplexValue::from_real(signed)
        },
        mpcore::SeriesMode::AlternatingAccelerated,
        &work,
    );
    assert!(
        eta_prime.converged,
        "alternating acceleration of eta'(2) must converge"
    );

    let pi_p = Float::with_val(prec, Constant::Pi);
    let zeta2 = Float::with_val(prec, pi_p.clone().square() / 6u32);
    let ln2_p = Float::with_val(prec, Constant::Log2);
    let zeta_prime_2 = Float::with_val(prec, 2u32 * eta_prime.value.re()) - ln2_p * zeta2;

    let gamma_c = Float::with_val(prec, Constant::Euler);
    let ln_two_pi = Float::with_val(prec, 2u32 * &pi_p).ln();
    let six_term = Float::with_val(prec, 6u32 * zeta_prime_2) / pi_p.square();
    let ln_a = (gamma_c + ln_two_pi - six_term) / 12u32;
    Float::with_val(ctx.prec_bits(), ln_a.exp())
}

/// Apery's constant by the alternating central-binomial series
/// zeta(3) = (5/2) sum_{n>=1} (-1)^(n-1) / (n^3 binom(2n,n)).
pub fn apery_series(ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec_bits() + 32;
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32 - 8)));
    let mut sum = Float::new(prec);
    let mut binom = Integer::from(2);
    let mut n = 1u64;
    loop {
        let denom = Float::with_val(prec, &binom * Integer::from(n * n * n));
        let term = Float::with_val(prec, denom.recip_ref());
        if n % 2 == 1 {
            sum += &term;
        } else {
            sum -= &term;
        }
        if term <= eps {
            break;
        }
        binom *= 2 * (2 * n + 1);
        binom /= n + 1;
        n += 1;
    }
    let value = Float::with_val(prec, 5u32 * sum) / 2u32;
    Float::with_val(ctx.prec_bits(), value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    fn assert_matches(got: &Float, want: &str, c: &PrecisionContext) {
        let w = c.parse_float(want).unwrap();
        let diff = Float::with_val(c.prec_bits(), got - &w).abs();
        let scale = w.abs().max(&c.one());
        assert!(
            Float::with_val(c.prec_bits(), diff / scale) < c.tol(),
            "constant mismatch: got {got}"
        );
    }

    #[test]
    fn frozen_decimal_expansions() {
        let c = ctx();
        assert_matches(&pi(&c), "3.1415926535897932384626433832795028841971693993751058209749446", &c);
        assert_matches(&catalan(&c), "0.91596559417721901505460351493238411077414937428167213426649812", &c);
        assert_matches(&glaisher(&c), "1.28242712910062263687534256886979172776768892732500119206374", &c);
        assert_matches(&apery(&c), "1.2020569031595942853997381615114499907649862923404988817922716", &c);
        assert_matches(&euler_gamma(&c), "0.57721566490153286060651209008240243104215933593992359880576723", &c);
        assert_matches(&ln2(&c), "0.69314718055994530941723212145817656807550013436025525412068001", &c);
    }

    #[test]
    fn dual_routes_agree_to_target_digits() {
        let c = ctx();
        let pairs = [
            (pi(&c), pi_agm(&c)),
            (catalan(&c), catalan_series(&c)),
            (euler_gamma(&c), euler_gamma_bm(&c)),
            (glaisher(&c), glaisher_gamma_route(&c)),
            (apery(&c), apery_series(&c)),
        ];
        for (main, alt) in pairs {
            let diff = Float::with_val(c.prec_bits(), &main - &alt).abs();
            let scale = main.clone().abs().max(&c.one());
            assert!(
                Float::with_val(c.prec_bits(), diff / scale) < c.tol(),
                "routes disagree: {main} vs {alt}"
            );
        }
    }

    #[test]
    fn cache_returns_identical_values() {
        let c = ctx();
        let first = pi(&c);
        let second = pi(&c);
        assert_eq!(first, second);
    }
}

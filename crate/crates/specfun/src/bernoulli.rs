use std::sync::Mutex;
use std::sync::OnceLock;

use rug::{Float, Integer, Rational};

use mpcore::{ComplexValue, PrecisionContext};

/// Process-wide cache of exact Bernoulli numbers B_0, B_1, B_2, ...
///
/// The asymptotic tails of log-gamma, polygamma and the Euler-Maclaurin
/// zeta evaluation all walk the same prefix of this sequence, so the
/// recurrence cost is paid once per process, not once per call.
fn cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(vec![
            Rational::from(1),
            Rational::from((-1, 2)),
        ])
    })
}

/// Exact Bernoulli number B_n (convention B_1 = -1/2).
///
/// Extends the cache as needed via the defining recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0.
pub fn bernoulli(n: usize) -> Rational {
    let mut cached = cache().lock().expect("bernoulli cache poisoned");
    while cached.len() <= n {
        let m = cached.len();
        if m % 2 == 1 {
            cached.push(Rational::new());
            continue;
        }
        // binom tracks C(m+1, j) incrementally; the division is exact.
        let mut binom = Integer::from(1);
        let mut acc = Rational::new();
        for (j, bj) in cached.iter().enumerate() {
            acc += bj * Rational::from(&binom);
            binom *= m as u32 + 1 - j as u32;
            binom /= j as u32 + 1;
        }
        acc /= -Rational::from(m as u32 + 1);
        cached.push(acc);
    }
    cached[n].clone()
}

/// B_n rounded into a Float at the context's working precision.
pub fn bernoulli_float(n: usize, ctx: &PrecisionContext) -> Float {
    Float::with_val(ctx.prec_bits(), bernoulli(n))
}

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k), evaluated at a
/// complex point. Serves as the closed-form oracle for zeta(-n, v).
pub fn bernoulli_poly(n: usize, x: &ComplexValue, ctx: &PrecisionContext) -> ComplexValue {
    let mut binom = Integer::from(1);
    let mut acc = ComplexValue::zero(ctx);
    let mut xpow = ComplexValue::one(ctx);
    // Walk k downward from n so the running power of x can grow upward.
    for k in (0..=n).rev() {
        let coeff = Rational::from(&binom) * bernoulli(k);
        let c = Float::with_val(ctx.prec_bits(), coeff);
        acc = &acc + &xpow.mul_f(&c);
        if k > 0 {
            binom *= k as u32;
            binom /= (n - k + 1) as u32;
            xpow = &xpow * x;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    #[test]
    fn small_bernoulli_numbers_are_exact() {
        assert_eq!(bernoulli(0), Rational::from(1));
        assert_eq!(bernoulli(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli(2), Rational::from((1, 6)));
        assert_eq!(bernoulli(3), Rational::new());
        assert_eq!(bernoulli(4), Rational::from((-1, 30)));
        assert_eq!(bernoulli(12), Rational::from((-691, 2730)));
    }

    #[test]
    fn large_even_index_has_expected_denominator() {
        // By von Staudt-Clausen the denominator of B_30 is the product of
        // primes p with (p-1) | 30.
        let b30 = bernoulli(30);
        assert_eq!(b30.denom(), &Integer::from(2 * 3 * 7 * 11 * 31));
    }

    #[test]
    fn bernoulli_poly_matches_hand_expansions() {
        let c = ctx();
        let x = ComplexValue::from_f64(&c, 0.3, -0.2);
        // B_2(x) = x^2 - x + 1/6
        let sixth = ComplexValue::from_int(&c, 1)
            .div(&ComplexValue::from_int(&c, 6))
            .unwrap();
        let direct = &(&(&x * &x) - &x) + &sixth;
        let poly = bernoulli_poly(2, &x, &c);
        let diff = (&poly - &direct).abs();
        assert!(diff < c.tol());
    }

    #[test]
    fn bernoulli_poly_at_zero_recovers_numbers() {
        let c = ctx();
        let zero = ComplexValue::zero(&c);
        for n in 0..8 {
            let poly = bernoulli_poly(n, &zero, &c);
            let expect = bernoulli_float(n, &c);
            let diff = Float::with_val(c.prec_bits(), poly.re() - &expect).abs();
            assert!(diff < c.tol(), "B_{n}(0) != B_{n}");
        }
    }
}

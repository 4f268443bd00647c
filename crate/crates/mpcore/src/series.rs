use rug::ops::Pow;
use rug::Float;

use crate::complex::ComplexValue;
use crate::context::PrecisionContext;
use crate::error::{Error, Result};

/// How `sum_series` should combine terms.
///
/// `Direct` adds terms in order and stops once they are negligible.
/// `AlternatingAccelerated` assumes terms alternate in sign (as a sequence
/// `t_k = (-1)^k a_k` with smoothly decaying `a_k`) and applies Chebyshev
/// weighted summation, which reaches full precision with O(digits) terms
/// even when the raw series converges too slowly to sum directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesMode {
    Direct,
    AlternatingAccelerated,
}

/// Outcome of a series summation.
///
/// Invariant: when `converged` is true, `tail_bound` does not exceed
/// 10^-digits * max(1, |value|), so `value` is usable at the context's
/// target accuracy without further checks.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub value: ComplexValue,
    pub terms_used: usize,
    pub converged: bool,
    pub tail_bound: Float,
}

/// Sums `term(0) + term(1) + ...` under the given mode.
///
/// Direct mode stops after the term magnitude and a running geometric tail
/// estimate both stay below 10^-(digits+guard) * max(1, |partial|) for three
/// consecutive terms; a series that fails to get there within `max_terms`
/// comes back with `converged = false` rather than an error, so callers can
/// escalate or re-route.
pub fn sum_series<F>(term: F, mode: SeriesMode, ctx: &PrecisionContext) -> SeriesResult
where
    F: FnMut(usize) -> ComplexValue,
{
    match mode {
        SeriesMode::Direct => sum_direct(term, ctx),
        SeriesMode::AlternatingAccelerated => sum_alternating(term, ctx),
    }
}

fn fmax(a: Float, b: &Float) -> Float {
    a.max(b)
}

fn sum_direct<F>(mut term: F, ctx: &PrecisionContext) -> SeriesResult
where
    F: FnMut(usize) -> ComplexValue,
{
    let prec = ctx.prec_bits();
    let eps = ctx.eps();
    let one = ctx.one();
    let inf = Float::with_val(prec, rug::float::Special::Infinity);

    let mut sum = ComplexValue::zero(ctx);
    let mut prev_mag: Option<Float> = None;
    let mut tail = inf.clone();
    let mut streak = 0u32;

    for n in 0..ctx.max_terms() {
        let t = term(n);
        if !t.is_finite() {
            return SeriesResult {
                value: t,
                terms_used: n + 1,
                converged: false,
                tail_bound: inf,
            };
        }
        sum = &sum + &t;
        let mag = t.abs();

        // Geometric tail estimate from the last two magnitudes; infinite
        // when the terms are not (yet) decreasing.
        tail = if mag.is_zero() {
            ctx.zero()
        } else {
            match &prev_mag {
                Some(pm) if *pm > mag => {
                    let r = Float::with_val(prec, &mag / pm);
                    let denom = Float::with_val(prec, 1 - &r);
                    Float::with_val(prec, &mag * &r) / denom
                }
                _ => inf.clone(),
            }
        };

        let thresh = Float::with_val(prec, &eps * &fmax(sum.abs(), &one));
        if mag <= thresh && tail <= thresh {
            streak += 1;
        } else {
            streak = 0;
        }
        prev_mag = Some(mag);

        if streak >= 3 {
            return SeriesResult {
                value: sum,
                terms_used: n + 1,
                converged: true,
                tail_bound: tail,
            };
        }
    }

    SeriesResult {
        value: sum,
        terms_used: ctx.max_terms(),
        converged: false,
        tail_bound: tail,
    }
}

/// One Chebyshev-weighted pass over `a[0..m]` where the series being summed
/// is sum_k (-1)^k a[k]. Error decays like (3 + sqrt(8))^-m.
fn chebyshev_alternating_pass(a: &[ComplexValue], m: usize, prec: u32) -> ComplexValue {
    let sqrt8 = Float::with_val(prec, 8).sqrt();
    let base = Float::with_val(prec, 3) + sqrt8;
    let dp = base.pow(m as u32);
    let d = (Float::with_val(prec, 1) / &dp + &dp) / 2u32;

    let mut b = Float::with_val(prec, -1);
    let mut c = -d.clone();
    let mut s = ComplexValue::new(Float::new(prec), Float::new(prec));
    let mi = m as i64;
    for (k, ak) in a.iter().take(m).enumerate() {
        c = Float::with_val(prec, &b - &c);
        s = &s + &ak.mul_f(&c);
        let ki = k as i64;
        let num = 2 * (ki + mi) * (ki - mi);
        let den = (2 * ki + 1) * (ki + 1);
        b = b * Float::with_val(prec, num) / Float::with_val(prec, den);
    }
    s.div_f(&d).expect("weight denominator is positive")
}

fn sum_alternating<F>(mut term: F, ctx: &PrecisionContext) -> SeriesResult
where
    F: FnMut(usize) -> ComplexValue,
{
    let prec = ctx.prec_bits();
    let eps = ctx.eps();
    let one = ctx.one();
    let w = ctx.working_digits() as f64;
    // (3 + sqrt 8)^-m < 10^-w  =>  m > w ln 10 / ln(3 + sqrt 8)
    let mut m = (w * std::f64::consts::LN_10 / (3.0 + 8f64.sqrt()).ln()).ceil() as usize + 4;

    let mut cache: Vec<ComplexValue> = Vec::new();
    let mut best: Option<(ComplexValue, Float, usize)> = None;

    for _ in 0..2 {
        let need = m + 8;
        if need > ctx.max_terms() {
            break;
        }
        while cache.len() < need {
            let k = cache.len();
            let t = term(k);
            cache.push(if k % 2 == 0 { t } else { -&t });
        }
        if cache.iter().any(|a| !a.is_finite()) {
            break;
        }
        let s1 = chebyshev_alternating_pass(&cache, m, prec);
        let s2 = chebyshev_alternating_pass(&cache, need, prec);
        let delta = (&s1 - &s2).abs();
        let thresh = Float::with_val(prec, &eps * &fmax(s2.abs(), &one));
        let ok = delta <= thresh;
        best = Some((s2, delta, need));
        if ok {
            let (value, tail_bound, terms_used) = best.unwrap();
            return SeriesResult {
                value,
                terms_used,
                converged: true,
                tail_bound,
            };
        }
        m *= 2;
    }

    match best {
        Some((value, tail_bound, terms_used)) => SeriesResult {
            value,
            terms_used,
            converged: false,
            tail_bound,
        },
        None => SeriesResult {
            value: ComplexValue::zero(ctx),
            terms_used: 0,
            converged: false,
            tail_bound: Float::with_val(prec, rug::float::Special::Infinity),
        },
    }
}

/// Sums `sum_n coeff(n) z^n` for `z` on the unit circle, `z != 1`, where the
/// raw series converges only conditionally.
///
/// Partial sums are grouped into blocks of `B` terms chosen so that
/// `Z = z^B` sits well away from 1, then repeatedly smoothed with the
/// weighted average `S'_j = (S_{j+1} - Z S_j) / (1 - Z)`, each pass knocking
/// out the leading oscillatory error component. The averaging amplifies
/// roundoff by up to `2/|1-Z|` per pass, so the whole computation runs at a
/// correspondingly padded precision; the coefficient callback receives that
/// padded context.
pub fn unit_circle_sum<F>(
    mut coeff: F,
    z: &ComplexValue,
    ctx: &PrecisionContext,
) -> Result<SeriesResult>
where
    F: FnMut(usize, &PrecisionContext) -> ComplexValue,
{
    let az = z.abs().to_f64();
    if (az - 1.0).abs() > 1e-8 {
        return Err(Error::invalid(format!(
            "unit-circle summation needs |z| = 1, got |z| = {az}"
        )));
    }
    let theta = z.arg().to_f64();
    if theta == 0.0 {
        return Err(Error::domain("unit-circle summation is singular at z = 1"));
    }

    // Smallest block size whose aggregate ratio z^B lands in the half-plane
    // cos(B theta) <= -0.45, i.e. |1 - z^B| >= 1.7.
    let mut bsize = 0usize;
    for b in 1..=4096usize {
        if (b as f64 * theta).cos() <= -0.45 {
            bsize = b;
            break;
        }
    }
    if bsize == 0 {
        return Err(Error::non_converged(
            "argument of z too close to a low-order rational multiple of 2 pi near zero",
        ));
    }

    let cosb = (bsize as f64 * theta).cos();
    let gap = (2.0 - 2.0 * cosb).sqrt(); // |1 - Z|
    let rho = 1.0 / gap; // per-pass error contraction
    let w = ctx.working_digits() as f64;
    let passes = (w * std::f64::consts::LN_10 / -rho.ln()).ceil() as usize + 8;
    let noise_gain = 2.0 * rho;
    let pad = if noise_gain > 1.0 {
        (passes as f64 * noise_gain.ln() / std::f64::consts::LN_10).ceil() as u32 + 8
    } else {
        0
    };

    let total_terms = (passes + 1) * bsize;
    if total_terms > ctx.max_terms() {
        return Err(Error::non_converged(format!(
            "unit-circle summation needs {total_terms} terms, budget is {}",
            ctx.max_terms()
        )));
    }

    let ctx2 = PrecisionContext::with_options(
        ctx.digits() + pad,
        ctx.guard_digits(),
        ctx.max_terms(),
    )
    .expect("padded context parameters are valid");
    let z2 = z.with_prec(ctx2.prec_bits());
    let zb = z2.powi(bsize as i64)?;

    // Blocked partial sums S_0 .. S_passes of the raw series.
    let mut s: Vec<ComplexValue> = Vec::with_capacity(passes + 1);
    let mut partial = ComplexValue::zero(&ctx2);
    let mut zp = ComplexValue::one(&ctx2);
    let mut n = 0usize;
    for _ in 0..=passes {
        for _ in 0..bsize {
            let c = coeff(n, &ctx2);
            partial = &partial + &(&c * &zp);
            zp = &zp * &z2;
            n += 1;
        }
        if !partial.is_finite() {
            return Err(Error::domain("non-finite term in unit-circle summation"));
        }
        s.push(partial.clone());
    }

    let q = (&ComplexValue::one(&ctx2) - &zb).recip()?;
    let eps = ctx.eps();
    let one = ctx.one();
    let mut prev: Option<ComplexValue> = None;
    let mut tail = Float::with_val(ctx.prec_bits(), rug::float::Special::Infinity);
    let mut streak = 0u32;
    let mut len = s.len();

    while len > 1 {
        for i in 0..len - 1 {
            let smoothed = &(&s[i + 1] - &(&zb * &s[i])) * &q;
            s[i] = smoothed;
        }
        len -= 1;
        let cand = &s[0];
        if let Some(p) = &prev {
            let delta = Float::with_val(ctx.prec_bits(), (cand - p).abs());
            let thresh = Float::with_val(ctx.prec_bits(), &eps * &fmax(cand.abs(), &one));
            if delta <= thresh {
                streak += 1;
                tail = delta;
            } else {
                streak = 0;
            }
            if streak >= 2 {
                return Ok(SeriesResult {
                    value: cand.with_prec(ctx.prec_bits()),
                    terms_used: n,
                    converged: true,
                    tail_bound: tail,
                });
            }
        }
        prev = Some(cand.clone());
    }

    Ok(SeriesResult {
        value: prev
            .map(|p| p.with_prec(ctx.prec_bits()))
            .unwrap_or_else(|| ComplexValue::zero(ctx)),
        terms_used: n,
        converged: false,
        tail_bound: tail,
    })
}

/// Kahan-compensated accumulator for short structured sums whose terms can
/// span many orders of magnitude.
#[derive(Debug, Clone)]
pub struct CompensatedSum {
    sum: ComplexValue,
    comp: ComplexValue,
}

impl CompensatedSum {
    pub fn new(ctx: &PrecisionContext) -> Self {
        CompensatedSum {
            sum: ComplexValue::zero(ctx),
            comp: ComplexValue::zero(ctx),
        }
    }

    pub fn add(&mut self, term: &ComplexValue) {
        let y = term - &self.comp;
        let t = &self.sum + &y;
        self.comp = &(&t - &self.sum) - &y;
        self.sum = t;
    }

    pub fn value(self) -> ComplexValue {
        self.sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::float::Constant;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    /// Catalan's constant, frozen from its defining series
    /// sum (-1)^n / (2n+1)^2 evaluated by plain Euler transformation.
    const CATALAN_60: &str =
        "0.915965594177219015054603514932384110774149374281672134266498";

    #[test]
    fn geometric_half_sums_to_two() {
        let c = ctx();
        let half = ComplexValue::from_f64(&c, 0.5, 0.0);
        let mut zp = ComplexValue::one(&c);
        let r = sum_series(
            |_| {
                let t = zp.clone();
                zp = &zp * &half;
                t
            },
            SeriesMode::Direct,
            &c,
        );
        assert!(r.converged);
        let err = (&r.value - &ComplexValue::from_int(&c, 2)).abs();
        assert!(err < 1e-49, "error {err}");
        assert!(r.tail_bound <= c.tol());
    }

    #[test]
    fn slow_series_reports_non_convergence() {
        let c = PrecisionContext::with_options(30, 10, 2000).unwrap();
        let r = sum_series(
            |n| ComplexValue::from_f64(&c, 1.0 / (n as f64 + 1.0), 0.0),
            SeriesMode::Direct,
            &c,
        );
        assert!(!r.converged);
        assert_eq!(r.terms_used, 2000);
    }

    #[test]
    fn alternating_acceleration_hits_catalan() {
        let c = ctx();
        // sum (-1)^n / (2n+1)^2 converges like 1/n directly; accelerated
        // summation must reach 50+ digits with a few hundred terms.
        let r = sum_series(
            |n| {
                let d = c.float_i(2 * n as i64 + 1);
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                ComplexValue::from_real(c.float(sign) / (d.clone() * d))
            },
            SeriesMode::AlternatingAccelerated,
            &c,
        );
        assert!(r.converged);
        assert!(r.terms_used < 500);
        let want = c.parse_float(CATALAN_60).unwrap();
        let err = Float::with_val(c.prec_bits(), r.value.re() - &want).abs();
        assert!(err < 1e-50, "error {err}");
        assert!(r.value.im().is_zero() || r.value.im().clone().abs() < 1e-50);
    }

    #[test]
    fn alternating_acceleration_flags_unsuitable_series() {
        // All-positive slowly growing terms violate the alternating
        // contract; the two-length consistency check must catch it.
        let c = PrecisionContext::with_options(30, 10, 5000).unwrap();
        let r = sum_series(
            |n| ComplexValue::from_f64(&c, (n as f64 + 1.0).sqrt(), 0.0),
            SeriesMode::AlternatingAccelerated,
            &c,
        );
        assert!(!r.converged);
    }

    #[test]
    fn unit_circle_sum_at_z_eq_i() {
        let c = ctx();
        // sum i^n/(n+1)^2 = Catalan + i pi^2/48, splitting even/odd n.
        let z = ComplexValue::i(&c);
        let r = unit_circle_sum(
            |n, cx| {
                let d = cx.float_i(n as i64 + 1);
                ComplexValue::from_real(cx.one() / (d.clone() * d))
            },
            &z,
            &c,
        )
        .unwrap();
        assert!(r.converged);
        let want_re = c.parse_float(CATALAN_60).unwrap();
        let pi = Float::with_val(c.prec_bits(), Constant::Pi);
        let want_im = pi.clone() * &pi / 48u32;
        let err_re = Float::with_val(c.prec_bits(), r.value.re() - &want_re).abs();
        let err_im = Float::with_val(c.prec_bits(), r.value.im() - &want_im).abs();
        assert!(err_re < 1e-48, "re error {err_re}");
        assert!(err_im < 1e-48, "im error {err_im}");
    }

    #[test]
    fn unit_circle_sum_matches_alternating_at_minus_one() {
        let c = ctx();
        let z = ComplexValue::from_int(&c, -1);
        let coeff = |n: usize, cx: &PrecisionContext| {
            let d = cx.float_i(n as i64 + 1);
            ComplexValue::from_real(cx.one() / d)
        };
        let a = unit_circle_sum(coeff, &z, &c).unwrap();
        assert!(a.converged);
        // sum (-1)^n/(n+1) = ln 2
        let ln2 = Float::with_val(c.prec_bits(), 2).ln();
        let err = Float::with_val(c.prec_bits(), a.value.re() - &ln2).abs();
        assert!(err < 1e-48, "error {err}");
    }

    #[test]
    fn unit_circle_sum_rejects_z_inside_disc() {
        let c = ctx();
        let z = ComplexValue::from_f64(&c, 0.5, 0.0);
        assert!(unit_circle_sum(|_, cx| ComplexValue::one(cx), &z, &c).is_err());
    }

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let c = ctx();
        let big = ComplexValue::from_real(c.pow10(30));
        let tiny = ComplexValue::from_f64(&c, 1.5, 0.0);
        let mut acc = CompensatedSum::new(&c);
        acc.add(&big);
        acc.add(&tiny);
        acc.add(&(-&big));
        let v = acc.value();
        let err = (&v - &ComplexValue::from_f64(&c, 1.5, 0.0)).abs();
        assert!(err < 1e-45, "error {err}");
    }
}

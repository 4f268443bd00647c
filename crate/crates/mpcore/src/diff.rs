use rug::Float;

use crate::complex::ComplexValue;
use crate::context::PrecisionContext;
use crate::error::Result;

/// Numerical derivative of `f` at `at` along the real direction.
///
/// Central differences at steps h and h/2 with one Richardson
/// extrapolation, h = 10^(-digits/3). The step balances truncation against
/// cancellation so the result is good to roughly two thirds of the target
/// digits; callers needing full precision must use an analytic derivative.
pub fn fd_derivative<F>(f: F, at: &ComplexValue, ctx: &PrecisionContext) -> Result<ComplexValue>
where
    F: Fn(&ComplexValue) -> Result<ComplexValue>,
{
    let h = ctx.pow10(-((ctx.digits() / 3) as i64));
    let d1 = central(&f, at, &h)?;
    let h2 = Float::with_val(ctx.prec_bits(), &h / 2u32);
    let d2 = central(&f, at, &h2)?;
    let four = ctx.float_i(4);
    let three = ctx.float_i(3);
    (&d2.mul_f(&four) - &d1).div_f(&three)
}

fn central<F>(f: &F, at: &ComplexValue, h: &Float) -> Result<ComplexValue>
where
    F: Fn(&ComplexValue) -> Result<ComplexValue>,
{
    let step = ComplexValue::from_real(h.clone());
    let fp = f(&(at + &step))?;
    let fm = f(&(at - &step))?;
    let two_h = Float::with_val(h.prec(), 2u32 * h);
    (&fp - &fm).div_f(&two_h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    #[test]
    fn derivative_of_square_at_three() {
        let c = ctx();
        let at = ComplexValue::from_int(&c, 3);
        let d = fd_derivative(|z| z.powi(2), &at, &c).unwrap();
        let err = (&d - &ComplexValue::from_int(&c, 6)).abs();
        assert!(err < 1e-30, "error {err}");
    }

    #[test]
    fn derivative_of_exp_at_zero() {
        let c = ctx();
        let at = ComplexValue::zero(&c);
        let d = fd_derivative(|z| Ok(z.exp()), &at, &c).unwrap();
        let err = (&d - &ComplexValue::one(&c)).abs();
        assert!(err < 1e-30, "error {err}");
    }

    #[test]
    fn derivative_with_complex_base_point() {
        let c = ctx();
        // d/dz sin z = cos z, checked off the real axis.
        let at = ComplexValue::from_f64(&c, 0.7, 0.4);
        let d = fd_derivative(|z| Ok(z.sin()), &at, &c).unwrap();
        let err = (&d - &at.cos()).abs();
        assert!(err < 1e-28, "error {err}");
    }

    #[test]
    fn errors_propagate_from_the_integrand() {
        let c = ctx();
        let at = ComplexValue::zero(&c);
        let r = fd_derivative(|z| z.ln(), &at, &c);
        // ln is evaluated at -h < 0 and at +h, fine; move the pole onto a
        // sample point instead: f(z) = 1/(z - h) would need h itself, so use
        // a function that rejects everything.
        assert!(fd_derivative(|_| ComplexValue::zero(&c).ln(), &at, &c).is_err());
        let _ = r;
    }
}

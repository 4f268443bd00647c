use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Float;

use crate::context::PrecisionContext;
use crate::error::{Error, Result};

/// Complex number stored as a pair of arbitrary-precision floats.
///
/// All multivalued functions (`ln`, `arg`, `pow`, `sqrt`, `atanh`) take the
/// principal branch, with the argument normalized to (-pi, pi]. In
/// particular `ln(-1) = +i*pi`: a negative-zero imaginary part is folded to
/// +0 before the angle is computed, so values that land exactly on the cut
/// stay on its upper side.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexValue {
    re: Float,
    im: Float,
}

impl ComplexValue {
    pub fn new(re: Float, im: Float) -> Self {
        ComplexValue { re, im }
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        ComplexValue {
            re,
            im: Float::new(prec),
        }
    }

    pub fn from_f64(ctx: &PrecisionContext, re: f64, im: f64) -> Self {
        ComplexValue {
            re: ctx.float(re),
            im: ctx.float(im),
        }
    }

    pub fn from_int(ctx: &PrecisionContext, n: i64) -> Self {
        ComplexValue {
            re: ctx.float_i(n),
            im: ctx.zero(),
        }
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        Self::from_int(ctx, 0)
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Self::from_int(ctx, 1)
    }

    /// The imaginary unit.
    pub fn i(ctx: &PrecisionContext) -> Self {
        ComplexValue {
            re: ctx.zero(),
            im: ctx.one(),
        }
    }

    /// Parses `"1.5"`, `"-2"`, or `"re,im"` pairs such as `"0.3,-1.25"`.
    pub fn parse(ctx: &PrecisionContext, s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once(',') {
            Some((re, im)) => Ok(ComplexValue {
                re: ctx.parse_float(re.trim())?,
                im: ctx.parse_float(im.trim())?,
            }),
            None => Ok(Self::from_real(ctx.parse_float(s)?)),
        }
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn into_parts(self) -> (Float, Float) {
        (self.re, self.im)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Rounds both components to `prec_bits` bits.
    pub fn with_prec(&self, prec_bits: u32) -> Self {
        ComplexValue {
            re: Float::with_val(prec_bits, &self.re),
            im: Float::with_val(prec_bits, &self.im),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True when the value is an exact real integer with |value| <= `bound`.
    pub fn as_small_integer(&self, bound: i64) -> Option<i64> {
        if !self.im.is_zero() || !self.re.is_integer() {
            return None;
        }
        let x = self.re.to_f64();
        if x.abs() <= bound as f64 {
            Some(x as i64)
        } else {
            None
        }
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    /// Principal argument in (-pi, pi]. Exact zero components (either sign)
    /// are folded to +0 so the branch cut resolves upward.
    pub fn arg(&self) -> Float {
        let prec = self.prec();
        let y = if self.im.is_zero() {
            Float::new(prec)
        } else {
            self.im.clone()
        };
        let x = if self.re.is_zero() {
            Float::new(prec)
        } else {
            self.re.clone()
        };
        y.atan2(&x)
    }

    pub fn conj(&self) -> Self {
        ComplexValue {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn mul_f(&self, k: &Float) -> Self {
        let prec = self.prec().max(k.prec());
        ComplexValue {
            re: Float::with_val(prec, &self.re * k),
            im: Float::with_val(prec, &self.im * k),
        }
    }

    pub fn div_f(&self, k: &Float) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        let prec = self.prec().max(k.prec());
        Ok(ComplexValue {
            re: Float::with_val(prec, &self.re / k),
            im: Float::with_val(prec, &self.im / k),
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let prec = self.prec().max(rhs.prec());
        let den = Float::with_val(prec, &rhs.re * &rhs.re) + Float::with_val(prec, &rhs.im * &rhs.im);
        if den.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        let num_re = Float::with_val(prec, &self.re * &rhs.re) + Float::with_val(prec, &self.im * &rhs.im);
        let num_im = Float::with_val(prec, &self.im * &rhs.re) - Float::with_val(prec, &self.re * &rhs.im);
        let out = ComplexValue {
            re: num_re / &den,
            im: num_im / &den,
        };
        if !out.is_finite() {
            return Err(Error::domain("non-finite division result"));
        }
        Ok(out)
    }

    pub fn recip(&self) -> Result<Self> {
        let prec = self.prec();
        let one = ComplexValue {
            re: Float::with_val(prec, 1),
            im: Float::new(prec),
        };
        one.div(self)
    }

    /// Principal logarithm; errors on zero.
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("log of zero"));
        }
        Ok(ComplexValue {
            re: self.abs().ln(),
            im: self.arg(),
        })
    }

    pub fn exp(&self) -> Self {
        let prec = self.prec();
        let r = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(prec));
        ComplexValue {
            re: Float::with_val(prec, &r * &c),
            im: r * &s,
        }
    }

    pub fn sin(&self) -> Self {
        let prec = self.prec();
        let (s, c) = self.re.clone().sin_cos(Float::new(prec));
        let (sh, ch) = self.im.clone().sinh_cosh(Float::new(prec));
        ComplexValue {
            re: Float::with_val(prec, &s * &ch),
            im: Float::with_val(prec, &c * &sh),
        }
    }

    pub fn cos(&self) -> Self {
        let prec = self.prec();
        let (s, c) = self.re.clone().sin_cos(Float::new(prec));
        let (sh, ch) = self.im.clone().sinh_cosh(Float::new(prec));
        ComplexValue {
            re: Float::with_val(prec, &c * &ch),
            im: -Float::with_val(prec, &s * &sh),
        }
    }

    pub fn tan(&self) -> Result<Self> {
        self.sin().div(&self.cos())
    }

    pub fn sinh(&self) -> Self {
        let prec = self.prec();
        let (sh, ch) = self.re.clone().sinh_cosh(Float::new(prec));
        let (s, c) = self.im.clone().sin_cos(Float::new(prec));
        ComplexValue {
            re: Float::with_val(prec, &sh * &c),
            im: Float::with_val(prec, &ch * &s),
        }
    }

    pub fn cosh(&self) -> Self {
        let prec = self.prec();
        let (sh, ch) = self.re.clone().sinh_cosh(Float::new(prec));
        let (s, c) = self.im.clone().sin_cos(Float::new(prec));
        ComplexValue {
            re: Float::with_val(prec, &ch * &c),
            im: Float::with_val(prec, &sh * &s),
        }
    }

    pub fn tanh(&self) -> Result<Self> {
        self.sinh().div(&self.cosh())
    }

    /// Principal inverse hyperbolic tangent, (ln(1+z) - ln(1-z))/2.
    pub fn atanh(&self) -> Result<Self> {
        let prec = self.prec();
        let one = Float::with_val(prec, 1);
        let plus = ComplexValue {
            re: Float::with_val(prec, &one + &self.re),
            im: self.im.clone(),
        };
        let minus = ComplexValue {
            re: Float::with_val(prec, &one - &self.re),
            im: -self.im.clone(),
        };
        let diff = &plus.ln()? - &minus.ln()?;
        Ok(ComplexValue {
            re: diff.re / 2u32,
            im: diff.im / 2u32,
        })
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return ComplexValue {
                re: Float::new(self.prec()),
                im: Float::new(self.prec()),
            };
        }
        let prec = self.prec();
        let r = self.abs().sqrt();
        let half_arg = self.arg() / 2u32;
        let (s, c) = half_arg.sin_cos(Float::new(prec));
        ComplexValue {
            re: Float::with_val(prec, &r * &c),
            im: r * &s,
        }
    }

    /// Integer power by binary exponentiation; exact branch behaviour
    /// (no logarithm involved). `0^0` and negative powers of zero error.
    pub fn powi(&self, n: i64) -> Result<Self> {
        if self.is_zero() {
            return if n > 0 {
                Ok(ComplexValue {
                    re: Float::new(self.prec()),
                    im: Float::new(self.prec()),
                })
            } else {
                Err(Error::domain("zero raised to a non-positive integer power"))
            };
        }
        let prec = self.prec();
        let mut acc = ComplexValue {
            re: Float::with_val(prec, 1),
            im: Float::new(prec),
        };
        let mut base = self.clone();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            Ok(acc)
        }
    }

    /// Principal power exp(w ln z). Small exact integer exponents route
    /// through `powi`, which is cheaper and exact on the branch cut.
    pub fn pow(&self, w: &Self) -> Result<Self> {
        if let Some(n) = w.as_small_integer(4096) {
            if !(self.is_zero() && n == 0) {
                return self.powi(n);
            }
        }
        if self.is_zero() {
            if w.re.is_sign_positive() && !w.re.is_zero() {
                return Ok(ComplexValue {
                    re: Float::new(self.prec()),
                    im: Float::new(self.prec()),
                });
            }
            return Err(Error::domain("zero base with non-positive exponent"));
        }
        let lz = self.ln()?;
        Ok((w * &lz).exp())
    }

    /// Power with a real exponent.
    pub fn pow_f(&self, w: &Float) -> Result<Self> {
        self.pow(&ComplexValue::from_real(w.clone()))
    }

    /// Decimal rendering of one component, round-trip stable for a fixed
    /// digit count. Used by report writers.
    pub fn component_string(x: &Float, digits: usize) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.to_string_radix(10, Some(digits))
    }

    pub fn to_string_digits(&self, digits: usize) -> String {
        let re = Self::component_string(&self.re, digits);
        if self.im.is_zero() {
            re
        } else {
            format!("{} + {}i", re, Self::component_string(&self.im, digits))
        }
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_digits(30))
    }
}

impl Add for &ComplexValue {
    type Output = ComplexValue;
    fn add(self, rhs: &ComplexValue) -> ComplexValue {
        let prec = self.prec().max(rhs.prec());
        ComplexValue {
            re: Float::with_val(prec, &self.re + &rhs.re),
            im: Float::with_val(prec, &self.im + &rhs.im),
        }
    }
}

impl Sub for &ComplexValue {
    type Output = ComplexValue;
    fn sub(self, rhs: &ComplexValue) -> ComplexValue {
        let prec = self.prec().max(rhs.prec());
        ComplexValue {
            re: Float::with_val(prec, &self.re - &rhs.re),
            im: Float::with_val(prec, &self.im - &rhs.im),
        }
    }
}

impl Mul for &ComplexValue {
    type Output = ComplexValue;
    fn mul(self, rhs: &ComplexValue) -> ComplexValue {
        let prec = self.prec().max(rhs.prec());
        let re = Float::with_val(prec, &self.re * &rhs.re) - Float::with_val(prec, &self.im * &rhs.im);
        let im = Float::with_val(prec, &self.re * &rhs.im) + Float::with_val(prec, &self.im * &rhs.re);
        ComplexValue { re, im }
    }
}

impl Neg for &ComplexValue {
    type Output = ComplexValue;
    fn neg(self) -> ComplexValue {
        ComplexValue {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<ComplexValue> for ComplexValue {
            type Output = ComplexValue;
            fn $method(self, rhs: ComplexValue) -> ComplexValue {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ComplexValue> for ComplexValue {
            type Output = ComplexValue;
            fn $method(self, rhs: &ComplexValue) -> ComplexValue {
                (&self).$method(rhs)
            }
        }
        impl $trait<ComplexValue> for &ComplexValue {
            type Output = ComplexValue;
            fn $method(self, rhs: ComplexValue) -> ComplexValue {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for ComplexValue {
    type Output = ComplexValue;
    fn neg(self) -> ComplexValue {
        -&self
    }
}

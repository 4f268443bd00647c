use rug::Float;

use crate::error::{Error, Result};

/// Smallest supported target precision, in decimal digits.
pub const MIN_DIGITS: u32 = 15;
/// Smallest supported guard-digit count.
pub const MIN_GUARD_DIGITS: u32 = 5;
/// Smallest supported series term budget.
pub const MIN_MAX_TERMS: usize = 100;

/// Shared precision policy for a computation.
///
/// `digits` is the accuracy target callers may rely on; `guard_digits` is
/// extra internal headroom. All floats created through the context carry
/// `prec_bits` bits, enough for `digits + guard_digits` decimal digits plus
/// a little slack, so intermediate rounding stays below the guard floor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecisionContext {
    digits: u32,
    guard_digits: u32,
    max_terms: usize,
    prec_bits: u32,
}

impl PrecisionContext {
    /// Context with the given target digits and default headroom
    /// (10 guard digits, 100 000 series terms).
    pub fn new(digits: u32) -> Result<Self> {
        Self::with_options(digits, 10, 100_000)
    }

    pub fn with_options(digits: u32, guard_digits: u32, max_terms: usize) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::invalid(format!(
                "digits must be at least {MIN_DIGITS}, got {digits}"
            )));
        }
        if guard_digits < MIN_GUARD_DIGITS {
            return Err(Error::invalid(format!(
                "guard_digits must be at least {MIN_GUARD_DIGITS}, got {guard_digits}"
            )));
        }
        if max_terms < MIN_MAX_TERMS {
            return Err(Error::invalid(format!(
                "max_terms must be at least {MIN_MAX_TERMS}, got {max_terms}"
            )));
        }
        let working = (digits + guard_digits) as f64;
        let prec_bits = (working * std::f64::consts::LOG2_10).ceil() as u32 + 16;
        Ok(PrecisionContext {
            digits,
            guard_digits,
            max_terms,
            prec_bits,
        })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    /// Digits actually carried through intermediate arithmetic.
    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard_digits
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn prec_bits(&self) -> u32 {
        self.prec_bits
    }

    /// Same policy with `extra` more target digits. Used by retry paths
    /// that re-run a marginal computation at higher precision.
    pub fn escalated(&self, extra: u32) -> Self {
        Self::with_options(self.digits + extra, self.guard_digits, self.max_terms)
            .expect("escalating a valid context cannot fail")
    }

    pub fn float(&self, x: f64) -> Float {
        Float::with_val(self.prec_bits, x)
    }

    pub fn float_i(&self, n: i64) -> Float {
        Float::with_val(self.prec_bits, n)
    }

    pub fn zero(&self) -> Float {
        Float::new(self.prec_bits)
    }

    pub fn one(&self) -> Float {
        Float::with_val(self.prec_bits, 1)
    }

    /// Exact-decimal constant, e.g. `"0.25"` or `"1e-40"`.
    pub fn parse_float(&self, s: &str) -> Result<Float> {
        let incomplete = Float::parse(s)
            .map_err(|e| Error::invalid(format!("cannot parse {s:?} as a number: {e}")))?;
        Ok(Float::with_val(self.prec_bits, incomplete))
    }

    /// 10^e at working precision.
    pub fn pow10(&self, e: i64) -> Float {
        Float::with_val(self.prec_bits, e).exp10()
    }

    /// Convergence floor for series: 10^-(digits + guard_digits).
    pub fn eps(&self) -> Float {
        self.pow10(-(self.working_digits() as i64))
    }

    /// Accuracy actually promised to callers: 10^-digits.
    pub fn tol(&self) -> Float {
        self.pow10(-(self.digits as i64))
    }
}

//! Decimal rendering helpers.
//!
//! `rug` switches between positional and exponent notation depending on
//! magnitude; command output wants one canonical shape instead. The
//! helpers here parse the mantissa/exponent form once and re-render it
//! either as plain fixed-point (`0.04`, not `4.00e-2`) or as compact
//! scientific notation for residual columns.

use mpcore::ComplexValue;
use rug::Float;

/// (sign, significant digits, e) with value = sign 0.digits x 10^e.
fn decompose(x: &Float, digits: usize) -> (bool, String, i64) {
    let raw = x.to_string_radix(10, Some(digits.max(1)));
    let (neg, body) = match raw.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, raw.as_str()),
    };
    let (mantissa, exp) = match body.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let mut digits_str: String = format!("{int_part}{frac_part}");
    let mut e10 = exp + int_part.len() as i64;
    while digits_str.starts_with('0') && digits_str.len() > 1 {
        digits_str.remove(0);
        e10 -= 1;
    }
    (neg, digits_str, e10)
}

/// Fixed-point rendering with `digits` significant digits and trailing
/// zeros trimmed, so Phi(0, 2, 5) prints as `0.04`.
pub fn fmt_fixed(x: &Float, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x.is_sign_negative() { "-inf" } else { "inf" }.into();
    }
    if x.is_zero() {
        return "0".into();
    }
    let (neg, mut d, e10) = decompose(x, digits);
    while d.len() > 1 && d.ends_with('0') {
        d.pop();
    }
    if d == "0" {
        return "0".into();
    }
    let body = if e10 <= 0 {
        format!("0.{}{}", "0".repeat(e10.unsigned_abs() as usize), d)
    } else if e10 as usize >= d.len() {
        format!("{}{}", d, "0".repeat(e10 as usize - d.len()))
    } else {
        let (i, f) = d.split_at(e10 as usize);
        format!("{i}.{f}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// `re` alone when the imaginary part vanishes, `re + imi` otherwise.
pub fn fmt_complex(v: &ComplexValue, digits: usize) -> String {
    let re = fmt_fixed(v.re(), digits);
    if v.im().is_zero() {
        return re;
    }
    let im = fmt_fixed(v.im(), digits);
    match im.strip_prefix('-') {
        Some(mag) => format!("{re} - {mag}i"),
        None => format!("{re} + {im}i"),
    }
}

/// Compact scientific notation (`1.23e-52`) for residual columns; keeps
/// a constant digit count so report layout is stable.
pub fn fmt_sci(x: &Float, sig: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x.is_sign_negative() { "-inf" } else { "inf" }.into();
    }
    if x.is_zero() {
        return "0".into();
    }
    let (neg, mut d, e10) = decompose(x, sig);
    while d.len() < sig {
        d.push('0');
    }
    let mantissa = if sig <= 1 {
        d
    } else {
        format!("{}.{}", &d[..1], &d[1..])
    };
    let sign = if neg { "-" } else { "" };
    format!("{sign}{mantissa}e{}", e10 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mpcore::PrecisionContext;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    #[test]
    fn fixed_point_trims_and_pads() {
        let c = ctx();
        assert_eq!(fmt_fixed(&c.parse_float("0.04").unwrap(), 50), "0.04");
        assert_eq!(fmt_fixed(&c.parse_float("-123.456").unwrap(), 10), "-123.456");
        assert_eq!(fmt_fixed(&c.parse_float("362880").unwrap(), 20), "362880");
        assert_eq!(fmt_fixed(&c.parse_float("0.5").unwrap(), 30), "0.5");
        assert_eq!(fmt_fixed(&c.zero(), 30), "0");
        assert_eq!(
            fmt_fixed(&c.parse_float("3.5e-12").unwrap(), 4),
            "0.0000000000035"
        );
    }

    #[test]
    fn fixed_point_matches_catalan_to_thirty_digits() {
        let c = PrecisionContext::new(40).unwrap();
        let cat = specfun::constants::catalan(&c);
        assert_eq!(fmt_fixed(&cat, 30), "0.915965594177219015054603514932");
    }

    #[test]
    fn scientific_keeps_width() {
        let c = ctx();
        assert_eq!(fmt_sci(&c.parse_float("0.000123").unwrap(), 3), "1.23e-4");
        assert_eq!(fmt_sci(&c.parse_float("-45000").unwrap(), 3), "-4.50e4");
        assert_eq!(fmt_sci(&c.zero(), 3), "0");
    }

    #[test]
    fn complex_rendering_folds_the_sign() {
        let c = ctx();
        let v = ComplexValue::from_f64(&c, 1.5, -0.25);
        assert_eq!(fmt_complex(&v, 10), "1.5 - 0.25i");
        let w = ComplexValue::from_f64(&c, 2.0, 0.0);
        assert_eq!(fmt_complex(&w, 10), "2");
    }
}

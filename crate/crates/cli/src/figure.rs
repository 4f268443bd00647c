//! Curve sampling for the documented figures, emitted as CSV so any
//! external plotter can consume it. Singular abscissae become explicit
//! gap rows (empty value cells plus a `gap` note) instead of silently
//! clipped spikes.

use mpcore::{ComplexValue, PrecisionContext};
use rug::ops::Pow;
use rug::Float;

use crate::textfmt::fmt_fixed;
use crate::CmdError;

pub const FIGURES: &[&str] = &["cos-sec-recip", "tan-cot-power"];

/// Figure curves are for plotting; 20 digits is already far more than a
/// plot can resolve.
const FIGURE_DIGITS: u32 = 20;
/// Values past this magnitude sit inside a pole spike and become gaps.
const GAP_THRESHOLD: f64 = 25.0;
const VALUE_DIGITS: usize = 10;

pub struct FigureSpec {
    pub from: Option<f64>,
    pub to: Option<f64>,
    pub points: usize,
    pub n: i64,
}

pub struct FigureTable {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

fn grid(from: f64, to: f64, points: usize) -> impl Iterator<Item = f64> {
    let step = (to - from) / (points - 1) as f64;
    (0..points).map(move |i| from + step * i as f64)
}

fn checked_range(spec: &FigureSpec, default_from: f64, default_to: f64) -> Result<(f64, f64), CmdError> {
    let from = spec.from.unwrap_or(default_from);
    let to = spec.to.unwrap_or(default_to);
    if !(from.is_finite() && to.is_finite() && from < to) {
        return Err(CmdError::Usage(format!(
            "range must satisfy from < to, got [{from}, {to}]"
        )));
    }
    if spec.points < 2 {
        return Err(CmdError::Usage("--points must be at least 2".into()));
    }
    Ok((from, to))
}

/// f(m) = cos(m) sec(1/m); sec blows up near m = 2/((2k+1) pi).
fn cos_sec_recip(ctx: &PrecisionContext, spec: &FigureSpec) -> Result<FigureTable, CmdError> {
    let (from, to) = checked_range(spec, 0.2, 3.0)?;
    let prec = ctx.prec_bits();
    let mut rows = Vec::with_capacity(spec.points);
    for m in grid(from, to, spec.points) {
        let mf = ctx.float(m);
        let m_str = fmt_fixed(&mf, VALUE_DIGITS);
        let num = Float::with_val(prec, mf.cos_ref());
        let den = Float::with_val(prec, mf.recip_ref()).cos();
        // Gap when the abscissa sits inside a secant pole's neighborhood
        // (cos(1/m) nearly vanishing) or the value has already spiked.
        let gap = den.to_f64().abs() < 0.05 || {
            let f = Float::with_val(prec, &num / &den);
            f.to_f64().abs() > GAP_THRESHOLD
        };
        if gap {
            rows.push(vec![m_str, String::new(), "gap".to_string()]);
        } else {
            let f = Float::with_val(prec, &num / &den);
            rows.push(vec![m_str, fmt_fixed(&f, VALUE_DIGITS), String::new()]);
        }
    }
    Ok(FigureTable {
        header: vec!["m", "value", "note"],
        rows,
    })
}

/// (tan(3^(n-1) x / 2) cot(3^n x / 2))^(3^-n), principal branch; complex
/// off the positive-base set, flattening toward 1 as the exponent decays.
fn tan_cot_power(ctx: &PrecisionContext, spec: &FigureSpec) -> Result<FigureTable, CmdError> {
    if !(1..=30).contains(&spec.n) {
        return Err(CmdError::Usage(format!(
            "--n must lie in 1..=30, got {}",
            spec.n
        )));
    }
    let (from, to) = checked_range(spec, 0.005, 1.0)?;
    if from <= 0.0 {
        return Err(CmdError::Usage("the curve is defined for x > 0".into()));
    }
    let prec = ctx.prec_bits();
    let n = spec.n as u32;
    let exponent = Float::with_val(prec, 3).pow(-(spec.n as i32));
    let mut rows = Vec::with_capacity(spec.points);
    for x in grid(from, to, spec.points) {
        let xf = ctx.float(x);
        let x_str = fmt_fixed(&xf, VALUE_DIGITS);
        let half = Float::with_val(prec, &xf / 2u32);
        let a1 = Float::with_val(prec, 3u32).pow(n - 1) * &half;
        let a2 = Float::with_val(prec, 3u32).pow(n) * &half;
        let s1 = Float::with_val(prec, a1.sin_ref());
        let c1 = Float::with_val(prec, a1.cos_ref());
        let s2 = Float::with_val(prec, a2.sin_ref());
        let c2 = Float::with_val(prec, a2.cos_ref());
        // tan(a1) cot(a2) = (s1 c2) / (c1 s2); any tiny factor means a
        // zero or pole of the base and the power is not plottable there.
        let near_singular = [&s1, &c1, &s2, &c2]
            .iter()
            .any(|f| f.to_f64().abs() < 1e-9);
        if near_singular {
            rows.push(vec![x_str, String::new(), String::new(), String::new(), "gap".into()]);
            continue;
        }
        let base = Float::with_val(prec, &s1 * &c2) / Float::with_val(prec, &c1 * &s2);
        let value = match ComplexValue::from_real(base).pow_f(&exponent) {
            Ok(v) if v.abs().to_f64() <= GAP_THRESHOLD => v,
            _ => {
                rows.push(vec![x_str, String::new(), String::new(), String::new(), "gap".into()]);
                continue;
            }
        };
        rows.push(vec![
            x_str,
            fmt_fixed(value.re(), VALUE_DIGITS),
            fmt_fixed(value.im(), VALUE_DIGITS),
            fmt_fixed(&value.abs(), VALUE_DIGITS),
            String::new(),
        ]);
    }
    Ok(FigureTable {
        header: vec!["x", "re", "im", "abs", "note"],
        rows,
    })
}

pub fn figure_table(id: &str, spec: &FigureSpec) -> Result<FigureTable, CmdError> {
    let ctx = PrecisionContext::new(FIGURE_DIGITS).map_err(|e| CmdError::Usage(e.to_string()))?;
    match id {
        "cos-sec-recip" => cos_sec_recip(&ctx, spec),
        "tan-cot-power" => tan_cot_power(&ctx, spec),
        other => Err(CmdError::Usage(format!(
            "unknown figure id {other:?}; known figures: {}",
            FIGURES.join(", ")
        ))),
    }
}

pub fn write_csv<W: std::io::Write>(table: &FigureTable, out: W) -> Result<(), CmdError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.header)
        .map_err(|e| CmdError::Io(e.to_string()))?;
    for row in &table.rows {
        w.write_record(row).map_err(|e| CmdError::Io(e.to_string()))?;
    }
    w.flush().map_err(|e| CmdError::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(points: usize, n: i64) -> FigureSpec {
        FigureSpec {
            from: None,
            to: None,
            points,
            n,
        }
    }

    #[test]
    fn secant_curve_marks_poles_as_gaps() {
        let t = figure_table("cos-sec-recip", &spec(200, 4)).unwrap();
        assert_eq!(t.rows.len(), 200);
        assert_eq!(t.header, vec!["m", "value", "note"]);
        let gaps = t.rows.iter().filter(|r| r[2] == "gap").count();
        assert!(gaps >= 2, "expected gap rows near both secant poles, saw {gaps}");
        for row in t.rows.iter().filter(|r| r[2].is_empty()) {
            let v: f64 = row[1].parse().unwrap();
            assert!(v.abs() <= GAP_THRESHOLD);
        }
    }

    #[test]
    fn power_curve_flattens_toward_one() {
        let t = figure_table("tan-cot-power", &spec(200, 4)).unwrap();
        assert_eq!(t.rows.len(), 200);
        let near_one = t
            .rows
            .iter()
            .filter(|r| r[4].is_empty())
            .filter(|r| {
                let a: f64 = r[3].parse().unwrap();
                (a - 1.0).abs() < 0.2
            })
            .count();
        assert!(near_one >= 120, "only {near_one} rows near 1");
    }

    #[test]
    fn unknown_figures_and_bad_ranges_are_usage_errors() {
        assert!(figure_table("nope", &spec(10, 4)).is_err());
        assert!(figure_table("cos-sec-recip", &spec(1, 4)).is_err());
        let bad = FigureSpec {
            from: Some(2.0),
            to: Some(1.0),
            points: 10,
            n: 4,
        };
        assert!(figure_table("cos-sec-recip", &bad).is_err());
    }

    #[test]
    fn csv_round_trips() {
        let t = figure_table("cos-sec-recip", &spec(20, 4)).unwrap();
        let mut buf = Vec::new();
        write_csv(&t, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 21);
        assert!(text.starts_with("m,value,note\n"));
    }
}

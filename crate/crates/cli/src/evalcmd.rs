//! Ad-hoc evaluation: one special-function value per invocation, printed
//! with the route that produced it. Parse problems are usage errors;
//! violated mathematical preconditions map to the dedicated domain exit
//! code so scripts can tell them apart.

use mpcore::{ComplexValue, Error as MpError, PrecisionContext};
use rug::Float;
use specfun::{
    gamma, hurwitz_zeta, hurwitz_zeta_sderiv, lerch_phi, lerch_phi_sderiv, polygamma, LerchArgs,
};

use crate::textfmt::{fmt_complex, fmt_fixed};
use crate::CmdError;

#[derive(Debug)]
pub struct EvalOutput {
    pub value: String,
    pub route: String,
}

fn usage(msg: impl Into<String>) -> CmdError {
    CmdError::Usage(msg.into())
}

fn domain(e: MpError) -> CmdError {
    CmdError::Domain(e.to_string())
}

fn parse_cx(ctx: &PrecisionContext, s: &str, what: &str) -> Result<ComplexValue, CmdError> {
    ComplexValue::parse(ctx, s)
        .map_err(|e| usage(format!("argument {what}: {e} (complex values are written re,im)")))
}

fn constant(name: &str, ctx: &PrecisionContext) -> Result<Float, CmdError> {
    use specfun::constants as c;
    match name.to_ascii_lowercase().as_str() {
        "pi" => Ok(c::pi(ctx)),
        "ln2" => Ok(c::ln2(ctx)),
        "euler-gamma" | "euler_gamma" | "eulergamma" | "euler" => Ok(c::euler_gamma(ctx)),
        "catalan" => Ok(c::catalan(ctx)),
        "glaisher" => Ok(c::glaisher(ctx)),
        "apery" | "zeta3" => Ok(c::apery(ctx)),
        other => Err(usage(format!(
            "unknown constant {other:?}; expected pi, ln2, euler-gamma, catalan, glaisher, or apery"
        ))),
    }
}

pub fn evaluate(function: &str, args: &[String], digits: u32) -> Result<EvalOutput, CmdError> {
    let ctx = PrecisionContext::new(digits).map_err(|e| usage(e.to_string()))?;
    let d = digits as usize;
    let need = |n: usize, shape: &str| {
        if args.len() == n {
            Ok(())
        } else {
            Err(usage(format!(
                "{function} takes exactly {n} argument(s): {shape}; got {}",
                args.len()
            )))
        }
    };

    match function {
        "phi" | "phiprime" => {
            need(3, "z s v")?;
            let z = parse_cx(&ctx, &args[0], "z")?;
            let s = parse_cx(&ctx, &args[1], "s")?;
            let v = parse_cx(&ctx, &args[2], "v")?;
            let largs = LerchArgs::new(z, s, v).map_err(domain)?;
            let (value, route) = lerch_phi(&largs, &ctx).map_err(domain)?;
            let value = if function == "phi" {
                value
            } else {
                // The s-derivative follows the same route selection.
                lerch_phi_sderiv(&largs, &ctx).map_err(domain)?
            };
            Ok(EvalOutput {
                value: fmt_complex(&value, d),
                route: route.name().to_string(),
            })
        }
        "zeta" | "zetaprime" => {
            need(2, "s v")?;
            let s = parse_cx(&ctx, &args[0], "s")?;
            let v = parse_cx(&ctx, &args[1], "v")?;
            let value = if function == "zeta" {
                hurwitz_zeta(&s, &v, &ctx)
            } else {
                hurwitz_zeta_sderiv(&s, &v, &ctx)
            }
            .map_err(domain)?;
            Ok(EvalOutput {
                value: fmt_complex(&value, d),
                route: "euler-maclaurin".to_string(),
            })
        }
        "polygamma" => {
            need(2, "order z")?;
            let order: u32 = args[0].parse().map_err(|_| {
                usage(format!(
                    "polygamma order must be a nonnegative integer, got {:?}",
                    args[0]
                ))
            })?;
            let z = parse_cx(&ctx, &args[1], "z")?;
            let value = polygamma(order, &z, &ctx).map_err(domain)?;
            Ok(EvalOutput {
                value: fmt_complex(&value, d),
                route: "asymptotic-recurrence".to_string(),
            })
        }
        "gamma" => {
            need(1, "z")?;
            let z = parse_cx(&ctx, &args[0], "z")?;
            let value = gamma(&z, &ctx).map_err(domain)?;
            Ok(EvalOutput {
                value: fmt_complex(&value, d),
                route: "stirling-recurrence".to_string(),
            })
        }
        "const" => {
            need(1, "name")?;
            let value = constant(&args[0], &ctx)?;
            Ok(EvalOutput {
                value: fmt_fixed(&value, d),
                route: "dual-route".to_string(),
            })
        }
        other => Err(usage(format!(
            "unknown function {other:?}; expected phi, phiprime, zeta, zetaprime, polygamma, gamma, or const"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exit;

    fn ev(function: &str, args: &[&str], digits: u32) -> Result<EvalOutput, CmdError> {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        evaluate(function, &args, digits)
    }

    #[test]
    fn phi_at_zero_argument_is_a_single_power() {
        let out = ev("phi", &["0,0", "2,0", "5,0"], 50).unwrap();
        assert_eq!(out.value, "0.04");
    }

    #[test]
    fn catalan_to_thirty_digits() {
        let out = ev("const", &["catalan"], 30).unwrap();
        assert_eq!(out.value, "0.915965594177219015054603514932");
        assert_eq!(out.route, "dual-route");
    }

    #[test]
    fn zeta_pole_is_a_domain_error() {
        let err = ev("zeta", &["1,0", "1,0"], 50).unwrap_err();
        assert_eq!(err.exit_code(), exit::EVAL_DOMAIN);
    }

    #[test]
    fn arity_and_names_are_usage_errors() {
        assert_eq!(ev("phi", &["1,0"], 50).unwrap_err().exit_code(), exit::USAGE);
        assert_eq!(ev("frobnicate", &["1"], 50).unwrap_err().exit_code(), exit::USAGE);
        assert_eq!(ev("const", &["feigenbaum"], 50).unwrap_err().exit_code(), exit::USAGE);
        assert_eq!(ev("phi", &["x,y", "2,0", "5,0"], 50).unwrap_err().exit_code(), exit::USAGE);
    }

    #[test]
    fn phiprime_reports_the_underlying_route() {
        let out = ev("phiprime", &["0.5,0", "2,0", "1,0"], 40).unwrap();
        assert_eq!(out.route, "series-direct");
        assert!(out.value.starts_with('-'));
    }

    #[test]
    fn gamma_of_six_is_a_hundred_twenty() {
        let out = ev("gamma", &["6,0"], 30).unwrap();
        assert_eq!(out.value, "120");
    }
}

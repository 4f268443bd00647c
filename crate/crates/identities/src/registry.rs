//! Static catalogue of every identity the checker knows how to verify.

use std::sync::OnceLock;

use mpcore::{ComplexValue, Error, PrecisionContext, Result};

use crate::eval::{
    constant_sums as cs, degenerate as dg, functional as fe, gamma_products as gp,
    phi_products as pp, poly, theorems as th, trig_products as tp,
};
use crate::types::{AltReading, Identity, Kind, ParamSample, Side, Tier};

type SideFn = crate::types::SideFn;

#[allow(clippy::too_many_arguments)]
fn base(
    id: &'static str,
    title: &'static str,
    anchor: &'static str,
    tier: Tier,
    kind: Kind,
    params: &'static [(&'static str, &'static str)],
    lhs: SideFn,
    rhs: SideFn,
    route_notes: &'static str,
) -> Identity {
    Identity {
        id,
        title,
        anchor,
        tier,
        kind,
        params,
        lhs,
        rhs,
        factor: None,
        alt: None,
        route_notes,
    }
}

const M_N: &[(&str, &str)] = &[("m", "real angle seed"), ("n", "truncation depth")];
const THM_PARAMS: &[(&str, &str)] = &[
    ("m", "complex angle seed, Im m > 0"),
    ("k", "complex order"),
    ("a", "positive log base"),
    ("n", "truncation depth"),
];
const FE_PARAMS: &[(&str, &str)] = &[
    ("z", "complex argument inside the unit disk"),
    ("s", "complex exponent"),
    ("a", "positive offset"),
];
const A_N: &[(&str, &str)] = &[("a", "positive scale"), ("n", "truncation depth")];
const MR_N: &[(&str, &str)] = &[
    ("m", "first positive abscissa"),
    ("r", "second positive abscissa"),
    ("n", "truncation depth"),
];
const X_N: &[(&str, &str)] = &[("x", "positive abscissa"), ("n", "truncation depth")];
const Z_N: &[(&str, &str)] = &[("z", "complex argument inside the unit disk"), ("n", "truncation depth")];
const N_ONLY: &[(&str, &str)] = &[("n", "truncation depth")];
const NONE: &[(&str, &str)] = &[];
const A_ONLY: &[(&str, &str)] = &[("a", "positive scale")];
const M_ONLY: &[(&str, &str)] = &[("m", "positive abscissa")];
const MR_ONLY: &[(&str, &str)] = &[
    ("m", "first positive abscissa"),
    ("r", "second positive abscissa"),
];
const X_ONLY: &[(&str, &str)] = &[("x", "positive abscissa")];
const Z_ONLY: &[(&str, &str)] = &[("z", "complex argument inside the unit disk")];
const ELL_PARAMS: &[(&str, &str)] = &[
    ("k", "modulus scale"),
    ("a", "first amplitude"),
    ("b", "second amplitude"),
];

fn build() -> Vec<Identity> {
    use Kind::*;
    use Tier::*;

    vec![
        // ------------------------------------------------------------ core
        base(
            "DEG-SS",
            "Cubed-sine geometric sum",
            "sum_{p<n} 3^-p sin^3(3^p m) sec(3^{p+1} m) = (3/8)(3^-n tan(3^n m) - tan m)",
            Core,
            Finite,
            M_N,
            dg::deg_ss_lhs,
            dg::deg_ss_rhs,
            "direct trig evaluation with pole guards on every secant",
        ),
        base(
            "DEG-CC",
            "Cosine-cosecant geometric sum",
            "sum_{p<n} cos(2 3^p m) csc(3^{p+1} m) = (csc m - csc(3^n m))/2",
            Core,
            Finite,
            M_N,
            dg::deg_cc_lhs,
            dg::deg_cc_rhs,
            "direct trig evaluation with pole guards on every cosecant",
        ),
        base(
            "DEG-SS1",
            "First-order tangent geometric sum",
            "sum_{p<n} 3^-p (1 - 2cos(2 3^p m) - 2i sin(2 3^p m) - i(3^{p+1}-4) tan(3^p m)) / (2cos(2 3^p m) - 1) = (3/2)(3^-n - 1)(1 + i tan(3^n m))",
            Core,
            Finite,
            M_N,
            dg::deg_ss1_lhs,
            dg::deg_ss1_rhs,
            "complex-valued sum; guards on tan poles and the 2cos(2u)-1 denominator",
        ),
        base(
            "THM-SS",
            "Order-k cubed-sine series",
            "sum_{p<n} (log^k a + 2^k (3i 3^p)^k e^{2i 3^p m} (3 e^{2i 3^p m} Phi_2 - 3 Phi_1 - 2 e^{4i 3^p m} Phi_3)) / 3^p = closed Phi form at scale 3^n",
            Core,
            Finite,
            THM_PARAMS,
            th::thm_ss_lhs,
            th::thm_ss_rhs,
            "Phi(z,-k,v) with |z| < 1 via damped exponentials; log^k hoisted",
        ),
        base(
            "THM-CC",
            "Order-k cosine-cosecant series",
            "sum_{p<n} (3i 3^p)^k e^{i 3^p m} (Phi(z_p,-k,(1 - i log a/3^p)/6) + e^{4i 3^p m} Phi(z_p,-k,(5 - i log a/3^p)/6)) = boundary difference of Phi at scales 1 and 3^n",
            Core,
            Finite,
            THM_PARAMS,
            th::thm_cc_lhs,
            th::thm_cc_rhs,
            "Phi(z,-k,v) with z = e^{6i 3^p m}, |z| < 1 for Im m > 0",
        ),
        base(
            "THM-SS1",
            "Order-k shifted-sine series",
            "sum_{p<n} (3i 3^p)^k e^{2i 3^p m} (3(3^p-1)(Phi_1 - e^{2i 3^p m} Phi_2) - 2 e^{4i 3^p m} Phi_3) / 3^p = -3i(3^n-1)(i 3^n)^{k-1} e^{2i 3^n m} Phi(-e^{2i 3^n m},-k,a/(2 3^n)+1)",
            Core,
            Finite,
            THM_PARAMS,
            th::thm_ss1_lhs,
            th::thm_ss1_rhs,
            "vanishing p = 0 coefficient skipped; shifts a/3^p stay positive",
        ),
        // ------------------------------------------------------ functional
        base(
            "FE-3",
            "Triadic splitting of Phi",
            "Phi(z,s,a) = 3^-s (Phi(z^3,s,a/3) + z Phi(z^3,s,(a+1)/3) + z^2 Phi(z^3,s,(a+2)/3))",
            Functional,
            Finite,
            FE_PARAMS,
            fe::fe_lhs,
            fe::fe3_rhs,
            "both sides series-direct for |z| <= 0.9",
        ),
        base(
            "FE-9A",
            "Ninth-power splitting of Phi, first form",
            "Phi(z,s,a) = 3^{-2s-1}(3^s(3 Phi(z^3,s,a/3) + z(3 Phi(z^3,s,(a+1)/3) + 2z Phi(z^3,s,(a+2)/3))) + z^2(Phi(z^9,s,(a+2)/9) + z^6 Phi(z^9,s,(a+8)/9) + z^3 Phi(z^9,s,(a+5)/9)))",
            Functional,
            Finite,
            FE_PARAMS,
            fe::fe_lhs,
            fe::fe9a_rhs,
            "mixed z^3 and z^9 arguments; all series-direct",
        ),
        base(
            "FE-9B",
            "Ninth-power splitting of Phi, second form",
            "Phi(z,s,a) = 3^{-2s-1}(3^s(3 Phi(z^3,s,a/3) + z(3 Phi(z^3,s,(a+1)/3) - z Phi(z^3,s,(a+2)/3))) + 4 z^2(Phi(z^9,s,(a+2)/9) + z^6 Phi(z^9,s,(a+8)/9) + z^3 Phi(z^9,s,(a+5)/9)))",
            Functional,
            Finite,
            FE_PARAMS,
            fe::fe_lhs,
            fe::fe9b_rhs,
            "mixed z^3 and z^9 arguments; all series-direct",
        ),
        // --------------------------------------------------------- product
        Identity {
            factor: Some(gp::gp_ss_factor),
            ..base(
                "GP-SS",
                "Gamma-quotient product, sine family",
                "prod_{p<n} (Gamma(b_p+1/2)/Gamma(b_p+1))^{2/3^{p+1}} (9^{p+1} Gamma(b_p+1/6) Gamma(b_p+5/6) / ((3^p-a)(2 3^p-a) Gamma((a 3^-p-2)/3) Gamma((a 3^-p-1)/3)))^{3^-p} = 3^{(3/4)(1-3^-n)} Gamma(a+1/2)/Gamma(a+1) (Gamma(a 3^-n+1)/Gamma(a 3^-n+1/2))^{3^-n}, b_p = a 3^{-p-1}",
                Product,
                Finite,
                A_N,
                gp::gp_ss_lhs,
                gp::gp_ss_rhs,
                "principal-branch powers; gamma poles excluded by the sampled domain",
            )
        },
        Identity {
            factor: Some(tp::cp_ss_factor),
            ..base(
                "CP-SS",
                "Cosine-ratio power product",
                "prod_{p<n} ((cos(3^p m)/cos(3^p r))^16 (1-2cos(2 3^p r))^2/(1-2cos(2 3^p m))^2)^{9^-p} = (cos m/cos r)^18 (cos(3^n r)/cos(3^n m))^{2 3^{2-2n}}",
                Product,
                Finite,
                MR_N,
                tp::cp_ss_lhs,
                tp::cp_ss_rhs,
                "bases are even powers, hence nonnegative; trig poles guarded",
            )
        },
        Identity {
            factor: Some(gp::qg_ss_factor),
            ..base(
                "QG-SS",
                "Quadratic gamma-quotient product",
                "prod_{p<n} (3^{a 3^-p + 2p} Gamma(a 3^-p/3 - 1) / ((a^2 - a 3^{p+1} + 2 9^p) Gamma(a 3^-p/3 + 1)^{2/3} Gamma(a 3^-p - 3)))^{3^-p} = 3^E a^{3^-n} Gamma(a 3^-n)^{3^-n} / Gamma(a+1)",
                Product,
                Finite,
                A_N,
                gp::qg_ss_lhs,
                gp::qg_ss_rhs,
                "sign-indefinite bases handled with principal-branch powers",
            )
        },
        Identity {
            factor: Some(tp::cj_ss_factor),
            ..base(
                "CJ-SS",
                "Hyperbolic cosine-cube product",
                "prod_{p<n} ((e^{-6 3^p m}+1)^{2/3} cosh^2(3^p m)/(2cosh(2 3^p m)-1))^{9^-p} = 2^{(3/4)(1+3^{1-2n})} cosh^3 m / (e^{3m}(1+e^{-2 3^n m})^{3^{1-2n}})",
                Product,
                Finite,
                &[("m", "positive abscissa"), ("n", "truncation depth")],
                tp::cj_ss_lhs,
                tp::cj_ss_rhs,
                "all bases positive; plain real powers",
            )
        },
        Identity {
            factor: Some(gp::gp_cc_factor),
            ..base(
                "GP-CC",
                "Gamma-quotient product, cosine family",
                "prod_{p<n} Gamma((a 3^-p+1)/6) Gamma((a 3^-p+5)/6)/(2 pi) = 3^{-(3/4)a(1-3^-n)} Gamma((a+1)/2)/Gamma((a 3^-n+1)/2)",
                Product,
                Finite,
                A_N,
                gp::gp_cc_lhs,
                gp::gp_cc_rhs,
                "positive gamma arguments throughout",
            )
        },
        Identity {
            factor: Some(tp::th_cc_factor),
            ..base(
                "TH-CC",
                "Hyperbolic tangent-ratio product",
                "prod_{p<n} ((1+2cosh(2 3^p m))(2cosh(2 3^p r)-1)/((2cosh(2 3^p m)-1)(1+2cosh(2 3^p r))))^{3^-p} (tanh(3^p r)/tanh(3^p m))^{2 3^-p} = (tanh(3^n m)/tanh(3^n r))^{3^{1-n}} (tanh r/tanh m)^3",
                Product,
                Finite,
                MR_N,
                tp::th_cc_lhs,
                tp::th_cc_rhs,
                "all bases positive for positive abscissae",
            )
        },
        Identity {
            factor: Some(gp::qg_cc1_factor),
            ..base(
                "QG-CC1",
                "Alternating gamma-quotient product",
                "prod_{p<n} (Gamma((a 3^-p+7)/12) Gamma((a 3^-p+11)/12)/(Gamma(3^{-p-1}(a+3^p)/4) Gamma((a 3^-p+5)/12)))^{(-1)^p} = 3^{((-1)^n-1)/4} Gamma((a+3)/4)/Gamma((a+1)/4) (Gamma((a 3^-n+1)/4)/Gamma((a 3^-n+3)/4))^{(-1)^n}",
                Product,
                Finite,
                A_N,
                gp::qg_cc1_lhs,
                gp::qg_cc1_rhs,
                "alternating exponents; every gamma argument positive",
            )
        },
        Identity {
            factor: Some(tp::coscos_factor),
            alt: Some(AltReading {
                description: "repaired reading: product truncated at p < n and hyperbolic closed form (2cosh x+1)/(2cosh x-1) (tanh(3^n x/2) coth(3^{n+1} x/2))^{3^-n}",
                lhs: tp::coscos_lhs_alt,
                rhs: tp::coscos_rhs_alt,
            }),
            ..base(
                "CC-COSCOS",
                "Mixed circular product with complex factors",
                "prod_{p<=n} f1_p f2_p e^{D_p} = (2cos(x/3)+1)/(2cos(x/3)-1) (tan(3^{n-1} x/2) cot(3^n x/2))^{3^-n}, with f1, f2, D built from tanh(3^p x/2) and sqrt(3)",
                Product,
                Finite,
                X_N,
                tp::coscos_lhs_primary,
                tp::coscos_rhs_primary,
                "primary reading fails numerically on every sampled point; the repaired hyperbolic reading holds to full tolerance",
            )
        },
        Identity {
            factor: Some(pp::pp1_factor),
            ..base(
                "PHI-PROD-1",
                "Exponential Phi product, real decay",
                "prod_{p<n} exp(3^-p e^{-5 3^p m}(e^{4 3^p m} Phi(e^{-6 3^p m},1,(1+3^-p)/6) + Phi(e^{-6 3^p m},1,(5+3^-p)/6))) = 2^{-3e^m}(coth m+1)^{3e^m} exp(-3^{1-n} e^{-3^n m} Phi(e^{-2 3^n m},1,(1+3^-n)/2))",
                Product,
                Finite,
                &[("m", "positive abscissa"), ("n", "truncation depth")],
                pp::pp1_lhs,
                pp::pp1_rhs,
                "Phi at real z in (0,1); series-direct everywhere",
            )
        },
        Identity {
            factor: Some(pp::pp2_factor),
            ..base(
                "PHI-PROD-2",
                "Exponential Phi product, damped oscillation",
                "prod_{p<n} exp(3^-p e^{i 3^p m}(Phi(e^{6i 3^p m},1,(1+3^{n-p})/6) + e^{4i 3^p m} Phi(e^{6i 3^p m},1,(5+3^{n-p})/6))) = (1-e^{2i 3^n m})^{3^{1-n} e^{-i 3^n m}} exp(3 e^{im} Phi(e^{2im},1,(1+3^n)/2))",
                Product,
                Finite,
                M_N,
                pp::pp2_lhs,
                pp::pp2_rhs,
                "factor offsets depend on the truncation depth; |z| < 1 for Im m > 0",
            )
        },
        Identity {
            factor: Some(gp::gp_ss1a_factor),
            ..base(
                "GP-SS1-A",
                "First-order gamma-quotient product, subtractive form",
                "prod_{p<n} (1-2 3^{p+1}/a)^{2 3^{-p-1}} (Gamma((a 3^-p-6)/12)/Gamma(a 3^{-p-1}/4))^{2 3^{-p-1}} B_p^{1-3^-p} = 2^{(3/2)(2n+3 3^-n-3)} 3^{(1/4)(3-2n-3 3^-n)} pi^{(3/2)(1-3^-n)-n} (1-2 3^n/a)^{-3^-n} (a-2 3^n)/a (Gamma((a 3^-n-2)/4)/Gamma(a 3^-n/4))^{1-3^-n}",
                Product,
                Finite,
                A_N,
                gp::gp_ss1a_lhs,
                gp::gp_ss1a_rhs,
                "negative bases throughout; both sides use principal-branch powers",
            )
        },
        Identity {
            factor: Some(gp::gp_ss1b_factor),
            ..base(
                "GP-SS1-B",
                "First-order gamma-quotient product, quadratic form",
                "prod_{p<n} ((a 3^-p-4)(a 3^-p-2)(a 3^{-p-1} Gamma(a 3^{-p-1}/2))^{2/3} Gamma((a 3^-p-4)/6) Gamma((a 3^-p-2)/6))^{1-3^-p} / Gamma(a 3^{-p-1}/2)^{2/3} = 2^{(3/2)(2n+3 3^-n-3)} pi^{(3/2)(3^-n-1)+n} 3^{E} a^{2n/3} (a Gamma(a 3^-n/2))^{3^-n-1}",
                Product,
                Finite,
                A_N,
                gp::gp_ss1b_lhs,
                gp::gp_ss1b_rhs,
                "principal-branch powers; a = 2 excluded to keep the p = 0 base nonzero",
            )
        },
        Identity {
            factor: Some(tp::ch_ss1a_factor),
            ..base(
                "CH-SS1-A",
                "First-order hyperbolic-cosine product, two abscissae",
                "prod_{p<n} ((2cosh(2 3^p m)-1)(cosh(3^p r)/cosh(3^p m))^2/(2cosh(2 3^p r)-1))^{3^{1-2p}(3^p-1)} (cosh(3^{p+1} m)/cosh(3^{p+1} r))^{2 9^-p} = (cosh(3^n m)/cosh(3^n r))^{9^{1-n}(3^n-1)}",
                Product,
                Finite,
                MR_N,
                tp::ch_ss1a_lhs,
                tp::ch_ss1a_rhs,
                "all bases positive; vanishing p = 0 exponent",
            )
        },
        Identity {
            factor: Some(tp::ch_ss1b_factor),
            ..base(
                "CH-SS1-B",
                "First-order hyperbolic-cosine product, single abscissa",
                "prod_{p<n} ((1-2cosh(2 3^p x))/(1-2cosh(2 3^p x/3)))^{(1/2) 9^-p (3^{p+1}-1)} (cosh(3^p x/3)/cosh(3^p x))^{9^-p(3^{p+1}-4)} = (cosh(3^n x)/cosh(3^{n-1} x))^{(1/2) 9^{1-n}(3^n-1)}",
                Product,
                Finite,
                X_N,
                tp::ch_ss1b_lhs,
                tp::ch_ss1b_rhs,
                "negative numerator and denominator cancel to a positive base",
            )
        },
        Identity {
            factor: Some(poly::poly_factor),
            ..base(
                "POLY",
                "Binomial-power product in the unit disk",
                "prod_{p<n} (z^{3^p}+1)^{3^{-2p-1}} (sqrt((u_p-1)u_p+1)/(u_p+1))^{9^-p(3^p-1)} = (z^{3^{n-1}}+1)^{(1/2) 3^{1-2n}(3^n-1)}, u_p = z^{3^{p-1}}",
                Product,
                Finite,
                Z_N,
                poly::poly_lhs,
                poly::poly_rhs,
                "principal square root and powers; |z| < 1 keeps all bases away from zero",
            )
        },
        base(
            "POLY-BINOM",
            "Binomial series against the product form",
            "sum_p binom(alpha,p) x^p = prod_{p<n} f_p(z) with x = z^{3^{n-1}}, alpha = (1/2) 3^{1-2n}(3^n-1)",
            Product,
            Finite,
            Z_N,
            poly::poly_binom_lhs,
            poly::poly_lhs,
            "direct binomial summation; converges geometrically for |z| <= 0.9",
        ),
        // -------------------------------------------------------- constant
        base(
            "GK-CC",
            "Glaisher evaluation, cosine family",
            "sum_{p<n} csc^2(pi 3^p/2)/(8(2cos(pi 3^p)+1)^2) (2 Log(3i 3^p)(...) - 6 3^p e^{-5i pi 3^p/2}(e^{3i pi 3^p}-1)^2 (Phi'(-1,-1,(3^-p+1)/6) + e^{2i pi 3^p} Phi'(-1,-1,(3^-p+5)/6))) = closed form in log A",
            Constant,
            Finite,
            N_ONLY,
            cs::gk_cc_lhs,
            cs::gk_cc_rhs,
            "angles are integer multiples of pi; first-order rounding cancels",
        ),
        base(
            "AP-CC",
            "Apery evaluation, cosine family",
            "sum_{p<n} csc^3(pi 3^{p+1}/2)(4 9^{p+1}(Phi'(-1,-2,(3^-p+1)/6) + Phi'(-1,-2,(3^-p+5)/6)) + (5 9^p-1) Log(3i 3^p)) = 4 9^n csc^3(pi 3^n/2) Phi'(-1,-2,(3^-n+1)/2) + (1/2)(9^n-1) Log(i 3^n) csc^3(pi 3^n/2) - 7 zeta(3)/pi^2",
            Constant,
            Finite,
            N_ONLY,
            cs::ap_cc_lhs,
            cs::ap_cc_rhs,
            "cosecants at odd half-multiples of pi evaluate to +-1",
        ),
        base(
            "CAT-CC-1",
            "Catalan evaluation, trigamma pair",
            "sum_{p<n} 9^-p (psi1((2+3^-p)/12) + psi1((10+3^-p)/12)) = 9(pi^2 - 8C - 9^-n psi1((2+3^-n)/4))",
            Constant,
            Finite,
            N_ONLY,
            cs::cat_cc1_lhs,
            cs::cat_cc1_rhs,
            "positive trigamma arguments only",
        ),
        base(
            "CAT-CC-2",
            "Catalan evaluation, zeta-derivative pair",
            "sum_{p<n} 9^-p (zeta'(2,(2-3^-p)/12) + zeta'(2,(5-3^-p/2)/6) - Log(3i 3^p)(psi1((2-3^-p)/12) + psi1((10-3^-p)/12))) = 9(zeta'(2,1/4) - 9^-n zeta'(2,1/2-3^-n/4) - (i pi/2)(8C+pi^2) + 9^-n Log(i 3^n) psi1(1/2-3^-n/4))",
            Constant,
            Finite,
            N_ONLY,
            cs::cat_cc2_lhs,
            cs::cat_cc2_rhs,
            "Hurwitz zeta s-derivative at s = 2",
        ),
        base(
            "CAT-CC-3",
            "Catalan evaluation, rotating kernel",
            "sum_{p<n} 3^p e^{-5i pi 3^p/2} csc^2(pi 3^{p+1}/2)(-12(Phi'(-1,-1,1/6) + Phi'(-1,-1,5/6)) + e^{5i pi 3^p/2} Log(3i 3^p)(5cos(pi 3^p/2) + cos(5 pi 3^p/2))) = 2(4C(3^n e^{i pi 3^n/2} sin^2(pi 3^n/2) - i) + pi 3^n Log(i 3^n) cos(pi 3^n/2))/(pi(cos(pi 3^n)-1))",
            Constant,
            Finite,
            N_ONLY,
            cs::cat_cc3_lhs,
            cs::cat_cc3_rhs,
            "constant Phi' pair hoisted out of the sum",
        ),
        base(
            "CAT-SS",
            "Catalan evaluation, six-term trigamma sum",
            "sum_{p<n} 27^-p (3psi1((2+t)/12) - 3psi1((4+t)/12) + 2psi1((6+t)/12) - 3psi1((8+t)/12) + 3psi1((10+t)/12) - 2(8 9^{p+1} + psi1((12+t)/12))) = 27^{1-n}(8 9^n(3^n+1-2C 3^n) + psi1(1+3^-n/4) - psi1((2+3^-n)/4)), t = 3^-p",
            Constant,
            Finite,
            N_ONLY,
            cs::cat_ss_lhs,
            cs::cat_ss_rhs,
            "positive trigamma arguments only",
        ),
        base(
            "CAT-SS-2",
            "Catalan evaluation, Phi-derivative ladder",
            "sum_{p<n} (18 Phi'(-1,-1,(2-3^-p)/6) - 18 Phi'(-1,-1,(4-3^-p)/6) + 12 Phi'(-1,-1,(6-3^-p)/6) + 3^-p Log(3i 3^p)) = (6C - 6 pi Phi'(-1,-1,1-3^-n/2) + (3/2) pi (1-3^-n) Log(i 3^n))/pi",
            Constant,
            Finite,
            N_ONLY,
            cs::cat_ss2_lhs,
            cs::cat_ss2_rhs,
            "Phi' on the alternating unit point z = -1",
        ),
        base(
            "GK-SS",
            "Glaisher evaluation, sine difference",
            "Phi'(-1,-1,1/3) - Phi'(-1,-1,2/3) = ln(2^{2/9} 3^{1/12} e^{1/6} / A^2)",
            Constant,
            Finite,
            NONE,
            cs::gk_ss_lhs,
            cs::gk_ss_rhs,
            "single evaluation; no free parameters",
        ),
        base(
            "AP-SS",
            "Apery evaluation, sine difference",
            "Phi'(-1,-2,2/3) - Phi'(-1,-2,1/3) = 14 zeta(3)/(9 pi^2)",
            Constant,
            Finite,
            NONE,
            cs::ap_ss_lhs,
            cs::ap_ss_rhs,
            "single evaluation; no free parameters",
        ),
        base(
            "CAT-SS1-A",
            "First-order Catalan ladder, trigamma form",
            "sum_{p<n} 27^-p (psi1(1-3^{n-p-1}/4) - psi1((6-3^{n-p})/12) + (3/2)(3^p-1)(psi1(5/6-3^{n-p-1}/4) - psi1((4-3^{n-p})/12) + psi1((2-3^{n-p})/12) - psi1((8-3^{n-p})/12))) = -8C 3^{3-3n}(3^n-1)",
            Constant,
            Finite,
            N_ONLY,
            cs::cat_ss1a_lhs,
            cs::cat_ss1a_rhs,
            "trigamma continued to negative non-integer arguments",
        ),
        base(
            "CAT-SS1-B",
            "First-order Catalan ladder, Phi-derivative form",
            "sum_{p<n} (12 Phi'(-1,-1,1-3^{n-p-1}/2) - 18(3^p-1) Phi'(-1,-1,(2-3^{n-p})/6) + 18(3^p-1) Phi'(-1,-1,(4-3^{n-p})/6) + 3^-p(3^n-3 9^p) Log(3i 3^p)) = 6C(3^n-1)/pi",
            Constant,
            Finite,
            N_ONLY,
            cs::cat_ss1b_lhs,
            cs::cat_ss1b_rhs,
            "Phi' continued to negative v via the head recurrence",
        ),
        base(
            "GK-SS1",
            "First-order Glaisher ladder",
            "sum_{p<n} (6(3^p-1)(Phi'(-1,-1,1/3) - Phi'(-1,-1,2/3)) + 3^p Log(3i 3^p)) = (1/6)((3^n-2n-1) ln(16 e^3/A^36) + 3(3^n-1) Log(i 3^n))",
            Constant,
            Finite,
            N_ONLY,
            cs::gk_ss1_lhs,
            cs::gk_ss1_rhs,
            "constant Phi' difference hoisted out of the sum",
        ),
        base(
            "AP-SS1",
            "First-order Apery ladder",
            "sum_{p<n} 3^p(3^p-1)(Phi'(-1,-2,1/3) - Phi'(-1,-2,2/3)) = -7(9^n-4 3^n+3) zeta(3)/(36 pi^2)",
            Constant,
            Finite,
            N_ONLY,
            cs::ap_ss1_lhs,
            cs::ap_ss1_rhs,
            "constant Phi' difference times a closed geometric coefficient",
        ),
        // ----------------------------------------------------------- limit
        Identity {
            factor: Some(gp::gp_ss_factor),
            ..base(
                "GP-SS-INF",
                "Gamma-quotient product limit, sine family",
                "prod_p f_p(a) -> 3^{3/4} Gamma(a+1/2)/Gamma(a+1)",
                Limit,
                InfiniteThird,
                A_ONLY,
                gp::gp_ss_lhs,
                gp::gp_ss_limit,
                "tail contracts like 3^-p",
            )
        },
        Identity {
            factor: Some(tp::cp_ss_inf_factor),
            ..base(
                "CP-SS-INF",
                "Cosine-ratio product limit",
                "prod_p (base_p)^{9^-p/18} -> cos m / cos r",
                Limit,
                InfiniteNinth,
                MR_ONLY,
                tp::cp_ss_inf_lhs,
                tp::cp_ss_limit,
                "tail contracts like 9^-p; trig safety enforced on sampled points",
            )
        },
        Identity {
            factor: Some(gp::qg_ss_factor),
            ..base(
                "QG-SS-INF",
                "Quadratic gamma-quotient product limit",
                "prod_p f_p(a) -> 3^{9a/8+3}/Gamma(a+1)",
                Limit,
                InfiniteThird,
                A_ONLY,
                gp::qg_ss_lhs,
                gp::qg_ss_limit,
                "tail contracts like 3^-p",
            )
        },
        Identity {
            factor: Some(tp::cj_ss_inf_factor),
            ..base(
                "CJ-SS-INF",
                "Hyperbolic cosine-cube product limit",
                "prod_p (base_p)^{9^-p/3} -> (e^{-2m}+1)/2^{3/4}",
                Limit,
                InfiniteNinth,
                M_ONLY,
                tp::cj_ss_inf_lhs,
                tp::cj_ss_limit,
                "tail contracts like 9^-p",
            )
        },
        Identity {
            factor: Some(gp::gp_cc_factor),
            ..base(
                "GP-CC-INF",
                "Gamma-quotient product limit, cosine family",
                "prod_p Gamma((a 3^-p+1)/6) Gamma((a 3^-p+5)/6)/(2 pi) -> 3^{-3a/4} Gamma((a+1)/2)/sqrt(pi)",
                Limit,
                InfiniteThird,
                A_ONLY,
                gp::gp_cc_lhs,
                gp::gp_cc_limit,
                "tail contracts like 3^-p",
            )
        },
        Identity {
            factor: Some(tp::th_cc_factor),
            ..base(
                "TH-CC-INF",
                "Hyperbolic tangent-ratio product limit",
                "prod_p f_p(m,r) -> (tanh r/tanh m)^3",
                Limit,
                InfiniteThird,
                MR_ONLY,
                tp::th_cc_lhs,
                tp::th_cc_limit,
                "factors reach 1 double-exponentially; converges well before the cap",
            )
        },
        Identity {
            factor: Some(tp::coscos_factor),
            ..base(
                "CC-COSCOS-INF",
                "Mixed circular product limit",
                "prod_p f1_p f2_p e^{D_p} -> (2cosh x+1)/(2cosh x-1)",
                Limit,
                InfiniteThird,
                X_ONLY,
                tp::coscos_lhs_alt,
                tp::coscos_limit,
                "complex factors collapse to a real limit",
            )
        },
        Identity {
            factor: Some(poly::poly_factor),
            ..base(
                "POLY-INF",
                "Binomial-power product limit",
                "prod_p f_p(z) -> 1",
                Limit,
                InfiniteNinth,
                Z_ONLY,
                poly::poly_lhs,
                poly::poly_limit,
                "factors approach 1 like |z|^{3^p}",
            )
        },
        Identity {
            factor: Some(tp::ell_factor),
            ..base(
                "ELL",
                "Cosine-ratio limit at elliptic-style abscissae",
                "prod_p (base_p)^{9^-p/18} at (k sin a, k sin b) -> cos(k sin a)/cos(k sin b)",
                Limit,
                InfiniteNinth,
                ELL_PARAMS,
                tp::ell_lhs,
                tp::ell_limit,
                "same contraction as the plain cosine-ratio product",
            )
        },
        Identity {
            factor: Some(gp::qg_cc1_factor),
            ..base(
                "QG-CC1-BOUND",
                "Upper bound for the alternating gamma product",
                "prod_{p<n} f_p(a) < Gamma(1/4) Gamma((a+3)/4)/(Gamma(3/4) Gamma((a+1)/4)) for all n",
                Limit,
                Bound,
                A_ONLY,
                gp::qg_cc1_lhs,
                gp::qg_cc1_bound,
                "strict inequality checked at every truncation depth up to 10",
            )
        },
    ]
}

static REGISTRY: OnceLock<Vec<Identity>> = OnceLock::new();

/// Every identity known to the checker, in declaration order.
pub fn registry() -> &'static [Identity] {
    REGISTRY.get_or_init(build)
}

/// Find an identity by its exact id.
pub fn lookup(id: &str) -> Option<&'static Identity> {
    registry().iter().find(|ident| ident.id == id)
}

/// Evaluate one side of an identity on a parameter sample.
pub fn eval_side(
    id: &str,
    side: Side,
    sample: &ParamSample,
    ctx: &PrecisionContext,
) -> Result<ComplexValue> {
    let ident = lookup(id).ok_or_else(|| Error::invalid(format!("unknown identity id {id:?}")))?;
    let f = match side {
        Side::Lhs => ident.lhs,
        Side::Rhs => ident.rhs,
    };
    f(sample, ctx)
}

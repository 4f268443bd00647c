use mpcore::{sum_series, ComplexValue, PrecisionContext, SeriesMode};
use proptest::prelude::*;
use rug::Float;
use specfun::{
    bernoulli_poly, gamma, hurwitz_zeta, lerch_phi, lerch_phi_forced, lerch_phi_neg_int,
    lerch_phi_sderiv, polygamma, EvalRoute, LerchArgs,
};

fn ctx50() -> PrecisionContext {
    PrecisionContext::new(50).unwrap()
}

fn cv(c: &PrecisionContext, re: f64, im: f64) -> ComplexValue {
    ComplexValue::from_f64(c, re, im)
}

fn rel_err(a: &ComplexValue, b: &ComplexValue, c: &PrecisionContext) -> Float {
    let diff = (a - b).abs();
    let scale = a.abs().max(&c.one());
    diff / scale
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// The defining contiguous relation Phi(z,s,v) = z Phi(z,s,v+1) + v^(-s)
    /// holds across routes and argument shapes.
    #[test]
    fn lerch_recurrence_holds(
        zr in -0.9f64..0.9,
        zi in -0.6f64..0.6,
        sr in -2.5f64..2.5,
        si in -1.5f64..1.5,
        vr in 0.3f64..2.5,
        vi in -0.8f64..0.8,
    ) {
        prop_assume!((zr * zr + zi * zi).sqrt() < 0.93);
        let c = ctx50();
        let z = cv(&c, zr, zi);
        let s = cv(&c, sr, si);
        let v = cv(&c, vr, vi);
        let a = LerchArgs::new(z.clone(), s.clone(), v.clone()).unwrap();
        let up = LerchArgs::new(z.clone(), s.clone(), &v + &ComplexValue::one(&c)).unwrap();
        let lhs = lerch_phi(&a, &c).unwrap().0;
        let rhs = &(&z * &lerch_phi(&up, &c).unwrap().0) + &v.pow(&-s).unwrap();
        prop_assert!(rel_err(&lhs, &rhs, &c) < 1e-45, "recurrence residual");
    }

    /// Direct series and quadrature agree deep inside the unit disc where
    /// both apply.
    #[test]
    fn series_and_quadrature_agree(
        zr in -0.8f64..0.8,
        zi in -0.5f64..0.5,
        sr in 0.5f64..3.0,
        si in -1.0f64..1.0,
        vr in 0.3f64..2.0,
    ) {
        prop_assume!((zr * zr + zi * zi).sqrt() > 0.05);
        let c = ctx50();
        let a = LerchArgs::new(cv(&c, zr, zi), cv(&c, sr, si), cv(&c, vr, 0.0)).unwrap();
        let direct = lerch_phi_forced(EvalRoute::SeriesDirect, &a, &c).unwrap();
        let quad = lerch_phi_forced(EvalRoute::Quadrature, &a, &c).unwrap();
        prop_assert!(rel_err(&direct, &quad, &c) < 1e-45, "route disagreement");
    }

    /// The closed rational form for nonpositive integer order matches the
    /// direct series term for term.
    #[test]
    fn neg_int_closed_form_matches_series(
        zr in -0.85f64..0.85,
        zi in -0.4f64..0.4,
        k in 0u32..6,
        vr in 0.2f64..3.0,
        vi in -1.0f64..1.0,
    ) {
        prop_assume!((zr * zr + zi * zi).sqrt() < 0.9);
        let c = ctx50();
        let z = cv(&c, zr, zi);
        let v = cv(&c, vr, vi);
        let closed = lerch_phi_neg_int(&z, k, &v, &c).unwrap();
        let a = LerchArgs::new(z, ComplexValue::from_int(&c, -i64::from(k)), v).unwrap();
        let series = lerch_phi_forced(EvalRoute::SeriesDirect, &a, &c).unwrap();
        prop_assert!(rel_err(&closed, &series, &c) < 1e-45, "closed form drift");
    }

    /// At z = -1 the Hurwitz-zeta reduction and the accelerated unit-circle
    /// sum are independent routes to the same value.
    #[test]
    fn minus_one_routes_agree(
        sr in 0.6f64..3.0,
        si in -1.2f64..1.2,
        vr in 0.3f64..2.5,
    ) {
        prop_assume!((sr - 1.0).abs() > 0.05 || si.abs() > 0.05);
        let c = ctx50();
        let a = LerchArgs::new(cv(&c, -1.0, 0.0), cv(&c, sr, si), cv(&c, vr, 0.0)).unwrap();
        let zeta_route = lerch_phi_forced(EvalRoute::ZetaReduction, &a, &c).unwrap();
        let accel = lerch_phi_forced(EvalRoute::SeriesAccelerated, &a, &c).unwrap();
        prop_assert!(rel_err(&zeta_route, &accel, &c) < 1e-45, "z = -1 routes drift");
    }

    /// Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    #[test]
    fn gamma_reflection_formula(
        re in 0.05f64..0.95,
        im in -2.0f64..2.0,
    ) {
        let c = ctx50();
        let z = cv(&c, re, im);
        let lhs = &gamma(&z, &c).unwrap() * &gamma(&(&ComplexValue::one(&c) - &z), &c).unwrap();
        let pi = ComplexValue::from_real(specfun::constants::pi(&c));
        let pz = &pi * &z;
        let rhs = pi.div(&pz.sin()).unwrap();
        prop_assert!(rel_err(&lhs, &rhs, &c) < 1e-45, "reflection residual");
    }

    /// Trigamma equals zeta(2, z).
    #[test]
    fn trigamma_is_hurwitz_zeta_two(
        re in 0.2f64..3.0,
        im in -2.0f64..2.0,
    ) {
        let c = ctx50();
        let z = cv(&c, re, im);
        let psi1 = polygamma(1, &z, &c).unwrap();
        let zeta2 = hurwitz_zeta(&ComplexValue::from_int(&c, 2), &z, &c).unwrap();
        prop_assert!(rel_err(&psi1, &zeta2, &c) < 1e-45, "trigamma drift");
    }

    /// Euler-Maclaurin zeta(s, 1) agrees with the eta-function route
    /// zeta(s) = eta(s) / (1 - 2^(1-s)) summed by acceleration.
    #[test]
    fn zeta_agrees_with_eta_route(
        sr in 1.2f64..4.0,
        si in -2.0f64..2.0,
    ) {
        let c = ctx50();
        let s = cv(&c, sr, si);
        let direct = hurwitz_zeta(&s, &ComplexValue::one(&c), &c).unwrap();
        let ms = -s.clone();
        let eta = sum_series(
            |n| {
                let term = ComplexValue::from_int(&c, n as i64 + 1).pow(&ms).unwrap();
                if n % 2 == 0 { term } else { -term }
            },
            SeriesMode::AlternatingAccelerated,
            &c,
        );
        prop_assume!(eta.converged);
        // zeta(s) = eta(s) / (1 - 2^(1-s)), and 2^(1-s) = exp((1-s) ln 2).
        let one = ComplexValue::one(&c);
        let scale = &one - &(&one - &s).mul_f(&specfun::constants::ln2(&c)).exp();
        let via_eta = eta.value.div(&scale).unwrap();
        prop_assert!(rel_err(&direct, &via_eta, &c) < 1e-45, "eta route drift");
    }

    /// zeta(-n, v) reduces to Bernoulli polynomials:
    /// zeta(-n, v) = -B_{n+1}(v) / (n+1).
    #[test]
    fn zeta_negative_integers_are_bernoulli(
        n in 0usize..8,
        vr in -1.5f64..2.5,
        vi in -1.5f64..1.5,
    ) {
        prop_assume!(vi.abs() > 1e-3 || vr.fract().abs() > 1e-3 || vr > 0.5);
        let c = ctx50();
        let v = cv(&c, vr, vi);
        let s = ComplexValue::from_int(&c, -(n as i64));
        let direct = hurwitz_zeta(&s, &v, &c).unwrap();
        let poly = bernoulli_poly(n + 1, &v, &c);
        let closed = -poly.div_f(&c.float_i(n as i64 + 1)).unwrap();
        prop_assert!(rel_err(&direct, &closed, &c) < 1e-44, "bernoulli reduction drift");
    }

    /// Raising the working precision from 50 to 80 digits only refines
    /// Hurwitz zeta values; the 50-digit result already meets its target.
    #[test]
    fn hurwitz_zeta_is_precision_stable(
        sr in -3.0f64..4.0,
        si in -2.0f64..2.0,
        vr in 0.2f64..2.5,
    ) {
        prop_assume!((sr - 1.0).abs() > 0.05 || si.abs() > 0.05);
        let lo = ctx50();
        let hi = PrecisionContext::new(80).unwrap();
        let a = hurwitz_zeta(&cv(&lo, sr, si), &cv(&lo, vr, 0.0), &lo).unwrap();
        let b = hurwitz_zeta(&cv(&hi, sr, si), &cv(&hi, vr, 0.0), &hi).unwrap();
        prop_assert!(rel_err(&a, &b.with_prec(lo.prec_bits()), &lo) < 1e-48, "precision drift");
    }

    /// The term-wise s-derivative matches a finite-difference quotient of
    /// Phi in s (the FD route is only good to roughly two thirds of the
    /// working digits, hence the looser tolerance).
    #[test]
    fn sderiv_matches_finite_difference(
        zr in -0.8f64..0.8,
        zi in -0.4f64..0.4,
        sr in -1.5f64..2.5,
        vr in 0.4f64..2.0,
    ) {
        prop_assume!((zr * zr + zi * zi).sqrt() > 0.05);
        prop_assume!(sr.fract().abs() > 0.05);
        let c = ctx50();
        let z = cv(&c, zr, zi);
        let s = cv(&c, sr, 0.0);
        let v = cv(&c, vr, 0.0);
        let a = LerchArgs::new(z.clone(), s.clone(), v.clone()).unwrap();
        let exact = lerch_phi_sderiv(&a, &c).unwrap();
        let fd = mpcore::fd_derivative(
            |sp| {
                let shifted = LerchArgs::new(z.clone(), sp.clone(), v.clone())?;
                Ok(lerch_phi(&shifted, &c)?.0)
            },
            &s,
            &c,
        )
        .unwrap();
        prop_assert!(rel_err(&exact, &fd, &c) < 1e-28, "s-derivative drift");
    }
}

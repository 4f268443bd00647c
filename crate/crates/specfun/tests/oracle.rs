//! Spot checks against values computed independently at 60+ digits.
//! Every literal below was produced outside this codebase and frozen, so
//! these tests anchor the library to an external reference rather than to
//! itself.

use mpcore::{ComplexValue, PrecisionContext};
use rug::Float;
use specfun::lerch::{lerch_phi_sderiv, LerchArgs};
use specfun::{constants, gamma, hurwitz_zeta, hurwitz_zeta_sderiv, log_gamma, polygamma};

fn ctx() -> PrecisionContext {
    PrecisionContext::new(50).unwrap()
}

fn dec(c: &PrecisionContext, s: &str) -> Float {
    c.parse_float(s).unwrap()
}

fn cvd(c: &PrecisionContext, re: &str, im: &str) -> ComplexValue {
    ComplexValue::new(dec(c, re), dec(c, im))
}

fn assert_rel(got: &ComplexValue, want: &ComplexValue, c: &PrecisionContext, tol: f64) {
    let diff = (got - want).abs();
    let scale = want.abs().max(&c.one());
    let rel = diff / scale;
    assert!(rel < tol, "got {got}, want {want}, rel {rel}");
}

#[test]
fn log_gamma_complex_spots() {
    let c = ctx();
    let got = log_gamma(&cvd(&c, "2.5", "1.5"), &c).unwrap();
    let want = cvd(
        &c,
        "-0.22711224079322732218640780398554509889216505438247838637",
        "1.1712929346646030339758123920826963655130110911202269991",
    );
    assert_rel(&got, &want, &c, 1e-52);

    let got = log_gamma(&cvd(&c, "0.3", "-2"), &c).unwrap();
    let want = cvd(
        &c,
        "-2.3594493559375710135944953763435483487091911101712858546",
        "0.91690761351866973697527847095748985106405770152686940708",
    );
    assert_rel(&got, &want, &c, 1e-52);
}

#[test]
fn gamma_one_third() {
    let c = ctx();
    let third = ComplexValue::from_int(&c, 1)
        .div(&ComplexValue::from_int(&c, 3))
        .unwrap();
    let got = gamma(&third, &c).unwrap();
    let want = ComplexValue::from_real(dec(
        &c,
        "2.678938534707747633655692940974677644128689377957301101",
    ));
    assert_rel(&got, &want, &c, 1e-52);
}

#[test]
fn hurwitz_zeta_spots() {
    let c = ctx();
    // zeta(-3, 1/4) = -B_4(1/4)/4, rational.
    let got = hurwitz_zeta(&ComplexValue::from_int(&c, -3), &cvd(&c, "0.25", "0"), &c).unwrap();
    let want = ComplexValue::from_real(dec(
        &c,
        "-0.00045572916666666666666666666666666666666666666666666666667",
    ));
    assert_rel(&got, &want, &c, 1e-48);

    // zeta(3, 1/3).
    let third = ComplexValue::from_int(&c, 1)
        .div(&ComplexValue::from_int(&c, 3))
        .unwrap();
    let got = hurwitz_zeta(&ComplexValue::from_int(&c, 3), &third, &c).unwrap();
    let want = ComplexValue::from_real(dec(
        &c,
        "27.56106119970080377622787797740750928454209531301488108286446",
    ));
    assert_rel(&got, &want, &c, 1e-52);
}

#[test]
fn hurwitz_zeta_sderiv_at_rational_points() {
    let c = ctx();
    let third = ComplexValue::from_int(&c, 1)
        .div(&ComplexValue::from_int(&c, 3))
        .unwrap();
    let got = hurwitz_zeta_sderiv(&ComplexValue::from_int(&c, -1), &third, &c).unwrap();
    let want = ComplexValue::from_real(dec(
        &c,
        "0.093726201760779427484200899133192867368837286938738021525",
    ));
    assert_rel(&got, &want, &c, 1e-50);

    let two_thirds = ComplexValue::from_int(&c, 2)
        .div(&ComplexValue::from_int(&c, 3))
        .unwrap();
    let got = hurwitz_zeta_sderiv(&ComplexValue::from_int(&c, -2), &two_thirds, &c).unwrap();
    let want = ComplexValue::from_real(dec(
        &c,
        "0.023778839294970248757856727077301261586330700219529871021",
    ));
    assert_rel(&got, &want, &c, 1e-50);
}

#[test]
fn trigamma_quarter_ties_to_catalan() {
    let c = ctx();
    let got = polygamma(1, &cvd(&c, "0.25", "0"), &c).unwrap();
    let want = ComplexValue::from_real(dec(
        &c,
        "17.197329154507110739271319119335224021506894401494167700545334",
    ));
    assert_rel(&got, &want, &c, 1e-52);

    // psi_1(1/4) = pi^2 + 8 C links polygamma to Catalan's constant.
    let pi = constants::pi(&c);
    let catalan = constants::catalan(&c);
    let closed = Float::with_val(c.prec_bits(), pi.square_ref())
        + Float::with_val(c.prec_bits(), 8u32 * &catalan);
    assert_rel(&got, &ComplexValue::from_real(closed), &c, 1e-52);

    // A point from the scaled-argument family: psi_1(19/108).
    let v = ComplexValue::from_int(&c, 19)
        .div(&ComplexValue::from_int(&c, 108))
        .unwrap();
    let got = polygamma(1, &v, &c).unwrap();
    let want = ComplexValue::from_real(dec(
        &c,
        "33.614173541590885911255136102884276362341157024997654762",
    ));
    assert_rel(&got, &want, &c, 1e-52);
}

#[test]
fn lerch_series_spot_inside_disc() {
    let c = ctx();
    let a = LerchArgs::new(
        cvd(&c, "0.6", "0"),
        ComplexValue::one(&c),
        cvd(&c, "0.8", "0"),
    )
    .unwrap();
    let got = specfun::lerch_phi(&a, &c).unwrap().0;
    let want = ComplexValue::from_real(dec(
        &c,
        "1.823794499520863773123603861608988517089957285718234427",
    ));
    assert_rel(&got, &want, &c, 1e-52);
}

/// The Glaisher-flavored s-derivative difference
/// Phi'(-1,-1,1/3) - Phi'(-1,-1,2/3) = ln(2^(2/9) 3^(1/12) e^(1/6) / A^2),
/// checked both against a frozen decimal and against the closed form built
/// from the library's own Glaisher constant.
#[test]
fn sderiv_difference_glaisher_form() {
    let c = ctx();
    let third = ComplexValue::from_int(&c, 1)
        .div(&ComplexValue::from_int(&c, 3))
        .unwrap();
    let two_thirds = ComplexValue::from_int(&c, 2)
        .div(&ComplexValue::from_int(&c, 3))
        .unwrap();
    let minus_one = ComplexValue::from_int(&c, -1);
    let a1 = LerchArgs::new(minus_one.clone(), minus_one.clone(), third).unwrap();
    let a2 = LerchArgs::new(minus_one.clone(), minus_one.clone(), two_thirds).unwrap();
    let got = &lerch_phi_sderiv(&a1, &c).unwrap() - &lerch_phi_sderiv(&a2, &c).unwrap();

    let want = ComplexValue::from_real(dec(
        &c,
        "-0.085258556554127093163295079306867128346226295438451056550557861",
    ));
    assert_rel(&got, &want, &c, 1e-48);

    let prec = c.prec_bits();
    let ln2 = constants::ln2(&c);
    let ln3 = c.float_i(3).ln();
    let ln_a = Float::with_val(prec, constants::glaisher(&c).ln_ref());
    let closed = Float::with_val(prec, 2u32 * &ln2) / 9u32
        + ln3 / 12u32
        + Float::with_val(prec, 1) / 6u32
        - Float::with_val(prec, 2u32 * &ln_a);
    assert_rel(&got, &ComplexValue::from_real(closed), &c, 1e-48);
}

/// The Apery-flavored difference
/// Phi'(-1,-2,2/3) - Phi'(-1,-2,1/3) = 14 zeta(3) / (9 pi^2),
/// again against both a frozen decimal and the closed form.
#[test]
fn sderiv_difference_apery_form() {
    let c = ctx();
    let third = ComplexValue::from_int(&c, 1)
        .div(&ComplexValue::from_int(&c, 3))
        .unwrap();
    let two_thirds = ComplexValue::from_int(&c, 2)
        .div(&ComplexValue::from_int(&c, 3))
        .unwrap();
    let minus_one = ComplexValue::from_int(&c, -1);
    let minus_two = ComplexValue::from_int(&c, -2);
    let a1 = LerchArgs::new(minus_one.clone(), minus_two.clone(), two_thirds).unwrap();
    let a2 = LerchArgs::new(minus_one.clone(), minus_two.clone(), third).unwrap();
    let got = &lerch_phi_sderiv(&a1, &c).unwrap() - &lerch_phi_sderiv(&a2, &c).unwrap();

    let want = ComplexValue::from_real(dec(
        &c,
        "0.18945706614111368485489841182051861024800300872428227001849176",
    ));
    assert_rel(&got, &want, &c, 1e-48);

    let prec = c.prec_bits();
    let pi = constants::pi(&c);
    let closed = Float::with_val(prec, 14u32 * &constants::apery(&c))
        / Float::with_val(prec, 9u32 * &Float::with_val(prec, pi.square_ref()));
    assert_rel(&got, &ComplexValue::from_real(closed), &c, 1e-48);
}

/// Catalan's constant to 60 digits through the polygamma route:
/// C = (psi_1(1/4) - pi^2) / 8.
#[test]
fn catalan_from_trigamma_matches_constant() {
    let c = PrecisionContext::new(60).unwrap();
    let psi1 = polygamma(1, &cvd(&c, "0.25", "0"), &c).unwrap();
    let pi2 = Float::with_val(c.prec_bits(), constants::pi(&c).square_ref());
    let via_psi = (psi1.re().clone() - pi2) / 8u32;
    let want = dec(
        &c,
        "0.915965594177219015054603514932384110774149374281672134266498",
    );
    let diff = Float::with_val(c.prec_bits(), &via_psi - &want).abs();
    assert!(diff < c.tol(), "got {via_psi}");
    let diff2 = Float::with_val(c.prec_bits(), via_psi - constants::catalan(&c)).abs();
    assert!(diff2 < c.tol());
}

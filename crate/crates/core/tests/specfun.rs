mod common;

use cespot::specfun::{
    connect_near_one, gamma, gamma_ratio, hyp2f1, hyp2f1_series, lngamma, Hyp2F1Params,
};
use cespot::{make_exponents, Error, PoleLocation};
use common::{c, hyp2f1_series_dd, lngamma_stirling, log_distance, rel_err};
use num_complex::Complex64;

fn f(a: Complex64, b: Complex64, cc: Complex64, z: f64) -> Complex64 {
    hyp2f1(Hyp2F1Params::new(a, b, cc, z).unwrap()).unwrap()
}

// reference values computed with 30-digit arithmetic
const LNGAMMA_GOLDEN: [((f64, f64), (f64, f64)); 4] = [
    (
        (1.0, 1.0),
        (-0.65092319930185633889, -0.30164032046753319789),
    ),
    (
        (-2.5, 0.3),
        (-0.43208889261320192052, -9.0933454212897415073),
    ),
    (
        (10.0, -30.0),
        (-13.73976365799715949, -85.47976397251643709),
    ),
    ((0.5, 60.0), (-93.328841074489124412, 185.66136818902404651)),
];

#[test]
fn lngamma_trivial_values() {
    assert!(lngamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
    let half = lngamma(c(0.5, 0.0)).unwrap();
    assert!((half - c(std::f64::consts::PI.sqrt().ln(), 0.0)).norm() < 1e-15);
    let four = lngamma(c(4.0, 0.0)).unwrap();
    assert!((four - c(6f64.ln(), 0.0)).norm() < 1e-14);
}

#[test]
fn lngamma_golden_values() {
    for ((zr, zi), (lr, li)) in LNGAMMA_GOLDEN {
        let got = lngamma(c(zr, zi)).unwrap();
        let want = c(lr, li);
        assert!(
            rel_err(got, want) < 1e-13,
            "lnΓ({zr}+{zi}i) = {got}, want {want}"
        );
    }
}

#[test]
fn lngamma_matches_stirling_oracle() {
    for (zr, zi) in [
        (1.0, 1.0),
        (0.3, -4.0),
        (7.5, 2.2),
        (-3.7, 0.8),
        (-11.2, -5.5),
        (45.0, 70.0),
    ] {
        let z = c(zr, zi);
        let got = lngamma(z).unwrap();
        let want = lngamma_stirling(z);
        // exp(lnΓ) to 1e-13 relative means lnΓ itself to 1e-13 absolute
        assert!(
            log_distance(got, want) < 1e-13 * (1.0 + want.re.abs()),
            "z = {z}"
        );
        // principal branch, not just mod 2πi
        assert!(
            (got - want).norm() < 1e-11 * (1.0 + want.norm()),
            "branch at z = {z}"
        );
    }
}

#[test]
fn gamma_against_factorials() {
    let mut fact = 1.0f64;
    for n in 1..20 {
        let g = gamma(c(n as f64, 0.0)).unwrap();
        assert!((g.re - fact).abs() < 1e-13 * fact, "Γ({n})");
        fact *= n as f64;
    }
}

#[test]
fn pole_errors() {
    for z in [c(0.0, 0.0), c(-3.0, 0.0), c(-7.0, 1e-11)] {
        assert!(matches!(lngamma(z), Err(Error::Pole { .. })));
    }
    assert!(lngamma(c(-3.0, 1e-6)).is_ok());
    match gamma_ratio(&[c(1.0, 0.0)], &[c(-2.0, 0.0)]) {
        Err(Error::Pole { location, .. }) => assert_eq!(location, PoleLocation::Denominator),
        other => panic!("expected a denominator pole, got {other:?}"),
    }
}

#[test]
fn gamma_ratio_examples() {
    assert!((gamma_ratio(&[c(2.0, 0.0)], &[c(1.0, 0.0)]).unwrap() - 1.0).norm() < 1e-15);
    let z = c(3.7, 0.0);
    assert!((gamma_ratio(&[z + 1.0], &[z]).unwrap() - z).norm() < 1e-14);
    let pi = gamma_ratio(&[c(0.5, 0.0), c(0.5, 0.0)], &[c(1.0, 0.0)]).unwrap();
    assert!((pi - std::f64::consts::PI).norm() < 1e-14);
}

#[test]
fn gamma_ratio_survives_overflow() {
    // Γ(200)/Γ(198) = 199·198 although both factors overflow
    let r = gamma_ratio(&[c(200.0, 0.0)], &[c(198.0, 0.0)]).unwrap();
    assert!((r.re / (199.0 * 198.0) - 1.0).abs() < 1e-12);
    let r = gamma_ratio(&[c(0.5, 300.0)], &[c(1.5, 300.0)]).unwrap();
    assert!(rel_err(r, 1.0 / c(0.5, 300.0)) < 1e-12);
}

#[test]
fn hyp2f1_closed_forms() {
    assert_eq!(f(c(0.3, 1.0), c(2.0, -1.0), c(1.5, 0.5), 0.0), c(1.0, 0.0));
    let z = 0.3;
    let v = f(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), z);
    assert!((v.re + (1.0 - z).ln() / z).abs() < 1e-15);
    let (a, b, z) = (c(2.0, 1.0), c(0.7, 0.0), 0.4);
    let v = f(a, b, b, z);
    assert!(rel_err(v, (-a * (1.0f64 - z).ln()).exp()) < 1e-13);
}

#[test]
fn hyp2f1_complex_golden() {
    let (a, b, cc) = (c(0.5, 2.0), c(1.5, 2.0), c(1.5, 4.0));
    let want = c(1.1516750418510497858, 1.2936868404728547567);
    assert!(rel_err(f(a, b, cc, 0.6), want) < 1e-12);
    assert!(rel_err(hyp2f1_series_dd(a, b, cc, 0.6), want) < 1e-14);
}

#[test]
fn hyp2f1_degenerate_limit_near_one() {
    // ₂F₁(1, 1; 3; z) = 2[z + (1 − z) ln(1 − z)]/z²
    let z = 0.999;
    let closed = 2.0 * (z + (1.0 - z) * (1.0f64 - z).ln()) / (z * z);
    let golden = 1.9881588189210589227;
    assert!((closed - golden).abs() < 1e-15);
    let oracle = hyp2f1_series_dd(c(1.0, 0.0), c(1.0, 0.0), c(3.0, 0.0), z);
    assert!((oracle.re - golden).abs() < 1e-14);
    let p = Hyp2F1Params::new(c(1.0, 0.0), c(1.0, 0.0), c(3.0, 0.0), z).unwrap();
    assert!(matches!(
        connect_near_one(p),
        Err(Error::DegenerateParams { .. })
    ));
    assert!((hyp2f1(p).unwrap() - golden).norm() < 1e-11);
}

#[test]
fn hyp2f1_against_extended_precision_series() {
    let cases = [
        (c(0.5, 2.0), c(1.5, 2.0), c(1.5, 4.0)),
        (c(1.2, -0.7), c(-0.4, 1.1), c(2.3, 0.2)),
        (c(0.25, 3.0), c(0.75, 3.0), c(0.5, 6.0)),
    ];
    for (a, b, cc) in cases {
        for z in [0.1, 0.45, 0.55, 0.8, 0.95] {
            let got = f(a, b, cc, z);
            let want = hyp2f1_series_dd(a, b, cc, z);
            assert!(
                rel_err(got, want) < 1e-11,
                "a={a} b={b} c={cc} z={z}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn series_and_connection_agree_at_055() {
    let p = Hyp2F1Params::new(c(0.5, 2.0), c(1.5, 2.0), c(1.5, 4.0), 0.55).unwrap();
    let s = hyp2f1_series(p).unwrap();
    let k = connect_near_one(p).unwrap();
    assert!(rel_err(k, s) < 1e-10);
}

#[test]
fn solution_parameters_at_omega_two() {
    let (_, hp) = make_exponents(c(2.0, 0.0), 1.0).unwrap();
    let golden = [
        (0.5, c(-0.7578331315092058748, 0.67868640550922853464)),
        (0.55, c(-0.95229581709038553679, 0.36336133323137768661)),
        (0.8, c(0.79181213501646716087, -0.65790984738240273757)),
        (0.95, c(-0.58637440302006363619, -0.85387090402693074253)),
    ];
    for (z, want) in golden {
        let p = Hyp2F1Params::new(hp.a1, hp.b1, hp.c1, z).unwrap();
        assert!(rel_err(hyp2f1(p).unwrap(), want) < 1e-10, "z = {z}");
    }
    let p = Hyp2F1Params::new(hp.a1, hp.b1, hp.c1, 0.5).unwrap();
    assert!(rel_err(connect_near_one(p).unwrap(), hyp2f1_series(p).unwrap()) < 1e-10);
}

#[test]
fn large_imaginary_parameters_near_one_half() {
    let (_, hp) = make_exponents(c(15.062607505556132, 0.0), 2.545991569499476).unwrap();
    let golden = [
        (0.45, c(0.456104112171231469, -0.891748354691110106)),
        (0.5, c(-0.160786267007050275, 0.988816729468036906)),
        (
            0.6087742654495379,
            c(-0.919721842048171511, 0.398143789917455157),
        ),
        (0.65, c(0.972698908902193099, -0.242004575879805908)),
        (0.8, c(-0.789578200330386888, -0.618369758143091867)),
        (0.95, c(0.554423374481667172, 0.836386184816318247)),
    ];
    for (z, want) in golden {
        let p = Hyp2F1Params::new(hp.a1, hp.b1, hp.c1, z).unwrap();
        assert!(rel_err(hyp2f1(p).unwrap(), want) < 1e-12, "z = {z}");
    }
}

#[test]
fn series_reports_nonconvergence() {
    // terms decay like 0.9999ⁿ, far too slowly for the term budget
    let p = Hyp2F1Params::new(c(1.0, 0.0), c(1.0, 0.0), c(1.5, 0.0), 0.9999).unwrap();
    assert!(matches!(
        hyp2f1_series(p),
        Err(Error::NonConvergence { .. })
    ));
}

#[test]
fn invalid_parameters() {
    assert!(matches!(
        Hyp2F1Params::new(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), 0.3),
        Err(Error::Domain(_))
    ));
    assert!(Hyp2F1Params::new(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), 1.0).is_err());
}

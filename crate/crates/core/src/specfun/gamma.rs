//! Log-Gamma and Γ-products for complex arguments.
//!
//! The right half-plane uses a Lanczos sum (g = 607/128, 15 terms, Godfrey's
//! coefficients); the left half-plane goes through the reflection formula
//! with a logarithm of sin(πz) that is continuous in the upper half-plane,
//! so `lngamma` is the analytic continuation of ln Γ with its cut along the
//! negative real axis only.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::{Error, PoleLocation, Result};

/// Arguments closer than this to a non-positive integer are treated as poles.
pub const POLE_TOLERANCE: f64 = 1e-9;

const LANCZOS_G_HALF: f64 = 5.242_187_5; // g + 1/2 with g = 607/128
const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;
const LN_PI: f64 = 1.144_729_885_849_400_2;

const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

/// True when `z` lies within [`POLE_TOLERANCE`] of 0, −1, −2, …
pub fn is_gamma_pole(z: Complex64) -> bool {
    let n = z.re.round();
    n <= 0.0 && (z - Complex64::new(n, 0.0)).norm() < POLE_TOLERANCE
}

/// sin(πz) with exact argument reduction of the real part, so values next
/// to the integers keep their relative accuracy.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let r = z.re - n;
    let sign = if n.rem_euclid(2.0) == 0.0 { 1.0 } else { -1.0 };
    let (s, c) = (PI * r).sin_cos();
    let y = PI * z.im;
    Complex64::new(sign * s * y.cosh(), sign * c * y.sinh())
}

/// e^{iθ} − 1 for real θ scaled by e^{a}: e^{a + iθ} − 1 without cancellation.
fn expm1_complex(a: f64, theta: f64) -> Complex64 {
    let (s, c) = theta.sin_cos();
    let half = (0.5 * theta).sin();
    Complex64::new(a.exp_m1() * c - 2.0 * half * half, a.exp() * s)
}

/// A logarithm of sin(πz) for Im z > 0 that is continuous on the whole
/// upper half-plane:
/// ln sin(πz) = −ln 2 + πy + i(π/2 − πx) + ln(1 − e^{2πiz}),
/// where the last logarithm stays on its principal branch since |e^{2πiz}| < 1.
fn ln_sin_pi_upper(z: Complex64) -> Complex64 {
    let reduced = z.re - z.re.round();
    let tail = -expm1_complex(-2.0 * PI * z.im, 2.0 * PI * reduced);
    Complex64::new(PI * z.im - LN_2, 0.5 * PI - PI * z.re) + tail.ln()
}

fn lngamma_right(z: Complex64) -> Complex64 {
    let mut ser = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (j, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        ser += c / (z + j as f64);
    }
    let t = z + LANCZOS_G_HALF;
    (z + 0.5) * t.ln() - t + (ser * SQRT_TWO_PI).ln() - z.ln()
}

/// Log-Gamma on the principal branch (analytic continuation of ln Γ with a
/// cut along the negative real axis).
pub fn lngamma(z: Complex64) -> Result<Complex64> {
    if is_gamma_pole(z) {
        return Err(Error::Pole {
            location: PoleLocation::Numerator,
            arg: z,
        });
    }
    Ok(lngamma_unchecked(z))
}

fn lngamma_unchecked(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        return lngamma_right(z);
    }
    if z.im < 0.0 {
        return lngamma_unchecked(z.conj()).conj();
    }
    let reflected = lngamma_right(Complex64::new(1.0, 0.0) - z);
    if z.im == 0.0 {
        // real axis: Γ is real, its log takes the imaginary part 0 or π
        let s = sin_pi(z).re;
        let arg = if s < 0.0 { PI } else { 0.0 };
        return Complex64::new(LN_PI - s.abs().ln() - reflected.re, arg);
    }
    LN_PI - ln_sin_pi_upper(z) - reflected
}

/// Γ(z).
pub fn gamma(z: Complex64) -> Result<Complex64> {
    lngamma(z).map(|l| l.exp())
}

/// 1/Γ(z), an entire function: exactly representable zeros at the poles of
/// Γ and no tolerance band.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        (-lngamma_right(z)).exp()
    } else {
        sin_pi(z) * lngamma_right(Complex64::new(1.0, 0.0) - z).exp() / PI
    }
}

/// Σ lnΓ(numerators) − Σ lnΓ(denominators), checking poles on both sides.
pub fn ln_gamma_ratio(numerators: &[Complex64], denominators: &[Complex64]) -> Result<Complex64> {
    for (&z, location) in numerators
        .iter()
        .map(|z| (z, PoleLocation::Numerator))
        .chain(denominators.iter().map(|z| (z, PoleLocation::Denominator)))
    {
        if is_gamma_pole(z) {
            return Err(Error::Pole { location, arg: z });
        }
    }
    let num: Complex64 = numerators.iter().map(|&z| lngamma_unchecked(z)).sum();
    let den: Complex64 = denominators.iter().map(|&z| lngamma_unchecked(z)).sum();
    Ok(num - den)
}

/// Π Γ(numerators) / Π Γ(denominators), evaluated in log space.
pub fn gamma_ratio(numerators: &[Complex64], denominators: &[Complex64]) -> Result<Complex64> {
    ln_gamma_ratio(numerators, denominators).map(|l| l.exp())
}

/// Rising factorial (a)_n = a(a+1)…(a+n−1).
pub fn pochhammer(a: Complex64, n: usize) -> Complex64 {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, k| acc * (a + k as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trivial_values() {
        assert!(lngamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        let half = lngamma(c(0.5, 0.0)).unwrap();
        assert!((half - c(PI.sqrt().ln(), 0.0)).norm() < 1e-15);
        let four = lngamma(c(4.0, 0.0)).unwrap();
        assert!((four - c(6f64.ln(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn poles_are_rejected() {
        for z in [c(0.0, 0.0), c(-3.0, 0.0), c(-7.0 + 1e-10, 0.0)] {
            assert!(matches!(lngamma(z), Err(Error::Pole { .. })));
        }
        assert!(lngamma(c(-3.0 + 1e-6, 0.0)).is_ok());
    }

    #[test]
    fn ratio_examples() {
        let one = gamma_ratio(&[c(2.0, 0.0)], &[c(1.0, 0.0)]).unwrap();
        assert!((one - 1.0).norm() < 1e-14);
        let z = c(3.7, 0.0);
        let r = gamma_ratio(&[z + 1.0], &[z]).unwrap();
        assert!((r - z).norm() < 1e-13);
        let pi = gamma_ratio(&[c(0.5, 0.0), c(0.5, 0.0)], &[c(1.0, 0.0)]).unwrap();
        assert!((pi - PI).norm() < 1e-14);
    }

    #[test]
    fn ratio_pole_location() {
        let err = gamma_ratio(&[c(-2.0, 0.0)], &[c(1.0, 0.0)]).unwrap_err();
        assert!(matches!(
            err,
            Error::Pole {
                location: PoleLocation::Numerator,
                ..
            }
        ));
        let err = gamma_ratio(&[c(1.0, 0.0)], &[c(0.0, 0.0)]).unwrap_err();
        assert!(matches!(
            err,
            Error::Pole {
                location: PoleLocation::Denominator,
                ..
            }
        ));
    }

    #[test]
    fn recip_gamma_vanishes_at_poles() {
        for n in 0..6 {
            assert_eq!(recip_gamma(c(-(n as f64), 0.0)).norm(), 0.0);
        }
        // 1/Γ(-2 + δ) ≈ 2δ
        let x = -2.0 + 1e-12;
        let d = x + 2.0;
        let v = recip_gamma(c(x, 0.0));
        assert!((v.re / (2.0 * d) - 1.0).abs() < 1e-11);
    }

    #[test]
    fn large_imaginary_parts_stay_finite() {
        let z = c(-0.3, 150.0);
        let l = lngamma(z).unwrap();
        assert!(l.re.is_finite() && l.im.is_finite());
        // recurrence lnΓ(z+1) = lnΓ(z) + ln z modulo 2πi
        let diff = lngamma(z + 1.0).unwrap() - l - z.ln();
        assert!(diff.re.abs() < 1e-10);
        let k = (diff.im / (2.0 * PI)).round();
        assert!((diff.im - 2.0 * PI * k).abs() < 1e-10);
    }

    #[test]
    fn pochhammer_matches_gamma_ratio() {
        let a = c(0.3, 1.7);
        let p = pochhammer(a, 5);
        let g = gamma_ratio(&[a + 5.0], &[a]).unwrap();
        assert!((p - g).norm() < 1e-12 * p.norm());
        assert_eq!(pochhammer(a, 0), c(1.0, 0.0));
    }
}

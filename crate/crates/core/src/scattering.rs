//! Reflection and transmission amplitudes, flux balance, the partner
//! relations between V₊ and V₋, the matched step, and quasinormal
//! frequencies.
//!
//! Every Γ-product goes through [`gamma_ratio`] in log space: the
//! arguments grow like 2iω and direct products overflow or cancel long
//! before the amplitudes themselves become small.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::potentials::{PotentialKind, Sign};
use crate::solutions::{make_exponents, HypSolutionParams};
use crate::specfun::{gamma_ratio, is_gamma_pole, lngamma, recip_gamma};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Large-x behaviour of the two exact solutions of V₊, with
/// F^κ ≈ a^{κ−}e^{iωx} + b^{κ−}e^{−iωx} as x → −∞ and
/// F^κ ≈ a^{κ+}e^{ik′x} + b^{κ+}e^{−ik′x} as x → +∞ (G₁ = H₁ = 1, the
/// common phase e^{−iπ/4} divided out).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticCoefficients {
    pub a_i_minus: Complex64,
    pub b_i_minus: Complex64,
    pub a_ii_minus: Complex64,
    pub b_ii_minus: Complex64,
    pub a_i_plus: Complex64,
    pub b_i_plus: Complex64,
    pub a_ii_plus: Complex64,
    pub b_ii_plus: Complex64,
}

impl AsymptoticCoefficients {
    /// Reflection and transmission of the combination that is a unit
    /// incident wave from the left plus a pure transmitted wave at +∞.
    pub fn amplitudes(&self) -> (Complex64, Complex64) {
        let den = self.a_i_minus * self.b_ii_plus - self.b_i_plus * self.a_ii_minus;
        let r = (self.b_ii_plus * self.b_i_minus - self.b_i_plus * self.b_ii_minus) / den;
        let t = (self.b_ii_plus * self.a_i_plus - self.b_i_plus * self.a_ii_plus) / den;
        (r, t)
    }
}

/// Amplitudes and coefficients for one real frequency above threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringResult {
    pub omega: f64,
    pub m: f64,
    pub kind: PotentialKind,
    pub r: Complex64,
    pub t: Complex64,
    pub r2: f64,
    pub t2: f64,
    /// |R|² + (k′/ω)|T|²
    pub flux: f64,
    /// Left wavenumber √(ω² − W₋²) = ω.
    pub k: f64,
    /// Right wavenumber √(ω² − W₊²) = √(ω² − m²).
    pub kprime: f64,
}

impl ScatteringResult {
    pub fn new(omega: f64, m: f64, kind: PotentialKind, r: Complex64, t: Complex64) -> Self {
        let kprime = (omega * omega - m * m).sqrt();
        let (r2, t2) = (r.norm_sqr(), t.norm_sqr());
        Self {
            omega,
            m,
            kind,
            r,
            t,
            r2,
            t2,
            flux: r2 + kprime / omega * t2,
            k: omega,
            kprime,
        }
    }
}

fn check_above_threshold(omega: f64, m: f64) -> Result<()> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::Domain(format!("coupling must be m > 0, got {m}")));
    }
    if !(omega > m && omega.is_finite()) {
        return Err(Error::Domain(format!(
            "scattering needs ω > m, got ω = {omega}, m = {m}"
        )));
    }
    Ok(())
}

fn real_params(omega: f64, m: f64) -> Result<HypSolutionParams> {
    check_above_threshold(omega, m)?;
    Ok(make_exponents(Complex64::new(omega, 0.0), m)?.1)
}

pub fn asymptotic_coefficients(omega: f64, m: f64) -> Result<AsymptoticCoefficients> {
    let HypSolutionParams { a1, b1, c1, .. } = real_params(omega, m)?;
    let to_right = ONE + (c1 - a1) / m;
    let to_left = ONE + b1 / m;
    let two_minus_c = 2.0 - c1;
    Ok(AsymptoticCoefficients {
        a_i_minus: ONE,
        b_i_minus: Complex64::new(0.0, 0.0),
        a_ii_minus: Complex64::new(0.0, 0.0),
        b_ii_minus: (c1 - 1.0) / m,
        a_i_plus: gamma_ratio(&[c1, a1 + b1 - c1], &[a1, b1])? * to_right,
        a_ii_plus: gamma_ratio(
            &[two_minus_c, a1 + b1 - c1],
            &[a1 - c1 + 1.0, b1 - c1 + 1.0],
        )? * to_right,
        b_i_plus: gamma_ratio(&[c1, c1 - a1 - b1], &[c1 - a1, c1 - b1])? * to_left,
        b_ii_plus: gamma_ratio(&[two_minus_c, c1 - a1 - b1], &[ONE - a1, ONE - b1])? * to_left,
    })
}

/// R± and T± from the closed Γ-products.
pub fn reflection_transmission(sign: Sign, omega: f64, m: f64) -> Result<ScatteringResult> {
    let HypSolutionParams { a1, b1, c1, .. } = real_params(omega, m)?;
    let r_plus = gamma_ratio(&[ONE - a1, ONE - b1, c1], &[ONE - c1, c1 - a1, c1 - b1])? / m;
    let shared = gamma_ratio(&[ONE - a1, ONE - b1], &[ONE - c1, ONE + c1 - a1 - b1])?;
    let shift = (c1 - a1) / m;
    let (r, t, kind) = match sign {
        Sign::Plus => (r_plus, (ONE + shift) * shared, PotentialKind::PlusPartner),
        Sign::Minus => (-r_plus, (ONE - shift) * shared, PotentialKind::MinusPartner),
    };
    Ok(ScatteringResult::new(omega, m, kind, r, t))
}

// ln sinh(u) = u − ln 2 + sinh_tail(u) and ln cosh(u) = u − ln 2 + cosh_tail(u);
// keeping the linear parts apart lets them cancel exactly.
fn sinh_tail(u: f64) -> f64 {
    (-(-2.0 * u).exp_m1()).ln()
}

fn cosh_tail(u: f64) -> f64 {
    (-2.0 * u).exp().ln_1p()
}

/// (|R±|², |T±|²) in the hyperbolic-sine form, evaluated in log space.
pub fn coefficients_closed_form(omega: f64, m: f64) -> Result<(f64, f64)> {
    check_above_threshold(omega, m)?;
    let kprime = (omega * omega - m * m).sqrt();
    // ω − k′ without cancellation
    let gap = m * m / (omega + kprime);
    let sum = omega + kprime;
    let r2 = (2.0 * PI * (gap - sum) + sinh_tail(2.0 * PI * gap) - sinh_tail(2.0 * PI * sum)).exp();
    let t2 = omega / kprime
        * (cosh_tail(2.0 * PI * omega) + sinh_tail(2.0 * PI * kprime) - sinh_tail(2.0 * PI * sum))
            .exp();
    Ok((r2, t2))
}

/// (R⁺ + R⁻, T⁺ − (iω/(m + ik′))T⁻); both vanish.
pub fn susy_relation_check(omega: f64, m: f64) -> Result<(Complex64, Complex64)> {
    let plus = reflection_transmission(Sign::Plus, omega, m)?;
    let minus = reflection_transmission(Sign::Minus, omega, m)?;
    let factor = I * plus.k / (m + I * plus.kprime);
    Ok((plus.r + minus.r, plus.t - factor * minus.t))
}

/// Amplitudes of the step V_S with V₀ = m², α = 1.
pub fn step_amplitudes(omega: f64, m: f64) -> Result<ScatteringResult> {
    check_above_threshold(omega, m)?;
    let kprime = (omega * omega - m * m).sqrt();
    let iw = I * omega;
    let ik = I * kprime;
    let r = gamma_ratio(
        &[2.0 * iw, -iw - ik, ONE - iw - ik],
        &[-2.0 * iw, iw - ik, ONE + iw - ik],
    )?;
    let t = gamma_ratio(&[ONE - iw - ik, -iw - ik], &[-2.0 * iw, ONE - 2.0 * ik])?;
    Ok(ScatteringResult::new(omega, m, PotentialKind::Step, r, t))
}

/// |R^S|² = sinh²(π(ω − k′)) / sinh²(π(ω + k′)).
pub fn step_reflection_closed_form(omega: f64, m: f64) -> Result<f64> {
    check_above_threshold(omega, m)?;
    let kprime = (omega * omega - m * m).sqrt();
    let gap = m * m / (omega + kprime);
    let sum = omega + kprime;
    Ok((2.0 * (PI * (gap - sum) + sinh_tail(PI * gap) - sinh_tail(PI * sum))).exp())
}

/// (|R⁺|², |R^S|², |R⁺|² − |R^S|²) for each frequency.
pub fn compare_reflection(omega_grid: &[f64], m: f64) -> Result<Vec<(f64, f64, f64)>> {
    omega_grid
        .iter()
        .map(|&omega| {
            let (partner, _) = coefficients_closed_form(omega, m)?;
            let step = step_reflection_closed_form(omega, m)?;
            Ok((partner, step, partner - step))
        })
        .collect()
}

/// Which closed-form family of quasinormal frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QnmFamily {
    Step,
    Partner,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QnmFrequency {
    pub n: u32,
    pub omega: Complex64,
    pub kind: QnmFamily,
}

/// ω_S = −(i/2)(n+1 − m²/(n+1)) and ω₊ = −(i/4)(n+1 − 4m²/(n+1)).
pub fn qnm(kind: QnmFamily, n: u32, m: f64) -> QnmFrequency {
    let level = f64::from(n) + 1.0;
    let omega = match kind {
        QnmFamily::Step => Complex64::new(0.0, -0.5 * (level - m * m / level)),
        QnmFamily::Partner => Complex64::new(0.0, -0.25 * (level - 4.0 * m * m / level)),
    };
    QnmFrequency { n, omega, kind }
}

/// 1/T⁺ in the duplication form
/// 1/T⁺ = 2^{−2iω−2ik′} Γ(1/2 − 2iω) Γ(1 − 2ik′) / [(1 + (c₁−a₁)/m) √π Γ(1 − 2iω − 2ik′)]
/// with ik′ = √(m² − ω²) taken as the principal root, the continuation
/// that is positive on the imaginary ω axis where the quasinormal
/// frequencies live.
///
/// Returns `None` when the expression is an indeterminate 0·∞ form at this
/// exact point (a numerator Γ pole or a vanishing prefactor).
fn inverse_transmission_plus_direct(omega: Complex64, m: f64) -> Result<Option<Complex64>> {
    let b = (m * m - omega * omega).sqrt();
    let iw = I * omega;
    let prefactor = ONE + (iw - b) / m;
    let half = Complex64::new(0.5, 0.0) - 2.0 * iw;
    let threshold = ONE - 2.0 * b;
    if prefactor.norm() < 1e-14 || is_gamma_pole(half) || is_gamma_pole(threshold) {
        return Ok(None);
    }
    let power = ((-2.0 * iw - 2.0 * b) * LN_2).exp();
    let gammas = (lngamma(half)? + lngamma(threshold)?).exp();
    let value = power * gammas * recip_gamma(ONE - 2.0 * iw - 2.0 * b) / (prefactor * PI.sqrt());
    Ok(Some(value))
}

/// 1/T⁺(ω, m) for complex ω (see the module docs for the branch of k′).
/// At points where the closed form is a removable 0·∞ singularity the
/// value is recovered as the mean over a small circle, which is exact for
/// analytic functions up to the trapezoidal-rule error.
pub fn inverse_transmission_plus(omega: Complex64, m: f64) -> Result<Complex64> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::Domain(format!("coupling must be m > 0, got {m}")));
    }
    if omega.norm() < 1e-14 {
        return Err(Error::ZeroFrequency);
    }
    if let Some(v) = inverse_transmission_plus_direct(omega, m)? {
        return Ok(v);
    }
    const POINTS: usize = 32;
    let radius = 1e-3 * omega.norm().min(1.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..POINTS {
        let theta = 2.0 * PI * (j as f64 + 0.5) / POINTS as f64;
        let probe = omega + Complex64::from_polar(radius, theta);
        let v = inverse_transmission_plus_direct(probe, m)?
            .ok_or_else(|| Error::Domain(format!("1/T+ is singular around ω = {omega}")))?;
        sum += v;
    }
    Ok(sum / POINTS as f64)
}

/// |1/T⁺| at the n-th closed-form quasinormal frequency of V₊.
pub fn qnm_pole_check(n: u32, m: f64) -> Result<f64> {
    let freq = qnm(QnmFamily::Partner, n, m);
    Ok(inverse_transmission_plus(freq.omega, m)?.norm())
}

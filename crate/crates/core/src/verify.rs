//! Self-check suites: each check evaluates an identity that holds exactly
//! and reports the worst residual against a tolerance.

use std::fmt;

use num_complex::Complex64;

use crate::error::Result;
use crate::oracle::{numerical_amplitudes, IntegrationConfig};
use crate::potentials::{PotentialSpec, Sign};
use crate::scattering::{
    coefficients_closed_form, reflection_transmission, step_amplitudes,
    step_reflection_closed_form, susy_relation_check,
};
use crate::solutions::{wronskian_at, wronskian_closed_form, Branch, ExactSolution, ZPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyLevel {
    /// Flux, supersymmetry and Wronskian suites.
    Quick,
    /// Adds the wave-equation residual and the numerical-integration sweep.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub level: VerifyLevel,
    /// Offset added to every exact target value; nonzero values must make
    /// the suite fail.
    pub perturbation: f64,
}

impl VerifyOptions {
    pub fn new(level: VerifyLevel) -> Self {
        Self {
            level,
            perturbation: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckOutcome {
    fn new(name: &str, max_residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<28} {:>12} {:>12}  status",
            "check", "max_resid", "tolerance"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<28} {:>12.3e} {:>12.1e}  {}",
                c.name,
                c.max_residual,
                c.tolerance,
                if c.passed { "pass" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

const COUPLINGS: [f64; 3] = [0.5, 1.0, 2.0];

/// 50 frequencies spread over (m, 6m].
pub fn frequency_grid(m: f64) -> Vec<f64> {
    (1..=50)
        .map(|i| m * (1.0 + 5.0 * i as f64 / 50.0))
        .collect()
}

fn sweep(mut f: impl FnMut(f64, f64) -> Result<f64>) -> Result<f64> {
    let mut worst = 0.0f64;
    for m in COUPLINGS {
        for omega in frequency_grid(m) {
            let r = f(omega, m)?;
            worst = worst.max(if r.is_nan() { f64::INFINITY } else { r });
        }
    }
    Ok(worst)
}

fn flux_residual(r2: f64, t2: f64, omega: f64, m: f64, target: f64) -> f64 {
    let kprime = (omega * omega - m * m).sqrt();
    (r2 + kprime / omega * t2 - target).abs()
}

fn closed_form_check(delta: f64) -> Result<CheckOutcome> {
    let worst = sweep(|omega, m| {
        let rt = reflection_transmission(Sign::Plus, omega, m)?;
        let (r2, t2) = coefficients_closed_form(omega, m)?;
        let rel = |a: f64, b: f64| (a - b * (1.0 + delta)).abs() / b.abs().max(f64::MIN_POSITIVE);
        Ok(rel(rt.r2, r2).max(rel(rt.t2, t2)))
    })?;
    Ok(CheckOutcome::new("closed_form_equivalence", worst, 1e-10))
}

fn flux_checks(delta: f64) -> Result<Vec<CheckOutcome>> {
    let target = 1.0 + delta;
    let plus = sweep(|omega, m| {
        let rt = reflection_transmission(Sign::Plus, omega, m)?;
        Ok(flux_residual(rt.r2, rt.t2, omega, m, target))
    })?;
    let minus = sweep(|omega, m| {
        let rt = reflection_transmission(Sign::Minus, omega, m)?;
        Ok(flux_residual(rt.r2, rt.t2, omega, m, target))
    })?;
    let step = sweep(|omega, m| {
        let rt = step_amplitudes(omega, m)?;
        Ok(flux_residual(rt.r2, rt.t2, omega, m, target))
    })?;
    Ok(vec![
        CheckOutcome::new("flux_plus", plus, 1e-9),
        CheckOutcome::new("flux_minus", minus, 1e-9),
        CheckOutcome::new("flux_step", step, 1e-9),
    ])
}

fn susy_check(delta: f64) -> Result<CheckOutcome> {
    let worst = sweep(|omega, m| {
        let (dr, dt) = susy_relation_check(omega, m)?;
        Ok((dr.norm() + delta.abs()).max(dt.norm() + delta.abs()))
    })?;
    Ok(CheckOutcome::new("susy_relations", worst, 1e-11))
}

fn wronskian_frequencies() -> [(Complex64, f64); 4] {
    [
        (Complex64::new(2.0, 0.0), 1.0),
        (Complex64::new(1.3, 0.0), 0.7),
        (Complex64::new(0.5, 0.5), 1.0),
        (Complex64::new(3.5, -0.2), 2.0),
    ]
}

fn z_samples() -> impl Iterator<Item = f64> {
    (0..=18).map(|i| 0.05 + 0.05 * i as f64)
}

fn wronskian_checks(delta: f64) -> Result<Vec<CheckOutcome>> {
    let mut value = 0.0f64;
    let mut drift = 0.0f64;
    for (omega, m) in wronskian_frequencies() {
        for sign in [Sign::Plus, Sign::Minus] {
            let expected = wronskian_closed_form(sign, omega, m) * (1.0 + delta);
            let mut first = None;
            for z in z_samples() {
                let w = wronskian_at(sign, omega, m, &ZPoint::from_z(z)?)?;
                value = value.max((w - expected).norm() / expected.norm());
                let w0 = *first.get_or_insert(w);
                drift = drift.max((w - w0).norm() / w0.norm());
            }
        }
    }
    Ok(vec![
        CheckOutcome::new("wronskian_value", value, 1e-9),
        CheckOutcome::new("wronskian_constancy", drift, 1e-9),
    ])
}

fn z_equation_check(delta: f64) -> Result<CheckOutcome> {
    let mut worst = 0.0f64;
    for (omega, m) in wronskian_frequencies() {
        for branch in [Branch::I, Branch::II] {
            let sol = ExactSolution::new(branch, omega, m, None)?;
            for sign in [Sign::Plus, Sign::Minus] {
                for z in z_samples() {
                    let r = sol.z_equation_residual(sign, &ZPoint::from_z(z)?)?;
                    worst = worst.max(r + delta.abs());
                }
            }
        }
    }
    Ok(CheckOutcome::new("z_equation_residual", worst, 1e-7))
}

fn oracle_checks(delta: f64) -> Result<Vec<CheckOutcome>> {
    let cfg = IntegrationConfig::default();
    let m = 1.0;
    let specs = [
        ("oracle_plus", PotentialSpec::plus(m)?),
        ("oracle_minus", PotentialSpec::minus(m)?),
        ("oracle_step", PotentialSpec::matched_step(m)?),
    ];
    let mut out = Vec::new();
    for (name, spec) in specs {
        let mut worst = 0.0f64;
        for omega in [1.2, 1.5, 2.0, 3.0] {
            let numeric = numerical_amplitudes(&spec, omega, &cfg)?;
            let exact = match spec.kind().partner_sign() {
                Some(sign) => reflection_transmission(sign, omega, m)?,
                None => step_amplitudes(omega, m)?,
            };
            let dr = (numeric.r - exact.r).norm();
            let dt = (numeric.t - exact.t * (1.0 + delta)).norm();
            worst = worst.max(dr).max(dt);
        }
        out.push(CheckOutcome::new(name, worst, 1e-5));
    }
    Ok(out)
}

fn step_closed_form_check(delta: f64) -> Result<CheckOutcome> {
    let worst = sweep(|omega, m| {
        let rt = step_amplitudes(omega, m)?;
        let r2 = step_reflection_closed_form(omega, m)? * (1.0 + delta);
        Ok((rt.r2 - r2).abs() / r2.max(f64::MIN_POSITIVE))
    })?;
    Ok(CheckOutcome::new("step_closed_form", worst, 1e-10))
}

/// Run the suites selected by `options`.
pub fn run_checks(options: &VerifyOptions) -> Result<VerifyReport> {
    let delta = options.perturbation;
    let mut checks = vec![closed_form_check(delta)?, step_closed_form_check(delta)?];
    checks.extend(flux_checks(delta)?);
    checks.push(susy_check(delta)?);
    checks.extend(wronskian_checks(delta)?);
    if options.level == VerifyLevel::Full {
        checks.push(z_equation_check(delta)?);
        checks.extend(oracle_checks(delta)?);
    }
    Ok(VerifyReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        let g = frequency_grid(2.0);
        assert_eq!(g.len(), 50);
        assert!(g[0] > 2.0);
        assert!((g[49] - 12.0).abs() < 1e-12);
    }

    #[test]
    fn quick_passes() {
        let report = run_checks(&VerifyOptions::new(VerifyLevel::Quick)).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn perturbation_fails() {
        let options = VerifyOptions {
            level: VerifyLevel::Quick,
            perturbation: 1e-6,
        };
        let report = run_checks(&options).unwrap();
        assert!(!report.all_passed());
        let failed = report.checks.iter().filter(|c| !c.passed).count();
        assert!(failed >= report.checks.len() - 1, "{report}");
    }
}

//! Direct numerical integration of Z″ + (ω² − V)Z = 0, used to check the
//! closed-form amplitudes along a route that never touches a
//! hypergeometric function.
//!
//! The march starts at `x_max` from a pure transmitted wave e^{ik′x} and
//! runs right to left with classical fourth-order Runge–Kutta; the
//! reflection and transmission amplitudes are then read off by a
//! least-squares fit of e^{±iωx} over a window at the left edge.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::potentials::{potential, PotentialSpec};
use crate::scattering::ScatteringResult;
use crate::solutions::{WaveField, WaveMeta};

const I: Complex64 = Complex64::new(0.0, 1.0);
const BLOW_UP: f64 = 1e12;
const MAX_CONDITION: f64 = 1e8;
const STABILITY_LIMIT: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationConfig {
    pub x_min: f64,
    pub x_max: f64,
    pub step: f64,
    /// Convergence order of the stepper. Only the fourth-order scheme is
    /// implemented.
    pub method_order: u32,
    /// Length of the fitting window at the left boundary. V± decays only
    /// like e^{x/2} on the left, so a long window picks up the tail.
    pub match_window: f64,
}

impl Default for IntegrationConfig {
    fn default() -> Self {
        Self {
            x_min: -30.0,
            x_max: 30.0,
            step: 1e-3,
            method_order: 4,
            match_window: 4.0,
        }
    }
}

impl IntegrationConfig {
    pub fn with_step(mut self, step: f64) -> Self {
        self.step = step;
        self
    }

    pub fn validate(&self, spec: &PotentialSpec, omega: f64) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if !(self.x_min < -5.0 && self.x_max > 5.0) {
            return bad(format!(
                "interval [{}, {}] must reach beyond ±5",
                self.x_min, self.x_max
            ));
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return bad(format!("step must be positive, got {}", self.step));
        }
        if self.method_order < 4 {
            return bad(format!(
                "method order must be at least 4, got {}",
                self.method_order
            ));
        }
        if self.method_order != 4 {
            return bad(format!(
                "method order {} is not implemented",
                self.method_order
            ));
        }
        if !(self.match_window > 0.0 && self.match_window < self.x_max - self.x_min) {
            return bad(format!(
                "match window {} does not fit the interval",
                self.match_window
            ));
        }
        if self.match_window < 2.0 * self.step {
            return bad("match window must hold at least three samples".into());
        }
        let samples = 2001;
        let worst = (0..samples)
            .map(|i| {
                let x = self.x_min + (self.x_max - self.x_min) * i as f64 / (samples - 1) as f64;
                (potential(spec, x) - omega * omega).abs()
            })
            .fold(0.0f64, f64::max);
        if worst * self.step * self.step >= STABILITY_LIMIT {
            return bad(format!(
                "step {} too coarse: max|V - ω²|·h² = {:.3e}",
                self.step,
                worst * self.step * self.step
            ));
        }
        Ok(())
    }
}

fn rk4_step(
    spec: &PotentialSpec,
    omega2: f64,
    x: f64,
    h: f64,
    z: Complex64,
    dz: Complex64,
) -> (Complex64, Complex64) {
    let accel = |x: f64, z: Complex64| z * (potential(spec, x) - omega2);
    let half = 0.5 * h;
    let k1z = dz;
    let k1d = accel(x, z);
    let k2z = dz + half * k1d;
    let k2d = accel(x + half, z + half * k1z);
    let k3z = dz + half * k2d;
    let k3d = accel(x + half, z + half * k2z);
    let k4z = dz + h * k3d;
    let k4d = accel(x + h, z + h * k3z);
    (
        z + h / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z),
        dz + h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d),
    )
}

/// Integrate from a pure transmitted wave at `x_max` down to `x_min`.
pub fn integrate_wavefunction(
    spec: &PotentialSpec,
    omega: f64,
    cfg: &IntegrationConfig,
) -> Result<WaveField> {
    let right = spec.right_asymptote();
    if !(omega > 0.0 && omega * omega > right) {
        return Err(Error::Domain(format!(
            "ω = {omega} is below the propagation threshold √{right}"
        )));
    }
    cfg.validate(spec, omega)?;

    let kprime = (omega * omega - right).sqrt();
    let span = cfg.x_max - cfg.x_min;
    let steps = (span / cfg.step).round().max(1.0) as usize;
    let h = span / steps as f64;
    let omega2 = omega * omega;

    let mut z = (I * kprime * cfg.x_max).exp();
    let mut dz = I * kprime * z;
    let mut values = Vec::with_capacity(steps + 1);
    values.push(z);
    for j in 0..steps {
        let x = cfg.x_max - j as f64 * h;
        (z, dz) = rk4_step(spec, omega2, x, -h, z, dz);
        let magnitude = z.norm();
        if !(magnitude <= BLOW_UP) {
            return Err(Error::BlowUp {
                x: x - h,
                magnitude,
            });
        }
        values.push(z);
    }
    values.reverse();
    let grid = (0..=steps).map(|i| cfg.x_min + i as f64 * h).collect();
    let meta = WaveMeta {
        omega: Complex64::new(omega, 0.0),
        m: right.max(0.0).sqrt(),
        kind: spec.kind(),
        branch: None,
    };
    WaveField::new(grid, values, meta)
}

/// Fit Z ≈ A e^{iωx} + B e^{−iωx} over the left window and return
/// R = B/A, T = 1/A.
pub fn extract_rt(
    field: &WaveField,
    omega: f64,
    m_effective: f64,
    cfg: &IntegrationConfig,
) -> Result<ScatteringResult> {
    let start = field.grid()[0];
    let mut n = 0.0;
    let mut s = Complex64::new(0.0, 0.0);
    let mut rhs_in = Complex64::new(0.0, 0.0);
    let mut rhs_out = Complex64::new(0.0, 0.0);
    for (&x, &z) in field.grid().iter().zip(field.values()) {
        if x > start + cfg.match_window {
            break;
        }
        let incoming = (I * omega * x).exp();
        let outgoing = incoming.conj();
        n += 1.0;
        s += outgoing * outgoing;
        rhs_in += incoming.conj() * z;
        rhs_out += outgoing.conj() * z;
    }
    if n < 3.0 {
        return Err(Error::Config(
            "match window holds fewer than three samples".into(),
        ));
    }
    // normal matrix [[n, s], [s̄, n]] has eigenvalues n ± |s|
    let condition = (n + s.norm()) / (n - s.norm());
    if !(condition <= MAX_CONDITION) {
        return Err(Error::IllConditioned { condition });
    }
    let det = n * n - s.norm_sqr();
    let a = (n * rhs_in - s * rhs_out) / det;
    let b = (n * rhs_out - s.conj() * rhs_in) / det;
    Ok(ScatteringResult::new(
        omega,
        m_effective,
        field.meta().kind,
        b / a,
        Complex64::new(1.0, 0.0) / a,
    ))
}

/// Integrate and extract in one call.
pub fn numerical_amplitudes(
    spec: &PotentialSpec,
    omega: f64,
    cfg: &IntegrationConfig,
) -> Result<ScatteringResult> {
    let field = integrate_wavefunction(spec, omega, cfg)?;
    extract_rt(&field, omega, spec.right_asymptote().max(0.0).sqrt(), cfg)
}

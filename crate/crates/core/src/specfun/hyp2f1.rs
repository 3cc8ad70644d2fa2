//! Gauss hypergeometric function ₂F₁(a, b; c; z) for complex parameters and
//! real z ∈ [0, 1).
//!
//! For z ≤ [`Z_SWITCH`] the Gauss series is summed directly. Above it the
//! Kummer connection formula maps the evaluation to argument 1 − z, where
//! the series converges quickly again. When c − a − b sits on an integer
//! the two terms of that formula diverge against each other; there the
//! value is taken as the mean over a small circle in `a`, which recovers
//! the analytic limit.

use num_complex::Complex64;

use super::gamma::{gamma_ratio, is_gamma_pole, POLE_TOLERANCE};
use crate::error::{Error, PoleLocation, Result};

/// Series below, connection formula above.
pub const Z_SWITCH: f64 = 0.5;
pub const MAX_SERIES_TERMS: usize = 10_000;
const SERIES_TOLERANCE: f64 = 1e-16;
/// |c − a − b − n| below which the connection formula is replaced by its limit.
const DEGENERATE_BAND: f64 = 1e-4;
const LIMIT_RADIUS: f64 = 1e-3;
const LIMIT_POINTS: usize = 8;
/// Range of z where both representations are tried.
const BLEND_WINDOW: (f64, f64) = (0.3, 0.7);
/// Σ|terms| / |sum| above which the other representation is consulted.
const CANCELLATION_LIMIT: f64 = 1e3;

/// Validated argument bundle for [`hyp2f1`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2F1Params {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub z: f64,
}

impl Hyp2F1Params {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&z) {
            return Err(Error::domain(format!(
                "2F1 argument z = {z} outside [0, 1)"
            )));
        }
        if is_gamma_pole(c) {
            return Err(Error::domain(format!(
                "2F1 parameter c = {c} is a non-positive integer"
            )));
        }
        Ok(Self { a, b, c, z })
    }
}

fn near_integer(v: Complex64) -> bool {
    (v - Complex64::new(v.re.round(), 0.0)).norm() < POLE_TOLERANCE
}

/// A sum together with Σ|terms|, the scale of its rounding error.
#[derive(Debug, Clone, Copy)]
struct Tracked {
    value: Complex64,
    magnitude: f64,
}

impl Tracked {
    /// Cancellation factor: rounding error relative to the value, in ulps.
    fn cancellation(&self) -> f64 {
        let v = self.value.norm();
        if v > 0.0 {
            self.magnitude / v
        } else {
            f64::INFINITY
        }
    }
}

/// Plain Gauss series Σ (a)_n (b)_n / ((c)_n n!) zⁿ.
fn series_tracked(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Tracked> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut magnitude = 1.0;
    let mut quiet = 0;
    for n in 0..MAX_SERIES_TERMS {
        let k = n as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        magnitude += term.norm();
        if term.norm() == 0.0 {
            return Ok(Tracked {
                value: sum,
                magnitude,
            });
        }
        // two consecutive negligible terms guard against a single accidental
        // near-zero factor
        if term.norm() <= SERIES_TOLERANCE * sum.norm() {
            quiet += 1;
            if quiet == 2 {
                return Ok(Tracked {
                    value: sum,
                    magnitude,
                });
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence {
        terms: MAX_SERIES_TERMS,
    })
}

pub(crate) fn series(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    series_tracked(a, b, c, z).map(|t| t.value)
}

/// Γ-ratio that treats a pole in the denominator as a vanishing term.
fn weight(num: &[Complex64], den: &[Complex64]) -> Result<Complex64> {
    match gamma_ratio(num, den) {
        Err(Error::Pole {
            location: PoleLocation::Denominator,
            ..
        }) => Ok(Complex64::new(0.0, 0.0)),
        other => other,
    }
}

/// Kummer connection with the complement w = 1 − z supplied separately, so
/// callers that know w more accurately than `1.0 - z` keep that accuracy.
fn connect_tracked(a: Complex64, b: Complex64, c: Complex64, w: f64, ln_w: f64) -> Result<Tracked> {
    let excess = c - a - b;
    if near_integer(excess) {
        return Err(Error::DegenerateParams { excess });
    }
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let first = weight(&[c, excess], &[c - a, c - b])?;
    let second = weight(&[c, -excess], &[a, b])? * (excess * ln_w).exp();
    let mut out = Tracked {
        value: zero,
        magnitude: 0.0,
    };
    if first != zero {
        let s = series_tracked(a, b, one - excess, w)?;
        out.value += first * s.value;
        out.magnitude += first.norm() * s.magnitude;
    }
    if second != zero {
        let s = series_tracked(c - a, c - b, one + excess, w)?;
        out.value += second * s.value;
        out.magnitude += second.norm() * s.magnitude;
    }
    Ok(out)
}

pub(crate) fn connect_split(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    w: f64,
    ln_w: f64,
) -> Result<Complex64> {
    connect_tracked(a, b, c, w, ln_w).map(|t| t.value)
}

/// The connection formula, or its limit when c − a − b is an integer.
fn connection(a: Complex64, b: Complex64, c: Complex64, w: f64, ln_w: f64) -> Result<Tracked> {
    let excess = c - a - b;
    if (excess - Complex64::new(excess.re.round(), 0.0)).norm() >= DEGENERATE_BAND {
        return connect_tracked(a, b, c, w, ln_w);
    }
    let mut out = Tracked {
        value: Complex64::new(0.0, 0.0),
        magnitude: 0.0,
    };
    for k in 0..LIMIT_POINTS {
        let theta = std::f64::consts::TAU * (k as f64 + 0.5) / LIMIT_POINTS as f64;
        let t = connect_tracked(
            a + Complex64::from_polar(LIMIT_RADIUS, theta),
            b,
            c,
            w,
            ln_w,
        )?;
        out.value += t.value;
        out.magnitude += t.magnitude;
    }
    out.value /= LIMIT_POINTS as f64;
    out.magnitude /= LIMIT_POINTS as f64;
    Ok(out)
}

/// ₂F₁ for z with an accurately known complement w = 1 − z and ln w.
///
/// Inside the blend window both representations converge; the preferred
/// one (series below [`Z_SWITCH`], connection above) is kept unless its
/// terms cancel badly, in which case the one with less cancellation wins.
/// Large imaginary parameters make the plain series cancel near z = 1/2.
pub(crate) fn hyp2f1_split(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: f64,
    w: f64,
    ln_w: f64,
) -> Result<Complex64> {
    if z <= BLEND_WINDOW.0 {
        return series(a, b, c, z);
    }
    if z > BLEND_WINDOW.1 {
        return connection(a, b, c, w, ln_w).map(|t| t.value);
    }
    let by_series = || series_tracked(a, b, c, z);
    let by_connection = || connection(a, b, c, w, ln_w);
    let (preferred, other) = if z <= Z_SWITCH {
        (by_series(), by_connection())
    } else {
        (by_connection(), by_series())
    };
    Ok(match (preferred, other) {
        (Ok(p), _) if p.cancellation() <= CANCELLATION_LIMIT => p.value,
        (Ok(p), Ok(o)) if o.cancellation() < p.cancellation() => o.value,
        (Ok(p), _) => p.value,
        (Err(_), Ok(o)) => o.value,
        (Err(e), Err(_)) => return Err(e),
    })
}

/// ₂F₁(a, b; c; z).
pub fn hyp2f1(p: Hyp2F1Params) -> Result<Complex64> {
    let w = 1.0 - p.z;
    hyp2f1_split(p.a, p.b, p.c, p.z, w, w.ln())
}

/// The Gauss series alone, for any z ∈ [0, 1). Slow near z = 1.
pub fn hyp2f1_series(p: Hyp2F1Params) -> Result<Complex64> {
    series(p.a, p.b, p.c, p.z)
}

/// Right-hand side of Kummer's relation between ₂F₁ at z and at 1 − z.
pub fn connect_near_one(p: Hyp2F1Params) -> Result<Complex64> {
    if p.z <= 0.0 {
        return Err(Error::domain("connection formula needs z > 0"));
    }
    let w = 1.0 - p.z;
    connect_split(p.a, p.b, p.c, w, w.ln())
}

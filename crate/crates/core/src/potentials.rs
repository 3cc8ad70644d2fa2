//! Superpotential, the partner pair V± = W² ± dW/dx, and the reference
//! hyperbolic-tangent step.

use crate::error::{Error, Result};

/// Which member of the partner pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PotentialKind {
    PlusPartner,
    MinusPartner,
    Step,
}

impl PotentialKind {
    pub fn partner_sign(self) -> Option<Sign> {
        match self {
            PotentialKind::PlusPartner => Some(Sign::Plus),
            PotentialKind::MinusPartner => Some(Sign::Minus),
            PotentialKind::Step => None,
        }
    }
}

/// A potential together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    kind: PotentialKind,
    m: f64,
    v0: f64,
    alpha: f64,
}

impl PotentialSpec {
    pub fn partner(sign: Sign, m: f64) -> Result<Self> {
        if !(m > 0.0 && m.is_finite()) {
            return Err(Error::domain(format!(
                "partner coupling must be m > 0, got {m}"
            )));
        }
        let kind = match sign {
            Sign::Plus => PotentialKind::PlusPartner,
            Sign::Minus => PotentialKind::MinusPartner,
        };
        Ok(Self {
            kind,
            m,
            v0: 0.0,
            alpha: 1.0,
        })
    }

    pub fn plus(m: f64) -> Result<Self> {
        Self::partner(Sign::Plus, m)
    }

    pub fn minus(m: f64) -> Result<Self> {
        Self::partner(Sign::Minus, m)
    }

    /// V_S(x) = (V₀/2)(1 + tanh(x / 2α)).
    pub fn step(v0: f64, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) || !v0.is_finite() {
            return Err(Error::domain(format!(
                "step needs finite V0 and alpha > 0, got V0 = {v0}, alpha = {alpha}"
            )));
        }
        Ok(Self {
            kind: PotentialKind::Step,
            m: 0.0,
            v0,
            alpha,
        })
    }

    /// The step matched to a partner pair: V₀ = m², α = 1.
    pub fn matched_step(m: f64) -> Result<Self> {
        Self::step(m * m, 1.0)
    }

    pub fn kind(&self) -> PotentialKind {
        self.kind
    }

    /// Partner coupling; zero for the step.
    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// lim_{x→+∞} V. The left asymptote is 0 for every kind.
    pub fn right_asymptote(&self) -> f64 {
        match self.kind {
            PotentialKind::Step => self.v0,
            _ => self.m * self.m,
        }
    }
}

/// μ = m/√2 of the hyperbolic-tangent form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicParams {
    mu: f64,
}

impl HyperbolicParams {
    pub fn from_coupling(m: f64) -> Self {
        Self {
            mu: m / std::f64::consts::SQRT_2,
        }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }
}

/// e^x/(e^x + 1) without overflow.
pub(crate) fn logistic(x: f64) -> f64 {
    if x > 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// ln(1 + e^x) without overflow.
pub(crate) fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// W(x, m) = −m (1 + e^{−x})^{−1/2}.
pub fn superpotential(x: f64, m: f64) -> f64 {
    -m * logistic(x).sqrt()
}

/// dW/dx = −(m/2) e^{x/2} / (e^x + 1)^{3/2}.
pub fn superpotential_derivative(x: f64, m: f64) -> f64 {
    -0.5 * m * logistic(x).sqrt() * logistic(-x)
}

/// V±(x, m) for any real m (negative m is allowed here; the pair swaps).
pub fn partner_potential(sign: Sign, x: f64, m: f64) -> f64 {
    // e^{x/2}/(e^x+1)^{3/2} = √z (1 − z) with z the logistic of x
    m * m * logistic(x) - sign.factor() * 0.5 * m * logistic(x).sqrt() * logistic(-x)
}

/// (V₀/2)(1 + tanh(x/2α)), written as V₀·e^{x/α}/(e^{x/α} + 1).
pub fn step_potential(x: f64, v0: f64, alpha: f64) -> f64 {
    v0 * logistic(x / alpha)
}

pub fn potential(spec: &PotentialSpec, x: f64) -> f64 {
    match spec.kind.partner_sign() {
        Some(sign) => partner_potential(sign, x, spec.m),
        None => step_potential(x, spec.v0, spec.alpha),
    }
}

fn require_partner(spec: &PotentialSpec) -> Result<Sign> {
    spec.kind
        .partner_sign()
        .ok_or_else(|| Error::domain("operation is defined for the partner potentials only"))
}

/// μ²(1 + tanh(x/2)) ∓ (μ/4)(1 − tanh(x/2))^{1/2} / cosh(x/2).
pub fn potential_hyperbolic(spec: &PotentialSpec, x: f64) -> Result<f64> {
    let sign = require_partner(spec)?;
    let mu = HyperbolicParams::from_coupling(spec.m).mu();
    let t = (0.5 * x).tanh();
    Ok(mu * mu * (1.0 + t) - sign.factor() * 0.25 * mu * (1.0 - t).sqrt() / (0.5 * x).cosh())
}

/// ∫V± dx = m² ln(e^x + 1) ∓ m e^{x/2}/(e^x + 1)^{1/2}, integration constant 0.
pub fn potential_antiderivative(spec: &PotentialSpec, x: f64) -> Result<f64> {
    let sign = require_partner(spec)?;
    let m = spec.m;
    Ok(m * m * softplus(x) - sign.factor() * m * logistic(x).sqrt())
}

/// V₊(x, m) − V₋(x, −m); identically zero.
pub fn shape_invariance_check(m: f64, x: f64) -> f64 {
    partner_potential(Sign::Plus, x, m) - partner_potential(Sign::Minus, x, -m)
}

/// (1/4)·c₁² − c₂² for the coefficients c₁ = m² of e^x/(e^x+1) and
/// c₂ = ±m/2 of e^{x/2}/(e^x+1)^{3/2}; zero exactly when V± is solvable.
pub fn solvability_defect(m: f64, sign: Sign) -> f64 {
    let structural = sign.factor() * 0.5 * m;
    0.25 * m * m - structural * structural
}

//! Exact wavefunctions of V± in terms of Gauss hypergeometric functions.
//!
//! With z = eˣ/(eˣ+1) the factorized equations
//! (d/dx − W)Z₊ = iωZ₋, (d/dx + W)Z₋ = iωZ₊ decouple for
//! R̃₁ = e^{iπ/4}(Z₊+Z₋)/2 and R̃₂ = e^{−iπ/4}(Z₊−Z₋)/2 into hypergeometric
//! equations, and Z± = e^{−iπ/4}(R̃₁ ± iR̃₂).

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::potentials::{logistic, softplus, superpotential, PotentialKind, Sign};
use crate::specfun::{hyp2f1_split, POLE_TOLERANCE};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Tolerance on the defining relations between the solution constants.
const COEFFICIENT_TOLERANCE: f64 = 1e-12;

/// z = eˣ/(eˣ+1) ∈ (0, 1).
pub fn x_to_z(x: f64) -> f64 {
    logistic(x)
}

/// x = ln(z/(1−z)).
pub fn z_to_x(z: f64) -> Result<f64> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::domain(format!("z = {z} outside (0, 1)")));
    }
    Ok(z.ln() - (-z).ln_1p())
}

/// A point of the z-variable carrying z, 1 − z and both logarithms, each
/// computed without cancellation. Near x → +∞ the complement 1 − z is far
/// more accurate than `1.0 - z` would be.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZPoint {
    pub z: f64,
    pub w: f64,
    pub ln_z: f64,
    pub ln_w: f64,
}

impl ZPoint {
    pub fn from_x(x: f64) -> Self {
        Self {
            z: logistic(x),
            w: logistic(-x),
            ln_z: -softplus(-x),
            ln_w: -softplus(x),
        }
    }

    pub fn from_z(z: f64) -> Result<Self> {
        if !(z > 0.0 && z < 1.0) {
            return Err(Error::domain(format!("z = {z} outside (0, 1)")));
        }
        Ok(Self {
            z,
            w: 1.0 - z,
            ln_z: z.ln(),
            ln_w: (-z).ln_1p(),
        })
    }

    /// dz/dx.
    pub fn jacobian(&self) -> f64 {
        self.z * self.w
    }
}

/// B = √(m² − ω²) on the branch that labels e^{i√(ω²−m²)x} as the
/// transmitted wave: +i√(ω²−m²) for real ω > m, the positive root for
/// real ω < m, otherwise the root with non-negative imaginary part.
pub fn branch_sqrt(omega: Complex64, m: f64) -> Complex64 {
    if omega.im == 0.0 && omega.re.abs() >= m {
        return Complex64::new(0.0, (omega.re * omega.re - m * m).sqrt());
    }
    let r = (m * m - omega * omega).sqrt();
    if r.im < 0.0 || (r.im == 0.0 && r.re < 0.0) {
        -r
    } else {
        r
    }
}

/// Constants of the ansatz R̃ⱼ = z^{Cⱼ}(1−z)^{Bⱼ}R̄ⱼ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionExponents {
    pub omega: Complex64,
    pub m: f64,
    pub b1: Complex64,
    pub b2: Complex64,
    pub c1: Complex64,
    pub c2: Complex64,
    pub epsilon1: f64,
    pub epsilon2: f64,
}

impl SolutionExponents {
    /// Cⱼ² − Cⱼ/2 + iωεⱼ/2 + ω² for j = 1, 2.
    pub fn c_residuals(&self) -> [Complex64; 2] {
        let w = self.omega;
        [(self.c1, self.epsilon1), (self.c2, self.epsilon2)]
            .map(|(c, eps)| c * c - c * 0.5 + I * w * eps * 0.5 + w * w)
    }

    /// Bⱼ² + ω² − m² for j = 1, 2.
    pub fn b_residuals(&self) -> [Complex64; 2] {
        let w = self.omega;
        let m2 = self.m * self.m;
        [self.b1, self.b2].map(|b| b * b + w * w - m2)
    }

    /// k′ = √(ω² − m²) = −iB₁.
    pub fn kprime(&self) -> Complex64 {
        -I * self.b1
    }
}

/// Hypergeometric parameters aⱼ = Cⱼ + Bⱼ + 1/2, bⱼ = Cⱼ + Bⱼ, cⱼ = 2Cⱼ + 1/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypSolutionParams {
    pub a1: Complex64,
    pub b1: Complex64,
    pub c1: Complex64,
    pub a2: Complex64,
    pub b2: Complex64,
    pub c2: Complex64,
}

pub fn make_exponents(omega: Complex64, m: f64) -> Result<(SolutionExponents, HypSolutionParams)> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::domain(format!("coupling must be m > 0, got {m}")));
    }
    if omega.norm() < 1e-14 {
        return Err(Error::ZeroFrequency);
    }
    let b = branch_sqrt(omega, m);
    let c1 = I * omega;
    let c2 = c1 + 0.5;
    let exps = SolutionExponents {
        omega,
        m,
        b1: b,
        b2: b,
        c1,
        c2,
        epsilon1: 1.0,
        epsilon2: -1.0,
    };
    let hc1 = 2.0 * c1 + 0.5;
    if (hc1 - Complex64::new(hc1.re.round(), 0.0)).norm() < POLE_TOLERANCE {
        return Err(Error::DegenerateC { c1: hc1 });
    }
    let a1 = c1 + b + 0.5;
    let b1 = c1 + b;
    let params = HypSolutionParams {
        a1,
        b1,
        c1: hc1,
        a2: b1 + 1.0,
        b2: a1,
        c2: hc1 + 1.0,
    };
    Ok((exps, params))
}

/// Normalization constants of R̃₁ and R̃₂; G₂ and H₂ are tied to G₁ and H₁
/// by the first-order system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionCoefficients {
    pub g1: Complex64,
    pub g2: Complex64,
    pub h1: Complex64,
    pub h2: Complex64,
}

impl SolutionCoefficients {
    pub fn new(params: &HypSolutionParams, m: f64, g1: Complex64, h1: Complex64) -> Self {
        let c1 = params.c1;
        Self {
            g1,
            g2: I * (params.a1 - c1) * params.b1 * g1 / (m * c1),
            h1,
            h2: I * (ONE - c1) * h1 / m,
        }
    }

    /// G₁ = H₁ = 1.
    pub fn unit(params: &HypSolutionParams, m: f64) -> Self {
        Self::new(params, m, ONE, ONE)
    }

    fn validate(&self, params: &HypSolutionParams, m: f64) -> Result<()> {
        let expected = Self::new(params, m, self.g1, self.h1);
        let close =
            |a: Complex64, b: Complex64| (a - b).norm() <= COEFFICIENT_TOLERANCE * (1.0 + b.norm());
        if close(self.g2, expected.g2) && close(self.h2, expected.h2) {
            Ok(())
        } else {
            Err(Error::domain(
                "coefficients violate G2 = i(a1-c1)b1 G1/(m c1) or H2 = i(1-c1) H1/m",
            ))
        }
    }
}

/// The two linearly independent solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    I,
    II,
}

/// Value and first two z-derivatives of a function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

impl std::ops::Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet {
            value: self.value + o.value,
            d1: self.d1 + o.d1,
            d2: self.d2 + o.d2,
        }
    }
}

impl std::ops::Mul<Complex64> for Jet {
    type Output = Jet;
    fn mul(self, k: Complex64) -> Jet {
        Jet {
            value: self.value * k,
            d1: self.d1 * k,
            d2: self.d2 * k,
        }
    }
}

/// k · z^p (1−z)^q · ₂F₁(a, b; c; z)
#[derive(Debug, Clone, Copy)]
struct Term {
    k: Complex64,
    p: Complex64,
    q: Complex64,
    a: Complex64,
    b: Complex64,
    c: Complex64,
}

impl Term {
    fn hyp(&self, shift: f64, pt: &ZPoint) -> Result<Complex64> {
        hyp2f1_split(
            self.a + shift,
            self.b + shift,
            self.c + shift,
            pt.z,
            pt.w,
            pt.ln_w,
        )
    }

    fn prefactor(&self, pt: &ZPoint) -> Complex64 {
        self.k * (self.p * pt.ln_z + self.q * pt.ln_w).exp()
    }

    fn value(&self, pt: &ZPoint) -> Result<Complex64> {
        if self.k == ZERO {
            return Ok(ZERO);
        }
        Ok(self.prefactor(pt) * self.hyp(0.0, pt)?)
    }

    fn jet(&self, pt: &ZPoint) -> Result<Jet> {
        if self.k == ZERO {
            return Ok(Jet {
                value: ZERO,
                d1: ZERO,
                d2: ZERO,
            });
        }
        let (a, b, c) = (self.a, self.b, self.c);
        let f0 = self.hyp(0.0, pt)?;
        let f1 = a * b / c * self.hyp(1.0, pt)?;
        let f2 = a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0)) * self.hyp(2.0, pt)?;
        // (ln P)' and (ln P)'' for P = z^p (1−z)^q
        let l1 = self.p / pt.z - self.q / pt.w;
        let l2 = -self.p / (pt.z * pt.z) - self.q / (pt.w * pt.w);
        let p0 = self.prefactor(pt);
        let p1 = p0 * l1;
        let p2 = p0 * (l1 * l1 + l2);
        Ok(Jet {
            value: p0 * f0,
            d1: p1 * f0 + p0 * f1,
            d2: p2 * f0 + 2.0 * p1 * f1 + p0 * f2,
        })
    }
}

/// One of the two exact solution families Z±^I, Z±^II for a fixed (ω, m)
/// and normalization.
#[derive(Debug, Clone, Copy)]
pub struct ExactSolution {
    pub branch: Branch,
    pub exponents: SolutionExponents,
    pub params: HypSolutionParams,
    pub coefficients: SolutionCoefficients,
}

impl ExactSolution {
    pub fn new(
        branch: Branch,
        omega: Complex64,
        m: f64,
        coefficients: Option<SolutionCoefficients>,
    ) -> Result<Self> {
        let (exponents, params) = make_exponents(omega, m)?;
        let coefficients = match coefficients {
            Some(c) => {
                c.validate(&params, m)?;
                c
            }
            None => SolutionCoefficients::unit(&params, m),
        };
        Ok(Self {
            branch,
            exponents,
            params,
            coefficients,
        })
    }

    fn terms(&self) -> [Term; 2] {
        let e = &self.exponents;
        let p = &self.params;
        let k = &self.coefficients;
        match self.branch {
            Branch::I => [
                Term {
                    k: k.g1,
                    p: e.c1,
                    q: e.b1,
                    a: p.a1,
                    b: p.b1,
                    c: p.c1,
                },
                Term {
                    k: k.g2,
                    p: e.c2,
                    q: e.b2,
                    a: p.a2,
                    b: p.b2,
                    c: p.c2,
                },
            ],
            Branch::II => [
                Term {
                    k: k.h1,
                    p: e.c1 + 1.0 - p.c1,
                    q: e.b1,
                    a: p.a1 - p.c1 + 1.0,
                    b: p.b1 - p.c1 + 1.0,
                    c: 2.0 - p.c1,
                },
                Term {
                    k: k.h2,
                    p: e.c2 + 1.0 - p.c2,
                    q: e.b2,
                    a: p.a2 - p.c2 + 1.0,
                    b: p.b2 - p.c2 + 1.0,
                    c: 2.0 - p.c2,
                },
            ],
        }
    }

    /// (R̃₁, R̃₂) at a point.
    pub fn tilde_r(&self, pt: &ZPoint) -> Result<(Complex64, Complex64)> {
        let [t1, t2] = self.terms();
        Ok((t1.value(pt)?, t2.value(pt)?))
    }

    /// (R̃₁, R̃₂) with their first two z-derivatives.
    pub fn tilde_r_jets(&self, pt: &ZPoint) -> Result<(Jet, Jet)> {
        let [t1, t2] = self.terms();
        Ok((t1.jet(pt)?, t2.jet(pt)?))
    }

    /// Z± = e^{−iπ/4}(R̃₁ ± iR̃₂).
    pub fn value(&self, sign: Sign, pt: &ZPoint) -> Result<Complex64> {
        let (r1, r2) = self.tilde_r(pt)?;
        Ok(combine(sign, r1, r2))
    }

    pub fn value_at_x(&self, sign: Sign, x: f64) -> Result<Complex64> {
        self.value(sign, &ZPoint::from_x(x))
    }

    /// Z± with z-derivatives.
    pub fn jet(&self, sign: Sign, pt: &ZPoint) -> Result<Jet> {
        let (r1, r2) = self.tilde_r_jets(pt)?;
        let phase = Complex64::from_polar(1.0, -FRAC_PI_4);
        Ok((r1 + r2 * (I * sign.factor())) * phase)
    }

    /// dZ±/dx = z(1−z) dZ±/dz.
    pub fn x_derivative(&self, sign: Sign, pt: &ZPoint) -> Result<Complex64> {
        Ok(self.jet(sign, pt)?.d1 * pt.jacobian())
    }

    /// Scaled residual of d/dz[z(1−z)Z′] + [(ω²−m²)/(1−z) + ω²/z ± m/(2√z)]Z = 0.
    pub fn z_equation_residual(&self, sign: Sign, pt: &ZPoint) -> Result<f64> {
        let j = self.jet(sign, pt)?;
        let w2 = self.exponents.omega * self.exponents.omega;
        let m = self.exponents.m;
        let q = (w2 - m * m) / pt.w + w2 / pt.z + sign.factor() * m / (2.0 * pt.z.sqrt());
        let terms = [j.d2 * pt.jacobian(), j.d1 * (pt.w - pt.z), q * j.value];
        let scale: f64 = terms.iter().map(|t| t.norm()).sum();
        let sum: Complex64 = terms.iter().sum();
        Ok(scaled(sum.norm(), scale))
    }

    /// Scaled residual of
    /// d/dz[z(1−z)R̃′] = (B²/(1−z) + (C² − C/2)/z)R̃ + (1/2)(1−z)R̃′
    /// for R̃₁ (`index` 1) or R̃₂ (`index` 2).
    pub fn tilde_identity_residual(&self, index: usize, pt: &ZPoint) -> Result<f64> {
        let (r1, r2) = self.tilde_r_jets(pt)?;
        let e = &self.exponents;
        let (r, b, c) = match index {
            1 => (r1, e.b1, e.c1),
            2 => (r2, e.b2, e.c2),
            _ => return Err(Error::domain("R̃ index must be 1 or 2")),
        };
        let lhs = r.d2 * pt.jacobian() + r.d1 * (pt.w - pt.z);
        let coeff = b * b / pt.w + (c * c - c * 0.5) / pt.z;
        let rhs = coeff * r.value + 0.5 * pt.w * r.d1;
        let scale = (r.d2 * pt.jacobian()).norm()
            + (r.d1 * (pt.w - pt.z)).norm()
            + (coeff * r.value).norm()
            + (0.5 * pt.w * r.d1).norm();
        Ok(scaled((lhs - rhs).norm(), scale))
    }
}

fn combine(sign: Sign, r1: Complex64, r2: Complex64) -> Complex64 {
    Complex64::from_polar(1.0, -FRAC_PI_4) * (r1 + I * sign.factor() * r2)
}

fn scaled(residual: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        residual / scale
    } else {
        residual
    }
}

/// Z±^{I} or Z±^{II} at x.
pub fn exact_solution(
    branch: Branch,
    sign: Sign,
    omega: Complex64,
    m: f64,
    x: f64,
    coefficients: &SolutionCoefficients,
) -> Result<Complex64> {
    ExactSolution::new(branch, omega, m, Some(*coefficients))?.value_at_x(sign, x)
}

fn check_grid(x_grid: &[f64]) -> Result<()> {
    if x_grid.len() < 3 {
        return Err(Error::domain("residual checks need at least 3 grid points"));
    }
    if x_grid.windows(2).any(|p| !(p[1] > p[0])) || x_grid.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain("grid must be finite and strictly increasing"));
    }
    Ok(())
}

/// Largest scaled residual of (d/dx − W)Z₊ − iωZ₋ and (d/dx + W)Z₋ − iωZ₊
/// over the grid, for both solution branches with unit normalization.
pub fn coupled_residual(omega: Complex64, m: f64, x_grid: &[f64]) -> Result<f64> {
    check_grid(x_grid)?;
    let mut worst = 0.0f64;
    for branch in [Branch::I, Branch::II] {
        let sol = ExactSolution::new(branch, omega, m, None)?;
        for &x in x_grid {
            let pt = ZPoint::from_x(x);
            let w = superpotential(x, m);
            let (zp, zm) = (sol.value(Sign::Plus, &pt)?, sol.value(Sign::Minus, &pt)?);
            let (dp, dm) = (
                sol.x_derivative(Sign::Plus, &pt)?,
                sol.x_derivative(Sign::Minus, &pt)?,
            );
            let plus = dp - w * zp - I * omega * zm;
            let minus = dm + w * zm - I * omega * zp;
            let plus_scale = dp.norm() + (w * zp).norm() + (omega * zm).norm();
            let minus_scale = dm.norm() + (w * zm).norm() + (omega * zp).norm();
            worst = worst
                .max(scaled(plus.norm(), plus_scale))
                .max(scaled(minus.norm(), minus_scale));
        }
    }
    Ok(worst)
}

/// z(1−z)·(Z^I dZ^II/dz − Z^II dZ^I/dz) with G₁ = H₁ = 1, i.e. the Wronskian
/// with respect to x; equals ±(2ω/m)(1 − c₁).
pub fn wronskian(sign: Sign, omega: Complex64, m: f64, z: f64) -> Result<Complex64> {
    let pt = ZPoint::from_z(z)?;
    wronskian_at(sign, omega, m, &pt)
}

pub fn wronskian_at(sign: Sign, omega: Complex64, m: f64, pt: &ZPoint) -> Result<Complex64> {
    let first = ExactSolution::new(Branch::I, omega, m, None)?.jet(sign, pt)?;
    let second = ExactSolution::new(Branch::II, omega, m, None)?.jet(sign, pt)?;
    Ok(pt.jacobian() * (first.value * second.d1 - second.value * first.d1))
}

/// ±(2ω/m)(1 − c₁).
pub fn wronskian_closed_form(sign: Sign, omega: Complex64, m: f64) -> Complex64 {
    let c1 = 2.0 * I * omega + 0.5;
    sign.factor() * 2.0 * omega / m * (ONE - c1)
}

/// Who produced a [`WaveField`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveMeta {
    pub omega: Complex64,
    pub m: f64,
    pub kind: PotentialKind,
    /// `None` for fields that come from direct integration.
    pub branch: Option<Branch>,
}

/// A wavefunction sampled on an increasing grid.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveField {
    grid: Vec<f64>,
    values: Vec<Complex64>,
    meta: WaveMeta,
}

impl WaveField {
    pub fn new(grid: Vec<f64>, values: Vec<Complex64>, meta: WaveMeta) -> Result<Self> {
        if grid.len() != values.len() || grid.is_empty() {
            return Err(Error::domain(
                "grid and values must be non-empty and equally long",
            ));
        }
        if grid.windows(2).any(|p| !(p[1] > p[0])) {
            return Err(Error::domain("wave field grid must be strictly increasing"));
        }
        if values
            .iter()
            .any(|v| !(v.re.is_finite() && v.im.is_finite()))
        {
            return Err(Error::domain("wave field values must be finite"));
        }
        Ok(Self { grid, values, meta })
    }

    /// Sample an exact solution on `grid`.
    pub fn sample(solution: &ExactSolution, sign: Sign, grid: Vec<f64>) -> Result<Self> {
        let values = grid
            .iter()
            .map(|&x| solution.value_at_x(sign, x))
            .collect::<Result<Vec<_>>>()?;
        let kind = match sign {
            Sign::Plus => PotentialKind::PlusPartner,
            Sign::Minus => PotentialKind::MinusPartner,
        };
        Self::new(
            grid,
            values,
            WaveMeta {
                omega: solution.exponents.omega,
                m: solution.exponents.m,
                kind,
                branch: Some(solution.branch),
            },
        )
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn meta(&self) -> &WaveMeta {
        &self.meta
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }
}

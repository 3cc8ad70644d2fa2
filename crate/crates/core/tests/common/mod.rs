//! Reference implementations used only by the tests. None of them share
//! code with the library: log-gamma comes from an upward recurrence plus
//! the Stirling series, ₂F₁ from the plain Gauss series summed in
//! double-double arithmetic.

#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

/// Distance between two logarithms modulo 2πi.
pub fn log_distance(a: Complex64, b: Complex64) -> f64 {
    let d = a - b;
    let turns = (d.im / (2.0 * PI)).round();
    c(d.re, d.im - turns * 2.0 * PI).norm()
}

// B_{2k} / (2k (2k − 1)) for k = 1..=8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// ln Γ(z) by shifting z up 64 steps and applying the Stirling series.
/// Principal-log sums give the branch that is continuous off the negative
/// real axis. Not valid on the real axis left of 0.
pub fn lngamma_stirling(z: Complex64) -> Complex64 {
    const SHIFT: usize = 64;
    let mut correction = c(0.0, 0.0);
    for k in 0..SHIFT {
        correction += (z + k as f64).ln();
    }
    let w = z + SHIFT as f64;
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut tail = c(0.0, 0.0);
    let mut p = inv;
    for coeff in STIRLING {
        tail += coeff * p;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + tail - correction
}

/// Unevaluated sum hi + lo with |lo| ≤ ulp(hi)/2.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn new(v: f64) -> Self {
        Self { hi: v, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        Self { hi: s, lo: err }
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        let s = hi + lo;
        Self {
            hi: s,
            lo: lo - (s - hi),
        }
    }

    fn add(self, o: Self) -> Self {
        let s = Self::two_sum(self.hi, o.hi);
        Self::renorm(s.hi, s.lo + self.lo + o.lo)
    }

    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }

    fn mul(self, o: Self) -> Self {
        let p = self.hi * o.hi;
        let err = self.hi.mul_add(o.hi, -p);
        Self::renorm(p, err + self.hi * o.lo + self.lo * o.hi)
    }

    fn div(self, o: Self) -> Self {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul(Self::new(q1)));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul(Self::new(q2)));
        let q3 = r.hi / o.hi;
        Self::renorm(q1, q2).add(Self::new(q3))
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

#[derive(Debug, Clone, Copy)]
struct Cdd {
    re: Dd,
    im: Dd,
}

impl Cdd {
    fn from(z: Complex64) -> Self {
        Self {
            re: Dd::new(z.re),
            im: Dd::new(z.im),
        }
    }

    fn add(self, o: Self) -> Self {
        Self {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    fn mul(self, o: Self) -> Self {
        Self {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    fn div(self, o: Self) -> Self {
        let den = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = Self {
            re: self.re.mul(o.re).add(self.im.mul(o.im)),
            im: self.im.mul(o.re).sub(self.re.mul(o.im)),
        };
        Self {
            re: num.re.div(den),
            im: num.im.div(den),
        }
    }

    fn to_c64(self) -> Complex64 {
        c(self.re.to_f64(), self.im.to_f64())
    }
}

/// Gauss series for ₂F₁(a, b; c; z) in double-double, valid for z ∈ [0, 1)
/// with enough terms. Panics if it fails to converge.
pub fn hyp2f1_series_dd(a: Complex64, b: Complex64, cc: Complex64, z: f64) -> Complex64 {
    let zz = Cdd::from(c(z, 0.0));
    let mut term = Cdd::from(c(1.0, 0.0));
    let mut sum = term;
    for n in 0..2_000_000usize {
        let k = n as f64;
        let num = Cdd::from(a + k).mul(Cdd::from(b + k));
        let den = Cdd::from(cc + k).mul(Cdd::from(c(k + 1.0, 0.0)));
        term = term.mul(num).div(den).mul(zz);
        sum = sum.add(term);
        let t = term.to_c64().norm();
        if t == 0.0 || (n > 8 && t < 1e-22 * sum.to_c64().norm()) {
            return sum.to_c64();
        }
    }
    panic!("reference series did not converge");
}

/// Second-order central difference helper: (f(x+h) − f(x−h))/(2h) and
/// (f(x+h) − 2f(x) + f(x−h))/h².
pub fn central(f: impl Fn(f64) -> Complex64, x: f64, h: f64) -> (Complex64, Complex64, Complex64) {
    let (fm, f0, fp) = (f(x - h), f(x), f(x + h));
    (f0, (fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h))
}

/// Fourth-order central differences on a five-point stencil.
pub fn central5(f: impl Fn(f64) -> Complex64, x: f64, h: f64) -> (Complex64, Complex64, Complex64) {
    let (f2m, fm, f0, fp, f2p) = (f(x - 2.0 * h), f(x - h), f(x), f(x + h), f(x + 2.0 * h));
    let d1 = (f2m - 8.0 * fm + 8.0 * fp - f2p) / (12.0 * h);
    let d2 = (-f2m + 16.0 * fm - 30.0 * f0 + 16.0 * fp - f2p) / (12.0 * h * h);
    (f0, d1, d2)
}

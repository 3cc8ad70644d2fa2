use std::fmt;

use crate::ComplexScalar;

/// Which side of a Γ-ratio an offending argument sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleLocation {
    /// A numerator Γ diverges. For amplitudes this is a genuine pole of the
    /// amplitude (quasinormal-mode searches look for exactly this).
    Numerator,
    Denominator,
}

impl fmt::Display for PoleLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PoleLocation::Numerator => f.write_str("numerator (amplitude pole)"),
            PoleLocation::Denominator => f.write_str("denominator"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("Γ pole in {location} at argument {arg}")]
    Pole {
        location: PoleLocation,
        arg: ComplexScalar,
    },

    #[error("hypergeometric series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("degenerate hypergeometric parameters: c-a-b = {excess} is (nearly) an integer")]
    DegenerateParams { excess: ComplexScalar },

    #[error("zero frequency: the factorized equations need ω ≠ 0")]
    ZeroFrequency,

    #[error("c1 = {c1} is (nearly) an integer; only the non-logarithmic branch is implemented")]
    DegenerateC { c1: ComplexScalar },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid integration config: {0}")]
    Config(String),

    #[error("integration blew up at x = {x} (|Z| = {magnitude:e})")]
    BlowUp { x: f64, magnitude: f64 },

    #[error("boundary fit is ill-conditioned (condition number {condition:e})")]
    IllConditioned { condition: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

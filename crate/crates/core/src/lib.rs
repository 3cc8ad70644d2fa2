//! Exact scattering for the conditionally exactly solvable partner
//! potentials
//!
//! ```text
//! V±(x, m) = m² eˣ/(eˣ+1) ∓ (m/2) e^{x/2}/(eˣ+1)^{3/2} = W² ± dW/dx,
//! W(x, m)  = −m (1 + e^{−x})^{−1/2},
//! ```
//!
//! their hypergeometric wavefunctions, reflection/transmission amplitudes
//! and quasinormal frequencies, with a direct ODE integrator as an
//! independent cross-check.

pub mod error;
pub mod oracle;
pub mod potentials;
pub mod scattering;
pub mod solutions;
pub mod specfun;
pub mod verify;

pub use num_complex::Complex64;

/// Double-precision complex scalar used for amplitudes, Γ arguments and
/// frequencies.
pub type ComplexScalar = Complex64;

pub use error::{Error, PoleLocation, Result};
pub use oracle::{extract_rt, integrate_wavefunction, numerical_amplitudes, IntegrationConfig};
pub use potentials::{
    partner_potential, potential, potential_antiderivative, potential_hyperbolic,
    shape_invariance_check, step_potential, superpotential, superpotential_derivative,
    HyperbolicParams, PotentialKind, PotentialSpec, Sign,
};
pub use scattering::{
    asymptotic_coefficients, coefficients_closed_form, compare_reflection, qnm, qnm_pole_check,
    reflection_transmission, step_amplitudes, step_reflection_closed_form, susy_relation_check,
    AsymptoticCoefficients, QnmFamily, QnmFrequency, ScatteringResult,
};
pub use solutions::{
    coupled_residual, exact_solution, make_exponents, wronskian, x_to_z, z_to_x, Branch,
    ExactSolution, HypSolutionParams, SolutionCoefficients, SolutionExponents, WaveField, WaveMeta,
    ZPoint,
};
pub use verify::{run_checks, CheckOutcome, VerifyLevel, VerifyOptions, VerifyReport};

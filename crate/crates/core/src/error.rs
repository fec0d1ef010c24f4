use thiserror::Error;

use crate::quadrature::QuadratureResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// The defining integral diverges for the given arguments.
    #[error("divergent integral: {0}")]
    Divergent(String),

    /// Invalid model parameters (a, b must be positive, w non-negative).
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    /// `w = a`: the cubic degenerates and the egg-shaped branch is a paraboloid.
    #[error("degenerate curve (w = a): {0}")]
    Degenerate(String),

    /// Canonical constants gamma and H diverge at w = 0.
    #[error("canonical form undefined for w = 0; use the direct form of f1")]
    CanonicalUndefined,

    /// Abscissa on the hyperbolic branch x < gamma, which is not modelled.
    #[error("x = {x} lies on the hyperbolic branch (x < gamma = {gamma})")]
    HyperbolicBranch { x: f64, gamma: f64 },

    #[error("integrand is not finite at x = {x}")]
    Evaluation { x: f64 },

    /// Tolerance not reached; carries the best estimate obtained.
    #[error("quadrature did not converge: best estimate {} (error estimate {:e})", best.value, best.error_estimate)]
    Convergence { best: QuadratureResult },

    /// x-domain and t-domain surface integrals disagree.
    #[error("surface area branches disagree: x-domain {x_domain}, t-domain {t_domain}")]
    SurfaceMismatch { x_domain: f64, t_domain: f64 },

    /// Target outside the achievable range `[lo, hi)` of the model.
    #[error("target {target} outside achievable range ({lo}, {hi})")]
    OutOfRange { target: f64, lo: f64, hi: f64 },

    /// More than one root in the search bracket.
    #[error("ambiguous inverse: candidate roots near {candidates:?}")]
    Ambiguous { candidates: Vec<f64> },

    #[error("root finding failed: {0}")]
    RootFinding(String),

    #[error("statistics error: {0}")]
    Statistics(String),
}

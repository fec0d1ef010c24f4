//! The Hügelschäffer egg curve.
//!
//! Rotating circle construction with radii `a`, `b` and centre offset `w`
//! yields the cubic
//!
//! ```text
//! x²/a² + (y²/b²)·(1 + (2wx + w²)/a²) = 1
//! ```
//!
//! whose closed branch over `[-a, a]` is the egg. The upper half is
//! `f1(x) = b·√((a² − x²)/(a² + 2wx + w²))`; `f2 = −f1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `|w − a| < DEGENERACY_REL · a` is treated as the degenerate case `w = a`.
pub const DEGENERACY_REL: f64 = 1e-9;

/// Shape parameters: semi-length `a`, semi-breadth `b`, asymmetry offset `w`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EggParams {
    a: f64,
    b: f64,
    w: f64,
}

impl EggParams {
    pub fn new(a: f64, b: f64, w: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::InvalidParams(format!("a must be positive, got {a}")));
        }
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::InvalidParams(format!("b must be positive, got {b}")));
        }
        if !(w.is_finite() && w >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "w must be non-negative, got {w}"
            )));
        }
        Ok(Self { a, b, w })
    }

    /// From overall length `L = 2a` and breadth `B = 2b`.
    pub fn from_length_breadth(length: f64, breadth: f64, w: f64) -> Result<Self> {
        Self::new(length / 2.0, breadth / 2.0, w)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    /// Parameters scaled by `k` in all three lengths.
    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::new(k * self.a, k * self.b, k * self.w)
    }

    /// True inside the band `|w − a| < 1e-9·a`.
    pub fn is_degenerate(&self) -> bool {
        (self.w - self.a).abs() < DEGENERACY_REL * self.a
    }

    pub fn is_ellipse(&self) -> bool {
        self.w == 0.0
    }

    /// `a² + 2wx + w²`
    pub(crate) fn denominator(&self, x: f64) -> f64 {
        self.a * self.a + 2.0 * self.w * x + self.w * self.w
    }

    /// `f1(x)²` without domain checks.
    pub(crate) fn profile_sq(&self, x: f64) -> f64 {
        let num = (self.a - x) * (self.a + x);
        (self.b * self.b * num / self.denominator(x)).max(0.0)
    }

    /// `f1(x)` without domain checks.
    pub(crate) fn profile(&self, x: f64) -> f64 {
        self.profile_sq(x).sqrt()
    }

    /// `f1(x)·f1'(x) = −b²(x + w)(a² + wx)/(a² + 2wx + w²)²`, finite on `[-a, a]`.
    pub(crate) fn profile_slope_product(&self, x: f64) -> f64 {
        let d = self.denominator(x);
        -self.b * self.b * (x + self.w) * (self.a * self.a + self.w * x) / (d * d)
    }

    /// `f1²` at `x = −a + xi`. Near `w = a` the denominator collapses to
    /// `(a − w)² + 2w·xi`, which `x` itself cannot resolve.
    pub(crate) fn profile_sq_left(&self, xi: f64) -> f64 {
        let (a, b, w) = (self.a, self.b, self.w);
        let d = (a - w) * (a - w) + 2.0 * w * xi;
        (b * b * xi * (2.0 * a - xi) / d).max(0.0)
    }

    /// `f1·f1'` at `x = −a + xi`.
    pub(crate) fn profile_slope_product_left(&self, xi: f64) -> f64 {
        let (a, b, w) = (self.a, self.b, self.w);
        let d = (a - w) * (a - w) + 2.0 * w * xi;
        -b * b * (xi - (a - w)) * (a * (a - w) + w * xi) / (d * d)
    }

    /// `u + a`, the length of `[-a, u]`, without cancellation.
    pub(crate) fn left_span(&self) -> f64 {
        let (a, w) = (self.a, self.w);
        if w <= a {
            a - w.min(a)
        } else {
            a * (w - a) / w
        }
    }
}

/// Canonical constants of the cubic `y² = H²(α − x)(x − β)/(x − γ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub h: f64,
}

impl CanonicalForm {
    /// `γ = β` happens exactly when `w = a`.
    pub fn is_degenerate(&self) -> bool {
        self.gamma >= self.beta
    }

    /// `H·√((α − x)(x − β)/(x − γ))`
    pub fn branch(&self, x: f64) -> f64 {
        let v = (self.alpha - x) * (x - self.beta) / (x - self.gamma);
        self.h * v.max(0.0).sqrt()
    }
}

/// `α = a, β = −a, γ = −(a² + w²)/(2w), H = b/√(2w)`.
pub fn canonical(params: &EggParams) -> Result<CanonicalForm> {
    let (a, b, w) = (params.a, params.b, params.w);
    if w == 0.0 {
        return Err(Error::CanonicalUndefined);
    }
    Ok(CanonicalForm {
        alpha: a,
        beta: -a,
        gamma: -(a * a + w * w) / (2.0 * w),
        h: b / (2.0 * w).sqrt(),
    })
}

/// Upper branch of the egg, `f1(x) ≥ 0` on `[-a, a]`.
pub fn f1(params: &EggParams, x: f64) -> Result<f64> {
    let a = params.a;
    if !x.is_finite() || x < -a || x > a {
        if params.w > 0.0 {
            let gamma = -(a * a + params.w * params.w) / (2.0 * params.w);
            if x < gamma {
                return Err(Error::HyperbolicBranch { x, gamma });
            }
        }
        return Err(Error::Domain(format!("x = {x} outside [-{a}, {a}]")));
    }
    if params.is_degenerate() && x == -a {
        return Err(Error::Degenerate("f1(-a) is 0/0 when w = a".into()));
    }
    Ok(params.profile(x))
}

/// Lower branch `f2 = −f1`.
pub fn f2(params: &EggParams, x: f64) -> Result<f64> {
    f1(params, x).map(|y| -y)
}

/// Abscissa `u` of the widest point: `−w` for `w < a`, `−a²/w` for `w > a`,
/// and `0` for the ellipse `w = 0`.
pub fn max_abscissa(params: &EggParams) -> Result<f64> {
    let (a, w) = (params.a, params.w);
    if params.is_degenerate() {
        return Err(Error::Degenerate(
            "maximum abscissa undefined at w = a".into(),
        ));
    }
    Ok(if w == 0.0 {
        0.0
    } else if w < a {
        -w
    } else {
        -a * a / w
    })
}

/// `φ(x) = √((α−γ)(x−β)/((α−β)(x−γ)))` and `ψ(x) = √((α−x)/(α−β))` on `[β, α]`.
///
/// The two cross where `f1` is widest.
pub fn phi_psi(params: &EggParams, x: f64) -> Result<(f64, f64)> {
    if params.is_degenerate() {
        return Err(Error::Degenerate("phi/psi require w != a".into()));
    }
    let c = canonical(params)?;
    if !x.is_finite() || x < c.beta || x > c.alpha {
        return Err(Error::Domain(format!(
            "x = {x} outside [{}, {}]",
            c.beta, c.alpha
        )));
    }
    let span = c.alpha - c.beta;
    let phi = ((c.alpha - c.gamma) * (x - c.beta) / (span * (x - c.gamma))).sqrt();
    let psi = ((c.alpha - x) / span).sqrt();
    Ok((phi.min(1.0), psi.min(1.0)))
}

/// `x²/a² + ((y² + z²)/b²)·g(x) − 1` with `g(x) = 1 + (2wx + w²)/a²`.
/// Zero on the surface of revolution.
pub fn implicit_residual(params: &EggParams, x: f64, y: f64, z: f64) -> f64 {
    let (a, b, w) = (params.a, params.b, params.w);
    let g = 1.0 + (2.0 * w * x + w * w) / (a * a);
    x * x / (a * a) + (y * y + z * z) / (b * b) * g - 1.0
}

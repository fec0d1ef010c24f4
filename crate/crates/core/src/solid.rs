//! Solid of revolution about the x-axis: volume, surface area and the
//! three-point Simpson estimate.
//!
//! Volume has a closed form with a logarithm. Surface area is integrated
//! numerically in the x-domain; the substitution `x = t + γ` turns the
//! integrand into `√Q₅(t)/t²` for a quintic `Q₅`, kept as a verification
//! path.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::curve::{canonical, max_abscissa, EggParams};
use crate::error::{Error, Result};
use crate::limits;
use crate::quadrature::{integrate, Method, QuadratureResult};

/// Below this ratio `min(w/a, a/w)` the logarithmic volume formula cancels
/// badly and its Taylor series is summed instead.
const VOLUME_SERIES_RATIO: f64 = 0.25;

/// The t-domain cross-check is only meaningful while `Q₅` is well scaled.
const T_DOMAIN_CHECK_RATIO: (f64, f64) = (0.05, 20.0);

/// `Q₅(t) = c[5]t⁵ + … + c[0]`; `c[1]` is always zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quintic {
    pub coeffs: [f64; 6],
}

impl Quintic {
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }
}

/// Coefficients of `Q₅`:
///
/// ```text
/// a₅ = −32w³                  a₂ = −2b²(a² − w²)²
/// a₄ = 4w²(8a² + b² + 8w²)    a₁ = 0
/// a₃ = −8w(a² − w²)²          a₀ = (b²/4w²)(a² − w²)⁴
/// ```
pub fn quintic_coeffs(params: &EggParams) -> Result<Quintic> {
    let (a, b, w) = (params.a(), params.b(), params.w());
    if w == 0.0 {
        return Err(Error::Domain(
            "Q5 is undefined at w = 0; integrate in the x-domain instead".into(),
        ));
    }
    let m = (a * a - w * w) * (a * a - w * w);
    Ok(Quintic {
        coeffs: [
            b * b / (4.0 * w * w) * m * m,
            0.0,
            -2.0 * b * b * m,
            -8.0 * w * m,
            4.0 * w * w * (8.0 * a * a + b * b + 8.0 * w * w),
            -32.0 * w * w * w,
        ],
    })
}

/// Integration limits in `t = x − γ`: `[(a−w)²/2w, (a+w)²/2w]`.
pub fn t_range(params: &EggParams) -> Result<(f64, f64)> {
    let (a, w) = (params.a(), params.w());
    if w == 0.0 {
        return Err(Error::Domain("t-domain undefined at w = 0".into()));
    }
    Ok(((a - w) * (a - w) / (2.0 * w), (a + w) * (a + w) / (2.0 * w)))
}

/// `2π f1(x) √(1 + f1'(x)²)`, finite on the closed interval `[-a, a]`.
pub fn surface_integrand_x(params: &EggParams, x: f64) -> f64 {
    let y2 = params.profile_sq(x);
    let yy = params.profile_slope_product(x);
    2.0 * PI * (y2 + yy * yy).sqrt()
}

/// `(bπ/4w²) √Q₅(t) / t²`.
pub fn surface_integrand_t(params: &EggParams, quintic: &Quintic, t: f64) -> f64 {
    let (b, w) = (params.b(), params.w());
    b * PI / (4.0 * w * w) * quintic.eval(t).max(0.0).sqrt() / (t * t)
}

/// `V(r)/(πab²)` for `r = w/a < 1`, from the Taylor series of the logarithm:
/// `4/3 − 4 Σ_{k≥2} r^{2k−2}/((2k+1)(2k−1)(2k−3))`.
fn volume_series(r: f64) -> f64 {
    let r2 = r * r;
    let mut power = r2;
    let mut sum = 0.0;
    for k in 2..200 {
        let k = k as f64;
        let term = power / ((2.0 * k + 1.0) * (2.0 * k - 1.0) * (2.0 * k - 3.0));
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        power *= r2;
    }
    4.0 / 3.0 - 4.0 * sum
}

/// Volume of the egg solid,
/// `V = (πb²/4w³)((a² − w²)² ln|(a − w)/(a + w)| + 2aw(a² + w²))`.
///
/// Exact spheroid at `w = 0`, paraboloid `πab²` inside the degeneracy band.
pub fn volume_egg(params: &EggParams) -> f64 {
    let (a, b, w) = (params.a(), params.b(), params.w());
    if params.is_ellipse() {
        return limits::spheroid_volume(a, b);
    }
    if params.is_degenerate() {
        return limits::paraboloid_volume(a, b);
    }
    if w < VOLUME_SERIES_RATIO * a {
        return PI * a * b * b * volume_series(w / a);
    }
    if a < VOLUME_SERIES_RATIO * w {
        return PI * b * b * a * a * a / (w * w) * volume_series(a / w);
    }
    let d = a * a - w * w;
    PI * b * b / (4.0 * w * w * w)
        * (d * d * ((a - w) / (a + w)).abs().ln() + 2.0 * a * w * (a * a + w * w))
}

fn split_point(params: &EggParams) -> f64 {
    max_abscissa(params).unwrap_or(0.0)
}

/// `π ∫ f1²` by adaptive Gauss–Kronrod, split at the widest point.
pub fn volume_numeric_oracle(params: &EggParams, tol: f64) -> Result<QuadratureResult> {
    let a = params.a();
    let u = split_point(params);
    let left_integrand = |xi: f64| PI * params.profile_sq_left(xi);
    let integrand = |x: f64| PI * params.profile_sq(x);
    let left = integrate(
        left_integrand,
        0.0,
        params.left_span(),
        tol,
        Method::AdaptiveSubdivision,
    )?;
    let right = integrate(integrand, u, a, tol, Method::AdaptiveSubdivision)?;
    Ok(left.merge(right))
}

fn closed_form(value: f64) -> QuadratureResult {
    QuadratureResult {
        value,
        error_estimate: 0.0,
        evaluations: 1,
    }
}

/// `2π ∫ f1 √(1 + f1'²)` over `[-a, a]` in the x-domain.
pub fn surface_area_x_domain(params: &EggParams, tol: f64) -> Result<QuadratureResult> {
    let a = params.a();
    let u = split_point(params);
    let left_integrand = |xi: f64| {
        let yy = params.profile_slope_product_left(xi);
        2.0 * PI * (params.profile_sq_left(xi) + yy * yy).sqrt()
    };
    let integrand = |x: f64| surface_integrand_x(params, x);
    let left = integrate(
        left_integrand,
        0.0,
        params.left_span(),
        tol,
        Method::DoubleExponential,
    )?;
    let right = integrate(integrand, u, a, tol, Method::DoubleExponential)?;
    Ok(left.merge(right))
}

/// The same surface integral after `x = t + γ`.
pub fn surface_area_t_domain(params: &EggParams, tol: f64) -> Result<QuadratureResult> {
    if params.is_degenerate() {
        return Err(Error::Degenerate(
            "t-domain integrand has t = 0 at w = a".into(),
        ));
    }
    let quintic = quintic_coeffs(params)?;
    let (lo, hi) = t_range(params)?;
    let gamma = canonical(params)?.gamma;
    let mid = split_point(params) - gamma;
    let integrand = |t: f64| surface_integrand_t(params, &quintic, t);
    let left = integrate(integrand, lo, mid, tol, Method::DoubleExponential)?;
    let right = integrate(integrand, mid, hi, tol, Method::DoubleExponential)?;
    Ok(left.merge(right))
}

/// Surface area of the egg solid.
///
/// `w = 0` uses the exact spheroid area. Inside the degeneracy band the
/// lateral paraboloid area is returned; note the egg surface itself tends to
/// lateral area plus the base disk `πb²` as `w → a`
/// (see [`limits::paraboloid_closed_area`]).
///
/// Away from the limits the x-domain result is cross-checked against the
/// t-domain integral and a disagreement beyond `10·tol` is an error.
pub fn surface_area_egg(params: &EggParams, tol: f64) -> Result<QuadratureResult> {
    let (a, b, w) = (params.a(), params.b(), params.w());
    if params.is_ellipse() {
        return Ok(closed_form(limits::spheroid_area(a, b)));
    }
    if params.is_degenerate() {
        return Ok(closed_form(limits::paraboloid_area(a, b)));
    }
    let x_domain = surface_area_x_domain(params, tol)?;
    let ratio = w / a;
    if (T_DOMAIN_CHECK_RATIO.0..=T_DOMAIN_CHECK_RATIO.1).contains(&ratio) {
        let t_domain = surface_area_t_domain(params, tol)?;
        let gap = (x_domain.value - t_domain.value).abs();
        if gap > 10.0 * tol * x_domain.value.abs().max(1.0) {
            return Err(Error::SurfaceMismatch {
                x_domain: x_domain.value,
                t_domain: t_domain.value,
            });
        }
    }
    Ok(x_domain)
}

/// Three-point Simpson estimate of the surface integral in closed form:
///
/// ```text
/// (πa/3)(2ab²/(a−w)² + 8ab√((a²+w²)³ + a²b²w²)/(a²+w²)² + 2ab²/(a+w)²)
/// ```
pub fn surface_area_simpson3(params: &EggParams) -> Result<f64> {
    let (a, b, w) = (params.a(), params.b(), params.w());
    if params.is_degenerate() {
        return Err(Error::Degenerate(
            "Simpson estimate divides by (a - w)^2".into(),
        ));
    }
    let s = a * a + w * w;
    let middle = 8.0 * a * b / (s * s) * (s * s * s + a * a * b * b * w * w).sqrt();
    Ok(PI * a / 3.0
        * (2.0 * a * b * b / ((a - w) * (a - w)) + middle + 2.0 * a * b * b / ((a + w) * (a + w))))
}

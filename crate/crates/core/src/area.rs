//! Planar area of the egg-shaped branch.
//!
//! The area is split at the widest abscissa `u` into `A₁ = 2∫_β^u f1` and
//! `A₂ = 2∫_u^α f1`. Each half reduces to incomplete elliptic integrals of
//! modulus `p = √((α−β)/(α−γ))` and amplitude `κ = λ = arcsin √((α−u)/(α−β))`.

use std::f64::consts::{FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::curve::{canonical, max_abscissa, phi_psi, EggParams};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Method, QuadratureResult};
use crate::special::{ellip_d, ellip_e, ellip_f, EllipticArgs};

/// Below this ratio `min(w/a, a/w)` the elliptic expression loses digits to
/// cancellation of `O(1/w)` terms, and the Legendre series is used instead.
const NEAR_ELLIPSE_RATIO: f64 = 0.01;

/// Slack allowed when clamping `φ(u)`, `ψ(u)` into `[0, 1]`.
const ARCSIN_CLAMP: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AreaBreakdown {
    /// Area left of the widest point (blunt end for `w < a`).
    pub a1: f64,
    /// Area right of the widest point.
    pub a2: f64,
    pub total: f64,
    /// Elliptic modulus.
    pub p: f64,
    pub kappa: f64,
    pub lambda: f64,
    /// Abscissa of the widest point.
    pub u: f64,
    /// Set when `w = 0` and the result is the ellipse area `πab`.
    pub ellipse_limit: bool,
}

fn clamped_asin(v: f64) -> Result<f64> {
    if !(-ARCSIN_CLAMP..=1.0 + ARCSIN_CLAMP).contains(&v) {
        return Err(Error::Domain(format!("arcsin argument {v} outside [0, 1]")));
    }
    Ok(v.clamp(0.0, 1.0).asin())
}

fn ellipse_breakdown(params: &EggParams) -> AreaBreakdown {
    let total = PI * params.a() * params.b();
    AreaBreakdown {
        a1: 0.5 * total,
        a2: 0.5 * total,
        total,
        p: 0.0,
        kappa: FRAC_PI_4,
        lambda: FRAC_PI_4,
        u: 0.0,
        ellipse_limit: true,
    }
}

/// `A₂ − A₁`: `(8/3)bw` for `w < a`, `(8/3)a³b/w²` for `w > a`.
pub fn split_difference(params: &EggParams) -> f64 {
    let (a, b, w) = (params.a(), params.b(), params.w());
    if w <= a {
        8.0 / 3.0 * b * w
    } else {
        8.0 / 3.0 * a * a * a * b / (w * w)
    }
}

/// `∫_{-1}^{1} √(1−ξ²)/√(1+2rξ+r²) dξ · 2 / π` for `r < 1`, from the Legendre
/// generating function: `1 − 2 Σ_{m≥1} (2m−3)!!(2m−1)!!/((2m)!!(2m+2)!!) r^{2m}`.
fn near_ellipse_factor(r: f64) -> f64 {
    let r2 = r * r;
    let mut coeff = 1.0 / 16.0;
    let mut power = r2;
    let mut sum = 0.0;
    for m in 1..200 {
        let term = coeff * power;
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        let m = m as f64;
        coeff *= (2.0 * m - 1.0) * (2.0 * m + 1.0) / ((2.0 * m + 2.0) * (2.0 * m + 4.0));
        power *= r2;
    }
    1.0 - 2.0 * sum
}

/// Exact area of the egg branch, `A_egg = A₁ + A₂`.
///
/// `w = 0` returns the ellipse area with `ellipse_limit` set.
pub fn area_egg(params: &EggParams) -> Result<AreaBreakdown> {
    if params.is_degenerate() {
        return Err(Error::Degenerate("egg area is undefined at w = a".into()));
    }
    if params.is_ellipse() {
        return Ok(ellipse_breakdown(params));
    }
    let (a, b, w) = (params.a(), params.b(), params.w());
    let c = canonical(params)?;
    let u = max_abscissa(params)?;
    let p = ((c.alpha - c.beta) / (c.alpha - c.gamma)).sqrt();
    let (phi_u, psi_u) = phi_psi(params, u)?;
    // φ(u) = ψ(u); averaging keeps κ and λ bit-identical.
    let kappa = clamped_asin(0.5 * (phi_u + psi_u))?;
    let lambda = kappa;

    let ratio = (w / a).min(a / w);
    if ratio < NEAR_ELLIPSE_RATIO {
        let total = if w < a {
            PI * a * b * near_ellipse_factor(ratio)
        } else {
            PI * a * b * ratio * near_ellipse_factor(ratio)
        };
        let diff = split_difference(params);
        return Ok(AreaBreakdown {
            a1: 0.5 * (total - diff),
            a2: 0.5 * (total + diff),
            total,
            p,
            kappa,
            lambda,
            u,
            ellipse_limit: false,
        });
    }

    // (α+β−2γ)E − 2(β−γ)F rewritten as (α−β)F − (α+β−2γ)p²D with D = (F−E)/p².
    let elliptic_part = |amplitude: f64| -> Result<f64> {
        let args = EllipticArgs::new(amplitude, p)?;
        let f = ellip_f(args)?;
        let d = ellip_d(args)?;
        Ok((c.alpha - c.beta) * f - (c.alpha + c.beta - 2.0 * c.gamma) * p * p * d)
    };
    let scale = 4.0 / 3.0 * c.h * (c.alpha - c.gamma).sqrt();
    let radial = (c.alpha - u) * (u - c.beta);

    let a1 = scale * elliptic_part(kappa)?
        + 4.0 / 3.0 * c.h * (u + c.gamma - c.alpha - c.beta) * (radial / (u - c.gamma)).sqrt();
    let a2 = scale * elliptic_part(lambda)? - 4.0 / 3.0 * c.h * (radial * (u - c.gamma)).sqrt();

    Ok(AreaBreakdown {
        a1,
        a2,
        total: a1 + a2,
        p,
        kappa,
        lambda,
        u,
        ellipse_limit: false,
    })
}

/// The same area through the fully substituted closed forms for `u = −w`
/// (`w < a`) and `u = −a²/w` (`w > a`), using `E` and `F` directly.
pub fn area_specialized(params: &EggParams) -> Result<AreaBreakdown> {
    if params.is_degenerate() {
        return Err(Error::Degenerate("egg area is undefined at w = a".into()));
    }
    if params.is_ellipse() {
        return Ok(ellipse_breakdown(params));
    }
    let (a, b, w) = (params.a(), params.b(), params.w());
    let modulus = 2.0 * (a * w).sqrt() / (a + w);
    let (sine, u) = if w < a {
        (((a + w) / (2.0 * a)).sqrt(), -w)
    } else {
        (((a + w) / (2.0 * w)).sqrt(), -a * a / w)
    };
    let amplitude = clamped_asin(sine)?;
    let args = EllipticArgs::new(amplitude, modulus.min(1.0))?;
    let e = ellip_e(args)?;
    let f = ellip_f(args)?;
    let common =
        2.0 * (a + w) * b / (3.0 * w) * ((a * a + w * w) / w * e - (a - w) * (a - w) / w * f);

    let (a1, a2) = if w < a {
        (
            common - 2.0 * b / (3.0 * w) * (a * a + 3.0 * w * w),
            common - 2.0 * b / (3.0 * w) * (a * a - w * w),
        )
    } else {
        let k = 2.0 * a * b / (3.0 * w * w);
        (
            common - k * (3.0 * a * a + w * w),
            common - k * (w * w - a * a),
        )
    };
    Ok(AreaBreakdown {
        a1,
        a2,
        total: a1 + a2,
        p: modulus,
        kappa: amplitude,
        lambda: amplitude,
        u,
        ellipse_limit: false,
    })
}

/// Independent check: `2∫_{-a}^{a} f1` by tanh-sinh, split at the widest point.
pub fn area_numeric_oracle(params: &EggParams, tol: f64) -> Result<QuadratureResult> {
    if params.is_degenerate() {
        return Err(Error::Degenerate("egg area is undefined at w = a".into()));
    }
    let a = params.a();
    let u = max_abscissa(params)?;
    let left_integrand = |xi: f64| 2.0 * params.profile_sq_left(xi).sqrt();
    let integrand = |x: f64| 2.0 * params.profile(x);
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

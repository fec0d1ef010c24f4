//! Incomplete elliptic integrals in the sine-amplitude convention
//!
//! ```text
//! F(θ, p) = ∫₀^{sin θ} dt / √((1 − t²)(1 − p²t²))
//! E(θ, p) = ∫₀^{sin θ} √(1 − p²t²) / √(1 − t²) dt
//! ```
//!
//! Both are assembled from Carlson's symmetric integrals R_F and R_D,
//! evaluated by the duplication theorem followed by a fifth-order series.

use crate::error::{Error, Result};

/// Relative spread of the Carlson arguments below which the series tail is applied.
const CARLSON_SPREAD: f64 = 1e-7;

/// Hard cap on duplication steps; each step shrinks the spread by 4.
const CARLSON_MAX_ITER: usize = 64;

/// Amplitude and modulus of an incomplete elliptic integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticArgs {
    pub theta: f64,
    pub p: f64,
}

impl EllipticArgs {
    pub fn new(theta: f64, p: f64) -> Result<Self> {
        let args = Self { theta, p };
        args.validate()?;
        Ok(args)
    }

    fn validate(&self) -> Result<()> {
        if !self.theta.is_finite() || !self.p.is_finite() {
            return Err(Error::Domain(format!(
                "non-finite elliptic arguments theta = {}, p = {}",
                self.theta, self.p
            )));
        }
        if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&self.theta) {
            return Err(Error::Domain(format!(
                "amplitude theta = {} outside [0, pi/2]",
                self.theta
            )));
        }
        if self.p * self.p > 1.0 {
            return Err(Error::Domain(format!("modulus p = {} has p^2 > 1", self.p)));
        }
        Ok(())
    }

    /// `(sin θ, cos² θ, 1 − p² sin² θ)`
    fn carlson_arguments(&self) -> (f64, f64, f64) {
        let (s, c) = self.theta.sin_cos();
        (s, c * c, 1.0 - self.p * self.p * s * s)
    }
}

fn check_carlson_arg(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v < 0.0 {
        return Err(Error::Domain(format!(
            "{name} = {v} must be finite and non-negative"
        )));
    }
    Ok(())
}

/// Carlson's symmetric integral of the first kind,
/// `R_F(x,y,z) = ½ ∫₀^∞ dt / √((t+x)(t+y)(t+z))`.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> Result<f64> {
    check_carlson_arg("x", x)?;
    check_carlson_arg("y", y)?;
    check_carlson_arg("z", z)?;
    let zeros = [x, y, z].iter().filter(|v| **v == 0.0).count();
    if zeros >= 2 {
        return Err(Error::Divergent(format!(
            "R_F({x}, {y}, {z}) has two or more zero arguments"
        )));
    }

    let (mut xt, mut yt, mut zt) = (x, y, z);
    for _ in 0..CARLSON_MAX_ITER {
        let mean = (xt + yt + zt) / 3.0;
        let dx = (mean - xt) / mean;
        let dy = (mean - yt) / mean;
        let dz = (mean - zt) / mean;
        if dx.abs().max(dy.abs()).max(dz.abs()) < CARLSON_SPREAD {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            let series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
            return Ok(series / mean.sqrt());
        }
        let (sx, sy, sz) = (xt.sqrt(), yt.sqrt(), zt.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lambda);
        yt = 0.25 * (yt + lambda);
        zt = 0.25 * (zt + lambda);
    }
    unreachable!("duplication spread shrinks by 4 per step")
}

/// Carlson's symmetric integral of the second kind,
/// `R_D(x,y,z) = (3/2) ∫₀^∞ dt / ((t+z) √((t+x)(t+y)(t+z)))`.
pub fn carlson_rd(x: f64, y: f64, z: f64) -> Result<f64> {
    check_carlson_arg("x", x)?;
    check_carlson_arg("y", y)?;
    check_carlson_arg("z", z)?;
    if z == 0.0 || x + y == 0.0 {
        return Err(Error::Divergent(format!(
            "R_D({x}, {y}, {z}) requires z > 0 and x + y > 0"
        )));
    }

    let (mut xt, mut yt, mut zt) = (x, y, z);
    let mut sum = 0.0;
    let mut fac = 1.0;
    for _ in 0..CARLSON_MAX_ITER {
        let mean = 0.2 * (xt + yt + 3.0 * zt);
        let dx = (mean - xt) / mean;
        let dy = (mean - yt) / mean;
        let dz = (mean - zt) / mean;
        if dx.abs().max(dy.abs()).max(dz.abs()) < CARLSON_SPREAD {
            let ea = dx * dy;
            let eb = dz * dz;
            let ec = ea - eb;
            let ed = ea - 6.0 * eb;
            let ee = ed + ec + ec;
            const C1: f64 = 3.0 / 14.0;
            const C2: f64 = 1.0 / 6.0;
            const C3: f64 = 9.0 / 22.0;
            const C4: f64 = 3.0 / 26.0;
            const C5: f64 = 0.25 * C3;
            const C6: f64 = 1.5 * C4;
            let series = 1.0
                + ed * (-C1 + C5 * ed - C6 * dz * ee)
                + dz * (C2 * ee + dz * (-C3 * ec + dz * C4 * ea));
            return Ok(3.0 * sum + fac * series / (mean * mean.sqrt()));
        }
        let (sx, sy, sz) = (xt.sqrt(), yt.sqrt(), zt.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + lambda));
        fac *= 0.25;
        xt = 0.25 * (xt + lambda);
        yt = 0.25 * (yt + lambda);
        zt = 0.25 * (zt + lambda);
    }
    unreachable!("duplication spread shrinks by 4 per step")
}

/// Incomplete elliptic integral of the first kind `F(θ, p)`.
pub fn ellip_f(args: EllipticArgs) -> Result<f64> {
    args.validate()?;
    let (s, c2, delta2) = args.carlson_arguments();
    if s == 0.0 {
        return Ok(0.0);
    }
    if args.p * args.p == 1.0 && s == 1.0 {
        return Err(Error::Divergent("F(pi/2, 1) is infinite".into()));
    }
    Ok(s * carlson_rf(c2, delta2, 1.0)?)
}

/// Incomplete elliptic integral of the second kind `E(θ, p)`.
pub fn ellip_e(args: EllipticArgs) -> Result<f64> {
    args.validate()?;
    let (s, _, _) = args.carlson_arguments();
    if s == 0.0 {
        return Ok(0.0);
    }
    if args.p * args.p == 1.0 {
        return Ok(s);
    }
    let f = ellip_f(args)?;
    Ok(f - args.p * args.p * ellip_d(args)?)
}

/// `D(θ, p) = (F(θ, p) − E(θ, p)) / p²`, evaluated without cancellation as
/// `(sin³θ / 3) · R_D(cos²θ, 1 − p² sin²θ, 1)`.
pub fn ellip_d(args: EllipticArgs) -> Result<f64> {
    args.validate()?;
    let (s, c2, delta2) = args.carlson_arguments();
    if s == 0.0 {
        return Ok(0.0);
    }
    if args.p * args.p == 1.0 && s == 1.0 {
        return Err(Error::Divergent("D(pi/2, 1) is infinite".into()));
    }
    Ok(s * s * s / 3.0 * carlson_rd(c2, delta2, 1.0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    fn args(theta: f64, p: f64) -> EllipticArgs {
        EllipticArgs::new(theta, p).unwrap()
    }

    #[test]
    fn rf_equal_arguments() {
        assert!(rel(carlson_rf(1.0, 1.0, 1.0).unwrap(), 1.0) < 1e-15);
        assert!(rel(carlson_rf(4.0, 4.0, 4.0).unwrap(), 0.5) < 1e-15);
    }

    #[test]
    fn rf_one_zero_argument() {
        assert!(rel(carlson_rf(0.0, 1.0, 1.0).unwrap(), FRAC_PI_2) < 1e-14);
    }

    #[test]
    fn rf_matches_quadrature_oracle() {
        // mpmath tanh-sinh quadrature of ½∫₀^∞ dt/√(t(t+1)(t+2)), 30 digits
        let expected = 1.311_028_777_146_059_9;
        assert!(rel(carlson_rf(0.0, 1.0, 2.0).unwrap(), expected) < 1e-14);
    }

    #[test]
    fn rf_rejects_bad_arguments() {
        assert!(matches!(
            carlson_rf(0.0, 0.0, 1.0),
            Err(Error::Divergent(_))
        ));
        assert!(matches!(carlson_rf(-1.0, 1.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(
            carlson_rf(f64::NAN, 1.0, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rd_values() {
        assert!(rel(carlson_rd(1.0, 1.0, 1.0).unwrap(), 1.0) < 1e-15);
        assert!(rel(carlson_rd(2.0, 2.0, 2.0).unwrap(), 2f64.powf(-1.5)) < 1e-15);
        // mpmath quadrature of (3/2)∫₀^∞ dt/((t+1)√(t(t+2)(t+1)))
        let expected = 1.797_210_352_103_388_3;
        assert!(rel(carlson_rd(0.0, 2.0, 1.0).unwrap(), expected) < 1e-14);
    }

    #[test]
    fn rd_rejects_bad_arguments() {
        assert!(matches!(
            carlson_rd(1.0, 1.0, 0.0),
            Err(Error::Divergent(_))
        ));
        assert!(matches!(
            carlson_rd(0.0, 0.0, 1.0),
            Err(Error::Divergent(_))
        ));
        assert!(matches!(carlson_rd(1.0, -2.0, 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn f_closed_forms() {
        assert!(rel(ellip_f(args(0.7, 0.0)).unwrap(), 0.7) < 1e-15);
        let expected = 0.5f64.sin().atanh();
        assert!(rel(ellip_f(args(0.5, 1.0)).unwrap(), expected) < 1e-14);
    }

    #[test]
    fn e_closed_forms() {
        assert!(rel(ellip_e(args(0.7, 0.0)).unwrap(), 0.7) < 1e-15);
        assert!(rel(ellip_e(args(0.5, 1.0)).unwrap(), 0.5f64.sin()) < 1e-15);
    }

    #[test]
    fn f_and_e_match_quadrature_oracle() {
        // mpmath quadrature of the sine-amplitude defining integrals at (pi/3, 0.8)
        let f = 1.178_902_299_538_823_8;
        let e = 0.939_454_803_724_950_8;
        assert!(rel(ellip_f(args(FRAC_PI_3, 0.8)).unwrap(), f) < 1e-13);
        assert!(rel(ellip_e(args(FRAC_PI_3, 0.8)).unwrap(), e) < 1e-13);
    }

    #[test]
    fn zero_amplitude() {
        for p in [0.0, 0.3, 1.0] {
            assert_eq!(ellip_f(args(0.0, p)).unwrap(), 0.0);
            assert_eq!(ellip_e(args(0.0, p)).unwrap(), 0.0);
        }
    }

    #[test]
    fn domain_checks() {
        assert!(EllipticArgs::new(1.6, 0.5).is_err());
        assert!(EllipticArgs::new(-0.1, 0.5).is_err());
        assert!(EllipticArgs::new(0.5, 1.01).is_err());
        assert!(matches!(
            ellip_f(EllipticArgs {
                theta: FRAC_PI_2,
                p: 1.0
            }),
            Err(Error::Divergent(_))
        ));
        // E stays finite at the complete, p = 1 corner
        assert_eq!(ellip_e(args(FRAC_PI_2, 1.0)).unwrap(), 1.0);
    }

    #[test]
    fn d_matches_difference() {
        let a = args(1.1, 0.6);
        let f = ellip_f(a).unwrap();
        let e = ellip_e(a).unwrap();
        assert!(rel(ellip_d(a).unwrap(), (f - e) / 0.36) < 1e-13);
    }
}

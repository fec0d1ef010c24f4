//! Closed forms for the limiting solids: the spheroid (`w = 0`) and the
//! paraboloid (`w = a`). `a` is the semi-axis along the rotation axis and
//! `b` the equatorial radius.

use std::f64::consts::PI;

pub fn spheroid_volume(a: f64, b: f64) -> f64 {
    4.0 / 3.0 * PI * a * b * b
}

/// Paraboloid of height `2a` over a disk of radius `b`.
pub fn paraboloid_volume(a: f64, b: f64) -> f64 {
    PI * a * b * b
}

/// Lateral (curved) area of the paraboloid of height `2a` and base radius `b`,
/// `(bπ/24a²)((16a² + b²)^{3/2} − b³)`. The flat base is not included.
pub fn paraboloid_area(a: f64, b: f64) -> f64 {
    b * PI / (24.0 * a * a) * ((16.0 * a * a + b * b).powf(1.5) - b * b * b)
}

/// Lateral area plus the base disk `πb²`; this is the limit of the egg
/// surface as `w → a`.
pub fn paraboloid_closed_area(a: f64, b: f64) -> f64 {
    paraboloid_area(a, b) + PI * b * b
}

/// `asin(e)/e`, accurate as `e → 0`.
fn asin_over(e: f64) -> f64 {
    if e < 1e-4 {
        let e2 = e * e;
        1.0 + e2 / 6.0 + 3.0 * e2 * e2 / 40.0
    } else {
        e.asin() / e
    }
}

/// `atanh(e)/e`, accurate as `e → 0`.
fn atanh_over(e: f64) -> f64 {
    if e < 1e-4 {
        let e2 = e * e;
        1.0 + e2 / 3.0 + e2 * e2 / 5.0
    } else {
        e.atanh() / e
    }
}

/// Exact surface area of the spheroid, prolate (`a > b`) or oblate (`a < b`).
pub fn spheroid_area(a: f64, b: f64) -> f64 {
    if a >= b {
        let e = (1.0 - (b / a) * (b / a)).sqrt();
        2.0 * PI * b * b + 2.0 * PI * a * b * asin_over(e)
    } else {
        let e = (1.0 - (a / b) * (a / b)).sqrt();
        2.0 * PI * b * b + 2.0 * PI * a * a * atanh_over(e)
    }
}

/// Approximate spheroid area `(4bπ/3)(b + 2a)`, the `w → 0` limit of the
/// three-point Simpson estimate.
pub fn spheroid_area_simpson(a: f64, b: f64) -> f64 {
    4.0 * b * PI / 3.0 * (b + 2.0 * a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_values() {
        assert!((spheroid_volume(1.0, 1.0) - 4.0 * PI / 3.0).abs() < 1e-15);
        assert!((paraboloid_volume(2.0, 3.0) - 18.0 * PI).abs() < 1e-13);
        let expected = PI / 24.0 * (17f64.powf(1.5) - 1.0);
        assert!((paraboloid_area(1.0, 1.0) - expected).abs() < 1e-14);
        assert!((spheroid_area(2.0, 2.0) - 16.0 * PI).abs() < 1e-13);
        assert!((spheroid_area_simpson(1.0, 1.0) - 4.0 * PI).abs() < 1e-14);
    }

    #[test]
    fn spheroid_area_branches_meet_at_sphere() {
        // dS/da = 8π/3 and dS/db = 16π/3 at the unit sphere.
        let sphere = 4.0 * PI;
        for d in [1e-9, 1e-6, 1e-3] {
            let tol = 20.0 * d * d + 1e-13;
            let prolate = sphere + 8.0 * PI / 3.0 * d;
            let oblate = sphere + 16.0 * PI / 3.0 * d;
            assert!((spheroid_area(1.0 + d, 1.0) - prolate).abs() < tol);
            assert!((spheroid_area(1.0, 1.0 + d) - oblate).abs() < tol);
        }
    }

    #[test]
    fn spheroid_area_known_prolate() {
        // a = 2, b = 1: e = √3/2, S = 2π(1 + 2·(π/3)/(√3/2))
        let expected = 2.0 * PI * (1.0 + 2.0 * (PI / 3.0) / (3f64.sqrt() / 2.0));
        assert!((spheroid_area(2.0, 1.0) - expected).abs() < 1e-13);
    }
}

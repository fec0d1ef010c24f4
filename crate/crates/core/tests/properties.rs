use std::f64::consts::PI;

use eggshape::area::{area_egg, area_specialized};
use eggshape::curve::{canonical, f1, implicit_residual, max_abscissa, phi_psi, EggParams};
use eggshape::inverse::{
    r_squared, solve_w_for_area, solve_w_for_area_within, solve_w_for_volume,
    solve_w_for_volume_within,
};
use eggshape::limits;
use eggshape::quadrature::{integrate, integrate_with_complement, Method};
use eggshape::solid::{surface_area_egg, volume_egg};
use eggshape::special::{carlson_rd, carlson_rf, ellip_e, ellip_f, EllipticArgs};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn grid() -> Vec<EggParams> {
    let mut out = Vec::new();
    for a in [1.0, 2.0, 3.0] {
        for b in [0.5, 1.0, 2.5] {
            for w in [0.05, 0.3, 0.9 * a, 1.5 * a, 3.0 * a] {
                out.push(EggParams::new(a, b, w).unwrap());
            }
        }
    }
    out
}

/// `(a, b, w)` with `w` kept away from `0` and from the `w = a` band.
fn egg_params() -> impl Strategy<Value = EggParams> {
    (
        0.2f64..5.0,
        0.2f64..5.0,
        prop_oneof![0.01f64..0.95, 1.05f64..4.0],
    )
        .prop_map(|(a, b, r)| EggParams::new(a, b, r * a).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn carlson_rf_is_symmetric_and_homogeneous(
        x in 0.0f64..10.0, y in 0.01f64..10.0, z in 0.01f64..10.0, k in 0.1f64..10.0
    ) {
        let base = carlson_rf(x, y, z).unwrap();
        for v in [carlson_rf(y, x, z), carlson_rf(z, y, x), carlson_rf(x, z, y)] {
            prop_assert!(rel(v.unwrap(), base) < 1e-14);
        }
        let scaled = carlson_rf(k * x, k * y, k * z).unwrap();
        prop_assert!(rel(scaled, base / k.sqrt()) < 1e-14);
    }

    #[test]
    fn carlson_rd_is_homogeneous(
        x in 0.0f64..10.0, y in 0.01f64..10.0, z in 0.01f64..10.0, k in 0.1f64..10.0
    ) {
        let base = carlson_rd(x, y, z).unwrap();
        prop_assert!(rel(carlson_rd(y, x, z).unwrap(), base) < 1e-14);
        let scaled = carlson_rd(k * x, k * y, k * z).unwrap();
        prop_assert!(rel(scaled, base / k.powf(1.5)) < 1e-13);
    }

    #[test]
    fn second_kind_is_bounded_by_first(theta in 0.0f64..1.56, p in 0.0f64..1.0, dt in 0.0f64..0.01) {
        let args = EllipticArgs::new(theta, p).unwrap();
        let f = ellip_f(args).unwrap();
        let e = ellip_e(args).unwrap();
        prop_assert!(e <= f * (1.0 + 1e-15));
        let further = EllipticArgs::new(theta + dt, p).unwrap();
        prop_assert!(ellip_f(further).unwrap() >= f);
    }

    #[test]
    fn canonical_branch_matches_direct_form(params in egg_params(), s in -1.0f64..=1.0) {
        let x = s * params.a();
        let c = canonical(&params).unwrap();
        let direct = f1(&params, x).unwrap();
        let via_canonical = c.branch(x);
        prop_assert!((via_canonical - direct).abs() <= 1e-12 * direct.max(params.b()));
    }

    #[test]
    fn surface_points_satisfy_the_implicit_equation(
        params in egg_params(), s in -1.0f64..=1.0, t in 0.0f64..(2.0 * PI)
    ) {
        let x = s * params.a();
        let y = f1(&params, x).unwrap();
        prop_assert!(implicit_residual(&params, x, y * t.cos(), y * t.sin()).abs() < 1e-12);
    }

    #[test]
    fn blunt_end_is_wider(a in 0.2f64..5.0, b in 0.2f64..5.0, r in 0.01f64..0.99, s in 0.0f64..1.0) {
        let params = EggParams::new(a, b, r * a).unwrap();
        let x = s * a;
        prop_assert!(f1(&params, -x).unwrap() >= f1(&params, x).unwrap());
    }

    #[test]
    fn area_routes_agree(params in egg_params()) {
        let general = area_egg(&params).unwrap();
        let specialized = area_specialized(&params).unwrap();
        prop_assert!(rel(specialized.total, general.total) < 1e-10);
        prop_assert_eq!(general.kappa, general.lambda);
        prop_assert!(general.p > 0.0 && general.p < 1.0);
    }

    #[test]
    fn quadrature_is_linear_and_additive(
        alpha in -3.0f64..3.0, beta in -3.0f64..3.0, mid in 0.1f64..0.9
    ) {
        let tol = 1e-12;
        let f = |x: f64| x.exp();
        let g = |x: f64| (3.0 * x).sin();
        for method in [Method::AdaptiveSubdivision, Method::DoubleExponential] {
            let combined = integrate(|x| alpha * f(x) + beta * g(x), 0.0, 1.0, tol, method).unwrap().value;
            let fi = integrate(f, 0.0, 1.0, tol, method).unwrap().value;
            let gi = integrate(g, 0.0, 1.0, tol, method).unwrap().value;
            prop_assert!((combined - (alpha * fi + beta * gi)).abs() < 10.0 * tol);
            let left = integrate(f, 0.0, mid, tol, method).unwrap().value;
            let right = integrate(f, mid, 1.0, tol, method).unwrap().value;
            prop_assert!((left + right - fi).abs() <= 2.0 * tol * fi.max(1.0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quantities_scale_with_length(params in egg_params()) {
        let k = 2.0;
        let big = params.scaled(k).unwrap();
        prop_assert!(rel(area_egg(&big).unwrap().total, k * k * area_egg(&params).unwrap().total) < 1e-10);
        prop_assert!(rel(volume_egg(&big), k.powi(3) * volume_egg(&params)) < 1e-10);
        let s = surface_area_egg(&params, 1e-12).unwrap().value;
        let s_big = surface_area_egg(&big, 1e-12).unwrap().value;
        prop_assert!(rel(s_big, k * k * s) < 1e-10);
    }
}

#[test]
fn widest_point_dominates_dense_grid() {
    for params in grid() {
        let u = max_abscissa(&params).unwrap();
        let top = f1(&params, u).unwrap();
        let a = params.a();
        for i in 0..=10_000 {
            let x = -a + 2.0 * a * i as f64 / 10_000.0;
            assert!(
                f1(&params, x).unwrap() <= top * (1.0 + 1e-14),
                "{params:?} at {x}"
            );
        }
    }
}

#[test]
fn phi_and_psi_cross_only_at_the_widest_point() {
    for params in grid() {
        let u = max_abscissa(&params).unwrap();
        let a = params.a();
        let n = 4000;
        let gap = |x: f64| {
            let (phi, psi) = phi_psi(&params, x).unwrap();
            phi - psi
        };
        let mut crossings = Vec::new();
        let mut prev = gap(-a + 2.0 * a / n as f64);
        for i in 2..n {
            let x = -a + 2.0 * a * i as f64 / n as f64;
            let cur = gap(x);
            if (prev > 0.0) != (cur > 0.0) {
                crossings.push(x);
            }
            prev = cur;
        }
        assert_eq!(crossings.len(), 1, "{params:?}: {crossings:?}");
        assert!(
            (crossings[0] - u).abs() <= 2.0 * a / n as f64 + 1e-12,
            "{params:?}"
        );
    }
}

#[test]
fn area_and_volume_decrease_in_w() {
    for (a, b) in [(1.0, 0.5), (2.0, 1.0), (3.0, 2.5)] {
        let mut last_area = f64::INFINITY;
        let mut last_volume = f64::INFINITY;
        for i in 1..200 {
            let w = a * i as f64 / 50.0;
            let params = EggParams::new(a, b, w).unwrap();
            if params.is_degenerate() {
                continue;
            }
            let area = area_egg(&params).unwrap().total;
            let volume = volume_egg(&params);
            assert!(area < last_area && volume < last_volume, "({a}, {b}, {w})");
            last_area = area;
            last_volume = volume;
        }
    }
}

#[test]
fn volume_is_continuous_at_the_guards() {
    for (a, b) in [(1.0, 1.0), (3.0, 2.325)] {
        let near_zero = volume_egg(&EggParams::new(a, b, 1e-9 * a).unwrap());
        assert!(rel(near_zero, limits::spheroid_volume(a, b)) < 1e-8);
        for w in [a * (1.0 - 2e-9), a * (1.0 + 2e-9)] {
            let v = volume_egg(&EggParams::new(a, b, w).unwrap());
            assert!(rel(v, limits::paraboloid_volume(a, b)) < 1e-8, "{w}");
        }
    }
}

#[test]
fn double_exponential_handles_both_endpoint_singularities() {
    // d is the signed distance to the nearer endpoint.
    let f = |x: f64, d: f64| 1.0 / (x * if d > 0.0 { d } else { 1.0 - x }).sqrt();
    let r = integrate_with_complement(f, 0.0, 1.0, 1e-12).unwrap();
    assert!((r.value - PI).abs() < 1e-10);
}

#[test]
fn inverse_round_trips_on_grid() {
    for params in grid() {
        let (a, b, w) = (params.a(), params.b(), params.w());
        let area = area_egg(&params).unwrap().total;
        let r = solve_w_for_area(a, b, area, 1e-13).unwrap();
        assert!(rel(r.w, w) < 1e-8, "area ({a}, {b}, {w}) -> {}", r.w);
        let r = solve_w_for_volume(a, b, volume_egg(&params), 1e-13).unwrap();
        assert!(rel(r.w, w) < 1e-8, "volume ({a}, {b}, {w}) -> {}", r.w);
    }
}

#[test]
fn inverse_does_not_depend_on_bracket() {
    let (a, b) = (3.0, 2.325);
    let area = area_egg(&EggParams::new(a, b, 0.75).unwrap())
        .unwrap()
        .total;
    let narrow = solve_w_for_area_within(a, b, area, 1e-13, (0.5, 1.0)).unwrap();
    let wide = solve_w_for_area_within(a, b, area, 1e-13, (1e-6, 2.9)).unwrap();
    assert!((narrow.w - wide.w).abs() < 1e-12);

    let volume = volume_egg(&EggParams::new(a, b, 4.5).unwrap());
    let narrow = solve_w_for_volume_within(a, b, volume, 1e-13, (4.0, 5.0)).unwrap();
    let wide = solve_w_for_volume_within(a, b, volume, 1e-13, (3.1, 300.0)).unwrap();
    assert!((narrow.w - wide.w).abs() < 1e-11);
}

#[test]
fn r_squared_reference_points() {
    let obs = [1.0, 2.0, 4.0, 7.0];
    assert_eq!(r_squared(&obs, &obs).unwrap(), 1.0);
    let mean = [3.5; 4];
    assert!(r_squared(&obs, &mean).unwrap().abs() < 1e-15);
}

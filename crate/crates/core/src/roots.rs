//! Bracketed scalar root finding (Brent's method).

use crate::error::{Error, Result};

const MAX_ITER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Step {
    pub x: f64,
    pub fx: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    /// Final bracket, `lo ≤ x ≤ hi`.
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub trace: Vec<Step>,
}

/// Finds a root of `f` in `[lo, hi]`, where `f(lo)` and `f(hi)` differ in
/// sign. Stops when the bracket is narrower than `xtol(x)` or `|f| ≤ ftol`.
pub fn brent<F, T>(f: F, lo: f64, hi: f64, xtol: T, ftol: f64) -> Result<Root>
where
    F: Fn(f64) -> Result<f64>,
    T: Fn(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a)?, f(b)?);
    let mut trace = vec![Step { x: a, fx: fa }, Step { x: b, fx: fb }];
    if fa.is_nan() || fb.is_nan() {
        return Err(Error::RootFinding(
            "objective is NaN at the bracket ends".into(),
        ));
    }
    if fa * fb > 0.0 {
        return Err(Error::RootFinding(format!(
            "no sign change on [{lo}, {hi}]: f = {fa}, {fb}"
        )));
    }
    let finish = |x: f64, fx: f64, other: f64, iterations: usize, trace: Vec<Step>| Root {
        x,
        fx,
        bracket: (x.min(other), x.max(other)),
        iterations,
        trace,
    };
    if fa == 0.0 {
        return Ok(finish(a, fa, b, 0, trace));
    }
    if fb == 0.0 {
        return Ok(finish(b, fb, a, 0, trace));
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for iter in 1..=MAX_ITER {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 0.5 * xtol(b) + 2.0 * f64::EPSILON * b.abs();
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb.abs() <= ftol {
            return Ok(finish(b, fb, c, iter, trace));
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            // Secant or inverse quadratic interpolation.
            let s = fb / fa;
            let (mut pn, mut q) = if a == c {
                (2.0 * m * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if pn > 0.0 {
                q = -q;
            } else {
                pn = -pn;
            }
            if 2.0 * pn < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = pn / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b)?;
        trace.push(Step { x: b, fx: fb });
    }
    Err(Error::RootFinding(format!(
        "no convergence after {MAX_ITER} iterations"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_simple_roots() {
        let r = brent(|x| Ok(x * x - 2.0), 0.0, 2.0, |_| 1e-14, 0.0).unwrap();
        assert!((r.x - 2f64.sqrt()).abs() < 1e-13);
        assert!(r.bracket.0 <= r.x && r.x <= r.bracket.1);
        assert!(r.iterations < 20);
        let r = brent(|x| Ok(x.cos() - x), 0.0, 1.0, |_| 1e-15, 0.0).unwrap();
        assert!((r.x - 0.739_085_133_215_160_6).abs() < 1e-14);
    }

    #[test]
    fn no_sign_change() {
        assert!(matches!(
            brent(|x| Ok(x * x + 1.0), -1.0, 1.0, |_| 1e-12, 0.0),
            Err(Error::RootFinding(_))
        ));
    }

    #[test]
    fn exact_endpoint_root() {
        let r = brent(|x| Ok(x - 1.0), 1.0, 3.0, |_| 1e-12, 0.0).unwrap();
        assert_eq!(r.x, 1.0);
    }

    #[test]
    fn errors_propagate() {
        let r = brent(
            |_| Err(Error::Statistics("boom".into())),
            0.0,
            1.0,
            |_| 1e-12,
            0.0,
        );
        assert!(matches!(r, Err(Error::Statistics(_))));
    }
}

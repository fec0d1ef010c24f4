use std::fmt::Write;

use super::CliError;
use crate::curve::{max_abscissa, EggParams};

pub const MIN_SAMPLES: usize = 16;

/// Drawing area for the longer side, in px.
const EXTENT: f64 = 600.0;
const MARGIN: f64 = 20.0;

/// Sample abscissae on `[-a, a]`, with the widest point `u` inserted so the
/// marker sits on a vertex of the path.
fn abscissae(a: f64, u: f64, samples: usize) -> Vec<f64> {
    let mut xs: Vec<f64> = (0..samples)
        .map(|i| -a + 2.0 * a * i as f64 / (samples - 1) as f64)
        .collect();
    xs[samples - 1] = a;
    if !xs.contains(&u) {
        let at = xs.partition_point(|&x| x < u);
        xs.insert(at, u);
    }
    xs
}

/// SVG 1.1 drawing of the closed egg branch with its axis box and the widest
/// point marked. Output depends only on the arguments.
pub fn render(a: f64, b: f64, w: f64, samples: usize) -> Result<String, CliError> {
    if samples < MIN_SAMPLES {
        return Err(CliError::input(format!(
            "samples must be at least {MIN_SAMPLES}, got {samples}"
        )));
    }
    let params = EggParams::new(a, b, w)?;
    let (u, top) = if params.is_degenerate() {
        (-a, b)
    } else {
        let u = max_abscissa(&params)?;
        (u, params.profile(u))
    };
    let xs = abscissae(a, u, samples);
    let ys: Vec<f64> = xs
        .iter()
        .map(|&x| if x == u { top } else { params.profile(x) })
        .collect();

    let scale = EXTENT / (2.0 * a.max(top));
    let width = 2.0 * a * scale + 2.0 * MARGIN;
    let height = 2.0 * top * scale + 2.0 * MARGIN;
    let px = |x: f64| MARGIN + (x + a) * scale;
    let py = |y: f64| MARGIN + (top - y) * scale;

    let mut d = String::new();
    for (i, (&x, &y)) in xs.iter().zip(&ys).enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd}{:.4},{:.4} ", px(x), py(y));
    }
    for (&x, &y) in xs.iter().zip(&ys).rev().skip(1) {
        let _ = write!(d, "L{:.4},{:.4} ", px(x), py(-y));
    }
    d.push('Z');

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.4}" height="{height:.4}" viewBox="0 0 {width:.4} {height:.4}">"#
    );
    let _ = writeln!(svg, "  <title>egg a={a} b={b} w={w}</title>");
    let _ = writeln!(
        svg,
        r##"  <rect x="{:.4}" y="{:.4}" width="{:.4}" height="{:.4}" fill="none" stroke="#999999" stroke-width="1"/>"##,
        px(-a),
        py(top),
        2.0 * a * scale,
        2.0 * top * scale
    );
    let _ = writeln!(
        svg,
        r##"  <line x1="{:.4}" y1="{:.4}" x2="{:.4}" y2="{:.4}" stroke="#999999" stroke-width="1"/>"##,
        px(-a),
        py(0.0),
        px(a),
        py(0.0)
    );
    let _ = writeln!(
        svg,
        r##"  <path d="{d}" fill="none" stroke="#000000" stroke-width="1.5"/>"##
    );
    let _ = writeln!(
        svg,
        r##"  <circle cx="{:.4}" cy="{:.4}" r="4" fill="#cc0000"/>"##,
        px(u),
        py(top)
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

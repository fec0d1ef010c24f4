use std::io::Write;

use serde_json::{json, Value};

use super::format::{human, num};
use super::table;
use super::CliError;
use crate::area::{area_egg, AreaBreakdown};
use crate::curve::EggParams;
use crate::inverse::{solve_w_for_area, solve_w_for_volume, SolveReport};
use crate::quadrature::QuadratureResult;
use crate::solid::{surface_area_egg, surface_area_simpson3, volume_egg};

pub const ELLIPSE_LIMIT: &str = "ellipse-limit";
pub const PARABOLOID_LIMIT: &str = "paraboloid-limit";

/// Everything computed for a single `(a, b, w)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShapeReport {
    pub params: EggParams,
    /// `None` at `w = a`, where only the limiting area `8ab/3` is defined.
    pub area: Option<AreaBreakdown>,
    pub volume: f64,
    pub surface: QuadratureResult,
    /// `None` at `w = a`.
    pub surface_simpson3: Option<f64>,
    pub limit_flags: Vec<&'static str>,
}

impl ShapeReport {
    pub fn compute(a: f64, b: f64, w: f64, tol: f64) -> Result<Self, CliError> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::input(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        let params = EggParams::new(a, b, w)?;
        let mut limit_flags = Vec::new();
        if params.is_ellipse() {
            limit_flags.push(ELLIPSE_LIMIT);
        }
        if params.is_degenerate() {
            limit_flags.push(PARABOLOID_LIMIT);
        }
        let area = if params.is_degenerate() {
            None
        } else {
            Some(area_egg(&params)?)
        };
        Ok(Self {
            params,
            area,
            volume: volume_egg(&params),
            surface: surface_area_egg(&params, tol)?,
            surface_simpson3: surface_area_simpson3(&params).ok(),
            limit_flags,
        })
    }

    fn degenerate_area(&self) -> f64 {
        8.0 / 3.0 * self.params.a() * self.params.b()
    }

    pub fn to_json(&self) -> Value {
        let p = &self.params;
        let area = match &self.area {
            Some(ab) => json!({
                "a1": num(ab.a1),
                "a2": num(ab.a2),
                "total": num(ab.total),
                "p": num(ab.p),
                "kappa": num(ab.kappa),
                "lambda": num(ab.lambda),
                "u": num(ab.u),
            }),
            None => json!({ "degenerate": true, "total": num(self.degenerate_area()) }),
        };
        json!({
            "params": { "a": num(p.a()), "b": num(p.b()), "w": num(p.w()) },
            "area": area,
            "volume": num(self.volume),
            "surface": {
                "value": num(self.surface.value),
                "error_estimate": num(self.surface.error_estimate),
            },
            "surface_simpson3": self.surface_simpson3.map_or(Value::Null, num),
            "flags": self.limit_flags,
        })
    }

    pub fn to_table(&self) -> String {
        let p = &self.params;
        let mut rows: Vec<(&str, String)> = vec![
            ("a", human(p.a())),
            ("b", human(p.b())),
            ("w", human(p.w())),
        ];
        match &self.area {
            Some(ab) => {
                rows.push(("area A1", human(ab.a1)));
                rows.push(("area A2", human(ab.a2)));
                rows.push(("area", human(ab.total)));
                rows.push(("modulus p", human(ab.p)));
                rows.push(("kappa", human(ab.kappa)));
                rows.push(("lambda", human(ab.lambda)));
                rows.push(("widest at u", human(ab.u)));
            }
            None => rows.push(("area (degenerate, limit)", human(self.degenerate_area()))),
        }
        rows.push(("volume", human(self.volume)));
        rows.push(("surface", human(self.surface.value)));
        rows.push(("surface error", human(self.surface.error_estimate)));
        rows.push((
            "surface simpson-3",
            self.surface_simpson3
                .map_or_else(|| "n/a".to_string(), human),
        ));
        let flags = if self.limit_flags.is_empty() {
            "-".to_string()
        } else {
            self.limit_flags.join(", ")
        };
        rows.push(("flags", flags));
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

pub fn solve_json(report: &SolveReport) -> Value {
    json!({
        "w": num(report.w),
        "residual": num(report.residual),
        "bracket": [num(report.bracket.0), num(report.bracket.1)],
        "iterations": report.iterations,
        "converged": report.converged,
    })
}

pub fn solve_table(report: &SolveReport) -> String {
    format!(
        "w           {}\nresidual    {}\niterations  {}\nbracket     [{}, {}]\nconverged   {}\n",
        human(report.w),
        human(report.residual),
        report.iterations,
        human(report.bracket.0),
        human(report.bracket.1),
        report.converged
    )
}

struct Check {
    label: String,
    expected: f64,
    got: Option<f64>,
    tol: f64,
    relative: bool,
}

impl Check {
    fn passed(&self) -> bool {
        self.got.is_some_and(|g| {
            let gap = (g - self.expected).abs();
            let scale = if self.relative {
                self.expected.abs()
            } else {
                1.0
            };
            gap <= self.tol * scale
        })
    }

    fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let kind = if self.relative { "rel" } else { "abs" };
        let got = self
            .got
            .map_or_else(|| "error".to_string(), |g| format!("{g:.10}"));
        format!(
            "{status}  {}: expected {} got {got} ({kind} tol {:e})",
            self.label, self.expected, self.tol
        )
    }
}

fn check(label: &str, expected: f64, got: Option<f64>, tol: f64, relative: bool) -> Check {
    Check {
        label: label.to_string(),
        expected,
        got,
        tol,
        relative,
    }
}

/// Runs the four worked examples and writes one line per check.
pub fn examples(out: &mut dyn Write) -> Result<(), CliError> {
    let mut checks = Vec::new();

    let batch = table::run(None, &[])?;
    let references = table::bundled_model_column();
    for (row, reference) in batch.rows.iter().zip(&references) {
        let label = format!("example 1, row {} area", row.no.as_deref().unwrap_or("?"));
        checks.push(check(&label, *reference, Some(row.predicted), 1e-6, true));
    }
    checks.push(check(
        "example 1, R^2",
        0.999179,
        batch.r_squared,
        1e-4,
        false,
    ));

    let area = EggParams::new(3.0, 2.325, 0.75)
        .ok()
        .and_then(|p| area_egg(&p).ok());
    checks.push(check(
        "example 2, A1",
        8.545026,
        area.map(|x| x.a1),
        1e-5,
        true,
    ));
    checks.push(check(
        "example 2, A2",
        13.195026,
        area.map(|x| x.a2),
        1e-5,
        true,
    ));
    checks.push(check(
        "example 2, area",
        21.740052,
        area.map(|x| x.total),
        1e-5,
        true,
    ));

    let w3 = solve_w_for_area(202.905, 156.325, 98984.1, 1e-12)
        .ok()
        .map(|r| r.w);
    checks.push(check("example 3, w from area", 46.678275, w3, 1e-3, false));

    let w4 = solve_w_for_volume(2.854, 2.2155, 57.458, 1e-12)
        .ok()
        .map(|r| r.w);
    checks.push(check(
        "example 4, w from volume",
        0.9138298,
        w4,
        1e-5,
        false,
    ));
    let surface = w4
        .and_then(|w| EggParams::new(2.854, 2.2155, w).ok())
        .and_then(|p| surface_area_egg(&p, 1e-10).ok())
        .map(|s| s.value);
    checks.push(check("example 4, surface", 73.61192, surface, 1e-3, true));

    for c in &checks {
        writeln!(out, "{}", c.line())?;
    }
    let passed = checks.iter().filter(|c| c.passed()).count();
    writeln!(out, "{passed}/{} checks passed", checks.len())?;
    Ok(())
}

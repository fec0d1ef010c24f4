//! Recovering the asymmetry `w` from a measured area or volume at fixed
//! `a`, `b`, plus the sewer-profile helpers and goodness of fit.
//!
//! Both area and volume decrease strictly in `w`, from the ellipse/spheroid
//! value at `w = 0` towards zero as `w → ∞`. The solver brackets on
//! `(1e-9·a, 0.999·a)` first and moves to `(0.999·a, 100·a)` only when the
//! target lies beyond `w ≈ a`; there the objective is continued through the
//! `w = a` band by its limit.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::area::area_egg;
use crate::curve::EggParams;
use crate::error::{Error, Result};
use crate::roots::{brent, Step};
use crate::solid::volume_egg;

const PRIMARY_BRACKET: (f64, f64) = (1e-9, 0.999);
const SECONDARY_BRACKET: (f64, f64) = (0.999, 100.0);

/// Samples used to verify monotonicity of the objective over a bracket.
const MONOTONE_SAMPLES: usize = 33;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub w: f64,
    /// Target minus achieved value at `w`.
    pub residual: f64,
    /// Sub-bracket that was handed to the root finder.
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub converged: bool,
    #[serde(skip)]
    pub trace: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quantity {
    Area,
    Volume,
}

impl Quantity {
    fn supremum(self, a: f64, b: f64) -> f64 {
        match self {
            Quantity::Area => PI * a * b,
            Quantity::Volume => 4.0 / 3.0 * PI * a * b * b,
        }
    }

    fn eval(self, a: f64, b: f64, w: f64) -> Result<f64> {
        let params = EggParams::new(a, b, w)?;
        match self {
            Quantity::Area if params.is_degenerate() => Ok(8.0 / 3.0 * a * b),
            Quantity::Area => Ok(area_egg(&params)?.total),
            Quantity::Volume => Ok(volume_egg(&params)),
        }
    }
}

fn check_inputs(a: f64, b: f64, target: f64, tol: f64) -> Result<()> {
    EggParams::new(a, b, 0.0)?;
    if !(target.is_finite() && target > 0.0) {
        return Err(Error::Domain(format!("target {target} must be positive")));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Domain(format!("tolerance {tol} must be positive")));
    }
    Ok(())
}

/// Samples `g` on a geometric grid over `[lo, hi]`. Returns the single
/// sub-interval containing the sign change, or an ambiguity error when the
/// samples are not monotone and several sign changes appear.
fn locate_root<G>(g: &G, lo: f64, hi: f64) -> Result<(f64, f64)>
where
    G: Fn(f64) -> Result<f64>,
{
    let ratio = (hi / lo).powf(1.0 / (MONOTONE_SAMPLES - 1) as f64);
    let mut xs = Vec::with_capacity(MONOTONE_SAMPLES);
    let mut ys = Vec::with_capacity(MONOTONE_SAMPLES);
    for i in 0..MONOTONE_SAMPLES {
        let x = if i + 1 == MONOTONE_SAMPLES {
            hi
        } else {
            lo * ratio.powi(i as i32)
        };
        xs.push(x);
        ys.push(g(x)?);
    }
    let crossings: Vec<usize> = (0..MONOTONE_SAMPLES - 1)
        .filter(|&i| (ys[i] > 0.0) != (ys[i + 1] > 0.0))
        .collect();
    match crossings.as_slice() {
        [i] => Ok((xs[*i], xs[*i + 1])),
        [] => Err(Error::RootFinding("no sign change in bracket".into())),
        many => Err(Error::Ambiguous {
            candidates: many.iter().map(|&i| 0.5 * (xs[i] + xs[i + 1])).collect(),
        }),
    }
}

fn solve(
    quantity: Quantity,
    a: f64,
    b: f64,
    target: f64,
    tol: f64,
    bracket: Option<(f64, f64)>,
) -> Result<SolveReport> {
    check_inputs(a, b, target, tol)?;
    let g = |w: f64| quantity.eval(a, b, w).map(|v| v - target);
    let supremum = quantity.supremum(a, b);
    let infimum = quantity.eval(a, b, SECONDARY_BRACKET.1 * a)?;
    let out_of_range = || Error::OutOfRange {
        target,
        lo: infimum,
        hi: supremum,
    };
    if target >= supremum {
        return Err(out_of_range());
    }

    let (lo, hi) = match bracket {
        Some((lo, hi)) => {
            if !(lo > 0.0 && lo < hi && hi.is_finite()) {
                return Err(Error::Domain(format!("invalid bracket ({lo}, {hi})")));
            }
            (lo, hi)
        }
        None => {
            let (p_lo, p_hi) = (PRIMARY_BRACKET.0 * a, PRIMARY_BRACKET.1 * a);
            if g(p_lo)? < 0.0 {
                return Err(out_of_range());
            }
            if g(p_hi)? <= 0.0 {
                (p_lo, p_hi)
            } else {
                let (s_lo, s_hi) = (SECONDARY_BRACKET.0 * a, SECONDARY_BRACKET.1 * a);
                if g(s_hi)? > 0.0 {
                    return Err(out_of_range());
                }
                (s_lo, s_hi)
            }
        }
    };

    let (sub_lo, sub_hi) = locate_root(&g, lo, hi)?;
    let root = brent(g, sub_lo, sub_hi, |w| tol * w.abs().max(1.0), 0.0)?;
    let residual = -root.fx;
    Ok(SolveReport {
        w: root.x,
        residual,
        bracket: (sub_lo, sub_hi),
        iterations: root.iterations,
        converged: residual.abs() <= tol * target.abs().max(1.0),
        trace: root.trace,
    })
}

/// Finds `w` with `area_egg(a, b, w).total = target_area`.
pub fn solve_w_for_area(a: f64, b: f64, target_area: f64, tol: f64) -> Result<SolveReport> {
    solve(Quantity::Area, a, b, target_area, tol, None)
}

/// As [`solve_w_for_area`] over a caller-supplied bracket `(lo, hi)`.
pub fn solve_w_for_area_within(
    a: f64,
    b: f64,
    target_area: f64,
    tol: f64,
    bracket: (f64, f64),
) -> Result<SolveReport> {
    solve(Quantity::Area, a, b, target_area, tol, Some(bracket))
}

/// Finds `w` with `volume_egg(a, b, w) = target_volume`.
pub fn solve_w_for_volume(a: f64, b: f64, target_volume: f64, tol: f64) -> Result<SolveReport> {
    solve(Quantity::Volume, a, b, target_volume, tol, None)
}

pub fn solve_w_for_volume_within(
    a: f64,
    b: f64,
    target_volume: f64,
    tol: f64,
    bracket: (f64, f64),
) -> Result<SolveReport> {
    solve(Quantity::Volume, a, b, target_volume, tol, Some(bracket))
}

/// Parameters of the egg matched to the Cleveland circular-arc sewer
/// profile of height `L`: `a = L/2`, `b = B/2`, `w = (2−√3)/(3+√3) · L/2`.
pub fn cleveland_params(length: f64, breadth: f64) -> Result<EggParams> {
    let s3 = 3f64.sqrt();
    EggParams::from_length_breadth(length, breadth, (2.0 - s3) / (3.0 + s3) * length / 2.0)
}

/// Breadth of the Cleveland profile, `B = L(2+√3)/(3+√3)`.
pub fn cleveland_breadth(length: f64) -> f64 {
    let s3 = 3f64.sqrt();
    length * (2.0 + s3) / (3.0 + s3)
}

/// One measured profile against the model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitRecord {
    pub length: f64,
    pub breadth: f64,
    pub w: Option<f64>,
    pub observed: f64,
    pub predicted: f64,
}

impl FitRecord {
    /// Predicts the planar area for `(L, B, w)` and pairs it with `observed`.
    pub fn area(length: f64, breadth: f64, w: f64, observed: f64) -> Result<Self> {
        let params = EggParams::from_length_breadth(length, breadth, w)?;
        Ok(Self {
            length,
            breadth,
            w: Some(w),
            observed,
            predicted: area_egg(&params)?.total,
        })
    }

    pub fn shape_index(&self) -> f64 {
        self.breadth / self.length
    }
}

/// `R² = 1 − Σ(obs − pred)² / Σ(obs − mean(obs))²`.
pub fn r_squared(observed: &[f64], predicted: &[f64]) -> Result<f64> {
    if observed.len() != predicted.len() {
        return Err(Error::Statistics(format!(
            "length mismatch: {} observed vs {} predicted",
            observed.len(),
            predicted.len()
        )));
    }
    if observed.len() < 2 {
        return Err(Error::Statistics("need at least two observations".into()));
    }
    let mean = observed.iter().sum::<f64>() / observed.len() as f64;
    let total: f64 = observed.iter().map(|o| (o - mean) * (o - mean)).sum();
    if total == 0.0 {
        return Err(Error::Statistics(
            "observed values have zero variance".into(),
        ));
    }
    let residual: f64 = observed
        .iter()
        .zip(predicted)
        .map(|(o, p)| (o - p) * (o - p))
        .sum();
    Ok(1.0 - residual / total)
}

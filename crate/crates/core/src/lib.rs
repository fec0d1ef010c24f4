//! Hügelschäffer egg curves and surfaces.
//!
//! The egg is the closed branch of the cubic obtained from two circles of
//! radii `a` and `b` whose centres are offset by `w`. This crate computes
//!
//! * the planar area exactly, through incomplete elliptic integrals,
//! * the volume of the solid of revolution in closed form,
//! * the surface area by double-exponential quadrature,
//! * the spheroid (`w = 0`) and paraboloid (`w = a`) limits,
//! * `w` recovered from a measured area or volume.
//!
//! ```
//! use eggshape::{area::area_egg, solid::volume_egg, EggParams};
//!
//! let egg = EggParams::new(3.0, 2.325, 0.75).unwrap();
//! let area = area_egg(&egg).unwrap();
//! assert!((area.total - 21.740052).abs() < 1e-6);
//! assert!(volume_egg(&egg) > 0.0);
//! ```

pub mod area;
pub mod cli;
pub mod curve;
pub mod error;
pub mod inverse;
pub mod limits;
pub mod quadrature;
pub mod roots;
pub mod solid;
pub mod special;

pub use area::AreaBreakdown;
pub use curve::{CanonicalForm, EggParams};
pub use error::{Error, Result};
pub use inverse::{FitRecord, SolveReport};
pub use quadrature::{Method, QuadratureResult};
pub use solid::Quintic;

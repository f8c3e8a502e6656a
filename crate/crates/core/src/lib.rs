//! Planar cubic Alternative curves: a cubic with two shape parameters
//! `alpha`, `beta` scaling the end tangents,
//!
//! ```text
//! Z(t) = F0 P0 + F1 P1 + F2 P2 + F3 P3
//! F0 = (1-t)^2 (1 + (2-alpha) t)    F1 = alpha (1-t)^2 t
//! F2 = beta t^2 (1-t)               F3 = t^2 (1 + (2-beta)(1-t))
//! ```
//!
//! `alpha = beta = 3` gives the cubic Bezier curve. For the H-form polygon
//! (`P1 = P2`) the shape of the segment (convex, one or two inflections,
//! cusp, loop) depends on `(alpha, beta)` only; [`classify`] decides it in
//! closed form and [`oracle`] re-derives it by sampling.
//!
//! ```
//! use altcubic::{classify, CurveInstance, ShapeClass, ShapeParams, Tolerances};
//!
//! let params = ShapeParams::new(6.0, 6.0).unwrap();
//! let report = classify(params, &Tolerances::default());
//! let ShapeClass::Cusp { t, .. } = report.shape else { panic!() };
//! assert_eq!(t, 0.5);
//! let curve = CurveInstance::unit_frame(params);
//! assert!(curve.first_derivative(t).unwrap().length() < 1e-12);
//! ```

pub mod classify;
pub mod cli;
pub mod curve;
pub mod degenerate;
pub mod diagram;
pub mod error;
pub mod oracle;
pub mod point;
pub mod poly;
pub mod shape;

pub use classify::{classify, ClassificationReport, ShapeClass};
pub use curve::{ControlPolygon, CurveInstance, ShapeParams, Tolerances};
pub use error::{Error, Result};
pub use point::{cross2, Point2, Vec2};

//! Shape classes shared by the analytic classifier and the numeric oracle.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Which end of the curve has a vanishing tangent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Endpoint {
    Start,
    End,
    Both,
}

/// Shape of a curve segment.
///
/// Parameter values are stored both as `u >= 0` and `t = 1/(1+u)` in `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum ShapeClass {
    Convex,
    SingleInflection { u: f64, t: f64 },
    /// `u[0] < u[1]`, `t[i] = 1/(1+u[i])`.
    DoubleInflection { u: [f64; 2], t: [f64; 2] },
    Cusp { u: f64, t: f64 },
    /// `u[0] < u[1]`; `Z(t[0]) == Z(t[1])`.
    Loop { u: [f64; 2], t: [f64; 2] },
    Quadratic,
    EndpointDegenerate { endpoint: Endpoint },
    Collinear,
}

impl ShapeClass {
    /// All variant names in legend order.
    pub const NAMES: [&'static str; 8] = [
        "Convex",
        "SingleInflection",
        "DoubleInflection",
        "Cusp",
        "Loop",
        "Quadratic",
        "EndpointDegenerate",
        "Collinear",
    ];

    /// Stable small-integer code, the index into [`ShapeClass::NAMES`].
    pub fn code(&self) -> u8 {
        match self {
            ShapeClass::Convex => 0,
            ShapeClass::SingleInflection { .. } => 1,
            ShapeClass::DoubleInflection { .. } => 2,
            ShapeClass::Cusp { .. } => 3,
            ShapeClass::Loop { .. } => 4,
            ShapeClass::Quadratic => 5,
            ShapeClass::EndpointDegenerate { .. } => 6,
            ShapeClass::Collinear => 7,
        }
    }

    pub fn name(&self) -> &'static str {
        Self::NAMES[self.code() as usize]
    }

    /// Number of interior inflection points.
    pub fn inflection_count(&self) -> usize {
        match self {
            ShapeClass::SingleInflection { .. } => 1,
            ShapeClass::DoubleInflection { .. } => 2,
            _ => 0,
        }
    }

    /// Feature parameters in the u-domain (inflections, cusp, or loop pair).
    pub fn roots_u(&self) -> Vec<f64> {
        match *self {
            ShapeClass::SingleInflection { u, .. } | ShapeClass::Cusp { u, .. } => vec![u],
            ShapeClass::DoubleInflection { u, .. } | ShapeClass::Loop { u, .. } => u.to_vec(),
            _ => Vec::new(),
        }
    }

    /// Feature parameters in the t-domain, matching [`ShapeClass::roots_u`].
    pub fn roots_t(&self) -> Vec<f64> {
        match *self {
            ShapeClass::SingleInflection { t, .. } | ShapeClass::Cusp { t, .. } => vec![t],
            ShapeClass::DoubleInflection { t, .. } | ShapeClass::Loop { t, .. } => t.to_vec(),
            _ => Vec::new(),
        }
    }

    /// Whether two classes are the same variant, ignoring payloads.
    pub fn same_variant(&self, other: &ShapeClass) -> bool {
        self.code() == other.code()
    }
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

//! Analytic shape classification of H-form curves from `(alpha, beta)`.
//!
//! Everything here depends only on the shape parameters: for an H-form
//! polygon with independent end tangents (`Gamma = T0 x T1 != 0`) the
//! hodograph cross product is `-2 Gamma Phi(t)`, so inflections, cusps and
//! loops are decided by two quadratics in `u = (1 - t) / t`:
//!
//! ```text
//! Phi(u)  = alpha(beta-3) u^2 - alpha beta u + (alpha-3) beta           inflections
//! Loop(u) = alpha L1 u^2 - alpha beta K u + beta L2                     self-intersection
//! I  = 12 - 4(alpha+beta) + alpha beta
//! L1 = alpha - 3 beta + beta^2,  L2 = beta - 3 alpha + alpha^2,  K = alpha beta - 3 alpha - 3 beta + 8
//! ```
//!
//! Their discriminants are `-3 alpha beta I` and `(alpha + beta - alpha beta)^2 alpha beta I`.
//! Exchanging `alpha` and `beta` swaps the outer coefficients of both
//! quadratics, mapping roots `u -> 1/u` (the curve reversed), so every
//! decision below is made from coefficient signs to keep the classification
//! exactly symmetric.

use serde::{Deserialize, Serialize};

use crate::curve::{reparam_u_to_t, CurveInstance, ShapeParams, Tolerances};
use crate::error::{Error, Result};
use crate::point::Vec2;
use crate::poly::{self, solve_quadratic, RealRoots};
pub use crate::shape::{Endpoint, ShapeClass};

/// `I = 12 - 4(alpha + beta) + alpha beta`.
pub fn discriminant_i(params: ShapeParams) -> f64 {
    let ShapeParams { alpha, beta } = params;
    12.0 - 4.0 * (alpha + beta) + alpha * beta
}

/// Scale-aware threshold below which `|I|` counts as zero.
pub fn discriminant_tolerance(params: ShapeParams, tol: &Tolerances) -> f64 {
    let s = 1.0 + params.alpha.abs() + params.beta.abs();
    tol.discriminant * s * s
}

/// Coefficients of `Phi(u) = c2 u^2 + c1 u + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhiCoefficients {
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl PhiCoefficients {
    pub fn new(params: ShapeParams) -> Self {
        let ShapeParams { alpha, beta } = params;
        PhiCoefficients {
            c2: alpha * (beta - 3.0),
            c1: -alpha * beta,
            c0: (alpha - 3.0) * beta,
        }
    }

    pub fn eval(&self, u: f64) -> f64 {
        (self.c2 * u + self.c1) * u + self.c0
    }

    /// `c1^2 - 4 c2 c0` in the factored form `-3 alpha beta I`.
    pub fn discriminant(params: ShapeParams) -> f64 {
        -3.0 * (params.alpha * params.beta) * discriminant_i(params)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.c2, self.c1, self.c0]
    }
}

/// Real roots of a shape quadratic plus diagnostic notes.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RootReport {
    /// Ascending.
    pub roots: Vec<f64>,
    pub notes: Vec<String>,
}

/// All real roots of `Phi(u)`.
pub fn inflection_roots(params: ShapeParams) -> RootReport {
    let phi = PhiCoefficients::new(params);
    let disc = PhiCoefficients::discriminant(params);
    let mut notes = Vec::new();
    let roots = solve_quadratic(phi.c2, phi.c1, phi.c0, disc);
    match roots {
        RealRoots::Complex => notes.push("complex roots: Phi(u) has no real zero".to_string()),
        RealRoots::Double(_) => notes.push("double root of Phi(u)".to_string()),
        RealRoots::Linear(_) => {
            notes.push("Phi(u) is linear (beta = 3): one root at u = inf, i.e. t = 0".to_string())
        }
        RealRoots::Constant { zero: true } => {
            notes.push("Phi(u) vanishes identically".to_string())
        }
        RealRoots::Constant { zero: false } => {
            notes.push("Phi(u) is a nonzero constant".to_string())
        }
        RealRoots::Distinct(..) => {}
    }
    RootReport {
        roots: roots.to_vec(),
        notes,
    }
}

/// Interior inflection points of an H-form curve.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct InflectionCount {
    /// Strictly positive roots of `Phi(u)`, ascending.
    pub u: Vec<f64>,
    /// `t = 1/(1+u)` for each entry of `u`.
    pub t: Vec<f64>,
    pub notes: Vec<String>,
}

impl InflectionCount {
    pub fn count(&self) -> usize {
        self.u.len()
    }
}

/// Counts sign changes of the curvature inside the segment.
///
/// Only simple roots with `u > 0` count. A root at `u = 0` (zero curvature at
/// `t = 1`) is reported in the notes; a double root is a tangency of the
/// curvature with zero, not a sign change.
pub fn count_inflections(params: ShapeParams) -> InflectionCount {
    let ShapeParams { alpha, beta } = params;
    let phi = PhiCoefficients::new(params);
    let disc = PhiCoefficients::discriminant(params);
    let mut out = InflectionCount::default();
    let roots = solve_quadratic(phi.c2, phi.c1, phi.c0, disc);
    match roots {
        RealRoots::Distinct(..) | RealRoots::Linear(_) => {
            for r in roots.to_vec() {
                if r > 0.0 {
                    out.u.push(r);
                } else if r == 0.0 {
                    out.notes.push("Phi(u) root at u = 0: zero curvature at t = 1".to_string());
                }
            }
        }
        RealRoots::Double(r) => out.notes.push(format!(
            "double Phi-root at u = {r} (no curvature sign change)"
        )),
        RealRoots::Constant { .. } | RealRoots::Complex => {}
    }
    if matches!(roots, RealRoots::Linear(_)) {
        out.notes.push("Phi(u) root at u = inf: zero curvature at t = 0".to_string());
    }
    if alpha > 0.0 && alpha < 3.0 && beta > 0.0 && beta < 3.0 && discriminant_i(params) < 0.0 {
        out.notes.push(
            "0 < alpha, beta < 3 with I < 0: real Phi roots, both negative".to_string(),
        );
    }
    out.t = out.u.iter().map(|&u| 1.0 / (1.0 + u)).collect();
    out
}

/// Value of `alpha` on the curve `I = 0` for a given `beta`:
/// `alpha = 4(beta - 3) / (beta - 4)`.
pub fn cusp_alpha_for_beta(beta: f64) -> Result<f64> {
    if beta == 4.0 {
        return Err(Error::DivisionByZero("beta = 4 is an asymptote of I = 0"));
    }
    Ok(4.0 * (beta - 3.0) / (beta - 4.0))
}

/// Outcome of locating the cusp on the curve `I = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CuspParameter {
    /// Cusp inside the segment.
    Interior { t: f64, u: f64 },
    /// The common zero of `Z'` lies outside `(0, 1)`; `t` is where it would be.
    OutsideSegment { t: f64 },
    /// `(alpha, beta) = (2, 2)`: the curve is a regular quadratic.
    Quadratic,
    /// `|I|` exceeds the tolerance.
    OffCurve,
}

/// Cusp location `t = 2(beta - 3) / (3(beta - 2))`, `u = beta / (2(beta - 3))`.
pub fn cusp_parameter(params: ShapeParams, tol: &Tolerances) -> CuspParameter {
    if is_quadratic_point(params, tol) {
        return CuspParameter::Quadratic;
    }
    if discriminant_i(params).abs() > discriminant_tolerance(params, tol) {
        return CuspParameter::OffCurve;
    }
    let beta = params.beta;
    let t = 2.0 * (beta - 3.0) / (3.0 * (beta - 2.0));
    if t > 0.0 && t < 1.0 {
        let u = if beta != 3.0 {
            beta / (2.0 * (beta - 3.0))
        } else {
            (1.0 - t) / t
        };
        CuspParameter::Interior { t, u }
    } else {
        CuspParameter::OutsideSegment { t }
    }
}

fn is_quadratic_point(params: ShapeParams, tol: &Tolerances) -> bool {
    (params.alpha - 2.0).abs() <= tol.identity && (params.beta - 2.0).abs() <= tol.identity
}

/// Coefficients (highest first) of the quadratics multiplying `T0` and `T1`
/// in the H-form `Z'(t)`.
fn hodograph_factors(params: ShapeParams) -> ([f64; 3], [f64; 3]) {
    let ShapeParams { alpha, beta } = params;
    (
        [3.0 * (alpha - 2.0), 6.0 - 4.0 * alpha, alpha],
        [3.0 * (beta - 2.0), 6.0 - 2.0 * beta, 0.0],
    )
}

/// Coordinate polynomials `x'(t)`, `y'(t)` of the H-form hodograph.
pub fn hodograph_components(params: ShapeParams, t0: Vec2, t1: Vec2) -> ([f64; 3], [f64; 3]) {
    let (a, b) = hodograph_factors(params);
    let mut x = [0.0; 3];
    let mut y = [0.0; 3];
    for k in 0..3 {
        x[k] = a[k] * t0.x + b[k] * t1.x;
        y[k] = a[k] * t0.y + b[k] * t1.y;
    }
    (x, y)
}

/// Sylvester resultant of the two hodograph components, computed numerically
/// as a 4x4 determinant. Vanishes exactly when `Z'` has a common zero.
pub fn resultant_check(params: ShapeParams, t0: Vec2, t1: Vec2) -> f64 {
    let (x, y) = hodograph_components(params, t0, t1);
    poly::resultant(&x, &y)
}

/// Closed form of [`resultant_check`]: `-3 Gamma^2 alpha beta I`.
pub fn resultant_closed_form(params: ShapeParams, gamma: f64) -> f64 {
    -3.0 * gamma * gamma * params.alpha * params.beta * discriminant_i(params)
}

/// Hadamard bound of the hodograph Sylvester matrix; the natural scale for
/// judging how close [`resultant_check`] is to zero.
pub fn resultant_scale(params: ShapeParams, t0: Vec2, t1: Vec2) -> f64 {
    let (x, y) = hodograph_components(params, t0, t1);
    poly::resultant_scale(&x, &y)
}

/// Boundary parabola values `(L1, L2) = (alpha - 3 beta + beta^2, beta - 3 alpha + alpha^2)`.
///
/// A self-intersection parameter reaches an end of the segment exactly when
/// `L1 L2 = 0`.
pub fn loop_boundary_values(params: ShapeParams) -> (f64, f64) {
    let ShapeParams { alpha, beta } = params;
    (alpha - 3.0 * beta + beta * beta, beta - 3.0 * alpha + alpha * alpha)
}

/// Roots of the self-intersection quadratic.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LoopRoots {
    /// Both u-roots, ascending, when real and distinct.
    pub roots: Option<[f64; 2]>,
    /// Both roots are `>= 0`, so the double point lies on the segment.
    pub in_segment: bool,
    pub notes: Vec<String>,
}

/// Parameter pair `(p, q)` of a double point `Z(p) = Z(q)`, in the u-domain:
///
/// ```text
/// p, q = (alpha beta K +- (alpha + beta - alpha beta) sqrt(alpha beta I)) / (2 alpha L1)
/// ```
pub fn loop_roots(params: ShapeParams) -> LoopRoots {
    let ShapeParams { alpha, beta } = params;
    let (l1, l2) = loop_boundary_values(params);
    let k = alpha * beta - 3.0 * alpha - 3.0 * beta + 8.0;
    let radicand = alpha * beta * discriminant_i(params);
    let mut out = LoopRoots::default();
    if radicand <= 0.0 {
        out.notes
            .push("loop radicand alpha*beta*I is not positive: no real double point".to_string());
        return out;
    }
    let c2 = alpha * l1;
    if c2 == 0.0 {
        out.notes
            .push("loop denominator 2*alpha*L1 vanishes: a double point sits at t = 0".to_string());
        return out;
    }
    let w = alpha + beta - alpha * beta;
    let disc = w * w * radicand;
    let c1 = -(alpha * beta) * k;
    let c0 = beta * l2;
    match solve_quadratic(c2, c1, c0, disc) {
        RealRoots::Distinct(p, q) => {
            out.roots = Some([p, q]);
            out.in_segment = p >= 0.0 && q >= 0.0;
        }
        RealRoots::Double(_) => out
            .notes
            .push("loop roots coincide (alpha + beta = alpha beta)".to_string()),
        _ => {}
    }
    out
}

/// First-order distance in the `(alpha, beta)` plane to the nearest class
/// boundary: the lines `alpha, beta in {0, 3}`, the curve `I = 0` and the
/// parabolas `L1 = 0`, `L2 = 0`.
pub fn boundary_distance(params: ShapeParams) -> f64 {
    let ShapeParams { alpha, beta } = params;
    let (l1, l2) = loop_boundary_values(params);
    let i = discriminant_i(params);
    let di = i.abs() / (beta - 4.0).hypot(alpha - 4.0);
    let dl1 = l1.abs() / 1f64.hypot(2.0 * beta - 3.0);
    let dl2 = l2.abs() / 1f64.hypot(2.0 * alpha - 3.0);
    [alpha.abs(), beta.abs(), (alpha - 3.0).abs(), (beta - 3.0).abs(), di, dl1, dl2]
        .into_iter()
        .fold(f64::INFINITY, f64::min)
}

/// Result of [`classify`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub params: ShapeParams,
    #[serde(rename = "I")]
    pub i: f64,
    pub phi: PhiCoefficients,
    pub shape: ShapeClass,
    pub region_label: String,
    pub notes: Vec<String>,
}

/// Classifies an H-form curve with independent end tangents from its shape
/// parameters alone.
///
/// Decision order: quadratic point, vanishing end tangent, interior cusp on
/// `I = 0`, double point on the segment, then the inflection count.
pub fn classify(params: ShapeParams, tol: &Tolerances) -> ClassificationReport {
    let (shape, notes) = classify_shape(params, tol);
    ClassificationReport {
        params,
        i: discriminant_i(params),
        phi: PhiCoefficients::new(params),
        region_label: label_for(params, &shape, tol).to_string(),
        shape,
        notes,
    }
}

/// Classifies a concrete curve. Dependent end tangents give
/// [`ShapeClass::Collinear`]; a non-H-form polygon is an error.
pub fn classify_curve(curve: &CurveInstance, tol: &Tolerances) -> Result<ClassificationReport> {
    match curve.check_classifiable(tol) {
        Ok(()) => Ok(classify(curve.params, tol)),
        Err(Error::DependentTangents(g)) => {
            let mut report = classify(curve.params, tol);
            report.shape = ShapeClass::Collinear;
            report.region_label = "unlabeled".to_string();
            report.notes.push(format!("end tangents dependent (Gamma = {g:e})"));
            Ok(report)
        }
        Err(e) => Err(e),
    }
}

fn classify_shape(params: ShapeParams, tol: &Tolerances) -> (ShapeClass, Vec<String>) {
    let ShapeParams { alpha, beta } = params;
    let mut notes = Vec::new();

    if is_quadratic_point(params, tol) {
        notes.push("cubic coefficient vanishes: the curve is a parabola arc".to_string());
        return (ShapeClass::Quadratic, notes);
    }

    let start = alpha.abs() <= tol.identity;
    let end = beta.abs() <= tol.identity;
    if start || end {
        let endpoint = match (start, end) {
            (true, true) => Endpoint::Both,
            (true, false) => Endpoint::Start,
            _ => Endpoint::End,
        };
        notes.push("vanishing end tangent: outside the analytic case split".to_string());
        return (ShapeClass::EndpointDegenerate { endpoint }, notes);
    }

    match cusp_parameter(params, tol) {
        CuspParameter::Interior { t, u } => return (ShapeClass::Cusp { u, t }, notes),
        CuspParameter::OutsideSegment { t } => notes.push(format!(
            "I ~ 0 but the double Phi-root lies outside the segment (t = {t})"
        )),
        CuspParameter::Quadratic | CuspParameter::OffCurve => {}
    }

    let lr = loop_roots(params);
    if let (Some([p, q]), true) = (lr.roots, lr.in_segment) {
        notes.push("double point parameters are u-values, t = 1/(1+u)".to_string());
        let tp = reparam_u_to_t(p).unwrap_or(1.0);
        let tq = reparam_u_to_t(q).unwrap_or(1.0);
        return (
            ShapeClass::Loop {
                u: [p, q],
                t: [tp, tq],
            },
            notes,
        );
    }

    let infl = count_inflections(params);
    notes.extend(infl.notes.iter().cloned());
    let shape = match infl.count() {
        0 => ShapeClass::Convex,
        1 => ShapeClass::SingleInflection {
            u: infl.u[0],
            t: infl.t[0],
        },
        _ => ShapeClass::DoubleInflection {
            u: [infl.u[0], infl.u[1]],
            t: [infl.t[0], infl.t[1]],
        },
    };
    (shape, notes)
}

/// Shape-diagram region of `(alpha, beta)`.
///
/// Labels: `C` convex in `(0,3)^2`; `D` two inflections with
/// `alpha, beta > 3`; `I-curve` on `I = 0`; `E` loop with `alpha, beta > 3`;
/// `F` one inflection with one parameter in `(0,3)` and the other above 3;
/// `S` one inflection with one parameter in `(0,3)` and the other negative;
/// `U` loop with `alpha beta < 0`; `V` convex with `alpha < 0 < beta`;
/// `H` convex with `beta < 0 < alpha`; `R` convex with `alpha, beta < 0`.
/// Anything else is `unlabeled`.
pub fn region_label(params: ShapeParams, tol: &Tolerances) -> String {
    let report = classify(params, tol);
    report.region_label
}

fn label_for(params: ShapeParams, shape: &ShapeClass, tol: &Tolerances) -> &'static str {
    let ShapeParams { alpha, beta } = params;
    let inner = |x: f64| x > 0.0 && x < 3.0;
    match shape {
        ShapeClass::EndpointDegenerate { .. } | ShapeClass::Collinear => return "unlabeled",
        ShapeClass::Quadratic | ShapeClass::Cusp { .. } => return "I-curve",
        _ => {}
    }
    if discriminant_i(params).abs() <= discriminant_tolerance(params, tol) {
        return "I-curve";
    }
    match shape {
        ShapeClass::Convex => {
            if inner(alpha) && inner(beta) {
                "C"
            } else if alpha < 0.0 && beta < 0.0 {
                "R"
            } else if alpha < 0.0 && beta > 0.0 {
                "V"
            } else if alpha > 0.0 && beta < 0.0 {
                "H"
            } else {
                "unlabeled"
            }
        }
        ShapeClass::DoubleInflection { .. } if alpha > 3.0 && beta > 3.0 => "D",
        ShapeClass::Loop { .. } if alpha > 3.0 && beta > 3.0 => "E",
        ShapeClass::Loop { .. } if alpha * beta < 0.0 => "U",
        ShapeClass::SingleInflection { .. } => {
            let (lo, hi) = if inner(alpha) { (alpha, beta) } else { (beta, alpha) };
            match (inner(lo), hi) {
                (true, h) if h > 3.0 => "F",
                (true, h) if h < 0.0 => "S",
                _ => "unlabeled",
            }
        }
        _ => "unlabeled",
    }
}

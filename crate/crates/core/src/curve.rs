//! The cubic Alternative curve: basis, evaluation, derivatives and curvature.
//!
//! A curve is a control polygon `P0..P3` together with two shape parameters
//! `(alpha, beta)`:
//!
//! ```text
//! F0(t) = (1-t)^2 (1 + (2-alpha) t)      F2(t) = beta t^2 (1-t)
//! F1(t) = alpha (1-t)^2 t                F3(t) = t^2 (1 + (2-beta)(1-t))
//! Z(t)  = F0 P0 + F1 P1 + F2 P2 + F3 P3,   0 <= t <= 1
//! ```
//!
//! With `alpha = beta = 3` the basis is the cubic Bernstein basis. The curve
//! interpolates its end points and has end tangents `alpha (P1 - P0)` and
//! `beta (P3 - P2)`.
//!
//! Most of the shape analysis assumes the *H-form* polygon `P1 = P2 = H`, in
//! which case the curve is driven by the end tangents `T0 = H - P0` and
//! `T1 = P3 - H`. The H-form closed forms are used automatically when the
//! polygon qualifies; otherwise derivatives come from the differentiated
//! basis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{cross2, Point2, Vec2};

/// Comparison tolerances used throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Geometric coincidence, relative to the polygon diameter.
    pub coincidence: f64,
    /// Algebraic identities.
    pub identity: f64,
    /// `|p1 - p2|` below this fraction of the diameter counts as H-form.
    pub h_form: f64,
    /// Scale factor for `|I| <= discriminant * (1 + |alpha| + |beta|)^2`.
    pub discriminant: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            coincidence: 1e-9,
            identity: 1e-12,
            h_form: 1e-12,
            discriminant: 1e-9,
        }
    }
}

/// The two shape parameters. Any finite reals are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShapeParams {
    pub alpha: f64,
    pub beta: f64,
}

impl ShapeParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::NonFinite("shape parameters"));
        }
        Ok(ShapeParams { alpha, beta })
    }

    /// The parameters with `alpha` and `beta` exchanged.
    pub fn swapped(self) -> Self {
        ShapeParams {
            alpha: self.beta,
            beta: self.alpha,
        }
    }
}

/// Four control points `P0..P3`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ControlPolygon {
    pub p0: Point2,
    pub p1: Point2,
    pub p2: Point2,
    pub p3: Point2,
}

impl ControlPolygon {
    pub fn new(p0: Point2, p1: Point2, p2: Point2, p3: Point2) -> Result<Self> {
        if [p0, p1, p2, p3].iter().all(|p| p.is_finite()) {
            Ok(ControlPolygon { p0, p1, p2, p3 })
        } else {
            Err(Error::NonFinite("control polygon"))
        }
    }

    /// Polygon with the doubled middle point `P1 = P2 = h`.
    pub fn h_form(p0: Point2, h: Point2, p3: Point2) -> Result<Self> {
        Self::new(p0, h, h, p3)
    }

    /// H-form polygon built from a start point and the two end tangents.
    pub fn from_tangents(p0: Point2, t0: Vec2, t1: Vec2) -> Result<Self> {
        let h = p0 + t0;
        Self::h_form(p0, h, h + t1)
    }

    pub fn points(&self) -> [Point2; 4] {
        [self.p0, self.p1, self.p2, self.p3]
    }

    /// Largest distance between two control points.
    pub fn diameter(&self) -> f64 {
        let pts = self.points();
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in i + 1..4 {
                d = d.max(pts[i].distance(pts[j]));
            }
        }
        d
    }

    /// Whether `p1 == p2` within `rel_tol` of the diameter.
    pub fn is_h_form(&self, rel_tol: f64) -> bool {
        self.p1.distance(self.p2) <= rel_tol * self.diameter()
    }

    /// Start tangent direction `P1 - P0`.
    pub fn t0(&self) -> Vec2 {
        self.p1 - self.p0
    }

    /// End tangent direction `P3 - P2`.
    pub fn t1(&self) -> Vec2 {
        self.p3 - self.p2
    }
}

/// Values of the four basis functions at `t`.
pub fn basis(params: ShapeParams, t: f64) -> Result<[f64; 4]> {
    check_unit(t)?;
    Ok(basis_unchecked(params, t))
}

fn basis_unchecked(params: ShapeParams, t: f64) -> [f64; 4] {
    let ShapeParams { alpha, beta } = params;
    let s = 1.0 - t;
    [
        s * s * (1.0 + (2.0 - alpha) * t),
        alpha * s * s * t,
        beta * t * t * s,
        t * t * (1.0 + (2.0 - beta) * s),
    ]
}

/// Power-form coefficients `[c0, c1, c2, c3]` of each basis function.
fn basis_power_form(params: ShapeParams) -> [[f64; 4]; 4] {
    let ShapeParams { alpha, beta } = params;
    [
        [1.0, -alpha, 2.0 * alpha - 3.0, 2.0 - alpha],
        [0.0, alpha, -2.0 * alpha, alpha],
        [0.0, 0.0, beta, -beta],
        [0.0, 0.0, 3.0 - beta, beta - 2.0],
    ]
}

fn check_unit(t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::Domain {
            name: "t",
            value: t,
            domain: "[0, 1]",
        })
    }
}

/// `t = 1 / (1 + u)`, mapping `u in [0, inf)` onto `t in (0, 1]`.
pub fn reparam_u_to_t(u: f64) -> Result<f64> {
    if u >= 0.0 && !u.is_nan() {
        Ok(1.0 / (1.0 + u))
    } else {
        Err(Error::Domain {
            name: "u",
            value: u,
            domain: "[0, inf)",
        })
    }
}

/// Inverse of [`reparam_u_to_t`]: `u = (1 - t) / t`.
pub fn reparam_t_to_u(t: f64) -> Result<f64> {
    if t > 0.0 && t <= 1.0 {
        Ok((1.0 - t) / t)
    } else {
        Err(Error::Domain {
            name: "t",
            value: t,
            domain: "(0, 1]",
        })
    }
}

/// An evaluable cubic Alternative curve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveInstance {
    pub polygon: ControlPolygon,
    pub params: ShapeParams,
}

impl CurveInstance {
    pub fn new(polygon: ControlPolygon, params: ShapeParams) -> Self {
        CurveInstance { polygon, params }
    }

    /// H-form curve from a start point and the two end tangents.
    pub fn from_tangents(p0: Point2, t0: Vec2, t1: Vec2, params: ShapeParams) -> Result<Self> {
        Ok(Self::new(ControlPolygon::from_tangents(p0, t0, t1)?, params))
    }

    /// The unit tangent frame `P0 = (0,0)`, `T0 = (1,0)`, `T1 = (0,1)`.
    pub fn unit_frame(params: ShapeParams) -> Self {
        let polygon = ControlPolygon {
            p0: Point2::new(0.0, 0.0),
            p1: Point2::new(1.0, 0.0),
            p2: Point2::new(1.0, 0.0),
            p3: Point2::new(1.0, 1.0),
        };
        Self::new(polygon, params)
    }

    pub fn t0(&self) -> Vec2 {
        self.polygon.t0()
    }

    pub fn t1(&self) -> Vec2 {
        self.polygon.t1()
    }

    /// `T0 x T1`; nonzero when the end tangents are independent.
    pub fn gamma(&self) -> f64 {
        cross2(self.t0(), self.t1())
    }

    pub fn diameter(&self) -> f64 {
        self.polygon.diameter()
    }

    pub fn is_h_form(&self) -> bool {
        self.polygon.is_h_form(Tolerances::default().h_form)
    }

    /// Checks that the curve satisfies the hypotheses of the analytic
    /// classification: H-form polygon with independent end tangents.
    pub fn check_classifiable(&self, tol: &Tolerances) -> Result<()> {
        if !self.polygon.is_h_form(tol.h_form) {
            return Err(Error::NotHForm);
        }
        let g = self.gamma();
        let scale = self.t0().length() * self.t1().length();
        if g.abs() <= tol.coincidence * scale || scale == 0.0 {
            return Err(Error::DependentTangents(g));
        }
        Ok(())
    }

    /// Point on the curve at `t`.
    pub fn evaluate(&self, t: f64) -> Result<Point2> {
        check_unit(t)?;
        Ok(self.sample(t))
    }

    /// Point on the curve at `t` without range checking.
    pub fn sample(&self, t: f64) -> Point2 {
        let w = basis_unchecked(self.params, t);
        let pts = self.polygon.points();
        let mut x = 0.0;
        let mut y = 0.0;
        for (wi, p) in w.iter().zip(pts.iter()) {
            x += wi * p.x;
            y += wi * p.y;
        }
        Point2::new(x, y)
    }

    /// Evaluation through the H-form expansion
    /// `P0 + A(t) T0 + B(t) T1`.
    pub fn evaluate_h_form(&self, t: f64) -> Result<Point2> {
        check_unit(t)?;
        self.require_h_form()?;
        let ShapeParams { alpha, beta } = self.params;
        let a = t * (t * (3.0 - 2.0 * alpha) + t * t * (alpha - 2.0) + alpha);
        let b = t * t * (3.0 + t * (beta - 2.0) - beta);
        Ok(self.polygon.p0 + a * self.t0() + b * self.t1())
    }

    fn require_h_form(&self) -> Result<()> {
        if self.is_h_form() {
            Ok(())
        } else {
            Err(Error::NotHForm)
        }
    }

    /// k-th derivative of the curve from the differentiated power-form
    /// basis. Valid for any polygon.
    fn basis_derivative(&self, t: f64, k: usize) -> Vec2 {
        let coeffs = basis_power_form(self.params);
        let pts = self.polygon.points();
        let p0 = pts[0];
        let mut out = Vec2::ZERO;
        // The basis derivatives sum to zero, so offsets from P0 suffice.
        for (c, p) in coeffs.iter().zip(pts.iter()).skip(1) {
            out += derivative_of_cubic(c, t, k) * (*p - p0);
        }
        out
    }

    /// `Z'(t)`. Uses the H-form closed form when the polygon qualifies.
    pub fn first_derivative(&self, t: f64) -> Result<Vec2> {
        check_unit(t)?;
        if self.is_h_form() {
            self.first_derivative_h_form(t)
        } else {
            Ok(self.basis_derivative(t, 1))
        }
    }

    /// `Z''(t)`. Uses the H-form closed form when the polygon qualifies.
    pub fn second_derivative(&self, t: f64) -> Result<Vec2> {
        check_unit(t)?;
        if self.is_h_form() {
            self.second_derivative_h_form(t)
        } else {
            Ok(self.basis_derivative(t, 2))
        }
    }

    /// `Z'(t)` from the differentiated basis, for any polygon and any `t`.
    pub fn velocity(&self, t: f64) -> Vec2 {
        self.basis_derivative(t, 1)
    }

    /// `Z''(t)` from the differentiated basis, for any polygon and any `t`.
    pub fn acceleration(&self, t: f64) -> Vec2 {
        self.basis_derivative(t, 2)
    }

    /// `Z'''`, constant along the curve.
    pub fn third_derivative(&self) -> Vec2 {
        self.basis_derivative(0.0, 3)
    }

    /// H-form first derivative
    /// `(t-1)(3t(alpha-2) - alpha) T0 + t(6 + 3t(beta-2) - 2 beta) T1`.
    pub fn first_derivative_h_form(&self, t: f64) -> Result<Vec2> {
        check_unit(t)?;
        self.require_h_form()?;
        let ShapeParams { alpha, beta } = self.params;
        let a = (t - 1.0) * (3.0 * t * (alpha - 2.0) - alpha);
        let b = t * (6.0 + 3.0 * t * (beta - 2.0) - 2.0 * beta);
        Ok(a * self.t0() + b * self.t1())
    }

    /// H-form second derivative
    /// `2(3 + 3t(alpha-2) - 2 alpha) T0 + 2(3 + 3t(beta-2) - beta) T1`.
    pub fn second_derivative_h_form(&self, t: f64) -> Result<Vec2> {
        check_unit(t)?;
        self.require_h_form()?;
        let ShapeParams { alpha, beta } = self.params;
        let a = 2.0 * (3.0 + 3.0 * t * (alpha - 2.0) - 2.0 * alpha);
        let b = 2.0 * (3.0 + 3.0 * t * (beta - 2.0) - beta);
        Ok(a * self.t0() + b * self.t1())
    }

    /// `Z'(t) x Z''(t)` through the factored form `-2 Gamma Phi(t)`.
    /// Requires an H-form polygon.
    pub fn hodograph_cross(&self, t: f64) -> Result<f64> {
        check_unit(t)?;
        self.require_h_form()?;
        Ok(-2.0 * self.gamma() * phi_t(self.params, t))
    }

    /// `Z'(t) x Z''(t)` from the two derivative vectors.
    pub fn hodograph_cross_direct(&self, t: f64) -> Result<f64> {
        Ok(cross2(self.first_derivative(t)?, self.second_derivative(t)?))
    }

    /// Signed curvature with the default singular-velocity tolerance
    /// (`1e-9` of the polygon diameter). Positive where the curve bends left.
    pub fn signed_curvature(&self, t: f64) -> Result<f64> {
        self.signed_curvature_with_tol(t, Tolerances::default().coincidence * self.diameter())
    }

    /// Signed curvature, failing when `|Z'(t)| <= speed_tol`.
    pub fn signed_curvature_with_tol(&self, t: f64, speed_tol: f64) -> Result<f64> {
        let d1 = self.first_derivative(t)?;
        let d2 = self.second_derivative(t)?;
        let speed = d1.length();
        if speed <= speed_tol || speed == 0.0 {
            return Err(Error::SingularVelocity { t, speed });
        }
        Ok(cross2(d1, d2) / (speed * speed * speed))
    }

    /// Vector coefficient of `t^3` in the power form of `Z(t)`.
    ///
    /// For H-form polygons this is `(alpha-2) T0 + (beta-2) T1`; in general
    /// `2 (P1 - P2)` is added.
    pub fn cubic_coefficient(&self) -> Vec2 {
        let ShapeParams { alpha, beta } = self.params;
        (alpha - 2.0) * self.t0() + (beta - 2.0) * self.t1() + 2.0 * (self.polygon.p1 - self.polygon.p2)
    }
}

/// `Phi(t) = t^2 (3 alpha (beta-1) - 3 beta) - 3 t alpha (beta-2) - 3 alpha + alpha beta`,
/// the scalar factor of the H-form hodograph cross product.
pub fn phi_t(params: ShapeParams, t: f64) -> f64 {
    let ShapeParams { alpha, beta } = params;
    t * t * (3.0 * alpha * (beta - 1.0) - 3.0 * beta) - 3.0 * t * alpha * (beta - 2.0) - 3.0 * alpha
        + alpha * beta
}

fn derivative_of_cubic(c: &[f64; 4], t: f64, k: usize) -> f64 {
    match k {
        0 => c[0] + t * (c[1] + t * (c[2] + t * c[3])),
        1 => c[1] + t * (2.0 * c[2] + t * 3.0 * c[3]),
        2 => 2.0 * c[2] + 6.0 * c[3] * t,
        3 => 6.0 * c[3],
        _ => 0.0,
    }
}

//! Curves whose end tangents are parallel.
//!
//! The polygon is described by a unit tangent direction `z0`, a unit
//! direction `zs` across the polygon and scalars `mu, nu > 0`, `m != 0`:
//! `P1 - P0 = mu z0`, `P3 - P2 = -nu z0`, and the start-to-end displacement
//! `P3 - P0 = (a - b) z0 + m zs` with `a = mu alpha`, `b = nu beta`. The
//! curve is then
//!
//! ```text
//! Z(t) = P0 + m (3 - 2t) t^2 zs + t (a (1 + t - t^2) + b (t - 2) t) z0
//! Z'(t) x Z''(t) = 6 m Upsilon (a (1-t)^2 + b t^2),   Upsilon = z0 x zs
//! ```
//!
//! so there is exactly one inflection when `ab < 0`, never a cusp (the
//! hodograph resultant is `-36 a b m^2 Upsilon^2`) and never a loop.
//!
//! Only the `zs` component of `P2 - P1` equals `m`; its `z0` component is
//! `(a - b) - (mu - nu)`. Changing that component shears the curve along
//! `z0` without altering its shape class.

use serde::{Deserialize, Serialize};

use crate::curve::{reparam_u_to_t, ControlPolygon, CurveInstance, ShapeParams};
use crate::error::{Error, Result};
use crate::point::{cross2, Point2, Vec2};
use crate::poly::{self, solve_quadratic, RealRoots};

/// Parallel-tangent polygon description.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegenerateConfig {
    pub p0: Point2,
    /// Unit end tangent direction.
    pub z0: Vec2,
    /// Unit direction across the polygon.
    pub zs: Vec2,
    pub mu: f64,
    pub nu: f64,
    pub m: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// Quantities derived from a [`DegenerateConfig`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegenerateDerived {
    pub a: f64,
    pub b: f64,
    pub upsilon: f64,
}

const UNIT_TOL: f64 = 1e-12;

impl DegenerateConfig {
    /// Validated constructor.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        p0: Point2,
        z0: Vec2,
        zs: Vec2,
        mu: f64,
        nu: f64,
        m: f64,
        alpha: f64,
        beta: f64,
    ) -> Result<Self> {
        let cfg = DegenerateConfig {
            p0,
            z0,
            zs,
            mu,
            nu,
            m,
            alpha,
            beta,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Unit frame `z0 = (1,0)`, `zs = (0,1)`, `mu = nu = 1`, so `a = alpha`
    /// and `b = beta`.
    pub fn from_ab(a: f64, b: f64, m: f64) -> Result<Self> {
        Self::new(
            Point2::ORIGIN,
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
            1.0,
            1.0,
            m,
            a,
            b,
        )
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.p0.is_finite()
            && self.z0.is_finite()
            && self.zs.is_finite()
            && [self.mu, self.nu, self.m, self.alpha, self.beta]
                .iter()
                .all(|v| v.is_finite());
        if !finite {
            return Err(Error::NonFinite("degenerate configuration"));
        }
        if (self.z0.length() - 1.0).abs() > UNIT_TOL || (self.zs.length() - 1.0).abs() > UNIT_TOL {
            return Err(Error::InvalidConfig("z0 and zs must be unit vectors".into()));
        }
        if !(self.mu > 0.0 && self.nu > 0.0) {
            return Err(Error::InvalidConfig(
                "mu and nu must be positive; fold signs into alpha and beta".into(),
            ));
        }
        if self.m == 0.0 {
            return Err(Error::InvalidConfig("m must be nonzero".into()));
        }
        if cross2(self.z0, self.zs) == 0.0 {
            return Err(Error::InvalidConfig(
                "z0 and zs are parallel: the polygon is a line segment".into(),
            ));
        }
        Ok(())
    }

    pub fn derived(&self) -> DegenerateDerived {
        DegenerateDerived {
            a: self.mu * self.alpha,
            b: self.nu * self.beta,
            upsilon: cross2(self.z0, self.zs),
        }
    }

    pub fn params(&self) -> ShapeParams {
        ShapeParams {
            alpha: self.alpha,
            beta: self.beta,
        }
    }
}

/// Control polygon realizing the configuration, with its shape parameters.
pub fn build_degenerate_polygon(config: &DegenerateConfig) -> Result<(ControlPolygon, ShapeParams)> {
    config.validate()?;
    let DegenerateDerived { a, b, .. } = config.derived();
    let p0 = config.p0;
    let p1 = p0 + config.mu * config.z0;
    let p3 = p0 + (a - b) * config.z0 + config.m * config.zs;
    let p2 = p3 + config.nu * config.z0;
    Ok((ControlPolygon::new(p0, p1, p2, p3)?, config.params()))
}

/// The configuration as an evaluable curve.
pub fn degenerate_curve(config: &DegenerateConfig) -> Result<CurveInstance> {
    let (poly, params) = build_degenerate_polygon(config)?;
    Ok(CurveInstance::new(poly, params))
}

/// Direct evaluation in the `(z0, zs)` frame.
pub fn evaluate_degenerate(config: &DegenerateConfig, t: f64) -> Result<Point2> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain {
            name: "t",
            value: t,
            domain: "[0, 1]",
        });
    }
    let DegenerateDerived { a, b, .. } = config.derived();
    let along_s = config.m * (3.0 - 2.0 * t) * t * t;
    let along_0 = t * (a * (1.0 + t - t * t) + b * (t - 2.0) * t);
    Ok(config.p0 + along_s * config.zs + along_0 * config.z0)
}

/// `Z'(t) x Z''(t) = 6 m Upsilon (a (1-t)^2 + b t^2)`.
pub fn degenerate_cross_t(config: &DegenerateConfig, t: f64) -> f64 {
    let DegenerateDerived { a, b, upsilon } = config.derived();
    let s = 1.0 - t;
    6.0 * config.m * upsilon * (a * s * s + b * t * t)
}

/// The hodograph cross product at `t = 1/(1+u)`:
/// `6 m (b + a u^2) Upsilon / (1+u)^2`.
pub fn degenerate_cross(config: &DegenerateConfig, u: f64) -> Result<f64> {
    reparam_u_to_t(u)?;
    let DegenerateDerived { a, b, upsilon } = config.derived();
    Ok(6.0 * config.m * (b + a * u * u) * upsilon / ((1.0 + u) * (1.0 + u)))
}

/// Inflection of a parallel-tangent curve.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct DegenerateInflections {
    /// `u = sqrt(-b/a)` when `ab < 0`.
    pub u: Option<f64>,
    pub t: Option<f64>,
    pub notes: Vec<String>,
}

impl DegenerateInflections {
    pub fn count(&self) -> usize {
        usize::from(self.u.is_some())
    }
}

/// One inflection at `u = sqrt(-b/a)` exactly when `ab < 0`.
pub fn degenerate_inflections(config: &DegenerateConfig) -> DegenerateInflections {
    let DegenerateDerived { a, b, .. } = config.derived();
    let mut out = DegenerateInflections::default();
    if a == 0.0 || b == 0.0 {
        out.notes.push(if a == 0.0 {
            "a = 0: curvature vanishes only at t = 0".to_string()
        } else {
            "b = 0: curvature vanishes only at t = 1".to_string()
        });
        return out;
    }
    if a * b < 0.0 {
        let u = (-b / a).sqrt();
        out.u = Some(u);
        out.t = Some(1.0 / (1.0 + u));
    }
    out
}

/// Coordinate polynomials of `Z'(t)` (highest degree first).
pub fn degenerate_hodograph_components(config: &DegenerateConfig) -> ([f64; 3], [f64; 3]) {
    let DegenerateDerived { a, b, .. } = config.derived();
    let m = config.m;
    let along_0 = [3.0 * (b - a), 2.0 * (a - 2.0 * b), a];
    let along_s = [-6.0 * m, 6.0 * m, 0.0];
    let mut x = [0.0; 3];
    let mut y = [0.0; 3];
    for k in 0..3 {
        x[k] = along_0[k] * config.z0.x + along_s[k] * config.zs.x;
        y[k] = along_0[k] * config.z0.y + along_s[k] * config.zs.y;
    }
    (x, y)
}

/// Sylvester resultant of the components of `Z'(t)`.
pub fn degenerate_resultant_check(config: &DegenerateConfig) -> f64 {
    let (x, y) = degenerate_hodograph_components(config);
    poly::resultant(&x, &y)
}

/// `-36 a b m^2 Upsilon^2`.
pub fn degenerate_resultant_closed_form(config: &DegenerateConfig) -> f64 {
    let DegenerateDerived { a, b, upsilon } = config.derived();
    -36.0 * a * b * config.m * config.m * upsilon * upsilon
}

/// Roots of the double-point quadratic
/// `a(a - 3b) u^2 - 8ab u + b(b - 3a) = 0`, defined for `ab > 0`.
pub fn degenerate_loop_roots(config: &DegenerateConfig) -> Option<[f64; 2]> {
    let DegenerateDerived { a, b, .. } = config.derived();
    if a * b <= 0.0 {
        return None;
    }
    let disc = 12.0 * a * b * (a + b) * (a + b);
    match solve_quadratic(a * (a - 3.0 * b), -8.0 * a * b, b * (b - 3.0 * a), disc) {
        RealRoots::Distinct(p, q) => Some([p, q]),
        _ => None,
    }
}

/// Classification of a parallel-tangent curve.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegenerateReport {
    pub a: f64,
    pub b: f64,
    pub m: f64,
    pub upsilon: f64,
    pub inflections: usize,
    pub inflection_u: Option<f64>,
    pub inflection_t: Option<f64>,
    pub cusp: bool,
    #[serde(rename = "loop")]
    pub has_loop: bool,
    /// Double-point roots in u when `ab > 0`; never both positive.
    pub loop_roots: Option<[f64; 2]>,
    pub notes: Vec<String>,
}

/// Inflection count, cusp and loop verdicts. Requires `a b m Upsilon != 0`.
pub fn degenerate_classify(config: &DegenerateConfig) -> Result<DegenerateReport> {
    config.validate()?;
    let DegenerateDerived { a, b, upsilon } = config.derived();
    if a * b * config.m * upsilon == 0.0 {
        return Err(Error::InvalidConfig(
            "parallel-tangent analysis needs a, b, m and z0 x zs all nonzero".into(),
        ));
    }
    let infl = degenerate_inflections(config);
    let mut notes = infl.notes.clone();
    let loop_roots = degenerate_loop_roots(config);
    let has_loop = matches!(loop_roots, Some([p, q]) if p >= 0.0 && q >= 0.0);
    match loop_roots {
        Some(_) if has_loop => notes.push("double-point roots both nonnegative".to_string()),
        Some(_) => notes.push("double-point roots not both positive: no loop".to_string()),
        None if a * b < 0.0 => notes.push("double-point roots complex (ab < 0)".to_string()),
        None => {}
    }
    Ok(DegenerateReport {
        a,
        b,
        m: config.m,
        upsilon,
        inflections: infl.count(),
        inflection_u: infl.u,
        inflection_t: infl.t,
        cusp: false,
        has_loop,
        loop_roots,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_bookkeeping() {
        let cfg = DegenerateConfig::new(
            Point2::new(0.5, -1.0),
            Vec2::new(0.6, 0.8),
            Vec2::new(-0.8, 0.6),
            1.5,
            0.75,
            2.0,
            1.2,
            -0.4,
        )
        .unwrap();
        let (poly, _) = build_degenerate_polygon(&cfg).unwrap();
        let DegenerateDerived { a, b, .. } = cfg.derived();
        assert!((poly.t0() - 1.5 * cfg.z0).length() < 1e-15);
        assert!((poly.t1() - (-0.75) * cfg.z0).length() < 1e-15);
        let p3 = cfg.p0 + (a - b) * cfg.z0 + cfg.m * cfg.zs;
        assert!(poly.p3.distance(p3) < 1e-15);
        // lateral component of P2 - P1 is m
        assert!((cross2(cfg.z0, poly.p2 - poly.p1) - cfg.m * cross2(cfg.z0, cfg.zs)).abs() < 1e-14);
    }

    #[test]
    fn dual_path_evaluation() {
        let cfg = DegenerateConfig::from_ab(1.7, -0.6, 1.3).unwrap();
        let curve = degenerate_curve(&cfg).unwrap();
        for i in 0..20 {
            let t = i as f64 / 19.0;
            let p = curve.evaluate(t).unwrap();
            let q = evaluate_degenerate(&cfg, t).unwrap();
            assert!(p.distance(q) <= 1e-12, "{t}");
        }
        assert_eq!(evaluate_degenerate(&cfg, 0.0).unwrap(), cfg.p0);
        let end = cfg.p0 + cfg.m * cfg.zs + (1.7 - -0.6) * cfg.z0;
        assert!(evaluate_degenerate(&cfg, 1.0).unwrap().distance(end) < 1e-15);
        assert!(evaluate_degenerate(&cfg, 1.5).is_err());
    }

    #[test]
    fn zero_alpha_flags_vanishing_tangent() {
        let cfg = DegenerateConfig::from_ab(0.0, 1.0, 1.0).unwrap();
        let curve = degenerate_curve(&cfg).unwrap();
        assert_eq!(curve.first_derivative(0.0).unwrap(), Vec2::ZERO);
        assert!(degenerate_classify(&cfg).is_err());
        assert!(degenerate_inflections(&cfg).notes[0].contains("a = 0"));
    }

    #[test]
    fn cross_examples() {
        let cfg = DegenerateConfig::from_ab(1.0, -1.0, 1.0).unwrap();
        assert_eq!(degenerate_cross(&cfg, 1.0).unwrap(), 0.0);
        let pos = DegenerateConfig::from_ab(2.0, 3.0, 1.0).unwrap();
        let neg = DegenerateConfig::from_ab(2.0, 3.0, -1.0).unwrap();
        for i in 0..50 {
            let u = i as f64 * 0.3;
            let c = degenerate_cross(&pos, u).unwrap();
            assert!(c > 0.0);
            assert_eq!(degenerate_cross(&neg, u).unwrap(), -c);
        }
        assert!(degenerate_cross(&pos, -1.0).is_err());
    }

    #[test]
    fn cross_matches_t_domain() {
        let cfg = DegenerateConfig::from_ab(-1.5, 2.5, 0.7).unwrap();
        let curve = degenerate_curve(&cfg).unwrap();
        for i in 0..10 {
            let u = 0.2 + i as f64 * 0.7;
            let t = 1.0 / (1.0 + u);
            let direct = cross2(curve.velocity(t), curve.acceleration(t));
            let c = degenerate_cross(&cfg, u).unwrap();
            assert!((c - direct).abs() < 1e-12 * direct.abs().max(1.0));
            assert!((degenerate_cross_t(&cfg, t) - direct).abs() < 1e-12 * direct.abs().max(1.0));
        }
    }

    #[test]
    fn inflection_examples() {
        let one = degenerate_inflections(&DegenerateConfig::from_ab(1.0, -1.0, 1.0).unwrap());
        assert_eq!((one.u, one.t), (Some(1.0), Some(0.5)));
        assert_eq!(degenerate_inflections(&DegenerateConfig::from_ab(2.0, 3.0, 1.0).unwrap()).count(), 0);
        let r = degenerate_inflections(&DegenerateConfig::from_ab(-1.0, 4.0, 1.0).unwrap());
        assert_eq!(r.u, Some(2.0));
        assert!((r.t.unwrap() - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn classify_examples() {
        let r = degenerate_classify(&DegenerateConfig::from_ab(1.0, -1.0, 1.0).unwrap()).unwrap();
        assert_eq!((r.inflections, r.cusp, r.has_loop), (1, false, false));
        let r = degenerate_classify(&DegenerateConfig::from_ab(4.0, 1.0, 1.0).unwrap()).unwrap();
        assert_eq!((r.inflections, r.cusp, r.has_loop), (0, false, false));
        let [p, q] = r.loop_roots.unwrap();
        let s = 10.0 * 3f64.sqrt();
        assert!((p - (16.0 - s) / 4.0).abs() < 1e-14);
        assert!((q - (16.0 + s) / 4.0).abs() < 1e-14);
    }

    #[test]
    fn resultant_matches_closed_form() {
        let cfg = DegenerateConfig::new(
            Point2::ORIGIN,
            Vec2::new(0.6, 0.8),
            Vec2::new(1.0, 0.0),
            2.0,
            0.5,
            -1.5,
            0.8,
            3.0,
        )
        .unwrap();
        let r = degenerate_resultant_check(&cfg);
        let f = degenerate_resultant_closed_form(&cfg);
        assert!((r - f).abs() <= 1e-9 * f.abs(), "{r} {f}");
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(DegenerateConfig::from_ab(1.0, 1.0, 0.0).is_err());
        assert!(DegenerateConfig::new(
            Point2::ORIGIN,
            Vec2::new(1.0, 0.0),
            Vec2::new(-1.0, 0.0),
            1.0,
            1.0,
            1.0,
            1.0,
            1.0
        )
        .is_err());
        assert!(DegenerateConfig::new(
            Point2::ORIGIN,
            Vec2::new(2.0, 0.0),
            Vec2::new(0.0, 1.0),
            1.0,
            1.0,
            1.0,
            1.0,
            1.0
        )
        .is_err());
        assert!(DegenerateConfig::new(
            Point2::ORIGIN,
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
            -1.0,
            1.0,
            1.0,
            1.0,
            1.0
        )
        .is_err());
    }
}

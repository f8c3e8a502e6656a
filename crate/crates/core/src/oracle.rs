//! Brute-force shape classification.
//!
//! The oracle only queries points and derivatives of a [`CurveInstance`]
//! through the differentiated basis. It never uses the shape-parameter
//! formulas of [`crate::classify`], which makes it an independent check on
//! them. All geometric tolerances are relative to the polygon diameter.

use serde::{Deserialize, Serialize};

use crate::curve::CurveInstance;
use crate::point::{cross2, Point2};
use crate::shape::{Endpoint, ShapeClass};

/// Sampling density and tolerances of the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleSettings {
    /// Number of parameter samples, at least 256.
    pub samples: usize,
    /// `|Z' x Z''|` below this fraction of `max |Z'| |Z''|` counts as zero.
    pub curvature_eps: f64,
    /// A refined speed minimum below this fraction of the diameter is a cusp.
    pub cusp_velocity_tol: f64,
    /// Target `|Z(s) - Z(t)|` for a double point, relative to the diameter.
    pub coincidence_tol: f64,
    /// Parameters closer than this to 0 or 1 are not searched for
    /// inflections and cusps.
    pub interior_margin: f64,
}

impl Default for OracleSettings {
    fn default() -> Self {
        OracleSettings {
            samples: 4096,
            curvature_eps: 1e-10,
            cusp_velocity_tol: 1e-7,
            coincidence_tol: 1e-9,
            interior_margin: 1e-4,
        }
    }
}

impl OracleSettings {
    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples.max(256);
        self
    }

    fn sample_count(&self) -> usize {
        self.samples.max(256)
    }

    fn interior_params(&self) -> impl Iterator<Item = f64> {
        let n = self.sample_count();
        let lo = self.interior_margin;
        let span = 1.0 - 2.0 * lo;
        (0..n).map(move |k| lo + span * k as f64 / (n - 1) as f64)
    }
}

/// Curvature sign changes found by sampling.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct OracleInflections {
    /// Bisected locations, ascending.
    pub t: Vec<f64>,
    pub notes: Vec<String>,
}

impl OracleInflections {
    pub fn count(&self) -> usize {
        self.t.len()
    }
}

fn hodograph_cross(curve: &CurveInstance, t: f64) -> f64 {
    cross2(curve.velocity(t), curve.acceleration(t))
}

/// Counts sign changes of `Z' x Z''` over the interior and bisects each one
/// to `1e-13` in `t`.
pub fn oracle_inflection_count(curve: &CurveInstance, settings: &OracleSettings) -> OracleInflections {
    let mut out = OracleInflections::default();
    let samples: Vec<(f64, f64, f64)> = settings
        .interior_params()
        .map(|t| {
            let d1 = curve.velocity(t);
            let d2 = curve.acceleration(t);
            (t, cross2(d1, d2), d1.length() * d2.length())
        })
        .collect();
    let scale = samples.iter().map(|s| s.2).fold(0.0, f64::max);
    let eps = settings.curvature_eps * scale;
    if scale == 0.0 || samples.iter().all(|s| s.1.abs() <= eps) {
        out.notes.push("zero curvature everywhere".to_string());
        return out;
    }
    let mut last: Option<(f64, bool)> = None;
    for &(t, c, _) in &samples {
        if c.abs() <= eps {
            continue;
        }
        let positive = c > 0.0;
        if let Some((t_prev, prev_positive)) = last {
            if prev_positive != positive {
                out.t.push(bisect_sign(|x| hodograph_cross(curve, x), t_prev, t, 1e-13));
            }
        }
        last = Some((t, positive));
    }
    out
}

fn bisect_sign(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, width: f64) -> f64 {
    let fa_positive = f(a) > 0.0;
    for _ in 0..200 {
        if b - a <= width {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm > 0.0) == fa_positive {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// A speed minimum of the curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpeedMinimum {
    pub t: f64,
    /// `|Z'(t)|`.
    pub speed: f64,
}

/// Smallest speed over the interior, located by dense sampling of `|Z'|^2`
/// and refined with parabolic steps around each sampled local minimum.
pub fn oracle_min_speed(curve: &CurveInstance, settings: &OracleSettings) -> SpeedMinimum {
    let ts: Vec<f64> = settings.interior_params().collect();
    let f = |t: f64| curve.velocity(t).length_squared();
    let vals: Vec<f64> = ts.iter().map(|&t| f(t)).collect();
    let n = ts.len();
    let mut best = SpeedMinimum {
        t: ts[0],
        speed: vals[0].sqrt(),
    };
    for k in 0..n {
        let left = if k > 0 { vals[k - 1] } else { f64::INFINITY };
        let right = if k + 1 < n { vals[k + 1] } else { f64::INFINITY };
        if !(vals[k] <= left && vals[k] <= right) {
            continue;
        }
        let a = ts[k.saturating_sub(1)];
        let b = ts[(k + 1).min(n - 1)];
        let (t, v) = if a < b { parabolic_minimize(f, a, b) } else { (ts[k], vals[k]) };
        let speed = v.max(0.0).sqrt();
        if speed < best.speed {
            best = SpeedMinimum { t, speed };
        }
    }
    best
}

/// Brent-style minimization on `[a, b]`: successive parabolic interpolation
/// with golden-section fallback.
fn parabolic_minimize(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    const GOLD: f64 = 0.381_966_011_250_105;
    let mut x = a + GOLD * (b - a);
    let mut w = x;
    let mut v = x;
    let mut fx = f(x);
    let mut fw = fx;
    let mut fv = fx;
    let mut d: f64 = 0.0;
    let mut e: f64 = 0.0;
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        let tol = 1e-15 * x.abs() + 1e-18;
        if (x - m).abs() <= 2.0 * tol - 0.5 * (b - a) {
            break;
        }
        let mut golden = true;
        if e.abs() > tol {
            let r = (x - w) * (fx - fv);
            let mut q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            if p.abs() < (0.5 * q * e).abs() && p > q * (a - x) && p < q * (b - x) {
                e = d;
                d = p / q;
                let u = x + d;
                if u - a < 2.0 * tol || b - u < 2.0 * tol {
                    d = if x < m { tol } else { -tol };
                }
                golden = false;
            }
        }
        if golden {
            e = if x < m { b - x } else { a - x };
            d = GOLD * e;
        }
        let u = if d.abs() >= tol { x + d } else { x + tol.copysign(d) };
        let fu = f(u);
        if fu <= fx {
            if u < x {
                b = x;
            } else {
                a = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu <= fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu <= fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }
    (x, fx)
}

/// Interior parameter where the velocity vanishes, if any.
pub fn oracle_cusp(curve: &CurveInstance, settings: &OracleSettings) -> Option<f64> {
    let m = oracle_min_speed(curve, settings);
    (m.speed <= settings.cusp_velocity_tol * curve.diameter()).then_some(m.t)
}

/// A refined double point `Z(s) = Z(t)` with `s < t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelfIntersection {
    pub s: f64,
    pub t: f64,
    /// Achieved `|Z(s) - Z(t)|`.
    pub residual: f64,
    /// Whether Newton's method reached the target tolerance; otherwise the
    /// pair comes from interval bisection.
    pub newton_converged: bool,
}

#[derive(Clone, Copy)]
struct Segment {
    i: usize,
    a: Point2,
    b: Point2,
    lo: f64,
    hi: f64,
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    cross2(b - a, c - a)
}

/// Parameters `(λ, μ)` along two crossing chords, or `None` if they miss.
fn chord_crossing(a: Point2, b: Point2, c: Point2, d: Point2) -> Option<(f64, f64)> {
    let d1 = orient(a, b, c);
    let d2 = orient(a, b, d);
    let d3 = orient(c, d, a);
    let d4 = orient(c, d, b);
    if d1 == 0.0 && d2 == 0.0 {
        return None;
    }
    if d1 * d2 > 0.0 || d3 * d4 > 0.0 {
        return None;
    }
    let r = b - a;
    let s = d - c;
    let denom = cross2(r, s);
    if denom == 0.0 {
        return None;
    }
    let qp = c - a;
    Some((cross2(qp, s) / denom, cross2(qp, r) / denom))
}

/// Finds a self-intersection of the curve.
///
/// The sampled polyline is tested pairwise (adjacent segments excluded) with
/// a sort-and-sweep along its longer extent; every crossing is refined by
/// two-variable Newton iteration on `Z(s) - Z(t) = 0`, falling back to
/// bisection of the chord intervals when Newton stalls. The candidate with the
/// smallest residual is returned, ties broken by segment order.
pub fn oracle_self_intersection(
    curve: &CurveInstance,
    settings: &OracleSettings,
) -> Option<SelfIntersection> {
    let n = settings.sample_count();
    let ts: Vec<f64> = (0..n).map(|k| k as f64 / (n - 1) as f64).collect();
    let pts: Vec<Point2> = ts.iter().map(|&t| curve.sample(t)).collect();
    let diameter = curve.diameter();
    if diameter == 0.0 {
        return None;
    }

    let (xmin, xmax, ymin, ymax) = pts.iter().fold(
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
        |(a, b, c, d), p| (a.min(p.x), b.max(p.x), c.min(p.y), d.max(p.y)),
    );
    let along_x = xmax - xmin >= ymax - ymin;
    let key = |p: Point2| if along_x { p.x } else { p.y };
    let mut segs: Vec<Segment> = (0..n - 1)
        .map(|i| {
            let (a, b) = (pts[i], pts[i + 1]);
            Segment {
                i,
                a,
                b,
                lo: key(a).min(key(b)),
                hi: key(a).max(key(b)),
            }
        })
        .collect();
    segs.sort_by(|p, q| p.lo.total_cmp(&q.lo).then(p.i.cmp(&q.i)));

    let mut crossings = Vec::new();
    for (k, s1) in segs.iter().enumerate() {
        for s2 in &segs[k + 1..] {
            if s2.lo > s1.hi {
                break;
            }
            if s1.i.abs_diff(s2.i) <= 1 {
                continue;
            }
            let (first, second) = if s1.i < s2.i { (s1, s2) } else { (s2, s1) };
            if let Some((l, m)) = chord_crossing(first.a, first.b, second.a, second.b) {
                crossings.push((first.i, second.i, l, m));
            }
        }
    }
    crossings.sort_by_key(|c| (c.0, c.1));

    let step = 1.0 / (n - 1) as f64;
    let target = settings.coincidence_tol * diameter;
    let mut best: Option<SelfIntersection> = None;
    for (i, j, l, m) in crossings {
        let s0 = ts[i] + l.clamp(0.0, 1.0) * step;
        let t0 = ts[j] + m.clamp(0.0, 1.0) * step;
        let cand = match newton_double_point(curve, s0, t0, target) {
            Some(c) => c,
            None => bisect_double_point(curve, (ts[i], ts[i + 1]), (ts[j], ts[j + 1])),
        };
        if (cand.t - cand.s).abs() < 1e-7 {
            continue;
        }
        if best.is_none_or(|b| cand.residual < b.residual) {
            best = Some(cand);
        }
    }
    best
}

fn newton_double_point(curve: &CurveInstance, mut s: f64, mut t: f64, target: f64) -> Option<SelfIntersection> {
    for _ in 0..50 {
        let f = curve.sample(s) - curve.sample(t);
        if f.length() <= target {
            break;
        }
        let ds = curve.velocity(s);
        let dt = -curve.velocity(t);
        let det = cross2(ds, dt);
        if det == 0.0 {
            return None;
        }
        // Solve [ds dt] [δs δt]^T = -f.
        let step_s = -cross2(f, dt) / det;
        let step_t = -cross2(ds, f) / det;
        s += step_s;
        t += step_t;
        if !(0.0..=1.0).contains(&s) || !(0.0..=1.0).contains(&t) {
            return None;
        }
    }
    let residual = curve.sample(s).distance(curve.sample(t));
    if residual > target {
        return None;
    }
    let (s, t) = if s <= t { (s, t) } else { (t, s) };
    Some(SelfIntersection {
        s,
        t,
        residual,
        newton_converged: true,
    })
}

fn bisect_double_point(curve: &CurveInstance, mut a: (f64, f64), mut b: (f64, f64)) -> SelfIntersection {
    for _ in 0..60 {
        let am = 0.5 * (a.0 + a.1);
        let bm = 0.5 * (b.0 + b.1);
        let halves_a = [(a.0, am), (am, a.1)];
        let halves_b = [(b.0, bm), (bm, b.1)];
        let mut next = None;
        let mut fallback = (f64::INFINITY, (a, b));
        for ha in halves_a {
            for hb in halves_b {
                let (p0, p1) = (curve.sample(ha.0), curve.sample(ha.1));
                let (q0, q1) = (curve.sample(hb.0), curve.sample(hb.1));
                if next.is_none() && chord_crossing(p0, p1, q0, q1).is_some() {
                    next = Some((ha, hb));
                }
                let mid_gap = curve
                    .sample(0.5 * (ha.0 + ha.1))
                    .distance(curve.sample(0.5 * (hb.0 + hb.1)));
                if mid_gap < fallback.0 {
                    fallback = (mid_gap, (ha, hb));
                }
            }
        }
        (a, b) = next.unwrap_or(fallback.1);
    }
    let s = 0.5 * (a.0 + a.1);
    let t = 0.5 * (b.0 + b.1);
    SelfIntersection {
        s: s.min(t),
        t: s.max(t),
        residual: curve.sample(s).distance(curve.sample(t)),
        newton_converged: false,
    }
}

/// Oracle classification with supporting detail.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub shape: ShapeClass,
    pub inflections: OracleInflections,
    pub min_speed: SpeedMinimum,
    pub self_intersection: Option<SelfIntersection>,
    pub notes: Vec<String>,
}

/// Classifies by brute force with precedence
/// quadratic > collinear > vanishing end tangent > cusp > loop > inflection count.
pub fn oracle_classify(curve: &CurveInstance, settings: &OracleSettings) -> OracleReport {
    let diameter = curve.diameter();
    let inflections = oracle_inflection_count(curve, settings);
    let min_speed = oracle_min_speed(curve, settings);
    let mut notes = inflections.notes.clone();
    let report = |shape, self_intersection, notes| OracleReport {
        shape,
        inflections: inflections.clone(),
        min_speed,
        self_intersection,
        notes,
    };

    if diameter == 0.0 {
        notes.push("all control points coincide".to_string());
        return report(ShapeClass::Collinear, None, notes);
    }
    if curve.third_derivative().length() <= settings.coincidence_tol * diameter {
        return report(ShapeClass::Quadratic, None, notes);
    }
    if inflections.notes.iter().any(|n| n.starts_with("zero curvature")) {
        return report(ShapeClass::Collinear, None, notes);
    }
    let speed_tol = settings.cusp_velocity_tol * diameter;
    let start = curve.velocity(0.0).length() <= speed_tol;
    let end = curve.velocity(1.0).length() <= speed_tol;
    if start || end {
        let endpoint = match (start, end) {
            (true, true) => Endpoint::Both,
            (true, false) => Endpoint::Start,
            _ => Endpoint::End,
        };
        return report(ShapeClass::EndpointDegenerate { endpoint }, None, notes);
    }
    if min_speed.speed <= speed_tol {
        let t = min_speed.t;
        return report(ShapeClass::Cusp { u: (1.0 - t) / t, t }, None, notes);
    }
    if let Some(x) = oracle_self_intersection(curve, settings) {
        if !x.newton_converged {
            notes.push(format!("double point from bisection, residual {:e}", x.residual));
        }
        // u ascending means t descending.
        let shape = ShapeClass::Loop {
            u: [(1.0 - x.t) / x.t, (1.0 - x.s) / x.s],
            t: [x.t, x.s],
        };
        return report(shape, Some(x), notes);
    }
    let shape = match inflections.t.as_slice() {
        [] => ShapeClass::Convex,
        [t] => ShapeClass::SingleInflection { u: (1.0 - t) / t, t: *t },
        [a, b, ..] => {
            if inflections.t.len() > 2 {
                notes.push(format!("{} curvature sign changes", inflections.t.len()));
            }
            ShapeClass::DoubleInflection {
                u: [(1.0 - b) / b, (1.0 - a) / a],
                t: [*b, *a],
            }
        }
    };
    report(shape, None, notes)
}

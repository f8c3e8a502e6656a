//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::time::Instant;

use altcubic::classify::{
    boundary_distance, classify, discriminant_i, resultant_check, resultant_closed_form, PhiCoefficients,
};
use altcubic::curve::{basis, ControlPolygon, CurveInstance, ShapeParams, Tolerances};
use altcubic::degenerate::{
    degenerate_classify, degenerate_curve, degenerate_inflections, degenerate_resultant_check,
    degenerate_resultant_closed_form, DegenerateConfig,
};
use altcubic::diagram::{
    classify_grid, export_grid_csv, render_shape_diagram, DiagramSpec, REPRESENTATIVE_POINTS,
};
use altcubic::oracle::{
    oracle_classify, oracle_inflection_count, oracle_min_speed, oracle_self_intersection, OracleSettings,
};
use altcubic::{Point2, ShapeClass, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn params(a: f64, b: f64) -> ShapeParams {
    ShapeParams::new(a, b).unwrap()
}

fn tol() -> Tolerances {
    Tolerances::default()
}

fn random_point(r: &mut ChaCha8Rng) -> Point2 {
    Point2::new(r.gen_range(-10.0..10.0), r.gen_range(-10.0..10.0))
}

/// Random H-form polygon with |Gamma| bounded away from zero.
fn random_h_form(r: &mut ChaCha8Rng) -> ControlPolygon {
    loop {
        let p0 = random_point(r);
        let h = random_point(r);
        let p3 = random_point(r);
        let (t0, t1) = (h - p0, p3 - h);
        if t0.cross(t1).abs() > 0.05 * t0.length() * t1.length() {
            return ControlPolygon::h_form(p0, h, p3).unwrap();
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_basis() -> Outcome {
    let mut r = rng(1);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let p = params(r.gen_range(-20.0..20.0), r.gen_range(-20.0..20.0));
        let t = r.gen_range(0.0..=1.0);
        let s: f64 = basis(p, t).unwrap().iter().sum();
        worst = worst.max((s - 1.0).abs());
    }
    ensure(worst <= 1e-12, || format!("partition of unity error {worst:e}"))?;
    let mut worst_b = 0.0f64;
    for k in 0..=50 {
        let t = k as f64 / 50.0;
        let s = 1.0 - t;
        let bern = [s * s * s, 3.0 * t * s * s, 3.0 * t * t * s, t * t * t];
        let f = basis(params(3.0, 3.0), t).unwrap();
        for i in 0..4 {
            worst_b = worst_b.max((f[i] - bern[i]).abs());
        }
    }
    ensure(worst_b <= 1e-14, || format!("Bernstein deviation {worst_b:e}"))?;
    Ok(format!("max |sum F - 1| = {worst:.1e}, max Bernstein deviation = {worst_b:.1e}"))
}

fn c2_endpoints() -> Outcome {
    let mut r = rng(2);
    let mut worst = 0.0f64;
    for _ in 0..2000 {
        let poly = ControlPolygon::new(random_point(&mut r), random_point(&mut r), random_point(&mut r), random_point(&mut r))
            .unwrap();
        let p = params(r.gen_range(-10.0..10.0), r.gen_range(-10.0..10.0));
        let c = CurveInstance::new(poly, p);
        ensure(c.evaluate(0.0).unwrap() == poly.p0, || format!("Z(0) != P0 for {p:?}"))?;
        ensure(c.evaluate(1.0).unwrap() == poly.p3, || format!("Z(1) != P3 for {p:?}"))?;
        for (got, want) in [
            (c.first_derivative(0.0).unwrap(), p.alpha * (poly.p1 - poly.p0)),
            (c.first_derivative(1.0).unwrap(), p.beta * (poly.p3 - poly.p2)),
        ] {
            let rel = (got - want).length() / want.length().max(f64::MIN_POSITIVE);
            worst = worst.max(rel);
        }
    }
    ensure(worst <= 1e-12, || format!("end derivative relative error {worst:e}"))?;
    Ok(format!("exact end points, end derivative rel. error {worst:.1e}"))
}

fn c3_quadratic() -> Outcome {
    let p = params(2.0, 2.0);
    let c = CurveInstance::unit_frame(p);
    let cc = c.cubic_coefficient().length();
    ensure(cc <= 1e-14, || format!("|cubic coefficient| = {cc:e}"))?;
    let report = classify(p, &tol());
    ensure(report.shape == ShapeClass::Quadratic, || format!("classified {}", report.shape))?;
    let s = OracleSettings::default();
    let infl = oracle_inflection_count(&c, &s).count();
    let speed = oracle_min_speed(&c, &s).speed;
    let x = oracle_self_intersection(&c, &s);
    ensure(infl == 0, || format!("oracle found {infl} inflections"))?;
    ensure(speed > s.cusp_velocity_tol * c.diameter(), || format!("oracle min speed {speed:e}"))?;
    ensure(x.is_none(), || format!("oracle self-intersection {x:?}"))?;
    Ok(format!("cubic coefficient {cc:.1e}, oracle min speed {speed:.3}"))
}

fn c4_cusp() -> Outcome {
    let p = params(6.0, 6.0);
    ensure(discriminant_i(p) == 0.0, || "I != 0 at (6,6)".into())?;
    let ShapeClass::Cusp { t, .. } = classify(p, &tol()).shape else {
        return Err("not classified as cusp".into());
    };
    ensure((t - 0.5).abs() <= 1e-9, || format!("cusp t = {t}"))?;
    let c = CurveInstance::from_tangents(Point2::ORIGIN, Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0), p).unwrap();
    let v = c.first_derivative(0.5).unwrap().length();
    ensure(v <= 1e-12, || format!("|Z'(0.5)| = {v:e}"))?;
    let m = oracle_min_speed(&c, &OracleSettings::default());
    ensure((m.t - 0.5).abs() <= 1e-6, || format!("oracle minimum at {}", m.t))?;
    Ok(format!("t = {t}, |Z'(0.5)| = {v:.1e}, oracle minimum at {:.9}", m.t))
}

fn c5_loop() -> Outcome {
    let p = params(7.0, 7.0);
    let ShapeClass::Loop { u, t } = classify(p, &tol()).shape else {
        return Err("not classified as loop".into());
    };
    let s5 = 5f64.sqrt();
    let want = [(735.0 - 245.0 * s5) / 490.0, (735.0 + 245.0 * s5) / 490.0];
    let du = (u[0] - want[0]).abs().max((u[1] - want[1]).abs());
    ensure(du <= 1e-9, || format!("u roots {u:?}, expected {want:?}"))?;
    let c = CurveInstance::unit_frame(p);
    let gap = c.evaluate(t[0]).unwrap().distance(c.evaluate(t[1]).unwrap());
    ensure(gap <= 1e-9 * c.diameter(), || format!("|Z(t0) - Z(t1)| = {gap:e}"))?;
    let x = oracle_self_intersection(&c, &OracleSettings::default()).ok_or("oracle found no double point")?;
    // t[0] > t[1]; the oracle reports s < t.
    let dt = (x.s - t[1]).abs().max((x.t - t[0]).abs());
    ensure(dt <= 1e-6, || format!("oracle pair ({}, {}) vs {t:?}", x.s, x.t))?;
    Ok(format!("u = [{:.12}, {:.12}], gap {gap:.1e}, oracle deviation {dt:.1e}", u[0], u[1]))
}

fn c6_inflections() -> Outcome {
    let s = OracleSettings::default();
    let mut worst = 0.0f64;
    for ((a, b), n) in [((4.0, 4.0), 2), ((-1.0, 1.0), 1), ((1.0, 1.0), 0)] {
        let p = params(a, b);
        let shape = classify(p, &tol()).shape;
        ensure(shape.inflection_count() == n, || format!("({a},{b}) analytic {shape}"))?;
        let c = CurveInstance::unit_frame(p);
        let mut o = oracle_inflection_count(&c, &s).t;
        ensure(o.len() == n, || format!("({a},{b}) oracle count {}", o.len()))?;
        let mut ts = shape.roots_t();
        ts.sort_by(f64::total_cmp);
        o.sort_by(f64::total_cmp);
        for (x, y) in ts.iter().zip(&o) {
            worst = worst.max((x - y).abs());
        }
    }
    ensure(worst <= 1e-8, || format!("root mismatch {worst:e}"))?;
    Ok(format!("counts 2/1/0 agree, max t deviation {worst:.1e}"))
}

fn c7_resultant() -> Outcome {
    let mut r = rng(7);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let p = params(r.gen_range(-10.0..10.0), r.gen_range(-10.0..10.0));
        let poly = random_h_form(&mut r);
        let (t0, t1) = (poly.t0(), poly.t1());
        let numeric = resultant_check(p, t0, t1);
        let closed = resultant_closed_form(p, t0.cross(t1));
        worst = worst.max((numeric - closed).abs() / closed.abs());
    }
    ensure(worst <= 1e-9, || format!("relative error {worst:e}"))?;
    Ok(format!("max relative error {worst:.1e}"))
}

fn c8_sweep() -> Outcome {
    let start = Instant::now();
    let mut r = rng(8);
    let settings = OracleSettings::default();
    let mut draws = 0;
    let mut rejected = 0;
    let mut mismatches = Vec::new();
    let mut counts = [0usize; 8];
    while draws < 2000 {
        let p = params(r.gen_range(-8.0..8.0), r.gen_range(-8.0..8.0));
        if boundary_distance(p) < 0.05 {
            rejected += 1;
            continue;
        }
        draws += 1;
        let analytic = classify(p, &tol()).shape;
        counts[analytic.code() as usize] += 1;
        let oracle = oracle_classify(&CurveInstance::unit_frame(p), &settings).shape;
        if !analytic.same_variant(&oracle) {
            mismatches.push(format!("({}, {}): {} vs {}", p.alpha, p.beta, analytic.name(), oracle.name()));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(mismatches.is_empty(), || {
        format!("{} mismatches, first: {}", mismatches.len(), mismatches[0])
    })?;
    ensure(secs < 60.0, || format!("took {secs:.1} s"))?;
    Ok(format!(
        "2000/2000 agree ({rejected} near-boundary draws rejected), classes {counts:?}, {secs:.1} s"
    ))
}

fn c9_identity() -> Outcome {
    let mut r = rng(9);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let p = params(r.gen_range(-20.0..20.0), r.gen_range(-20.0..20.0));
        let phi = PhiCoefficients::new(p);
        let direct = phi.c1 * phi.c1 - 4.0 * phi.c2 * phi.c0;
        let closed = -3.0 * p.alpha * p.beta * discriminant_i(p);
        worst = worst.max((direct - closed).abs() / closed.abs());
    }
    ensure(worst <= 1e-10, || format!("relative error {worst:e}"))?;
    Ok(format!("max relative error {worst:.1e}"))
}

fn random_degenerate(r: &mut ChaCha8Rng) -> DegenerateConfig {
    let signed = |r: &mut ChaCha8Rng, lo: f64, hi: f64| {
        let v: f64 = r.gen_range(lo..hi);
        if r.gen_bool(0.5) {
            v
        } else {
            -v
        }
    };
    loop {
        let th0: f64 = r.gen_range(0.0..std::f64::consts::TAU);
        let ths: f64 = r.gen_range(0.0..std::f64::consts::TAU);
        let z0 = Vec2::new(th0.cos(), th0.sin());
        let zs = Vec2::new(ths.cos(), ths.sin());
        if z0.cross(zs).abs() < 0.1 {
            continue;
        }
        return DegenerateConfig::new(
            random_point(r),
            z0,
            zs,
            r.gen_range(0.2..3.0),
            r.gen_range(0.2..3.0),
            signed(r, 0.2, 3.0),
            signed(r, 0.2, 5.0),
            signed(r, 0.2, 5.0),
        )
        .unwrap();
    }
}

fn c10_degenerate() -> Outcome {
    let mut r = rng(10);
    let settings = OracleSettings::default();
    let mut worst_res = 0.0f64;
    let mut min_speed_ratio = f64::INFINITY;
    let mut with_inflection = 0;
    for _ in 0..500 {
        let cfg = random_degenerate(&mut r);
        let d = cfg.derived();
        let expected = usize::from(d.a * d.b < 0.0);
        with_inflection += expected;
        let analytic = degenerate_inflections(&cfg).count();
        ensure(analytic == expected, || format!("{cfg:?}: analytic count {analytic}"))?;
        let report = degenerate_classify(&cfg).map_err(|e| e.to_string())?;
        ensure(!report.cusp && !report.has_loop, || format!("{cfg:?}: cusp or loop reported"))?;
        let curve = degenerate_curve(&cfg).map_err(|e| e.to_string())?;
        let oracle = oracle_inflection_count(&curve, &settings).count();
        ensure(oracle == expected, || format!("{cfg:?}: oracle count {oracle}"))?;
        let speed = oracle_min_speed(&curve, &settings).speed / curve.diameter();
        min_speed_ratio = min_speed_ratio.min(speed);
        ensure(speed > 1e-4, || format!("{cfg:?}: min speed / diameter {speed:e}"))?;
        let x = oracle_self_intersection(&curve, &settings);
        ensure(x.is_none(), || format!("{cfg:?}: oracle self-intersection {x:?}"))?;
        let numeric = degenerate_resultant_check(&cfg);
        let closed = degenerate_resultant_closed_form(&cfg);
        worst_res = worst_res.max((numeric - closed).abs() / closed.abs());
    }
    ensure(worst_res <= 1e-9, || format!("resultant relative error {worst_res:e}"))?;
    Ok(format!(
        "{with_inflection}/500 with ab<0, min speed/diameter {min_speed_ratio:.2e}, resultant rel. error {worst_res:.1e}"
    ))
}

fn c11_diagram() -> Outcome {
    let spec = DiagramSpec::default();
    ensure(spec.resolution == 400 && spec.alpha_range == (-6.0, 10.0), || "unexpected defaults".into())?;
    let grid = classify_grid(&spec).map_err(|e| e.to_string())?;
    let svg = render_shape_diagram(&grid, &spec).map_err(|e| e.to_string())?;
    ensure(svg.contains(r#"viewBox="-6 -10 16 16""#) && svg.trim_end().ends_with("</svg>"), || {
        "malformed SVG".into()
    })?;
    let csv = export_grid_csv(&grid);
    let classes: Vec<&str> = REPRESENTATIVE_POINTS
        .iter()
        .map(|p| classify(params(p.alpha, p.beta), &tol()).shape.name())
        .collect();
    let expected = [
        "Convex",
        "DoubleInflection",
        "Cusp",
        "Loop",
        "SingleInflection",
        "Convex",
        "Loop",
        "SingleInflection",
        "Convex",
    ];
    ensure(classes == expected, || format!("gallery classes {classes:?}"))?;
    ensure(grid.is_transpose_symmetric(), || "grid not transpose-symmetric".into())?;
    let grid2 = classify_grid(&spec).map_err(|e| e.to_string())?;
    let svg2 = render_shape_diagram(&grid2, &spec).map_err(|e| e.to_string())?;
    ensure(svg == svg2 && csv == export_grid_csv(&grid2), || "rerun not byte-identical".into())?;
    Ok(format!("{} byte SVG, gallery sequence matches, symmetric, deterministic", svg.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("basis identities", c1_basis),
        ("endpoint contracts", c2_endpoints),
        ("quadratic point", c3_quadratic),
        ("cusp instance", c4_cusp),
        ("loop instance", c5_loop),
        ("inflection counts", c6_inflections),
        ("resultant identity", c7_resultant),
        ("sweep equivalence", c8_sweep),
        ("discriminant identity", c9_identity),
        ("parallel-tangent laws", c10_degenerate),
        ("diagram reproduction", c11_diagram),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

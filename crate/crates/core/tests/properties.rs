use altcubic::classify::{
    boundary_distance, classify, classify_curve, discriminant_i, inflection_roots, PhiCoefficients,
};
use altcubic::curve::{basis, phi_t, reparam_t_to_u, reparam_u_to_t, ControlPolygon, CurveInstance, ShapeParams};
use altcubic::oracle::{oracle_classify, OracleSettings};
use altcubic::{Point2, Tolerances, Vec2};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    -10.0f64..10.0
}

fn point() -> impl Strategy<Value = Point2> {
    (coord(), coord()).prop_map(|(x, y)| Point2::new(x, y))
}

fn shape_params() -> impl Strategy<Value = ShapeParams> {
    (-12.0f64..12.0, -12.0f64..12.0).prop_map(|(a, b)| ShapeParams::new(a, b).unwrap())
}

fn polygon() -> impl Strategy<Value = ControlPolygon> {
    (point(), point(), point(), point()).prop_map(|(a, b, c, d)| ControlPolygon::new(a, b, c, d).unwrap())
}

/// H-form polygon whose end tangents are far from parallel.
fn h_form() -> impl Strategy<Value = ControlPolygon> {
    (point(), point(), point())
        .prop_filter("tangents nearly parallel", |(p0, h, p3)| {
            let (t0, t1) = (*h - *p0, *p3 - *h);
            t0.cross(t1).abs() > 0.2 * t0.length() * t1.length()
        })
        .prop_map(|(p0, h, p3)| ControlPolygon::h_form(p0, h, p3).unwrap())
}

fn close(a: Point2, b: Point2, scale: f64) -> bool {
    a.distance(b) <= 1e-11 * scale.max(1.0)
}

proptest! {
    #[test]
    fn partition_of_unity(p in shape_params(), t in 0.0f64..=1.0) {
        let s: f64 = basis(p, t).unwrap().iter().sum();
        prop_assert!((s - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn affine_invariance(
        poly in polygon(),
        p in shape_params(),
        m in prop::array::uniform4(-3.0f64..3.0),
        shift in (coord(), coord()),
        t in 0.0f64..=1.0,
    ) {
        let map = |q: Point2| Point2::new(m[0] * q.x + m[1] * q.y + shift.0, m[2] * q.x + m[3] * q.y + shift.1);
        let [a, b, c, d] = poly.points();
        let moved = CurveInstance::new(ControlPolygon::new(map(a), map(b), map(c), map(d)).unwrap(), p);
        let orig = CurveInstance::new(poly, p);
        let scale = 100.0 * (1.0 + p.alpha.abs() + p.beta.abs());
        prop_assert!(close(moved.evaluate(t).unwrap(), map(orig.evaluate(t).unwrap()), scale));
    }

    #[test]
    fn reversal_swaps_parameters(poly in polygon(), p in shape_params(), t in 0.0f64..=1.0) {
        let [a, b, c, d] = poly.points();
        let fwd = CurveInstance::new(poly, p);
        let rev = CurveInstance::new(ControlPolygon::new(d, c, b, a).unwrap(), p.swapped());
        let scale = 10.0 * (1.0 + p.alpha.abs() + p.beta.abs());
        prop_assert!(close(fwd.evaluate(t).unwrap(), rev.evaluate(1.0 - t).unwrap(), scale));
    }

    #[test]
    fn classification_symmetric_under_swap(p in shape_params()) {
        let tol = Tolerances::default();
        let a = classify(p, &tol).shape;
        let b = classify(p.swapped(), &tol).shape;
        prop_assert!(a.same_variant(&b), "{} vs {}", a, b);
        let (ua, mut ub) = (a.roots_u(), b.roots_u());
        ub.reverse();
        for (x, y) in ua.iter().zip(&ub) {
            prop_assert!((x * y - 1.0).abs() <= 1e-9, "{:?} {:?}", ua, ub);
        }
    }

    #[test]
    fn classification_ignores_geometry(poly in h_form(), p in shape_params()) {
        let tol = Tolerances::default();
        let report = classify_curve(&CurveInstance::new(poly, p), &tol).unwrap();
        prop_assert_eq!(report.shape, classify(p, &tol).shape);
    }

    #[test]
    fn discriminant_identity(p in shape_params()) {
        let phi = PhiCoefficients::new(p);
        let direct = phi.c1 * phi.c1 - 4.0 * phi.c2 * phi.c0;
        let closed = -3.0 * p.alpha * p.beta * discriminant_i(p);
        let scale = phi.c1 * phi.c1 + (4.0 * phi.c2 * phi.c0).abs();
        prop_assert!((direct - closed).abs() <= 1e-13 * scale.max(1.0));
    }

    #[test]
    fn hodograph_cross_matches_phi(poly in h_form(), p in shape_params(), t in 0.0f64..=1.0) {
        let c = CurveInstance::new(poly, p);
        let direct = c.hodograph_cross_direct(t).unwrap();
        let closed = -2.0 * c.gamma() * phi_t(p, t);
        let scale = c.velocity(t).length() * c.acceleration(t).length();
        prop_assert!((direct - closed).abs() <= 1e-11 * scale.max(1.0));
        prop_assert!((c.hodograph_cross(t).unwrap() - closed).abs() <= 1e-11 * scale.max(1.0));
    }

    #[test]
    fn h_form_evaluation_agrees(poly in h_form(), p in shape_params(), t in 0.0f64..=1.0) {
        let c = CurveInstance::new(poly, p);
        let scale = 100.0 * (1.0 + p.alpha.abs() + p.beta.abs());
        prop_assert!(close(c.evaluate(t).unwrap(), c.evaluate_h_form(t).unwrap(), scale));
        let d1 = c.velocity(t) - c.first_derivative_h_form(t).unwrap();
        let d2 = c.acceleration(t) - c.second_derivative_h_form(t).unwrap();
        prop_assert!(d1.length() <= 1e-10 * scale && d2.length() <= 1e-10 * scale);
    }

    #[test]
    fn phi_roots_are_roots(p in shape_params()) {
        let phi = PhiCoefficients::new(p);
        let scale = phi.as_array().iter().map(|c| c.abs()).sum::<f64>();
        for u in inflection_roots(p).roots {
            prop_assert!(phi.eval(u).abs() <= 1e-9 * scale * (1.0 + u * u));
        }
    }

    #[test]
    fn reparametrization_round_trip(u in 0.0f64..1e6) {
        let t = reparam_u_to_t(u).unwrap();
        prop_assert!(t > 0.0 && t <= 1.0);
        let back = reparam_t_to_u(t).unwrap();
        prop_assert!((back - u).abs() <= 1e-9 * (1.0 + u));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_agrees_on_random_geometry(poly in h_form(), p in shape_params()) {
        prop_assume!(boundary_distance(p) >= 0.1);
        let tol = Tolerances::default();
        let analytic = classify(p, &tol).shape;
        let oracle = oracle_classify(&CurveInstance::new(poly, p), &OracleSettings::default()).shape;
        prop_assert!(analytic.same_variant(&oracle), "{} vs {}", analytic, oracle);
    }
}

#[test]
fn unit_frame_tangents() {
    let c = CurveInstance::unit_frame(ShapeParams::new(1.0, 2.0).unwrap());
    assert_eq!(c.t0(), Vec2::new(1.0, 0.0));
    assert_eq!(c.t1(), Vec2::new(0.0, 1.0));
    assert_eq!(c.gamma(), 1.0);
}

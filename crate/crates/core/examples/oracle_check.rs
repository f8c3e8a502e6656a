//! Cross-check the analytic classifier against the sampling oracle on random
//! parameters and a skewed polygon.
//!
//! cargo run --release --example oracle_check -- [draws]

use altcubic::classify::{boundary_distance, classify};
use altcubic::oracle::{oracle_classify, OracleSettings};
use altcubic::{ControlPolygon, CurveInstance, Point2, ShapeParams, Tolerances};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let draws: usize = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(200);
    let polygon = ControlPolygon::h_form(Point2::new(-1.0, 0.5), Point2::new(2.0, -1.0), Point2::new(3.0, 3.0))?;
    let tol = Tolerances::default();
    let settings = OracleSettings::default();

    // Low-discrepancy points over [-8, 8]^2.
    let golden = 0.618_033_988_749_894_9;
    let (mut agree, mut skipped) = (0, 0);
    for k in 0..draws {
        let x = (0.5 + k as f64 * golden).fract();
        let y = (k as f64 + 0.5) / draws as f64;
        let p = ShapeParams::new(16.0 * x - 8.0, 16.0 * y - 8.0)?;
        if boundary_distance(p) < 0.05 {
            skipped += 1;
            continue;
        }
        let analytic = classify(p, &tol).shape;
        let oracle = oracle_classify(&CurveInstance::new(polygon, p), &settings);
        if analytic.same_variant(&oracle.shape) {
            agree += 1;
        } else {
            println!("({:.3}, {:.3}): analytic {analytic}, oracle {}", p.alpha, p.beta, oracle.shape);
        }
    }
    println!("{agree}/{} agree, {skipped} skipped near a class boundary", draws - skipped);

    let loop_curve = CurveInstance::new(polygon, ShapeParams::new(7.0, 7.0)?);
    let report = oracle_classify(&loop_curve, &settings);
    if let Some(x) = report.self_intersection {
        println!("(7, 7) double point at s = {:.9}, t = {:.9}, residual {:.1e}", x.s, x.t, x.residual);
    }
    Ok(())
}

//! Sample a curve and its signed curvature.
//!
//! cargo run --example evaluate -- [alpha] [beta]

use altcubic::{ControlPolygon, CurveInstance, Point2, ShapeParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<f64>());
    let alpha = args.next().transpose()?.unwrap_or(1.5);
    let beta = args.next().transpose()?.unwrap_or(2.5);

    let polygon = ControlPolygon::new(
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 2.0),
        Point2::new(3.0, 2.0),
        Point2::new(4.0, 0.0),
    )?;
    let curve = CurveInstance::new(polygon, ShapeParams::new(alpha, beta)?);

    println!("alpha = {alpha}, beta = {beta}");
    println!("{:>6} {:>10} {:>10} {:>12}", "t", "x", "y", "kappa");
    for k in 0..=10 {
        let t = k as f64 / 10.0;
        let p = curve.evaluate(t)?;
        let kappa = curve.signed_curvature(t).map_or("singular".to_string(), |k| format!("{k:.6}"));
        println!("{t:>6.2} {:>10.6} {:>10.6} {kappa:>12}", p.x, p.y);
    }
    println!("Z'(0) = {:?}", curve.first_derivative(0.0)?);
    println!("Z'(1) = {:?}", curve.first_derivative(1.0)?);
    Ok(())
}

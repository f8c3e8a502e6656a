//! Analytic shape classification from the shape parameters alone.
//!
//! cargo run --example classify -- [alpha beta]...

use altcubic::classify::{classify, count_inflections, cusp_parameter, loop_roots, PhiCoefficients};
use altcubic::{ShapeParams, Tolerances};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let nums: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let pairs: Vec<(f64, f64)> = if nums.len() >= 2 {
        nums.chunks_exact(2).map(|c| (c[0], c[1])).collect()
    } else {
        vec![(1.0, 1.0), (2.0, 2.0), (4.0, 4.0), (6.0, 6.0), (7.0, 7.0), (-1.0, 1.0), (-5.0, 4.0)]
    };
    let tol = Tolerances::default();
    for (a, b) in pairs {
        let p = ShapeParams::new(a, b)?;
        let report = classify(p, &tol);
        let phi = PhiCoefficients::new(p);
        println!("({a}, {b})  I = {}  region {}", report.i, report.region_label);
        println!("  Phi(u) = {} u^2 {:+} u {:+}", phi.c2, phi.c1, phi.c0);
        println!("  inflections on the segment: {}", count_inflections(p).count());
        println!("  cusp: {:?}", cusp_parameter(p, &tol));
        println!("  double point roots: {:?}", loop_roots(p).roots);
        println!("  => {}", report.shape);
        for note in &report.notes {
            println!("  note: {note}");
        }
    }
    Ok(())
}

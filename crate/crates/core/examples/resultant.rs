//! The hodograph resultant vanishes exactly on the cusp curve I = 0.
//!
//! cargo run --example resultant

use altcubic::classify::{cusp_alpha_for_beta, discriminant_i, resultant_check, resultant_closed_form};
use altcubic::{ShapeParams, Vec2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (t0, t1) = (Vec2::new(2.0, 0.5), Vec2::new(-0.5, 1.5));
    let gamma = t0.cross(t1);
    println!("{:>8} {:>8} {:>10} {:>14} {:>14}", "alpha", "beta", "I", "Sylvester", "-3G^2abI");
    for (a, b) in [(1.0, 1.0), (4.0, 4.0), (7.0, 7.0), (-3.0, 5.0)] {
        let p = ShapeParams::new(a, b)?;
        println!(
            "{a:>8} {b:>8} {:>10.4} {:>14.6} {:>14.6}",
            discriminant_i(p),
            resultant_check(p, t0, t1),
            resultant_closed_form(p, gamma)
        );
    }
    println!("on I = 0:");
    for beta in [0.5, 2.0, 5.0, 6.0, 9.0] {
        let p = ShapeParams::new(cusp_alpha_for_beta(beta)?, beta)?;
        println!("{:>8.4} {beta:>8} {:>10.1e} {:>14.1e}", p.alpha, discriminant_i(p), resultant_check(p, t0, t1));
    }
    Ok(())
}

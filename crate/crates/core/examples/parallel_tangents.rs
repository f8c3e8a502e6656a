//! Curves whose end tangents are parallel: one inflection when ab < 0,
//! never a cusp or a loop.
//!
//! cargo run --example parallel_tangents -- [a b m]

use altcubic::degenerate::{
    degenerate_classify, degenerate_curve, degenerate_resultant_check, degenerate_resultant_closed_form,
    DegenerateConfig,
};
use altcubic::oracle::{oracle_classify, OracleSettings};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let nums: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let cases: Vec<[f64; 3]> = match nums.as_slice() {
        [a, b, m] => vec![[*a, *b, *m]],
        _ => vec![[1.0, -1.0, 1.0], [1.0, 1.0, 1.0], [4.0, 1.0, -2.0], [-0.5, 3.0, 0.7]],
    };
    for [a, b, m] in cases {
        let cfg = DegenerateConfig::from_ab(a, b, m)?;
        let report = degenerate_classify(&cfg)?;
        let curve = degenerate_curve(&cfg)?;
        let oracle = oracle_classify(&curve, &OracleSettings::default());
        println!("a = {a}, b = {b}, m = {m}");
        println!("  polygon {:?}", curve.polygon.points());
        println!("  inflections {} at t = {:?}", report.inflections, report.inflection_t);
        println!("  double point roots in u: {:?}", report.loop_roots);
        println!(
            "  resultant {:.6} (closed form {:.6})",
            degenerate_resultant_check(&cfg),
            degenerate_resultant_closed_form(&cfg)
        );
        println!("  oracle: {}", oracle.shape);
    }
    Ok(())
}

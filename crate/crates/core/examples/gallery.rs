//! Write the nine representative curves, one per region, as SVG files.
//!
//! cargo run --example gallery -- [outdir]

use altcubic::classify::classify_curve;
use altcubic::diagram::{render_curve_svg, CurveSvgOptions, REPRESENTATIVE_POINTS};
use altcubic::{CurveInstance, ShapeParams, Tolerances};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(Into::into)
        .unwrap_or_else(|| std::env::temp_dir().join("altcubic_gallery"));
    std::fs::create_dir_all(&dir)?;
    let tol = Tolerances::default();
    for p in REPRESENTATIVE_POINTS {
        let curve = CurveInstance::unit_frame(ShapeParams::new(p.alpha, p.beta)?);
        let report = classify_curve(&curve, &tol)?;
        let options = CurveSvgOptions {
            title: Some(format!("({}) region {}: {}", p.panel, p.region, report.shape.name())),
            ..Default::default()
        };
        let path = dir.join(format!("{}.svg", p.panel));
        std::fs::write(&path, render_curve_svg(&curve, &report, &options))?;
        println!("({}) {:>8} ({:>4}, {:>4})  {}", p.panel, p.region, p.alpha, p.beta, report.shape);
    }
    println!("written to {}", dir.display());
    Ok(())
}

//! Render the shape diagram of the (alpha, beta) plane and report region areas.
//!
//! cargo run --release --example shape_diagram -- [out.svg] [resolution]

use altcubic::diagram::{classify_grid, render_shape_diagram, DiagramSpec};
use altcubic::ShapeClass;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let out = args
        .next()
        .map(Into::into)
        .unwrap_or_else(|| std::env::temp_dir().join("shape_diagram.svg"));
    let resolution = args.next().map(|a| a.parse()).transpose()?.unwrap_or(400);

    let spec = DiagramSpec {
        resolution,
        ..Default::default()
    };
    let grid = classify_grid(&spec)?;
    std::fs::write(&out, render_shape_diagram(&grid, &spec)?)?;
    println!("wrote {}", out.display());
    for (name, frac) in ShapeClass::NAMES.iter().zip(grid.area_fractions()) {
        if frac > 0.0 {
            println!("{name:>18}: {:6.2}% of the window", 100.0 * frac);
        }
    }
    println!("transpose symmetric: {}", grid.is_transpose_symmetric());
    Ok(())
}

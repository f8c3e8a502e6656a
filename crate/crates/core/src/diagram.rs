//! Rasterized shape diagrams over the (alpha, beta) plane and SVG renderings
//! of individual curves.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, discriminant_i, ClassificationReport};
use crate::curve::{CurveInstance, ShapeParams, Tolerances};
use crate::error::{Error, Result};
use crate::point::Point2;
use crate::shape::ShapeClass;

/// Fill colors indexed by class code.
pub const DEFAULT_COLORS: [&str; 8] = [
    "#cfe8cf", // Convex
    "#fde2b8", // SingleInflection
    "#f4b6b6", // DoubleInflection
    "#202020", // Cusp
    "#b7d3f2", // Loop
    "#7a3fa0", // Quadratic
    "#9a9a9a", // EndpointDegenerate
    "#5a5a5a", // Collinear
];

/// Which guide curves to draw over the class raster.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Overlays {
    /// `alpha = 0` and `beta = 0`.
    pub axes: bool,
    /// `alpha = 3` and `beta = 3`.
    pub unit_lines: bool,
    /// The hyperbola `I = 0`.
    pub discriminant: bool,
    /// `L1: alpha = 3 beta - beta^2` and `L2: beta = 3 alpha - alpha^2`.
    pub parabolas: bool,
    /// Region letters at the representative points.
    pub labels: bool,
}

impl Default for Overlays {
    fn default() -> Self {
        Overlays {
            axes: true,
            unit_lines: true,
            discriminant: true,
            parabolas: true,
            labels: true,
        }
    }
}

/// Parameter window and raster size of a shape diagram.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagramSpec {
    pub alpha_range: (f64, f64),
    pub beta_range: (f64, f64),
    /// Cells per axis.
    pub resolution: usize,
    pub overlays: Overlays,
    pub colors: [String; 8],
    pub tolerances: Tolerances,
}

impl Default for DiagramSpec {
    fn default() -> Self {
        DiagramSpec {
            alpha_range: (-6.0, 10.0),
            beta_range: (-6.0, 10.0),
            resolution: 400,
            overlays: Overlays::default(),
            colors: DEFAULT_COLORS.map(String::from),
            tolerances: Tolerances::default(),
        }
    }
}

impl DiagramSpec {
    pub const MIN_RESOLUTION: usize = 16;

    /// Square window `[lo, hi]^2` with the given resolution.
    pub fn square(lo: f64, hi: f64, resolution: usize) -> Result<Self> {
        let spec = DiagramSpec {
            alpha_range: (lo, hi),
            beta_range: (lo, hi),
            resolution,
            ..Default::default()
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.resolution < Self::MIN_RESOLUTION {
            return Err(Error::InvalidConfig(format!(
                "resolution {} is below {}",
                self.resolution,
                Self::MIN_RESOLUTION
            )));
        }
        for (name, (lo, hi)) in [("alpha", self.alpha_range), ("beta", self.beta_range)] {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidConfig(format!("{name} range [{lo}, {hi}] is empty or not finite")));
            }
        }
        Ok(())
    }

    /// Center of cell `k` along an axis.
    ///
    /// Computed as `lo + (hi - lo)(2k + 1)/(2n)` so that both axes produce
    /// bit-identical centers when their ranges agree.
    pub fn center(&self, range: (f64, f64), k: usize) -> f64 {
        let n = self.resolution as f64;
        range.0 + (range.1 - range.0) * ((2 * k + 1) as f64) / (2.0 * n)
    }

    pub fn alpha_at(&self, i: usize) -> f64 {
        self.center(self.alpha_range, i)
    }

    pub fn beta_at(&self, j: usize) -> f64 {
        self.center(self.beta_range, j)
    }

    fn alpha_step(&self) -> f64 {
        (self.alpha_range.1 - self.alpha_range.0) / self.resolution as f64
    }

    fn beta_step(&self) -> f64 {
        (self.beta_range.1 - self.beta_range.0) / self.resolution as f64
    }
}

/// Class codes on a `resolution x resolution` grid.
///
/// Row-major: `cells[j * n + i]` is the cell with alpha index `i` and beta
/// index `j`, both ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassGrid {
    pub spec: DiagramSpec,
    pub cells: Vec<u8>,
}

impl ClassGrid {
    pub fn code_at(&self, i: usize, j: usize) -> u8 {
        self.cells[j * self.spec.resolution + i]
    }

    /// Whether swapping alpha and beta maps the grid onto itself.
    pub fn is_transpose_symmetric(&self) -> bool {
        let n = self.spec.resolution;
        (0..n).all(|j| (0..j).all(|i| self.code_at(i, j) == self.code_at(j, i)))
    }

    /// Fraction of cells per class code.
    pub fn area_fractions(&self) -> [f64; 8] {
        let mut counts = [0usize; 8];
        for &c in &self.cells {
            counts[c as usize] += 1;
        }
        let total = self.cells.len() as f64;
        counts.map(|c| c as f64 / total)
    }
}

/// Classifies every cell center.
pub fn classify_grid(spec: &DiagramSpec) -> Result<ClassGrid> {
    spec.validate()?;
    let n = spec.resolution;
    let rows: Vec<Vec<u8>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let beta = spec.beta_at(j);
            (0..n)
                .map(|i| {
                    let params = ShapeParams {
                        alpha: spec.alpha_at(i),
                        beta,
                    };
                    classify(params, &spec.tolerances).shape.code()
                })
                .collect()
        })
        .collect();
    Ok(ClassGrid {
        spec: spec.clone(),
        cells: rows.concat(),
    })
}

/// One labeled sample of the curve gallery.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RepresentativePoint {
    pub panel: char,
    pub region: &'static str,
    pub alpha: f64,
    pub beta: f64,
    /// Expected class name, one of [`ShapeClass::NAMES`].
    pub class: &'static str,
}

const fn rep(panel: char, region: &'static str, alpha: f64, beta: f64, class: &'static str) -> RepresentativePoint {
    RepresentativePoint {
        panel,
        region,
        alpha,
        beta,
        class,
    }
}

/// Gallery points `a` through `i`, one per region.
pub const REPRESENTATIVE_POINTS: [RepresentativePoint; 9] = [
    rep('a', "C", 1.5, 1.5, "Convex"),
    rep('b', "D", 4.0, 4.0, "DoubleInflection"),
    rep('c', "I-curve", 6.0, 6.0, "Cusp"),
    rep('d', "E", 7.0, 7.0, "Loop"),
    rep('e', "F", 1.5, 5.0, "SingleInflection"),
    rep('f', "V", -2.0, 8.0, "Convex"),
    rep('g', "U", -5.0, 4.0, "Loop"),
    rep('h', "S", -2.0, 1.5, "SingleInflection"),
    rep('i', "R", -2.0, -2.0, "Convex"),
];

/// Shortest decimal with at most six fractional digits; never `-0`.
fn num(x: f64) -> String {
    let mut s = format!("{x:.6}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

fn polyline_points(pts: &[(f64, f64)]) -> String {
    pts.iter()
        .map(|&(x, y)| format!("{},{}", num(x), num(y)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Splits a sampled curve into runs that stay inside `[a0,a1] x [b0,b1]`
/// widened by `pad`.
fn clip_runs(samples: impl Iterator<Item = (f64, f64)>, spec: &DiagramSpec, pad: f64) -> Vec<Vec<(f64, f64)>> {
    let (a0, a1) = spec.alpha_range;
    let (b0, b1) = spec.beta_range;
    let mut runs = Vec::new();
    let mut cur = Vec::new();
    for (a, b) in samples {
        let inside = a.is_finite() && b.is_finite() && a >= a0 - pad && a <= a1 + pad && b >= b0 - pad && b <= b1 + pad;
        if inside {
            cur.push((a, b));
        } else if !cur.is_empty() {
            runs.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        runs.push(cur);
    }
    runs.retain(|r| r.len() > 1);
    runs
}

const OVERLAY_SAMPLES: usize = 4000;

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..=n).map(move |k| lo + (hi - lo) * k as f64 / n as f64)
}

/// The two branches of `I = 0`, `alpha = 4(beta - 3)/(beta - 4)`, as
/// `(alpha, beta)` polylines clipped to the window.
pub fn discriminant_branches(spec: &DiagramSpec) -> Vec<Vec<(f64, f64)>> {
    let (b0, b1) = spec.beta_range;
    let pad = spec.alpha_step().max(spec.beta_step());
    let mut out = Vec::new();
    // Split at the vertical asymptote beta = 4.
    for (lo, hi) in [(b0, b1.min(4.0)), (b0.max(4.0), b1)] {
        if lo >= hi {
            continue;
        }
        let samples = linspace(lo, hi, OVERLAY_SAMPLES)
            .filter(|&b| b != 4.0)
            .map(|b| (4.0 * (b - 3.0) / (b - 4.0), b));
        out.extend(clip_runs(samples, spec, pad));
    }
    out
}

/// `L1: alpha = 3 beta - beta^2` clipped to the window.
pub fn parabola_l1(spec: &DiagramSpec) -> Vec<Vec<(f64, f64)>> {
    let (b0, b1) = spec.beta_range;
    let pad = spec.alpha_step().max(spec.beta_step());
    clip_runs(linspace(b0, b1, OVERLAY_SAMPLES).map(|b| (3.0 * b - b * b, b)), spec, pad)
}

/// `L2: beta = 3 alpha - alpha^2` clipped to the window.
pub fn parabola_l2(spec: &DiagramSpec) -> Vec<Vec<(f64, f64)>> {
    let (a0, a1) = spec.alpha_range;
    let pad = spec.alpha_step().max(spec.beta_step());
    clip_runs(linspace(a0, a1, OVERLAY_SAMPLES).map(|a| (a, 3.0 * a - a * a)), spec, pad)
}

/// SVG 1.1 rendering of a class grid.
///
/// User space is the parameter plane with `y = -beta`, so the viewBox is
/// `alpha_lo -beta_hi width height`.
pub fn render_shape_diagram(grid: &ClassGrid, spec: &DiagramSpec) -> Result<String> {
    spec.validate()?;
    if grid.spec.resolution != spec.resolution
        || grid.spec.alpha_range != spec.alpha_range
        || grid.spec.beta_range != spec.beta_range
        || grid.cells.len() != spec.resolution * spec.resolution
    {
        return Err(Error::InvalidConfig("grid does not match the diagram window or resolution".into()));
    }
    let n = spec.resolution;
    let (a0, a1) = spec.alpha_range;
    let (b0, b1) = spec.beta_range;
    let (w, h) = (a1 - a0, b1 - b0);
    let (da, db) = (spec.alpha_step(), spec.beta_step());
    let size = w.max(h);
    let stroke = size / 400.0;
    let font = size / 40.0;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="800" height="{}" viewBox="{} {} {} {}" preserveAspectRatio="none">"#,
        num(800.0 * h / w),
        num(a0),
        num(-b1),
        num(w),
        num(h)
    );
    let _ = writeln!(s, "<title>Shape diagram</title>");
    let _ = writeln!(s, r#"<defs><clipPath id="plot"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath></defs>"#, num(a0), num(-b1), num(w), num(h));

    let _ = writeln!(s, r#"<g id="cells" shape-rendering="crispEdges">"#);
    for j in 0..n {
        let y = -(b0 + (j + 1) as f64 * db);
        let mut i = 0;
        while i < n {
            let code = grid.code_at(i, j);
            let start = i;
            while i < n && grid.code_at(i, j) == code {
                i += 1;
            }
            let _ = writeln!(
                s,
                r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
                num(a0 + start as f64 * da),
                num(y),
                num((i - start) as f64 * da),
                num(db),
                spec.colors[code as usize]
            );
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="overlays" clip-path="url(#plot)" fill="none" stroke-width="{}">"#, num(stroke));
    let line = |s: &mut String, id: &str, color: &str, x1: f64, y1: f64, x2: f64, y2: f64| {
        let _ = writeln!(
            s,
            r#"<path id="{id}" stroke="{color}" d="M{},{} L{},{}"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        );
    };
    if spec.overlays.axes {
        line(&mut s, "axis-alpha", "#000000", a0, 0.0, a1, 0.0);
        line(&mut s, "axis-beta", "#000000", 0.0, -b0, 0.0, -b1);
    }
    if spec.overlays.unit_lines {
        line(&mut s, "alpha-3", "#555555", 3.0, -b0, 3.0, -b1);
        line(&mut s, "beta-3", "#555555", a0, -3.0, a1, -3.0);
    }
    let curves = |s: &mut String, id: &str, color: &str, runs: Vec<Vec<(f64, f64)>>| {
        for (k, run) in runs.iter().enumerate() {
            let pts: Vec<(f64, f64)> = run.iter().map(|&(a, b)| (a, -b)).collect();
            let _ = writeln!(s, r#"<polyline id="{id}-{k}" stroke="{color}" points="{}"/>"#, polyline_points(&pts));
        }
    };
    if spec.overlays.discriminant {
        curves(&mut s, "I0", "#c00000", discriminant_branches(spec));
    }
    if spec.overlays.parabolas {
        curves(&mut s, "L1", "#0040c0", parabola_l1(spec));
        curves(&mut s, "L2", "#008040", parabola_l2(spec));
    }
    let _ = writeln!(s, "</g>");

    if spec.overlays.labels {
        let _ = writeln!(s, r#"<g id="labels" font-family="sans-serif" font-size="{}" text-anchor="middle">"#, num(font));
        for p in REPRESENTATIVE_POINTS {
            if p.alpha >= a0 && p.alpha <= a1 && p.beta >= b0 && p.beta <= b1 {
                let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, num(p.alpha), num(-p.beta), p.region);
            }
        }
        let _ = writeln!(s, "</g>");
    }

    // Legend in the top-left corner of the window.
    let row = font * 1.4;
    let _ = writeln!(s, r#"<g id="legend" font-family="sans-serif" font-size="{}">"#, num(font));
    let _ = writeln!(
        s,
        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="#ffffff" fill-opacity="0.85" stroke="#000000" stroke-width="{}"/>"##,
        num(a0 + font * 0.5),
        num(-b1 + font * 0.5),
        num(font * 11.0),
        num(row * 8.0 + font * 0.6),
        num(stroke)
    );
    for (k, name) in ShapeClass::NAMES.iter().enumerate() {
        let y = -b1 + font * 0.8 + row * k as f64;
        let _ = writeln!(
            s,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
            num(a0 + font),
            num(y),
            num(font),
            num(font),
            spec.colors[k]
        );
        let _ = writeln!(s, r#"<text x="{}" y="{}">{k} {name}</text>"#, num(a0 + font * 2.5), num(y + font * 0.85));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

/// `alpha,beta,class_code,class_name,I`, one row per cell in grid order.
pub fn export_grid_csv(grid: &ClassGrid) -> String {
    let n = grid.spec.resolution;
    let mut s = String::with_capacity(48 * (n * n + 1));
    s.push_str("alpha,beta,class_code,class_name,I\n");
    for j in 0..n {
        let beta = grid.spec.beta_at(j);
        for i in 0..n {
            let alpha = grid.spec.alpha_at(i);
            let code = grid.code_at(i, j);
            let big_i = discriminant_i(ShapeParams { alpha, beta });
            let _ = writeln!(s, "{alpha},{beta},{code},{},{big_i}", ShapeClass::NAMES[code as usize]);
        }
    }
    s
}

/// Options for [`render_curve_svg`].
#[derive(Clone, Debug, PartialEq)]
pub struct CurveSvgOptions {
    /// Polyline samples; raised to at least 256.
    pub samples: usize,
    /// Pixel width of the document.
    pub width: u32,
    pub title: Option<String>,
    pub show_polygon: bool,
}

impl Default for CurveSvgOptions {
    fn default() -> Self {
        CurveSvgOptions {
            samples: 512,
            width: 400,
            title: None,
            show_polygon: true,
        }
    }
}

/// Embedded in each curve SVG as JSON inside `<metadata>`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveMetadata {
    pub alpha: f64,
    pub beta: f64,
    pub class: &'static str,
    pub region: String,
    pub roots_t: Vec<f64>,
}

/// Marker kinds drawn on a curve rendering.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Marker {
    Inflection(Point2),
    Cusp(Point2),
    DoublePoint(Point2),
}

/// Markers implied by a shape class.
pub fn feature_markers(curve: &CurveInstance, shape: &ShapeClass) -> Vec<Marker> {
    match *shape {
        ShapeClass::SingleInflection { t, .. } => vec![Marker::Inflection(curve.sample(t))],
        ShapeClass::DoubleInflection { t, .. } => t.iter().map(|&t| Marker::Inflection(curve.sample(t))).collect(),
        ShapeClass::Cusp { t, .. } => vec![Marker::Cusp(curve.sample(t))],
        ShapeClass::Loop { t, .. } => {
            let (p, q) = (curve.sample(t[0]), curve.sample(t[1]));
            vec![Marker::DoublePoint(Point2::new(0.5 * (p.x + q.x), 0.5 * (p.y + q.y)))]
        }
        _ => Vec::new(),
    }
}

/// SVG 1.1 rendering of one curve with its feature markers.
///
/// Inflections are circles, a cusp is a cross and a loop's double point is a
/// diamond. The control polygon is dashed.
pub fn render_curve_svg(curve: &CurveInstance, report: &ClassificationReport, options: &CurveSvgOptions) -> String {
    let samples = options.samples.max(256);
    let pts: Vec<Point2> = (0..samples)
        .map(|k| curve.sample(k as f64 / (samples - 1) as f64))
        .collect();
    let poly = curve.polygon.points();

    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in pts.iter().chain(if options.show_polygon { poly.iter() } else { [].iter() }) {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    let size = (x1 - x0).max(y1 - y0).max(1e-12);
    let pad = 0.06 * size;
    let (vx, vy, vw, vh) = (x0 - pad, -y1 - pad, x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
    let stroke = size / 250.0;
    let mark = size / 60.0;
    let height = (options.width as f64 * vh / vw).round().max(1.0);

    let meta = CurveMetadata {
        alpha: report.params.alpha,
        beta: report.params.beta,
        class: report.shape.name(),
        region: report.region_label.clone(),
        roots_t: report.shape.roots_t(),
    };

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        options.width,
        num(height),
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    );
    if let Some(title) = &options.title {
        let _ = writeln!(s, "<title>{}</title>", xml_escape(title));
    }
    let json = serde_json::to_string(&meta).unwrap_or_default();
    let _ = writeln!(s, "<metadata>{}</metadata>", xml_escape(&json));
    let flip = |p: &Point2| (p.x, -p.y);
    if options.show_polygon {
        let pp: Vec<(f64, f64)> = poly.iter().map(flip).collect();
        let _ = writeln!(
            s,
            r##"<polyline id="polygon" fill="none" stroke="#888888" stroke-width="{}" stroke-dasharray="{},{}" points="{}"/>"##,
            num(stroke),
            num(4.0 * stroke),
            num(3.0 * stroke),
            polyline_points(&pp)
        );
    }
    let cp: Vec<(f64, f64)> = pts.iter().map(flip).collect();
    let _ = writeln!(
        s,
        r##"<polyline id="curve" fill="none" stroke="#1040a0" stroke-width="{}" points="{}"/>"##,
        num(2.0 * stroke),
        polyline_points(&cp)
    );
    for m in feature_markers(curve, &report.shape) {
        match m {
            Marker::Inflection(p) => {
                let _ = writeln!(
                    s,
                    r##"<circle class="inflection" cx="{}" cy="{}" r="{}" fill="none" stroke="#d02020" stroke-width="{}"/>"##,
                    num(p.x),
                    num(-p.y),
                    num(mark),
                    num(stroke)
                );
            }
            Marker::Cusp(p) => {
                let (x, y) = (p.x, -p.y);
                let _ = writeln!(
                    s,
                    r##"<path class="cusp" stroke="#d02020" stroke-width="{}" d="M{},{} L{},{} M{},{} L{},{}"/>"##,
                    num(stroke),
                    num(x - mark),
                    num(y - mark),
                    num(x + mark),
                    num(y + mark),
                    num(x - mark),
                    num(y + mark),
                    num(x + mark),
                    num(y - mark)
                );
            }
            Marker::DoublePoint(p) => {
                let (x, y) = (p.x, -p.y);
                let _ = writeln!(
                    s,
                    r##"<polygon class="loop" fill="none" stroke="#d02020" stroke-width="{}" points="{}"/>"##,
                    num(stroke),
                    polyline_points(&[(x, y - mark), (x + mark, y), (x, y + mark), (x - mark, y)])
                );
            }
        }
    }
    let _ = writeln!(s, "</svg>");
    s
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Pulls the JSON payload back out of a curve SVG.
pub fn extract_metadata(svg: &str) -> Option<serde_json::Value> {
    let start = svg.find("<metadata>")? + "<metadata>".len();
    let end = svg[start..].find("</metadata>")? + start;
    let raw = svg[start..end].replace("&lt;", "<").replace("&gt;", ">").replace("&amp;", "&");
    serde_json::from_str(&raw).ok()
}

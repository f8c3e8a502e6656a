//! Command-line front end. `run` parses arguments, writes to the given
//! streams and returns the process exit code.
//!
//! Exit codes: 0 success, 2 bad flags or inputs, 3 oracle disagreement,
//! 4 output not writable.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::{classify_curve, ClassificationReport};
use crate::curve::{ControlPolygon, CurveInstance, ShapeParams, Tolerances};
use crate::degenerate::{degenerate_classify, DegenerateConfig};
use crate::diagram::{
    classify_grid, export_grid_csv, render_curve_svg, render_shape_diagram, CurveSvgOptions, DiagramSpec,
    REPRESENTATIVE_POINTS,
};
use crate::oracle::{oracle_classify, OracleSettings};
use crate::point::Point2;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "altcubic", version, about = "Shape analysis of cubic Alternative curves")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the curve for given shape parameters.
    Classify(ClassifyArgs),
    /// Sample points and signed curvature along a curve.
    Eval(EvalArgs),
    /// Render the shape diagram over the (alpha, beta) plane.
    Diagram(DiagramArgs),
    /// Write the nine gallery curves as SVG files a.svg .. i.svg.
    Examples(ExamplesArgs),
    /// Analyse a curve with parallel end tangents.
    Degenerate(DegenerateArgs),
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct ClassifyArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Cross-check against the sampling oracle; exit 3 on disagreement.
    #[arg(long)]
    oracle: bool,
    /// H-form polygon "x0,y0;hx,hy;x3,y3". Defaults to the unit tangent frame.
    #[arg(long, allow_hyphen_values = true)]
    geometry: Option<String>,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct EvalArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    /// Three (H-form) or four control points "x,y;x,y;...".
    #[arg(long, allow_hyphen_values = true)]
    points: String,
    #[arg(long, default_value_t = 101)]
    samples: usize,
    /// Emit CSV `t,x,y,kappa`.
    #[arg(long)]
    csv: bool,
}

#[derive(Args, Debug)]
struct DiagramArgs {
    /// Parameter window "lo,hi" used for both axes.
    #[arg(long, default_value = "-6,10", allow_hyphen_values = true)]
    range: String,
    #[arg(long, default_value_t = 400)]
    resolution: usize,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExamplesArgs {
    #[arg(long)]
    outdir: PathBuf,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct DegenerateArgs {
    #[arg(long)]
    a: f64,
    #[arg(long)]
    b: f64,
    #[arg(long)]
    m: f64,
    #[arg(long)]
    json: bool,
}

struct Failure(i32, String);

type CmdResult = std::result::Result<i32, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn io_fail(path: &Path, e: std::io::Error) -> Failure {
    Failure(EXIT_IO, format!("cannot write {}: {e}", path.display()))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Classify(a) => cmd_classify(a, out),
        Command::Eval(a) => cmd_eval(a, out),
        Command::Diagram(a) => cmd_diagram(a, out),
        Command::Examples(a) => cmd_examples(a, out),
        Command::Degenerate(a) => cmd_degenerate(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn parse_points(s: &str) -> std::result::Result<Vec<Point2>, Failure> {
    s.split(';')
        .map(|pair| {
            let coords: Vec<&str> = pair.split(',').map(str::trim).collect();
            let [x, y] = coords.as_slice() else {
                return Err(usage(format!("malformed point {pair:?}: expected \"x,y\"")));
            };
            let parse = |v: &str| v.parse::<f64>().map_err(|_| usage(format!("malformed number {v:?}")));
            Point2::try_new(parse(x)?, parse(y)?).map_err(|e| usage(e.to_string()))
        })
        .collect()
}

fn params(alpha: f64, beta: f64) -> std::result::Result<ShapeParams, Failure> {
    ShapeParams::new(alpha, beta).map_err(|e| usage(e.to_string()))
}

fn write_out(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure(EXIT_IO, format!("cannot write output: {e}")))?;
    Ok(EXIT_OK)
}

fn classification_json(report: &ClassificationReport) -> Value {
    json!({
        "alpha": report.params.alpha,
        "beta": report.params.beta,
        "I": report.i,
        "phi": report.phi.as_array(),
        "class": report.shape.name(),
        "roots_u": report.shape.roots_u(),
        "roots_t": report.shape.roots_t(),
        "region": report.region_label,
        "notes": report.notes,
    })
}

fn cmd_classify(a: ClassifyArgs, out: &mut dyn Write) -> CmdResult {
    let params = params(a.alpha, a.beta)?;
    let polygon = match &a.geometry {
        None => CurveInstance::unit_frame(params).polygon,
        Some(g) => {
            let pts = parse_points(g)?;
            let [p0, h, p3] = pts.as_slice() else {
                return Err(usage("--geometry needs exactly three points"));
            };
            ControlPolygon::h_form(*p0, *h, *p3).map_err(|e| usage(e.to_string()))?
        }
    };
    let curve = CurveInstance::new(polygon, params);
    let tol = Tolerances::default();
    let report = classify_curve(&curve, &tol).map_err(|e| usage(e.to_string()))?;
    let mut value = classification_json(&report);
    let mut code = EXIT_OK;
    let oracle = a.oracle.then(|| oracle_classify(&curve, &OracleSettings::default()));
    if let Some(o) = &oracle {
        value["oracle_class"] = json!(o.shape.name());
        if !o.shape.same_variant(&report.shape) {
            code = EXIT_DISAGREE;
        }
    }
    let text = if a.json {
        format!("{}\n", serde_json::to_string_pretty(&value).expect("report serializes"))
    } else {
        let mut s = format!(
            "alpha = {}, beta = {}\nI = {}\nclass: {}\nregion: {}\n",
            report.params.alpha, report.params.beta, report.i, report.shape, report.region_label
        );
        for n in &report.notes {
            s.push_str(&format!("note: {n}\n"));
        }
        if let Some(o) = &oracle {
            s.push_str(&format!("oracle: {}\n", o.shape));
        }
        s
    };
    write_out(out, &text)?;
    if code == EXIT_DISAGREE {
        return Err(Failure(code, "oracle disagrees with the analytic class".into()));
    }
    Ok(code)
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write) -> CmdResult {
    let params = params(a.alpha, a.beta)?;
    let pts = parse_points(&a.points)?;
    let polygon = match pts.as_slice() {
        [p0, h, p3] => ControlPolygon::h_form(*p0, *h, *p3),
        [p0, p1, p2, p3] => ControlPolygon::new(*p0, *p1, *p2, *p3),
        _ => return Err(usage("--points needs three or four points")),
    }
    .map_err(|e| usage(e.to_string()))?;
    if a.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let curve = CurveInstance::new(polygon, params);
    let sep = if a.csv { "," } else { "\t" };
    let mut s = String::new();
    s.push_str(&["t", "x", "y", "kappa"].join(sep));
    s.push('\n');
    let last = a.samples - 1;
    for k in 0..a.samples {
        let t = if k == last { 1.0 } else { k as f64 / last as f64 };
        let p = curve.sample(t);
        let kappa = curve
            .signed_curvature(t)
            .map(|v| v.to_string())
            .unwrap_or_else(|_| "nan".to_string());
        s.push_str(&format!("{t}{sep}{}{sep}{}{sep}{kappa}\n", p.x, p.y));
    }
    write_out(out, &s)
}

fn parse_range(s: &str) -> std::result::Result<(f64, f64), Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [lo, hi] = parts.as_slice() else {
        return Err(usage(format!("malformed range {s:?}: expected \"lo,hi\"")));
    };
    let parse = |v: &str| v.parse::<f64>().map_err(|_| usage(format!("malformed number {v:?}")));
    Ok((parse(lo)?, parse(hi)?))
}

fn cmd_diagram(a: DiagramArgs, out: &mut dyn Write) -> CmdResult {
    let (lo, hi) = parse_range(&a.range)?;
    let spec = DiagramSpec::square(lo, hi, a.resolution).map_err(|e| usage(e.to_string()))?;
    let grid = classify_grid(&spec).map_err(|e| usage(e.to_string()))?;
    let svg = render_shape_diagram(&grid, &spec).map_err(|e| usage(e.to_string()))?;
    fs::write(&a.out, svg).map_err(|e| io_fail(&a.out, e))?;
    let mut msg = format!("wrote {}\n", a.out.display());
    if let Some(path) = &a.csv {
        fs::write(path, export_grid_csv(&grid)).map_err(|e| io_fail(path, e))?;
        msg.push_str(&format!("wrote {}\n", path.display()));
    }
    write_out(out, &msg)
}

fn cmd_examples(a: ExamplesArgs, out: &mut dyn Write) -> CmdResult {
    fs::create_dir_all(&a.outdir).map_err(|e| io_fail(&a.outdir, e))?;
    let tol = Tolerances::default();
    let mut msg = String::new();
    for p in REPRESENTATIVE_POINTS {
        let params = params(p.alpha, p.beta)?;
        let curve = CurveInstance::unit_frame(params);
        let report = classify_curve(&curve, &tol).map_err(|e| usage(e.to_string()))?;
        let options = CurveSvgOptions {
            title: Some(format!("({}) alpha = {}, beta = {}: {}", p.panel, p.alpha, p.beta, report.shape.name())),
            ..Default::default()
        };
        let path = a.outdir.join(format!("{}.svg", p.panel));
        fs::write(&path, render_curve_svg(&curve, &report, &options)).map_err(|e| io_fail(&path, e))?;
        msg.push_str(&format!(
            "{} {} ({}, {}) {}\n",
            path.display(),
            p.region,
            p.alpha,
            p.beta,
            report.shape.name()
        ));
    }
    write_out(out, &msg)
}

fn cmd_degenerate(a: DegenerateArgs, out: &mut dyn Write) -> CmdResult {
    let config = DegenerateConfig::from_ab(a.a, a.b, a.m).map_err(|e| usage(e.to_string()))?;
    let report = degenerate_classify(&config).map_err(|e| usage(e.to_string()))?;
    let text = if a.json {
        let value = json!({
            "a": report.a,
            "b": report.b,
            "m": report.m,
            "inflections": report.inflections,
            "inflection_t": report.inflection_t,
            "cusp": report.cusp,
            "loop": report.has_loop,
            "notes": report.notes,
        });
        format!("{}\n", serde_json::to_string_pretty(&value).expect("report serializes"))
    } else {
        let mut s = format!(
            "a = {}, b = {}, m = {}\ninflections: {}\n",
            report.a, report.b, report.m, report.inflections
        );
        if let Some(t) = report.inflection_t {
            s.push_str(&format!("inflection at t = {t}\n"));
        }
        s.push_str("cusp: no\nloop: no\n");
        s
    };
    write_out(out, &text)
}

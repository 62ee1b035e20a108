//! Command-line surface.
//!
//! Subcommands: `classify`, `points`, `count`, `analyze`, `parametric`,
//! `trinomial`, `verify`, `plot`, `batch`. Global flags `--format`,
//! `--bound`, `--out`; the environment variable `HYPERLATTICE_BOUND`
//! overrides the default coefficient bound when `--bound` is absent.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse/overflow/bound error,
//! 3 verification mismatch. Every failure writes a single machine-readable
//! `error: <class>: <reason>` line to the diagnostic stream.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::batch::{batch_process, sign_str, SpecialFormOut};
use crate::encode::{encode_points, Format};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::model::{
    AnalysisReport, CountPrediction, CurveClass, CurveParams, IntegralPoint, Interval,
    Monotonicity, PointSet, Rational, RationalPoint, DEFAULT_BOUND,
};
use crate::oracle;
use crate::square_case;
use crate::svg::{default_viewport, render_svg, PlotSubject};
use crate::trinomial::{self, RootNature, Trinomial};

/// Name of the environment variable overriding the default input bound.
pub const BOUND_ENV_VAR: &str = "HYPERLATTICE_BOUND";

#[derive(Parser)]
#[command(
    name = "hyperlattice",
    version,
    about = "Integral points on y = (x^2 + bx + c)/(x + a)",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format for the payload
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,

    /// Max |a|, |b|, |c| accepted (default 10^9)
    #[arg(long, global = true, value_name = "B")]
    bound: Option<String>,

    /// Write the payload to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(value_name = "A", allow_hyphen_values = true)]
    a: String,
    #[arg(value_name = "B", allow_hyphen_values = true)]
    b: String,
    #[arg(value_name = "C", allow_hyphen_values = true)]
    c: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Fingerprint D and curve class
    Classify(CurveArgs),
    /// Every integral point of a non-degenerate curve
    Points(CurveArgs),
    /// Point count, or the infinite line family
    Count(CurveArgs),
    /// Calculus report for the b^2 = 4c square case
    Analyze(CurveArgs),
    /// Coprime-factorization point families of the square case
    Parametric(CurveArgs),
    /// Integer-root certificate for a x^2 + b x + c
    Trinomial(CurveArgs),
    /// Cross-check the divisor-pair engine against both brute-force scans
    Verify(CurveArgs),
    /// SVG plot of the curve with its integral points
    Plot {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, allow_hyphen_values = true, value_name = "X")]
        xmin: Option<String>,
        #[arg(long, allow_hyphen_values = true, value_name = "X")]
        xmax: Option<String>,
        #[arg(long, allow_hyphen_values = true, value_name = "Y")]
        ymin: Option<String>,
        #[arg(long, allow_hyphen_values = true, value_name = "Y")]
        ymax: Option<String>,
    },
    /// Process JSON lines {"a":..,"b":..,"c":..} from a file ("-" = stdin)
    Batch { path: PathBuf },
}

enum Failure {
    Core(Error),
    Mismatch(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(e) => e.exit_code(),
            Failure::Mismatch(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Mismatch(m) => format!("verify: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Parses argv (including the program name), runs the command, and writes
/// payload/diagnostics to the given streams. Returns the process exit code.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                let _ = writeln!(stderr, "error: parse: missing subcommand (try --help)");
                return 2;
            }
            let rendered = e.to_string();
            let first_line = rendered
                .lines()
                .next()
                .unwrap_or("bad arguments")
                .trim_start_matches("error: ");
            let _ = writeln!(stderr, "error: parse: {first_line}");
            return 2;
        }
    };

    let bound = match resolve_bound(cli.bound.as_deref()) {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };

    let format = cli.format;
    let result = match &cli.command {
        Cmd::Classify(args) => cmd_classify(args, bound, format),
        Cmd::Points(args) => cmd_points(args, bound, format),
        Cmd::Count(args) => cmd_count(args, bound, format),
        Cmd::Analyze(args) => cmd_analyze(args, bound, format),
        Cmd::Parametric(args) => cmd_parametric(args, bound, format),
        Cmd::Trinomial(args) => cmd_trinomial(args, bound, format),
        Cmd::Verify(args) => cmd_verify(args, bound, format),
        Cmd::Plot {
            curve,
            xmin,
            xmax,
            ymin,
            ymax,
        } => cmd_plot(curve, bound, [xmin, xmax, ymin, ymax]),
        Cmd::Batch { path } => cmd_batch(path, bound),
    };

    match result {
        Ok(mut payload) => {
            if !payload.is_empty() && !payload.ends_with(b"\n") {
                payload.push(b'\n');
            }
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &payload)
                    .map_err(|e| Error::parse(format!("cannot write {}: {e}", path.display()))),
                None => stdout
                    .write_all(&payload)
                    .map_err(|e| Error::parse(e.to_string())),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return e.exit_code();
            }
            0
        }
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message());
            failure.exit_code()
        }
    }
}

fn resolve_bound(flag: Option<&str>) -> Result<i128> {
    let source = match flag {
        Some(s) => Some(s.to_string()),
        None => std::env::var(BOUND_ENV_VAR).ok(),
    };
    match source {
        None => Ok(DEFAULT_BOUND),
        Some(s) => s
            .trim()
            .parse::<i128>()
            .map_err(|_| Error::parse(format!("bound must be an integer, got '{s}'"))),
    }
}

fn parse_int(name: &str, s: &str) -> Result<i128> {
    s.trim()
        .parse::<i128>()
        .map_err(|_| Error::parse(format!("{name} must be an integer, got '{s}'")))
}

fn parse_float(name: &str, s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("{name} must be a number, got '{s}'")))?;
    if !v.is_finite() {
        return Err(Error::parse(format!("{name} must be finite, got '{s}'")));
    }
    Ok(v)
}

fn parse_curve(args: &CurveArgs, bound: i128) -> Result<CurveParams> {
    let a = parse_int("a", &args.a)?;
    let b = parse_int("b", &args.b)?;
    let c = parse_int("c", &args.c)?;
    CurveParams::with_bound(a, b, c, bound)
}

fn kv_render(pairs: &[(&str, String)], format: Format) -> Vec<u8> {
    let mut out = String::new();
    for (k, v) in pairs {
        match format {
            Format::Csv => {
                // quote values that would split the record
                if v.contains(',') || v.contains('"') {
                    out.push_str(&format!("{k},\"{}\"\n", v.replace('"', "\"\"")));
                } else {
                    out.push_str(&format!("{k},{v}\n"));
                }
            }
            _ => out.push_str(&format!("{k}: {v}\n")),
        }
    }
    out.into_bytes()
}

fn to_json_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    serde_json::to_vec(value).expect("CLI output types always serialize")
}

// ---- classify ----

#[derive(Serialize)]
struct ClassifyOut {
    a: i128,
    b: i128,
    c: i128,
    #[serde(rename = "D")]
    d: i128,
    class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    is_square: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    special_form: Option<SpecialFormOut>,
}

fn cmd_classify(
    args: &CurveArgs,
    bound: i128,
    format: Format,
) -> std::result::Result<Vec<u8>, Failure> {
    let curve = parse_curve(args, bound)?;
    let fp = enumerate::fingerprint(&curve)?;
    let out = match enumerate::classify(&curve)? {
        CurveClass::DegenerateLine => {
            let family = enumerate::degenerate_family(&curve)?;
            ClassifyOut {
                a: curve.a(),
                b: curve.b(),
                c: curve.c(),
                d: fp.value,
                class: "degenerate_line",
                sign: None,
                is_square: None,
                family: Some(if format == Format::Table {
                    family.family_human()
                } else {
                    family.family_compact()
                }),
                special_form: None,
            }
        }
        CurveClass::Hyperbola { sign, is_square } => ClassifyOut {
            a: curve.a(),
            b: curve.b(),
            c: curve.c(),
            d: fp.value,
            class: "hyperbola",
            sign: Some(sign_str(sign)),
            is_square: Some(is_square),
            family: None,
            special_form: enumerate::special_form(&curve)?
                .as_ref()
                .map(SpecialFormOut::from_model),
        },
    };
    Ok(match format {
        Format::Json => to_json_bytes(&out),
        _ => {
            let mut pairs = vec![("D", out.d.to_string()), ("class", out.class.to_string())];
            if let Some(sign) = out.sign {
                pairs.push(("sign", sign.to_string()));
            }
            if let Some(sq) = out.is_square {
                pairs.push(("square", sq.to_string()));
            }
            if let Some(family) = &out.family {
                pairs.push(("family", family.clone()));
            }
            if let Some(sf) = &out.special_form {
                let detail = match (sf.p, sf.p1, sf.p2) {
                    (Some(p), _, _) => format!("{} (p = {p})", sf.form),
                    (_, Some(p1), Some(p2)) => format!("{} (p1 = {p1}, p2 = {p2})", sf.form),
                    _ => sf.form.to_string(),
                };
                pairs.push(("special_form", detail));
                pairs.push(("expected_points", sf.expected_count.to_string()));
            }
            kv_render(&pairs, format)
        }
    })
}

// ---- points ----

fn cmd_points(
    args: &CurveArgs,
    bound: i128,
    format: Format,
) -> std::result::Result<Vec<u8>, Failure> {
    let curve = parse_curve(args, bound)?;
    let points = enumerate::enumerate_points(&curve)?;
    Ok(encode_points(&points, format))
}

// ---- count ----

#[derive(Serialize)]
struct CountOut {
    a: i128,
    b: i128,
    c: i128,
    #[serde(rename = "D")]
    d: i128,
    count: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_small_divisors: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    is_square: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
}

fn cmd_count(
    args: &CurveArgs,
    bound: i128,
    format: Format,
) -> std::result::Result<Vec<u8>, Failure> {
    let curve = parse_curve(args, bound)?;
    let fp = enumerate::fingerprint(&curve)?;
    match enumerate::predicted_count(&curve)? {
        CountPrediction::Infinite => {
            let family = enumerate::degenerate_family(&curve)?;
            Ok(match format {
                Format::Json => to_json_bytes(&CountOut {
                    a: curve.a(),
                    b: curve.b(),
                    c: curve.c(),
                    d: 0,
                    count: serde_json::Value::from("infinite"),
                    n_small_divisors: None,
                    is_square: None,
                    family: Some(family.family_compact()),
                }),
                Format::Csv => kv_render(
                    &[
                        ("count", "infinite".to_string()),
                        ("family", family.family_compact()),
                    ],
                    format,
                ),
                Format::Table => {
                    format!("infinite; family {}\n", family.family_human()).into_bytes()
                }
            })
        }
        CountPrediction::Finite {
            n_small_divisors,
            total,
        } => Ok(match format {
            Format::Json => to_json_bytes(&CountOut {
                a: curve.a(),
                b: curve.b(),
                c: curve.c(),
                d: fp.value,
                count: serde_json::Value::from(total),
                n_small_divisors: Some(n_small_divisors),
                is_square: Some(fp.is_square),
                family: None,
            }),
            Format::Csv => kv_render(
                &[
                    ("count", total.to_string()),
                    ("N", n_small_divisors.to_string()),
                    ("square", fp.is_square.to_string()),
                ],
                format,
            ),
            Format::Table => {
                let square_note = if fp.is_square { ", perfect square" } else { "" };
                format!(
                    "{total} points (N = {n_small_divisors}, |D| = {}{square_note})\n",
                    fp.magnitude
                )
                .into_bytes()
            }
        }),
    }
}

// ---- analyze ----

#[derive(Serialize)]
struct RationalOut {
    num: i128,
    den: i128,
}

impl From<Rational> for RationalOut {
    fn from(r: Rational) -> Self {
        RationalOut {
            num: r.num(),
            den: r.den(),
        }
    }
}

#[derive(Serialize)]
struct RationalPointOut {
    x: RationalOut,
    y: RationalOut,
}

impl From<RationalPoint> for RationalPointOut {
    fn from(p: RationalPoint) -> Self {
        RationalPointOut {
            x: p.x.into(),
            y: p.y.into(),
        }
    }
}

#[derive(Serialize)]
struct IntervalOut {
    lo: Option<i128>,
    hi: Option<i128>,
}

impl From<Interval> for IntervalOut {
    fn from(i: Interval) -> Self {
        IntervalOut { lo: i.lo, hi: i.hi }
    }
}

#[derive(Serialize)]
struct MonotoneOut {
    lo: Option<i128>,
    hi: Option<i128>,
    direction: Monotonicity,
}

#[derive(Serialize)]
#[serde(untagged)]
enum AnalyzeOut {
    Line {
        a: i128,
        d: i128,
        case: &'static str,
        line: String,
        hole_x: i128,
    },
    Square(Box<AnalyzeSquareOut>),
}

#[derive(Serialize)]
struct AnalyzeSquareOut {
    a: i128,
    d: i128,
    case: &'static str,
    vertical_asymptote_x: i128,
    oblique: String,
    x_intercept: IntegralPoint,
    y_intercept: Option<RationalOut>,
    critical_xs: [i128; 2],
    local_max: RationalPointOut,
    local_min: RationalPointOut,
    monotone_intervals: Vec<MonotoneOut>,
    concave_down: IntervalOut,
    concave_up: IntervalOut,
    inflection_points: Vec<RationalPointOut>,
}

fn cmd_analyze(
    args: &CurveArgs,
    bound: i128,
    format: Format,
) -> std::result::Result<Vec<u8>, Failure> {
    let curve = parse_curve(args, bound)?;
    let form = square_case::as_square_form(&curve).ok_or_else(|| {
        Error::domain("analyze requires the square case b^2 = 4c (b = 2d, c = d^2)")
    })?;
    match square_case::analyze(&form) {
        AnalysisReport::Line { line, hole_x } => {
            let rendered = line.to_string();
            Ok(match format {
                Format::Json => to_json_bytes(&AnalyzeOut::Line {
                    a: form.a,
                    d: form.d,
                    case: "line",
                    line: rendered,
                    hole_x,
                }),
                _ => kv_render(
                    &[
                        ("case", format!("line (a = d = {})", form.a)),
                        ("line", rendered),
                        ("hole_x", hole_x.to_string()),
                    ],
                    format,
                ),
            })
        }
        AnalysisReport::ProperSquare(r) => Ok(match format {
            Format::Json => to_json_bytes(&AnalyzeOut::Square(Box::new(AnalyzeSquareOut {
                a: form.a,
                d: form.d,
                case: "square",
                vertical_asymptote_x: r.vertical_asymptote_x,
                oblique: r.oblique.to_string(),
                x_intercept: r.x_intercept,
                y_intercept: r.y_intercept.map(Into::into),
                critical_xs: r.critical_xs,
                local_max: r.local_max.into(),
                local_min: r.local_min.into(),
                monotone_intervals: r
                    .monotone_intervals
                    .iter()
                    .map(|m| MonotoneOut {
                        lo: m.interval.lo,
                        hi: m.interval.hi,
                        direction: m.direction,
                    })
                    .collect(),
                concave_down: r.concave_down.into(),
                concave_up: r.concave_up.into(),
                inflection_points: Vec::new(),
            }))),
            _ => {
                let monotone = r
                    .monotone_intervals
                    .iter()
                    .map(|m| {
                        let dir = match m.direction {
                            Monotonicity::Increasing => "increasing",
                            Monotonicity::Decreasing => "decreasing",
                        };
                        format!("{dir} on {}", m.interval)
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                let pairs = vec![
                    ("case", format!("square (a = {}, d = {})", form.a, form.d)),
                    (
                        "vertical_asymptote",
                        format!("x = {}", r.vertical_asymptote_x),
                    ),
                    ("oblique_asymptote", r.oblique.to_string()),
                    ("x_intercept", r.x_intercept.to_string()),
                    (
                        "y_intercept",
                        r.y_intercept
                            .map_or("none".to_string(), |v| format!("(0, {v})")),
                    ),
                    (
                        "critical_x",
                        format!("{}, {}", r.critical_xs[0], r.critical_xs[1]),
                    ),
                    ("local_max", r.local_max.to_string()),
                    ("local_min", r.local_min.to_string()),
                    ("monotone", monotone),
                    (
                        "concavity",
                        format!("down on {}; up on {}", r.concave_down, r.concave_up),
                    ),
                    ("inflection_points", "none".to_string()),
                ];
                kv_render(&pairs, format)
            }
        }),
    }
}

// ---- parametric ----

#[derive(Serialize)]
struct ParametricOut {
    a: i128,
    d: i128,
    positive: Vec<IntegralPoint>,
    negative: Vec<IntegralPoint>,
    zero: IntegralPoint,
}

fn cmd_parametric(
    args: &CurveArgs,
    bound: i128,
    format: Format,
) -> std::result::Result<Vec<u8>, Failure> {
    let curve = parse_curve(args, bound)?;
    let form = square_case::as_square_form(&curve).ok_or_else(|| {
        Error::domain("parametric requires the square case b^2 = 4c (b = 2d, c = d^2)")
    })?;
    let positive = square_case::parametric_points_positive(&form)?;
    let negative = square_case::parametric_points_negative(&form)?;
    let zero = square_case::zero_point(&form)?;
    Ok(match format {
        Format::Json => to_json_bytes(&ParametricOut {
            a: form.a,
            d: form.d,
            positive: positive.points().to_vec(),
            negative: negative.points().to_vec(),
            zero,
        }),
        Format::Csv => {
            let mut out = String::from("set,x,y\n");
            for p in &positive {
                out.push_str(&format!("positive,{},{}\n", p.x, p.y));
            }
            for p in &negative {
                out.push_str(&format!("negative,{},{}\n", p.x, p.y));
            }
            out.push_str(&format!("zero,{},{}\n", zero.x, zero.y));
            out.into_bytes()
        }
        Format::Table => {
            let join = |ps: &PointSet| {
                if ps.is_empty() {
                    "(none)".to_string()
                } else {
                    ps.iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                }
            };
            kv_render(
                &[
                    ("square form", format!("a = {}, d = {}", form.a, form.d)),
                    ("positive (y >= 1)", join(&positive)),
                    ("negative (y <= -1)", join(&negative)),
                    ("zero", zero.to_string()),
                ],
                format,
            )
        }
    })
}

// ---- trinomial ----

#[derive(Serialize)]
struct TrinomialOut {
    a: i128,
    b: i128,
    c: i128,
    discriminant: i128,
    nature: &'static str,
    integer_roots: Option<(i128, i128)>,
}

fn cmd_trinomial(
    args: &CurveArgs,
    bound: i128,
    format: Format,
) -> std::result::Result<Vec<u8>, Failure> {
    // reuse the coefficient bound check, then reinterpret as a trinomial
    let curve = parse_curve(args, bound)?;
    let g = Trinomial::new(curve.a(), curve.b(), curve.c())?;
    let disc = trinomial::discriminant(&g)?;
    let nature = match trinomial::classify_roots(&g)? {
        RootNature::TwoRational => "two_rational",
        RootNature::TwoIrrational => "two_irrational",
        RootNature::ComplexPair => "complex_pair",
    };
    let roots = trinomial::integer_roots(&g)?;
    let out = TrinomialOut {
        a: g.a(),
        b: g.b(),
        c: g.c(),
        discriminant: disc,
        nature,
        integer_roots: roots,
    };
    Ok(match format {
        Format::Json => to_json_bytes(&out),
        _ => kv_render(
            &[
                ("discriminant", disc.to_string()),
                ("nature", nature.to_string()),
                (
                    "integer_roots",
                    roots.map_or("none".to_string(), |(r1, r2)| format!("{r1}, {r2}")),
                ),
            ],
            format,
        ),
    })
}

// ---- verify ----

#[derive(Serialize)]
struct VerifyOut {
    status: &'static str,
    formula: usize,
    divisor_scan: usize,
    window_scan: usize,
}

fn cmd_verify(
    args: &CurveArgs,
    bound: i128,
    format: Format,
) -> std::result::Result<Vec<u8>, Failure> {
    let curve = parse_curve(args, bound)?;
    let by_formula = enumerate::enumerate_points(&curve)?;
    let by_divisors = oracle::divisor_scan_points(&curve)?;
    let by_window = oracle::window_scan_points(&curve, oracle::completeness_bound(&curve)?);
    if by_formula != by_divisors || by_formula != by_window {
        let detail = format!(
            "formula={} divisor-scan={} window-scan={}",
            by_formula.len(),
            by_divisors.len(),
            by_window.len()
        );
        return Err(Failure::Mismatch(detail));
    }
    let n = by_formula.len();
    Ok(match format {
        Format::Json => to_json_bytes(&VerifyOut {
            status: "ok",
            formula: n,
            divisor_scan: n,
            window_scan: n,
        }),
        Format::Csv => kv_render(
            &[
                ("status", "ok".to_string()),
                ("formula", n.to_string()),
                ("divisor_scan", n.to_string()),
                ("window_scan", n.to_string()),
            ],
            format,
        ),
        Format::Table => {
            format!("OK: {n} = {n} = {n} points (formula/divisor-scan/window-scan)\n").into_bytes()
        }
    })
}

// ---- plot ----

fn cmd_plot(
    args: &CurveArgs,
    bound: i128,
    explicit: [&Option<String>; 4],
) -> std::result::Result<Vec<u8>, Failure> {
    let curve = parse_curve(args, bound)?;
    let mut vp = default_viewport(&curve)?;
    let names = ["xmin", "xmax", "ymin", "ymax"];
    let slots: [&mut f64; 4] = [&mut vp.xmin, &mut vp.xmax, &mut vp.ymin, &mut vp.ymax];
    for ((slot, given), name) in slots.into_iter().zip(explicit).zip(names) {
        if let Some(raw) = given {
            *slot = parse_float(name, raw)?;
        }
    }
    let svg = match enumerate::classify(&curve)? {
        CurveClass::DegenerateLine => {
            let family = enumerate::degenerate_family(&curve)?;
            render_svg(&curve, &PlotSubject::Line(family), &vp)?
        }
        CurveClass::Hyperbola { .. } => {
            let points = enumerate::enumerate_points(&curve)?;
            render_svg(&curve, &PlotSubject::Hyperbola(&points), &vp)?
        }
    };
    Ok(svg.into_bytes())
}

// ---- batch ----

fn cmd_batch(path: &PathBuf, bound: i128) -> std::result::Result<Vec<u8>, Failure> {
    let mut payload = Vec::new();
    if path.as_os_str() == "-" {
        let stdin = std::io::stdin();
        batch_process(stdin.lock(), &mut payload, bound)?;
    } else {
        let file = std::fs::File::open(path)
            .map_err(|e| Error::parse(format!("cannot open {}: {e}", path.display())))?;
        batch_process(std::io::BufReader::new(file), &mut payload, bound)?;
    }
    Ok(payload)
}

/// Convenience for exercising [`run_cli`] in-process.
pub fn run_to_buffers<S: AsRef<str>>(args: &[S]) -> (i32, Vec<u8>, Vec<u8>) {
    let mut argv = vec!["hyperlattice".to_string()];
    argv.extend(args.iter().map(|s| s.as_ref().to_string()));
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = run_cli(argv, &mut stdout, &mut stderr);
    (code, stdout, stderr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (code, out, err) = run_to_buffers(args);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn points_json_matches_fixture() {
        let (code, out, _) = run(&["points", "0", "0", "-4", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.trim_end(),
            r#"[{"x":-4,"y":-3},{"x":-2,"y":0},{"x":-1,"y":3},{"x":1,"y":-3},{"x":2,"y":0},{"x":4,"y":3}]"#
        );
    }

    #[test]
    fn count_reports_infinite_family() {
        let (code, out, _) = run(&["count", "1", "2", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "infinite; family y = x + 1, x \u{2260} -1\n");
    }

    #[test]
    fn verify_reports_triple_agreement() {
        let (code, out, _) = run(&["verify", "2", "1", "10"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "OK: 12 = 12 = 12 points (formula/divisor-scan/window-scan)\n"
        );
    }

    #[test]
    fn domain_errors_exit_1() {
        // analyze on a non-square-case curve
        let (code, out, err) = run(&["analyze", "2", "1", "10"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.starts_with("error: domain: "));
        assert_eq!(err.lines().count(), 1);

        // points on a degenerate line
        let (code, _, err) = run(&["points", "1", "2", "1"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: domain: "));
    }

    #[test]
    fn parse_and_bound_errors_exit_2() {
        let (code, _, err) = run(&["points", "zero", "0", "1"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: parse: "));

        let (code, _, err) = run(&["points", "2000000001", "0", "1"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: bound: "));

        let (code, _, err) = run(&["points", "12", "0", "1", "--bound", "10"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: bound: "));

        let (code, _, _) = run(&["points", "10", "0", "1", "--bound", "10"]);
        assert_eq!(code, 0);

        let (code, _, err) = run(&["nonsense"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn classify_table_and_json() {
        let (code, out, _) = run(&["classify", "0", "0", "-4"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "D: -4\nclass: hyperbola\nsign: negative\nsquare: true\nspecial_form: prime_square (p = 2)\nexpected_points: 6\n"
        );

        let (_, out, _) = run(&["classify", "1", "2", "1", "--format", "json"]);
        assert_eq!(
            out.trim_end(),
            r#"{"a":1,"b":2,"c":1,"D":0,"class":"degenerate_line","family":"y=x+1, x!=-1"}"#
        );
    }

    #[test]
    fn count_finite_formats() {
        let (_, out, _) = run(&["count", "2", "1", "10"]);
        assert_eq!(out, "12 points (N = 3, |D| = 12)\n");
        let (_, out, _) = run(&["count", "0", "0", "-4"]);
        assert_eq!(out, "6 points (N = 2, |D| = 4, perfect square)\n");
        let (_, out, _) = run(&["count", "2", "1", "10", "--format", "json"]);
        assert_eq!(
            out.trim_end(),
            r#"{"a":2,"b":1,"c":10,"D":12,"count":12,"n_small_divisors":3,"is_square":false}"#
        );
    }

    #[test]
    fn trinomial_outputs() {
        let (code, out, _) = run(&["trinomial", "2", "-6", "4"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "discriminant: 4\nnature: two_rational\ninteger_roots: 1, 2\n"
        );

        let (_, out, _) = run(&["trinomial", "2", "-3", "1", "--format", "json"]);
        assert_eq!(
            out.trim_end(),
            r#"{"a":2,"b":-3,"c":1,"discriminant":1,"nature":"two_rational","integer_roots":null}"#
        );

        let (code, _, err) = run(&["trinomial", "0", "1", "1"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: domain: "));
    }

    #[test]
    fn analyze_formats() {
        let (code, out, _) = run(&["analyze", "1", "2", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "case: line (a = d = 1)\nline: y = x + 1\nhole_x: -1\n");

        let (code, out, _) = run(&["analyze", "0", "4", "4", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["critical_xs"], serde_json::json!([-2, 2]));
        assert_eq!(v["local_min"]["y"]["num"], serde_json::json!(8));
        assert_eq!(v["y_intercept"], serde_json::Value::Null);

        let (_, out, _) = run(&["analyze", "2", "6", "9", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["y_intercept"], serde_json::json!({"num": 9, "den": 2}));
    }

    #[test]
    fn parametric_formats() {
        let (code, out, _) = run(&["parametric", "0", "4", "4"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "square form: a = 0, d = 2\npositive (y >= 1): (1, 9), (2, 8), (4, 9)\nnegative (y <= -1): (-4, -1), (-1, -1)\nzero: (-2, 0)\n"
        );
        let (_, out, _) = run(&["parametric", "0", "4", "4", "--format", "csv"]);
        assert_eq!(
            out,
            "set,x,y\npositive,1,9\npositive,2,8\npositive,4,9\nnegative,-4,-1\nnegative,-1,-1\nzero,-2,0\n"
        );
        // a = d is the line case
        let (code, _, err) = run(&["parametric", "1", "2", "1"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: domain: "));
    }

    #[test]
    fn plot_emits_svg() {
        let (code, out, _) = run(&["plot", "0", "0", "-4"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("<svg"));
        assert_eq!(out.matches(r#"class="point""#).count(), 6);

        let (code, _, err) = run(&["plot", "0", "0", "-4", "--xmin", "3", "--xmax", "1"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: domain: "));
    }

    #[test]
    fn help_and_version_exit_zero() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("classify"));
        let (code, out, _) = run(&["--version"]);
        assert_eq!(code, 0);
        assert!(out.contains("hyperlattice"));
    }
}

//! SVG rendering of a curve with its integral points.
//!
//! The curve is sampled as y = x + (b - a) + D/(x + a), one polyline path
//! per branch, 512 uniform samples each, never sampling within 10^-3 of the
//! viewport width of the pole x = -a. Hyperbolas get dashed vertical and
//! oblique asymptotes; the degenerate line gets an open-circle hole marker
//! at (-a, b - 2a). One filled circle is emitted per integral point inside
//! the viewport, so marker count always equals the in-viewport point count.
//!
//! Output is deterministic: fixed canvas, fixed 3-decimal coordinate
//! formatting, fixed element order.

use std::fmt::Write as _;

use crate::enumerate;
use crate::error::{Error, Result};
use crate::model::{CurveParams, ParametricLine, PointSet};

const CANVAS: f64 = 640.0;
const SAMPLES_PER_BRANCH: usize = 512;
const POLE_EXCLUSION: f64 = 1e-3;

/// Axis-aligned world-coordinate window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Viewport {
    pub fn centered(cx: f64, cy: f64, half_width: f64, half_height: f64) -> Self {
        Viewport {
            xmin: cx - half_width,
            xmax: cx + half_width,
            ymin: cy - half_height,
            ymax: cy + half_height,
        }
    }

    fn validate(&self, pole: f64) -> Result<()> {
        if !(self.xmin < self.xmax && self.ymin < self.ymax) {
            return Err(Error::domain(format!(
                "empty viewport [{}, {}] x [{}, {}]",
                self.xmin, self.xmax, self.ymin, self.ymax
            )));
        }
        // the pole may be strictly inside or strictly outside, never on the
        // edge: an edge pole would leave exactly one side of x = -a visible
        if self.xmin == pole || self.xmax == pole {
            return Err(Error::domain(format!(
                "viewport edge coincides with x = {pole}; move it off the excluded abscissa"
            )));
        }
        Ok(())
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        self.xmin <= x && x <= self.xmax && self.ymin <= y && y <= self.ymax
    }
}

/// What to mark on the plot: a finite point set or the punctured-line family.
pub enum PlotSubject<'a> {
    Hyperbola(&'a PointSet),
    Line(ParametricLine),
}

/// Default window: centered on (-a, b - 2a) with half-width
/// max(4, 2*sqrt(|D|) + 2). All points satisfy |x + a| <= |D|, but |D| can
/// be enormous; the sqrt scale keeps the near-center points legible and
/// explicit bounds restore completeness when wanted.
pub fn default_viewport(curve: &CurveParams) -> Result<Viewport> {
    let fp = enumerate::fingerprint(curve)?;
    let root = crate::arith::isqrt(fp.magnitude)?;
    let half = (2 * root + 2).max(4) as f64;
    let center_x = curve.pole() as f64;
    let center_y = (curve.b() - 2 * curve.a()) as f64;
    Ok(Viewport::centered(center_x, center_y, half, half))
}

fn fmt3(v: f64) -> String {
    format!("{v:.3}")
}

struct Mapper {
    vp: Viewport,
}

impl Mapper {
    fn px(&self, x: f64) -> f64 {
        (x - self.vp.xmin) / (self.vp.xmax - self.vp.xmin) * CANVAS
    }

    fn py(&self, y: f64) -> f64 {
        CANVAS - (y - self.vp.ymin) / (self.vp.ymax - self.vp.ymin) * CANVAS
    }
}

/// Renders the curve, asymptotes and markers into a standalone SVG document.
pub fn render_svg(
    curve: &CurveParams,
    subject: &PlotSubject<'_>,
    viewport: &Viewport,
) -> Result<String> {
    let pole = curve.pole() as f64;
    viewport.validate(pole)?;

    let fp = enumerate::fingerprint(curve)?;
    let shift = (curve.b() - curve.a()) as f64;
    let d_value = fp.value as f64;
    let vp = *viewport;
    let map = Mapper { vp };
    let width = vp.xmax - vp.xmin;
    let height = vp.ymax - vp.ymin;

    let mut doc = String::new();
    let _ = writeln!(
        doc,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#,
        c = CANVAS
    );
    let _ = writeln!(
        doc,
        r##"<rect width="{c}" height="{c}" fill="#ffffff"/>"##,
        c = CANVAS
    );

    // branch sample intervals, pole neighborhood excluded
    let eps = POLE_EXCLUSION * width;
    let mut branches: Vec<(f64, f64)> = Vec::new();
    if vp.xmin < pole && pole < vp.xmax {
        branches.push((vp.xmin, pole - eps));
        branches.push((pole + eps, vp.xmax));
    } else if pole < vp.xmin {
        branches.push((vp.xmin.max(pole + eps), vp.xmax));
    } else {
        branches.push((vp.xmin, vp.xmax.min(pole - eps)));
    }

    let f = |x: f64| x + shift + d_value / (x + curve.a() as f64);
    let y_lo = vp.ymin - height;
    let y_hi = vp.ymax + height;
    for &(lo, hi) in &branches {
        if lo >= hi {
            continue;
        }
        let mut d_attr = String::new();
        for i in 0..SAMPLES_PER_BRANCH {
            let x = lo + (hi - lo) * i as f64 / (SAMPLES_PER_BRANCH - 1) as f64;
            let y = f(x).clamp(y_lo, y_hi);
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(d_attr, "{}{},{} ", cmd, fmt3(map.px(x)), fmt3(map.py(y)));
        }
        let _ = writeln!(
            doc,
            r##"<path class="curve" fill="none" stroke="#1f77b4" stroke-width="1.5" d="{}"/>"##,
            d_attr.trim_end()
        );
    }

    if !fp.is_zero() {
        // vertical asymptote, visible only when the pole is inside
        if vp.xmin < pole && pole < vp.xmax {
            let _ = writeln!(
                doc,
                r##"<line class="asymptote" x1="{x}" y1="0.000" x2="{x}" y2="{c}" stroke="#888888" stroke-width="1" stroke-dasharray="6,4"/>"##,
                x = fmt3(map.px(pole)),
                c = fmt3(CANVAS),
            );
        }
        // oblique asymptote y = x + (b - a), clipped to the window
        let lo = vp.xmin.max(vp.ymin - shift);
        let hi = vp.xmax.min(vp.ymax - shift);
        if lo < hi {
            let _ = writeln!(
                doc,
                r##"<line class="asymptote" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888888" stroke-width="1" stroke-dasharray="6,4"/>"##,
                fmt3(map.px(lo)),
                fmt3(map.py(lo + shift)),
                fmt3(map.px(hi)),
                fmt3(map.py(hi + shift)),
            );
        }
    }

    // one filled marker per in-viewport integral point
    let mut markers: Vec<(f64, f64)> = Vec::new();
    match subject {
        PlotSubject::Hyperbola(points) => {
            for p in points.iter() {
                let (x, y) = (p.x as f64, p.y as f64);
                if vp.contains(x, y) {
                    markers.push((x, y));
                }
            }
        }
        PlotSubject::Line(family) => {
            if width > 2e7 {
                return Err(Error::domain(
                    "viewport too wide to mark every lattice point of the line family",
                ));
            }
            let lo = vp.xmin.ceil() as i128;
            let hi = vp.xmax.floor() as i128;
            for t in lo..=hi {
                if t == family.excluded_x {
                    continue;
                }
                let (x, y) = (t as f64, family.y_at(t) as f64);
                if vp.contains(x, y) {
                    markers.push((x, y));
                }
            }
        }
    }
    for (x, y) in markers {
        let _ = writeln!(
            doc,
            r##"<circle class="point" cx="{}" cy="{}" r="4" fill="#d62728"/>"##,
            fmt3(map.px(x)),
            fmt3(map.py(y)),
        );
    }

    // the puncture of the degenerate line, drawn as an open circle
    if let PlotSubject::Line(family) = subject {
        let hole = family.hole();
        let _ = writeln!(
            doc,
            r##"<circle class="hole" cx="{}" cy="{}" r="4" fill="#ffffff" stroke="#d62728" stroke-width="1.5"/>"##,
            fmt3(map.px(hole.x as f64)),
            fmt3(map.py(hole.y as f64)),
        );
    }

    doc.push_str("</svg>\n");
    Ok(doc)
}

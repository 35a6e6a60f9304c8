//! Minimal self-contained log-log polyline plot. Both axes are
//! logarithmic; zero curve values cannot be drawn on a log axis and are
//! skipped.

use std::fmt::Write as _;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 440.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 50.0;

pub fn log_log_curve_svg(scales: &[f64], omega: &[f64], subsample: usize, title: &str) -> String {
    let step = subsample.max(1);
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let last = scales.len().saturating_sub(1);
    for (idx, (&t, &w)) in scales.iter().zip(omega).enumerate() {
        if (idx % step == 0 || idx == last) && t > 0.0 && w > 0.0 {
            pts.push((t.log10(), w.log10()));
        }
    }

    let mut svg = String::new();
    write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n\
         <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    )
    .unwrap();
    writeln!(
        svg,
        "<text x=\"{:.2}\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" \
         text-anchor=\"middle\">{title}</text>",
        WIDTH / 2.0
    )
    .unwrap();

    if pts.is_empty() {
        write!(
            svg,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" \
             text-anchor=\"middle\">no positive values to plot</text>\n</svg>\n",
            WIDTH / 2.0,
            HEIGHT / 2.0
        )
        .unwrap();
        return svg;
    }

    let (mut x_lo, mut x_hi) = min_max(pts.iter().map(|p| p.0));
    let (mut y_lo, mut y_hi) = min_max(pts.iter().map(|p| p.1));
    pad_range(&mut x_lo, &mut x_hi);
    pad_range(&mut y_lo, &mut y_hi);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |lx: f64| MARGIN_LEFT + (lx - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |ly: f64| MARGIN_TOP + plot_h - (ly - y_lo) / (y_hi - y_lo) * plot_h;

    // gridlines and tick labels at integer powers of ten
    for e in ticks(x_lo, x_hi) {
        let x = sx(e);
        write!(
            svg,
            "<line x1=\"{x:.2}\" y1=\"{:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"#ddd\"/>\n\
             <text x=\"{x:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"middle\">1e{}</text>\n",
            MARGIN_TOP,
            MARGIN_TOP + plot_h,
            MARGIN_TOP + plot_h + 16.0,
            e as i64
        )
        .unwrap();
    }
    for e in ticks(y_lo, y_hi) {
        let y = sy(e);
        write!(
            svg,
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"#ddd\"/>\n\
             <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"end\">1e{}</text>\n",
            MARGIN_LEFT,
            MARGIN_LEFT + plot_w,
            MARGIN_LEFT - 6.0,
            y + 4.0,
            e as i64
        )
        .unwrap();
    }

    writeln!(
        svg,
        "<rect x=\"{MARGIN_LEFT}\" y=\"{MARGIN_TOP}\" width=\"{plot_w:.2}\" height=\"{plot_h:.2}\" \
         fill=\"none\" stroke=\"black\"/>"
    )
    .unwrap();

    let mut points = String::new();
    for (lx, ly) in &pts {
        write!(points, "{:.2},{:.2} ", sx(*lx), sy(*ly)).unwrap();
    }
    writeln!(
        svg,
        "<polyline points=\"{}\" fill=\"none\" stroke=\"#47a3ff\" stroke-width=\"1.5\"/>",
        points.trim_end()
    )
    .unwrap();

    writeln!(
        svg,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"middle\">scale t (log)</text>",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    )
    .unwrap();
    writeln!(
        svg,
        "<text x=\"16\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"middle\" transform=\"rotate(-90 16 {:.2})\">omega (log)</text>",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    )
    .unwrap();
    svg.push_str("</svg>\n");
    svg
}

fn min_max(vals: impl Iterator<Item = f64>) -> (f64, f64) {
    vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

fn pad_range(lo: &mut f64, hi: &mut f64) {
    if *hi - *lo < 1e-9 {
        *lo -= 0.5;
        *hi += 0.5;
    } else {
        let pad = (*hi - *lo) * 0.05;
        *lo -= pad;
        *hi += pad;
    }
}

fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let first = lo.ceil() as i64;
    let last = hi.floor() as i64;
    if last < first {
        return Vec::new();
    }
    let count = (last - first + 1) as usize;
    let stride = count.div_ceil(8).max(1);
    (first..=last)
        .step_by(stride)
        .map(|e| e as f64)
        .collect()
}

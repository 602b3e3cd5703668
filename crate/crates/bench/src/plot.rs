//! Hand-built SVG line charts. Each algorithm is drawn as exactly one
//! `<polyline>`; axes, grid and legend use `<line>`, `<rect>` and `<text>`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::records::BenchRecord;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    /// Mean elapsed time against n, both axes logarithmic.
    RuntimeLogLog,
    /// `I2(n) / I2(n/2)` against n on a linear y axis.
    IterationRatio,
    /// Mean elapsed time against sigma at the largest n.
    SigmaSweep,
}

impl PlotKind {
    pub fn name(&self) -> &'static str {
        match self {
            PlotKind::RuntimeLogLog => "runtime_loglog",
            PlotKind::IterationRatio => "iteration_ratio",
            PlotKind::SigmaSweep => "sigma_sweep",
        }
    }
}

impl FromStr for PlotKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "runtime_loglog" | "runtime" => Ok(PlotKind::RuntimeLogLog),
            "iteration_ratio" | "ratio" => Ok(PlotKind::IterationRatio),
            "sigma_sweep" | "sigma" => Ok(PlotKind::SigmaSweep),
            other => Err(Error::Plot(format!("unknown plot kind '{other}'"))),
        }
    }
}

pub fn emit_plot(records: &[BenchRecord], kind: PlotKind, path: &Path) -> Result<()> {
    let svg = render_plot(records, kind)?;
    std::fs::write(path, svg).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn render_plot(records: &[BenchRecord], kind: PlotKind) -> Result<String> {
    if records.is_empty() {
        return Err(Error::Plot("no records to plot".into()));
    }
    let chart = match kind {
        PlotKind::RuntimeLogLog => runtime_chart(records),
        PlotKind::IterationRatio => ratio_chart(records)?,
        PlotKind::SigmaSweep => sigma_chart(records)?,
    };
    Ok(chart.render())
}

/// Per key bits: the key, the running sum and the count.
type Sums = BTreeMap<u64, (f64, f64, usize)>;

/// Per algorithm in first-seen order, the mean of `value` for each key.
fn series_means(
    records: &[&BenchRecord],
    key: impl Fn(&BenchRecord) -> f64,
    value: impl Fn(&BenchRecord) -> f64,
) -> Vec<(String, Vec<(f64, f64)>)> {
    let mut out: Vec<(String, Sums)> = Vec::new();
    for r in records {
        let slot = match out.iter().position(|(a, _)| *a == r.algorithm) {
            Some(k) => k,
            None => {
                out.push((r.algorithm.clone(), BTreeMap::new()));
                out.len() - 1
            }
        };
        let k = key(r);
        let e = out[slot].1.entry(k.to_bits()).or_insert((k, 0.0, 0));
        e.1 += value(r);
        e.2 += 1;
    }
    out.into_iter()
        .map(|(a, m)| {
            let mut pts: Vec<(f64, f64)> =
                m.into_values().map(|(k, s, c)| (k, s / c as f64)).collect();
            pts.sort_by(|a, b| a.0.total_cmp(&b.0));
            (a, pts)
        })
        .collect()
}

fn runtime_chart(records: &[BenchRecord]) -> Chart {
    let all: Vec<&BenchRecord> = records.iter().collect();
    let series = series_means(&all, |r| r.n as f64, |r| r.elapsed_us)
        .into_iter()
        .map(|(name, pts)| Series {
            name,
            points: pts
                .into_iter()
                .map(|(n, t)| (n.log2(), log10_positive(t)))
                .collect(),
        })
        .collect();
    Chart {
        title: "Mean running time".into(),
        x_label: "n (points)".into(),
        y_label: "mean elapsed time (µs)".into(),
        x_axis: Axis::Log2,
        y_axis: Axis::Log10,
        series,
    }
}

fn ratio_chart(records: &[BenchRecord]) -> Result<Chart> {
    let mut sizes: Vec<usize> = records.iter().map(|r| r.n).collect();
    sizes.sort_unstable();
    sizes.dedup();
    if sizes.len() < 2 {
        return Err(Error::Plot("insufficient series".into()));
    }
    let all: Vec<&BenchRecord> = records.iter().collect();
    let series: Vec<Series> = series_means(&all, |r| r.n as f64, |r| r.counters.inner_per_outer())
        .into_iter()
        .filter_map(|(name, pts)| {
            let points: Vec<(f64, f64)> = pts
                .windows(2)
                .filter(|w| w[1].0 == 2.0 * w[0].0 && w[0].1 > 0.0)
                .map(|w| (w[1].0.log2(), w[1].1 / w[0].1))
                .collect();
            (!points.is_empty()).then_some(Series { name, points })
        })
        .collect();
    if series.is_empty() {
        return Err(Error::Plot("insufficient series".into()));
    }
    Ok(Chart {
        title: "Inner iterations per outer iteration, I2(n) / I2(n/2)".into(),
        x_label: "n (points)".into(),
        y_label: "I2(n) / I2(n/2)".into(),
        x_axis: Axis::Log2,
        y_axis: Axis::Linear,
        series,
    })
}

fn sigma_chart(records: &[BenchRecord]) -> Result<Chart> {
    let with_sigma: Vec<&BenchRecord> = records.iter().filter(|r| r.sigma.is_some()).collect();
    let n = with_sigma
        .iter()
        .map(|r| r.n)
        .max()
        .ok_or_else(|| Error::Plot("no records with a sigma value".into()))?;
    let at_n: Vec<&BenchRecord> = with_sigma.into_iter().filter(|r| r.n == n).collect();
    let series = series_means(&at_n, |r| r.sigma.unwrap_or(f64::NAN), |r| r.elapsed_us)
        .into_iter()
        .map(|(name, pts)| Series {
            name,
            points: pts
                .into_iter()
                .map(|(s, t)| (s.log2(), log10_positive(t)))
                .collect(),
        })
        .collect();
    Ok(Chart {
        title: format!("Mean running time against sigma, n = {n}"),
        x_label: "sigma".into(),
        y_label: "mean elapsed time (µs)".into(),
        x_axis: Axis::Log2,
        y_axis: Axis::Log10,
        series,
    })
}

/// Timer resolution can report zero; clamp to a nanosecond.
fn log10_positive(us: f64) -> f64 {
    us.max(1e-3).log10()
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Axis {
    Linear,
    /// Values are already `log2` of the data.
    Log2,
    /// Values are already `log10` of the data.
    Log10,
}

impl Axis {
    fn ticks(self, lo: f64, hi: f64) -> (f64, f64, Vec<f64>) {
        match self {
            Axis::Log2 | Axis::Log10 => {
                let (a, mut b) = (lo.floor(), hi.ceil());
                if a == b {
                    b += 1.0;
                }
                let step = ((b - a) / 12.0).ceil().max(1.0);
                let ticks = (0..)
                    .map(|k| a + k as f64 * step)
                    .take_while(|&t| t <= b + 1e-9)
                    .collect();
                (a, b, ticks)
            }
            Axis::Linear => {
                let lo = lo.min(0.0);
                let hi = if hi > lo { hi } else { lo + 1.0 };
                let raw = (hi - lo) / 5.0;
                let mag = 10f64.powf(raw.log10().floor());
                let step = [1.0, 2.0, 2.5, 5.0, 10.0]
                    .iter()
                    .map(|m| m * mag)
                    .find(|&s| s >= raw)
                    .unwrap_or(10.0 * mag);
                let b = (hi / step).ceil() * step;
                let a = (lo / step).floor() * step;
                let ticks = (0..)
                    .map(|k| a + k as f64 * step)
                    .take_while(|&t| t <= b + step * 1e-9)
                    .collect();
                (a, b, ticks)
            }
        }
    }

    fn label(self, t: f64) -> String {
        match self {
            Axis::Linear => format!("{}", (t * 1e6).round() / 1e6),
            Axis::Log2 => power_label(2, t),
            Axis::Log10 => power_label(10, t),
        }
    }
}

fn power_label(base: u32, exponent: f64) -> String {
    format!(
        r#"{base}<tspan dy="-6" font-size="10">{}</tspan>"#,
        exponent.round() as i64
    )
}

struct Series {
    name: String,
    points: Vec<(f64, f64)>,
}

struct Chart {
    title: String,
    x_label: String,
    y_label: String,
    x_axis: Axis,
    y_axis: Axis,
    series: Vec<Series>,
}

const WIDTH: f64 = 760.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

impl Chart {
    fn render(&self) -> String {
        let (xs, ys): (Vec<f64>, Vec<f64>) = self
            .series
            .iter()
            .flat_map(|s| s.points.iter().copied())
            .unzip();
        let fold = |v: &[f64]| {
            v.iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| {
                    (a.min(x), b.max(x))
                })
        };
        let (x_lo, x_hi) = fold(&xs);
        let (y_lo, y_hi) = fold(&ys);
        let (x0, x1, x_ticks) = self.x_axis.ticks(x_lo, x_hi);
        let (y0, y1, y_ticks) = self.y_axis.ticks(y_lo, y_hi);

        let plot_w = WIDTH - LEFT - RIGHT;
        let plot_h = HEIGHT - TOP - BOTTOM;
        let px = |x: f64| LEFT + (x - x0) / (x1 - x0) * plot_w;
        let py = |y: f64| TOP + plot_h - (y - y0) / (y1 - y0) * plot_h;

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
            LEFT + plot_w / 2.0,
            escape(&self.title)
        );

        for &t in &x_ticks {
            let x = px(t);
            let _ = writeln!(
                s,
                r##"<line x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{:.2}" stroke="#e5e5e5"/>"##,
                TOP + plot_h
            );
            let _ = writeln!(
                s,
                r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                TOP + plot_h + 18.0,
                self.x_axis.label(t)
            );
        }
        for &t in &y_ticks {
            let y = py(t);
            let _ = writeln!(
                s,
                r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#e5e5e5"/>"##,
                LEFT + plot_w
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                LEFT - 8.0,
                y + 4.0,
                self.y_axis.label(t)
            );
        }
        let _ = writeln!(
            s,
            r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            LEFT + plot_w / 2.0,
            HEIGHT - 16.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            s,
            r#"<text x="20" y="{0:.2}" text-anchor="middle" transform="rotate(-90 20 {0:.2})">{1}</text>"#,
            TOP + plot_h / 2.0,
            escape(&self.y_label)
        );

        for (k, series) in self.series.iter().enumerate() {
            let color = COLORS[k % COLORS.len()];
            let pts: Vec<String> = series
                .points
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                .collect();
            let _ = writeln!(
                s,
                r#"<polyline data-series="{}" points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
                escape(&series.name),
                pts.join(" ")
            );
            for &(x, y) in &series.points {
                let _ = writeln!(
                    s,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{color}"/>"#,
                    px(x),
                    py(y)
                );
            }
            let ly = TOP + 12.0 + 20.0 * k as f64;
            let lx = LEFT + plot_w + 16.0;
            let _ = writeln!(
                s,
                r#"<rect x="{lx}" y="{:.2}" width="18" height="4" fill="{color}"/>"#,
                ly - 4.0
            );
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{:.2}">{}</text>"#,
                lx + 24.0,
                ly + 2.0,
                escape(&series.name)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

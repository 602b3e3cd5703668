//! Browser demo. The plain functions hold the logic and are tested natively;
//! the `#[wasm_bindgen]` exports only convert their results for JavaScript.

use closest_pair::generators::{Distribution, GenSpec};
use closest_pair::grid::mm_grid;
use closest_pair::{delta_bar, Algorithm, Point};
use wasm_bindgen::prelude::*;

/// Largest instance the page will generate.
pub const MAX_POINTS: usize = 200_000;

#[derive(Debug, Clone, PartialEq)]
pub struct DemoResult {
    pub points: Vec<Point>,
    pub delta: f64,
    pub pair: (usize, usize),
    pub outer: u64,
    pub inner: u64,
    pub distance_evaluations: u64,
}

pub fn parse_distribution(name: &str, sigma: f64) -> Result<Distribution, String> {
    match name {
        "uniform" => Ok(Distribution::Uniform),
        "tnormal" => Ok(Distribution::truncated_normal(sigma)),
        "adversarial" => Ok(Distribution::AdversarialMm),
        other => Err(format!("unknown distribution '{other}'")),
    }
}

/// Generates an instance and solves it with one algorithm.
pub fn generate_and_solve(
    algorithm: &str,
    distribution: &str,
    n: usize,
    sigma: f64,
    seed: u64,
) -> Result<DemoResult, String> {
    if n > MAX_POINTS {
        return Err(format!("at most {MAX_POINTS} points"));
    }
    let algorithm: Algorithm = algorithm.parse().map_err(|e| format!("{e}"))?;
    if algorithm == Algorithm::Ap && n > 20_000 {
        return Err("ap is limited to 20000 points in the browser".into());
    }
    let distribution = parse_distribution(distribution, sigma)?;
    let points = GenSpec {
        n,
        distribution,
        seed,
    }
    .generate()
    .map_err(|e| e.to_string())?;
    let s = algorithm.run(&points, seed).map_err(|e| e.to_string())?;
    Ok(DemoResult {
        delta: s.delta(),
        pair: (s.pair.first_index, s.pair.second_index),
        outer: s.counters.outer_iterations,
        inner: s.counters.inner_iterations,
        distance_evaluations: s.counters.distance_evaluations,
        points,
    })
}

/// `(n, delta_bar(n), delta_bar(n) * sqrt(n))` at `samples` sizes spaced
/// evenly in `log n` between `n_min` and `n_max`.
pub fn delta_bar_curve(
    n_min: usize,
    n_max: usize,
    samples: usize,
) -> Result<Vec<(usize, f64, f64)>, String> {
    if n_min < 2 || n_max < n_min || samples == 0 {
        return Err("need 2 <= n_min <= n_max and samples >= 1".into());
    }
    let (lo, hi) = ((n_min as f64).ln(), (n_max as f64).ln());
    let mut sizes: Vec<usize> = (0..samples)
        .map(|k| {
            let t = if samples == 1 {
                0.0
            } else {
                k as f64 / (samples - 1) as f64
            };
            ((lo + t * (hi - lo)).exp().round() as usize).clamp(n_min, n_max)
        })
        .collect();
    sizes.dedup();
    sizes
        .into_iter()
        .map(|n| {
            let d = delta_bar(n).map_err(|e| e.to_string())?.delta_bar;
            Ok((n, d, d * (n as f64).sqrt()))
        })
        .collect()
}

/// The cppMM grid over a point set: geometry plus per-cell occupancy,
/// column-major with `j` (y) fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pub origin: Point,
    pub cell_size: f64,
    pub cols: usize,
    pub rows: usize,
    pub counts: Vec<u32>,
}

pub fn grid_layout(points: &[Point]) -> Result<Option<Layout>, String> {
    let Some(grid) = mm_grid(points).map_err(|e| e.to_string())? else {
        return Ok(None);
    };
    let mut counts = Vec::with_capacity(grid.cols() * grid.rows());
    for i in 1..=grid.cols() {
        for j in 1..=grid.rows() {
            counts.push(grid.bucket(i, j).len() as u32);
        }
    }
    Ok(Some(Layout {
        origin: grid.origin(),
        cell_size: grid.cell_size(),
        cols: grid.cols(),
        rows: grid.rows(),
        counts,
    }))
}

fn flatten(points: &[Point]) -> Vec<f64> {
    points.iter().flat_map(|p| [p.x, p.y]).collect()
}

fn unflatten(xy: &[f64]) -> Vec<Point> {
    xy.chunks_exact(2).map(|c| Point::new(c[0], c[1])).collect()
}

#[wasm_bindgen]
pub struct SolveOutput {
    inner: DemoResult,
}

#[wasm_bindgen]
impl SolveOutput {
    /// Coordinates as `x0, y0, x1, y1, ...`.
    #[wasm_bindgen(getter)]
    pub fn points(&self) -> Vec<f64> {
        flatten(&self.inner.points)
    }
    #[wasm_bindgen(getter)]
    pub fn delta(&self) -> f64 {
        self.inner.delta
    }
    #[wasm_bindgen(getter)]
    pub fn first(&self) -> usize {
        self.inner.pair.0
    }
    #[wasm_bindgen(getter)]
    pub fn second(&self) -> usize {
        self.inner.pair.1
    }
    #[wasm_bindgen(getter)]
    pub fn outer(&self) -> f64 {
        self.inner.outer as f64
    }
    #[wasm_bindgen(getter)]
    pub fn inner_iterations(&self) -> f64 {
        self.inner.inner as f64
    }
    #[wasm_bindgen(getter)]
    pub fn distance_evaluations(&self) -> f64 {
        self.inner.distance_evaluations as f64
    }
}

#[wasm_bindgen]
pub fn solve(
    algorithm: &str,
    distribution: &str,
    n: usize,
    sigma: f64,
    seed: u32,
) -> Result<SolveOutput, JsError> {
    generate_and_solve(algorithm, distribution, n, sigma, seed as u64)
        .map(|inner| SolveOutput { inner })
        .map_err(|e| JsError::new(&e))
}

/// Flat `n, delta_bar, delta_bar * sqrt(n)` triples.
#[wasm_bindgen(js_name = deltaBarCurve)]
pub fn delta_bar_curve_js(n_min: usize, n_max: usize, samples: usize) -> Result<Vec<f64>, JsError> {
    delta_bar_curve(n_min, n_max, samples)
        .map(|c| {
            c.into_iter()
                .flat_map(|(n, d, s)| [n as f64, d, s])
                .collect()
        })
        .map_err(|e| JsError::new(&e))
}

/// `[origin_x, origin_y, cell_size, cols, rows, count_1_1, count_1_2, ...]`,
/// or an empty array when the points span no area.
#[wasm_bindgen(js_name = gridLayout)]
pub fn grid_layout_js(xy: &[f64]) -> Result<Vec<f64>, JsError> {
    let layout = grid_layout(&unflatten(xy)).map_err(|e| JsError::new(&e))?;
    Ok(layout.map_or_else(Vec::new, |l| {
        let mut out = vec![
            l.origin.x,
            l.origin.y,
            l.cell_size,
            l.cols as f64,
            l.rows as f64,
        ];
        out.extend(l.counts.iter().map(|&c| c as f64));
        out
    }))
}

//! Seeded point-cloud generators for the benchmark inputs.
//!
//! All randomness comes from [`ProjectRng`] seeded with the caller's seed,
//! so equal arguments give bit-identical output.

use rand::Rng;

use crate::geometry::Point;
use crate::packing::delta_bar;
use crate::{rng_from_seed, Error, ProjectRng, Result};

/// Point distribution of a generated instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Distribution {
    Uniform,
    TruncatedNormal {
        mu: Point,
        sigma: f64,
    },
    /// The grid worst case: almost every point in one packing-bound cell.
    AdversarialMm,
}

impl Distribution {
    pub const DEFAULT_MU: Point = Point::new(0.5, 0.5);
    pub const DEFAULT_SIGMA: f64 = 0.2;

    pub fn truncated_normal(sigma: f64) -> Self {
        Distribution::TruncatedNormal {
            mu: Self::DEFAULT_MU,
            sigma,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::TruncatedNormal { .. } => "tnormal",
            Distribution::AdversarialMm => "adversarial",
        }
    }

    pub fn sigma(&self) -> Option<f64> {
        match self {
            Distribution::TruncatedNormal { sigma, .. } => Some(*sigma),
            _ => None,
        }
    }
}

/// Everything needed to reproduce one instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub distribution: Distribution,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Vec<Point>> {
        match self.distribution {
            Distribution::Uniform => gen_uniform(self.n, self.seed),
            Distribution::TruncatedNormal { mu, sigma } => {
                gen_truncated_normal(self.n, mu, sigma, self.seed)
            }
            Distribution::AdversarialMm => gen_adversarial_mm(self.n),
        }
    }
}

/// `n` points with both coordinates uniform on `[0, 1)`.
pub fn gen_uniform(n: usize, seed: u64) -> Result<Vec<Point>> {
    if n < 2 {
        return Err(Error::NTooSmall { n, min: 2 });
    }
    let mut rng = rng_from_seed(seed);
    Ok((0..n).map(|_| Point::new(rng.gen(), rng.gen())).collect())
}

/// Pair of independent standard normals by the Marsaglia polar method.
fn polar_pair(rng: &mut ProjectRng) -> (f64, f64) {
    loop {
        let u: f64 = rng.gen_range(-1.0..1.0);
        let v: f64 = rng.gen_range(-1.0..1.0);
        let s = u * u + v * v;
        if s > 0.0 && s < 1.0 {
            let f = (-2.0 * s.ln() / s).sqrt();
            return (u * f, v * f);
        }
    }
}

fn std_normal_cdf(z: f64) -> f64 {
    0.5 * (1.0 + libm::erf(z / std::f64::consts::SQRT_2))
}

/// Probability that a `N(mu, sigma^2 I)` draw lands in the unit square.
pub fn unit_square_acceptance(mu: Point, sigma: f64) -> f64 {
    let axis = |m: f64| std_normal_cdf((1.0 - m) / sigma) - std_normal_cdf(-m / sigma);
    axis(mu.x) * axis(mu.y)
}

/// Lowest acceptance probability the rejection sampler will attempt.
const MIN_ACCEPTANCE: f64 = 1e-12;

/// `n` points from the bivariate normal `N(mu, sigma^2 I)` restricted to the
/// closed unit square, by rejection.
pub fn gen_truncated_normal(n: usize, mu: Point, sigma: f64, seed: u64) -> Result<Vec<Point>> {
    if n < 2 {
        return Err(Error::NTooSmall { n, min: 2 });
    }
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::InvalidSigma(sigma));
    }
    let acceptance = unit_square_acceptance(mu, sigma);
    if acceptance.is_nan() || acceptance < MIN_ACCEPTANCE {
        return Err(Error::RejectionStalled { acceptance });
    }
    // Ten times the expected number of draws, plus slack for small n.
    let budget = (10.0 * n as f64 / acceptance).ceil() as u64 + 1_000;

    let mut rng = rng_from_seed(seed);
    let mut points = Vec::with_capacity(n);
    let mut attempts = 0u64;
    while points.len() < n {
        if attempts >= budget {
            return Err(Error::RejectionStalled { acceptance });
        }
        attempts += 1;
        let (zx, zy) = polar_pair(&mut rng);
        let p = Point::new(mu.x + sigma * zx, mu.y + sigma * zy);
        if (0.0..=1.0).contains(&p.x) && (0.0..=1.0).contains(&p.y) {
            points.push(p);
        }
    }
    Ok(points)
}

/// Worst case for the packing-bound grid.
///
/// Four anchors at the edge midpoints pin the bounding box to the unit
/// square, so the grid is not refined. The other `n - 4` points fill the
/// cell containing `(0.5, 0.5)` along an additive recurrence based on the
/// plastic number, which needs no seed.
pub fn gen_adversarial_mm(n: usize) -> Result<Vec<Point>> {
    if n < 6 {
        return Err(Error::NTooSmall { n, min: 6 });
    }
    let side = delta_bar(n)?.delta_bar;
    let k = (0.5 / side).floor();
    let lo = k * side;
    let hi = ((k + 1.0) * side).min(1.0);
    let span = hi - lo;

    const PLASTIC: f64 = 1.324_717_957_244_746;
    let (a1, a2) = (1.0 / PLASTIC, 1.0 / (PLASTIC * PLASTIC));

    let mut points = vec![
        Point::new(0.0, 0.5),
        Point::new(1.0, 0.5),
        Point::new(0.5, 0.0),
        Point::new(0.5, 1.0),
    ];
    points.extend((1..=n - 4).map(|m| {
        let u = (0.5 + m as f64 * a1).fract();
        let v = (0.5 + m as f64 * a2).fract();
        Point::new(lo + span * (0.02 + 0.96 * u), lo + span * (0.02 + 0.96 * v))
    }));
    Ok(points)
}

//! Closest pair of points in the plane.
//!
//! Seven algorithms share one contract: given at least two finite points,
//! return a pair at minimal Euclidean distance together with loop counters.
//!
//! | name | module | idea |
//! |------|--------|------|
//! | `ap`  | [`naive`]   | all pairs |
//! | `aps` | [`naive`]   | all pairs over the x-order, early exit on the x-gap |
//! | `dc`  | [`ordered`] | divide and conquer with a y-ordered stripe merge |
//! | `ps`  | [`ordered`] | plane sweep with a y-ordered active window |
//! | `rl`  | [`grid`]    | hashed grid sized by a sampled distance |
//! | `km`  | [`grid`]    | sieve of isolated points, then a hashed grid |
//! | `mm`  | [`grid`]    | dense grid sized by the packing bound |
//!
//! Only `rl` and `km` consume randomness; they take the RNG from the caller.

pub mod generators;
pub mod geometry;
pub mod grid;
pub mod naive;
pub mod ordered;
pub mod packing;
pub mod pointset;
mod solution;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use geometry::{
    bounding_box, euclidean_distance, squared_distance, BoundingBox, ClosestPair, Point,
};
pub use grid::{cpp_km, cpp_mm, cpp_rl, SamplingMode};
pub use naive::{cpp_ap, cpp_aps};
pub use ordered::{cpp_dc, cpp_ps};
pub use packing::{c_n, delta_bar, PackingBound};
pub use solution::{OpCounters, Solution};

/// The project-wide PRNG.
pub type ProjectRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ProjectRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("need at least two points, got {n}")]
    TooFewPoints { n: usize },
    #[error("empty point set")]
    EmptyPointSet,
    #[error("point {index} has a non-finite coordinate")]
    NonFinitePoint { index: usize },
    #[error("n too small: {n} (minimum {min})")]
    NTooSmall { n: usize, min: usize },
    #[error("degenerate cell size {0}")]
    DegenerateCellSize(f64),
    #[error("invalid sigma {0}: must be positive and finite")]
    InvalidSigma(f64),
    #[error("rejection sampling stalled: acceptance probability {acceptance:e}")]
    RejectionStalled { acceptance: f64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown algorithm '{0}'")]
    UnknownAlgorithm(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// A point tagged with its position in the caller's slice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Indexed {
    pub point: Point,
    pub index: usize,
}

/// The input sorted by `(x, y, index)`.
pub(crate) fn sorted_by_x(points: &[Point]) -> Vec<Indexed> {
    let mut sorted: Vec<Indexed> = points
        .iter()
        .enumerate()
        .map(|(index, &point)| Indexed { point, index })
        .collect();
    sorted.sort_unstable_by(|a, b| a.point.cmp_xy(&b.point).then(a.index.cmp(&b.index)));
    sorted
}

/// Selects one of the seven algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Ap,
    Aps,
    Dc,
    Ps,
    Rl(SamplingMode),
    Km,
    Mm,
}

impl Algorithm {
    /// Every algorithm, with `rl` in its default distance-sampling mode.
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Ap,
        Algorithm::Aps,
        Algorithm::Dc,
        Algorithm::Ps,
        Algorithm::Rl(SamplingMode::Distances),
        Algorithm::Km,
        Algorithm::Mm,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Ap => "ap",
            Algorithm::Aps => "aps",
            Algorithm::Dc => "dc",
            Algorithm::Ps => "ps",
            Algorithm::Rl(SamplingMode::Distances) => "rl",
            Algorithm::Rl(SamplingMode::Points) => "rl-points",
            Algorithm::Km => "km",
            Algorithm::Mm => "mm",
        }
    }

    pub fn is_randomized(&self) -> bool {
        matches!(self, Algorithm::Rl(_) | Algorithm::Km)
    }

    /// Runs the algorithm. `seed` feeds the RNG of the randomized ones and is
    /// ignored otherwise.
    pub fn run(&self, points: &[Point], seed: u64) -> Result<Solution> {
        match self {
            Algorithm::Ap => cpp_ap(points),
            Algorithm::Aps => cpp_aps(points),
            Algorithm::Dc => cpp_dc(points),
            Algorithm::Ps => cpp_ps(points),
            Algorithm::Rl(mode) => cpp_rl(points, &mut rng_from_seed(seed), *mode),
            Algorithm::Km => cpp_km(points, &mut rng_from_seed(seed)),
            Algorithm::Mm => cpp_mm(points),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "ap" => Algorithm::Ap,
            "aps" => Algorithm::Aps,
            "dc" => Algorithm::Dc,
            "ps" => Algorithm::Ps,
            "rl" | "rl-distances" => Algorithm::Rl(SamplingMode::Distances),
            "rl-points" => Algorithm::Rl(SamplingMode::Points),
            "km" => Algorithm::Km,
            "mm" => Algorithm::Mm,
            other => return Err(Error::UnknownAlgorithm(other.to_string())),
        })
    }
}

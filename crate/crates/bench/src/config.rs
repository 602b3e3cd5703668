use closest_pair::generators::Distribution;
use closest_pair::Algorithm;

use crate::{Error, Result};

/// `cpp_ap` is not run above this size unless the cap is raised.
pub const DEFAULT_AP_CAP: usize = 1 << 17;

/// Rough upper bound on the bytes any algorithm needs per input point
/// (input copy, sorted copies, grid arrays and hash slots).
pub const BYTES_PER_POINT: u64 = 160;

pub const DEFAULT_MEMORY_BUDGET: u64 = 8 << 30;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub n_min: usize,
    pub n_max: usize,
    pub reps: usize,
    /// One run series per distribution; several truncated-normal entries
    /// make a sigma sweep.
    pub distributions: Vec<Distribution>,
    pub seed_base: u64,
    pub ap_cap: Option<usize>,
    pub memory_budget: u64,
    pub warmup: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            algorithms: Algorithm::ALL.to_vec(),
            n_min: 1 << 10,
            n_max: 1 << 20,
            reps: 10,
            distributions: vec![Distribution::Uniform],
            seed_base: 42,
            ap_cap: Some(DEFAULT_AP_CAP),
            memory_budget: DEFAULT_MEMORY_BUDGET,
            warmup: true,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::Config(m.to_string()));
        if self.algorithms.is_empty() {
            return fail("no algorithms selected");
        }
        if self.distributions.is_empty() {
            return fail("no distribution selected");
        }
        if self.n_min < 2 {
            return fail("n_min must be at least 2");
        }
        if self.n_min > self.n_max {
            return fail("n_min must not exceed n_max");
        }
        if !self.n_min.is_power_of_two() || !self.n_max.is_power_of_two() {
            return fail("n_min and n_max must be powers of two");
        }
        if self.reps == 0 {
            return fail("reps must be at least 1");
        }
        if self.distributions.contains(&Distribution::AdversarialMm) && self.n_min < 6 {
            return fail("the adversarial distribution needs n_min >= 6");
        }
        for d in &self.distributions {
            if let Some(sigma) = d.sigma() {
                if !(sigma > 0.0 && sigma.is_finite()) {
                    return fail("sigma must be positive");
                }
            }
        }
        Ok(())
    }

    /// `n_min, 2 n_min, ..., n_max`.
    pub fn sizes(&self) -> Vec<usize> {
        std::iter::successors(Some(self.n_min), |&n| n.checked_mul(2))
            .take_while(|&n| n <= self.n_max)
            .collect()
    }

    pub fn runs_algorithm_at(&self, algorithm: Algorithm, n: usize) -> bool {
        algorithm != Algorithm::Ap || self.ap_cap.is_none_or(|cap| n <= cap)
    }
}

/// Parses a comma-separated algorithm list; `all` selects every algorithm.
pub fn parse_algorithms(list: &str) -> Result<Vec<Algorithm>> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(Algorithm::ALL.to_vec());
    }
    let mut out = Vec::new();
    for name in list.split(',').filter(|s| !s.trim().is_empty()) {
        let a: Algorithm = name.parse()?;
        if !out.contains(&a) {
            out.push(a);
        }
    }
    if out.is_empty() {
        return Err(Error::Config("empty algorithm list".into()));
    }
    Ok(out)
}

/// Builds distributions from a name and a sigma list. Only `tnormal` uses
/// the sigmas; it gets one entry per value.
pub fn parse_distributions(name: &str, sigmas: &[f64]) -> Result<Vec<Distribution>> {
    Ok(match name.trim().to_ascii_lowercase().as_str() {
        "uniform" => vec![Distribution::Uniform],
        "adversarial" => vec![Distribution::AdversarialMm],
        "tnormal" | "truncated-normal" | "normal" => {
            if sigmas.is_empty() {
                vec![Distribution::truncated_normal(Distribution::DEFAULT_SIGMA)]
            } else {
                sigmas
                    .iter()
                    .map(|&s| Distribution::truncated_normal(s))
                    .collect()
            }
        }
        other => return Err(Error::Config(format!("unknown distribution '{other}'"))),
    })
}

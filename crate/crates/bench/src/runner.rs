use std::time::Instant;

use closest_pair::generators::{Distribution, GenSpec};
use closest_pair::{Algorithm, Point};

use crate::config::{BenchConfig, BYTES_PER_POINT};
use crate::records::BenchRecord;
use crate::Result;

/// Instance seed for `(n, rep)`: `seed_base` xor a splitmix64 mix of both.
pub fn instance_seed(seed_base: u64, n: usize, rep: usize) -> u64 {
    seed_base ^ splitmix64((n as u64).rotate_left(32) ^ rep as u64)
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A run that could not be carried out; the harness moves on.
#[derive(Debug, Clone, PartialEq)]
pub struct RunFailure {
    pub algorithm: Option<String>,
    pub n: usize,
    pub distribution: String,
    pub seed: u64,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct BenchOutcome {
    pub records: Vec<BenchRecord>,
    pub failures: Vec<RunFailure>,
}

/// Runs the doubling experiment. Every selected algorithm sees the same
/// instance for a given `(distribution, n, rep)`. Only the algorithm call is
/// timed, and all timed calls run on the calling thread one after another.
pub fn run_benchmark(config: &BenchConfig) -> Result<BenchOutcome> {
    config.validate()?;
    let mut out = BenchOutcome::default();
    for &distribution in &config.distributions {
        for n in config.sizes() {
            let algorithms: Vec<Algorithm> = config
                .algorithms
                .iter()
                .copied()
                .filter(|&a| config.runs_algorithm_at(a, n))
                .collect();
            if algorithms.is_empty() {
                continue;
            }
            if (n as u64).saturating_mul(BYTES_PER_POINT) > config.memory_budget {
                for rep in 0..config.reps {
                    out.failures.push(RunFailure {
                        algorithm: None,
                        n,
                        distribution: distribution.name().into(),
                        seed: instance_seed(config.seed_base, n, rep),
                        message: format!(
                            "n = {n} exceeds the memory budget of {} bytes",
                            config.memory_budget
                        ),
                    });
                }
                continue;
            }
            let mut warmed = vec![!config.warmup; algorithms.len()];
            for rep in 0..config.reps {
                let seed = instance_seed(config.seed_base, n, rep);
                let spec = GenSpec {
                    n,
                    distribution,
                    seed,
                };
                let points = match spec.generate() {
                    Ok(points) => points,
                    Err(e) => {
                        out.failures.push(failure(None, &distribution, n, seed, e));
                        continue;
                    }
                };
                for (k, &algorithm) in algorithms.iter().enumerate() {
                    let alg_seed = splitmix64(seed);
                    if !warmed[k] {
                        let _ = algorithm.run(&points, alg_seed);
                        warmed[k] = true;
                    }
                    match timed(algorithm, &points, alg_seed) {
                        Ok((elapsed_us, solution)) => out.records.push(BenchRecord {
                            algorithm: algorithm.name().into(),
                            n,
                            distribution: distribution.name().into(),
                            sigma: distribution.sigma(),
                            seed,
                            elapsed_us,
                            counters: solution.counters,
                            delta: solution.delta(),
                        }),
                        Err(e) => {
                            out.failures
                                .push(failure(Some(algorithm), &distribution, n, seed, e))
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn timed(
    algorithm: Algorithm,
    points: &[Point],
    seed: u64,
) -> closest_pair::Result<(f64, closest_pair::Solution)> {
    let start = Instant::now();
    let solution = algorithm.run(points, seed)?;
    let elapsed = start.elapsed();
    Ok((elapsed.as_secs_f64() * 1e6, solution))
}

fn failure(
    algorithm: Option<Algorithm>,
    distribution: &Distribution,
    n: usize,
    seed: u64,
    e: closest_pair::Error,
) -> RunFailure {
    RunFailure {
        algorithm: algorithm.map(|a| a.name().to_string()),
        n,
        distribution: distribution.name().into(),
        seed,
        message: e.to_string(),
    }
}

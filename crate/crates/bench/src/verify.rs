//! Brute-force cross-check of closest-pair implementations.

use std::fmt;
use std::sync::Mutex;

use closest_pair::generators::{Distribution, GenSpec};
use closest_pair::{cpp_ap, Algorithm, Point, Solution};

use crate::Result;

type RunFn = dyn Fn(&[Point], u64) -> closest_pair::Result<Solution> + Send + Sync;

/// An implementation under test. The `u64` is a seed for randomized ones.
pub struct Candidate {
    pub name: String,
    pub run: Box<RunFn>,
}

impl Candidate {
    pub fn new(
        name: impl Into<String>,
        run: impl Fn(&[Point], u64) -> closest_pair::Result<Solution> + Send + Sync + 'static,
    ) -> Self {
        Candidate {
            name: name.into(),
            run: Box::new(run),
        }
    }

    pub fn from_algorithm(algorithm: Algorithm) -> Self {
        Candidate::new(algorithm.name(), move |points, seed| {
            algorithm.run(points, seed)
        })
    }
}

impl fmt::Debug for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Candidate")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

#[derive(Debug)]
pub struct VerifyConfig {
    pub candidates: Vec<Candidate>,
    pub sizes: Vec<usize>,
    pub distributions: Vec<Distribution>,
    /// Instance seeds `0..seeds` for every size and distribution.
    pub seeds: u64,
    pub tolerance: f64,
    /// Worker threads; instances are split between them.
    pub threads: usize,
}

impl VerifyConfig {
    pub fn for_algorithms(algorithms: &[Algorithm]) -> Self {
        VerifyConfig {
            candidates: algorithms
                .iter()
                .copied()
                .map(Candidate::from_algorithm)
                .collect(),
            sizes: vec![2, 3, 5, 17, 64, 512],
            distributions: vec![Distribution::Uniform],
            seeds: 100,
            tolerance: 1e-12,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub candidate: String,
    pub n: usize,
    pub distribution: String,
    pub seed: u64,
    pub expected: f64,
    /// `None` when the candidate returned an error.
    pub actual: Option<f64>,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyReport {
    pub instances: usize,
    pub checks: usize,
    pub max_rel_discrepancy: f64,
    pub failures: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn relative_discrepancy(actual: f64, expected: f64) -> f64 {
    (actual - expected).abs() / expected.max(1e-300)
}

pub fn verify(config: &VerifyConfig) -> Result<VerifyReport> {
    let jobs: Vec<GenSpec> = config
        .distributions
        .iter()
        .flat_map(|&distribution| {
            config.sizes.iter().flat_map(move |&n| {
                (0..config.seeds).map(move |seed| GenSpec {
                    n,
                    distribution,
                    seed,
                })
            })
        })
        .collect();

    let threads = config.threads.clamp(1, jobs.len().max(1));
    let report = Mutex::new(VerifyReport::default());
    let first_error = Mutex::new(None);
    std::thread::scope(|scope| {
        for t in 0..threads {
            let (jobs, report, first_error) = (&jobs, &report, &first_error);
            scope.spawn(move || {
                let mut local = VerifyReport::default();
                for spec in jobs.iter().skip(t).step_by(threads) {
                    if let Err(e) = check_instance(config, spec, &mut local) {
                        first_error.lock().unwrap().get_or_insert(e);
                        return;
                    }
                }
                let mut total = report.lock().unwrap();
                total.instances += local.instances;
                total.checks += local.checks;
                total.max_rel_discrepancy =
                    total.max_rel_discrepancy.max(local.max_rel_discrepancy);
                total.failures.extend(local.failures);
            });
        }
    });
    if let Some(e) = first_error.into_inner().unwrap() {
        return Err(e);
    }
    let mut report = report.into_inner().unwrap();
    report
        .failures
        .sort_by(|a, b| (a.n, a.seed, &a.candidate).cmp(&(b.n, b.seed, &b.candidate)));
    Ok(report)
}

fn check_instance(config: &VerifyConfig, spec: &GenSpec, report: &mut VerifyReport) -> Result<()> {
    let points = spec.generate()?;
    let expected = cpp_ap(&points)?.delta();
    report.instances += 1;
    for candidate in &config.candidates {
        report.checks += 1;
        let mismatch = |actual: Option<f64>, message: String| Mismatch {
            candidate: candidate.name.clone(),
            n: spec.n,
            distribution: spec.distribution.name().into(),
            seed: spec.seed,
            expected,
            actual,
            message,
        };
        match (candidate.run)(&points, spec.seed) {
            Ok(solution) => {
                let got = solution.delta();
                let rel = relative_discrepancy(got, expected);
                report.max_rel_discrepancy = report.max_rel_discrepancy.max(rel);
                if rel.is_nan() || rel > config.tolerance {
                    report
                        .failures
                        .push(mismatch(Some(got), format!("relative discrepancy {rel:e}")));
                }
            }
            Err(e) => report.failures.push(mismatch(None, e.to_string())),
        }
    }
    Ok(())
}

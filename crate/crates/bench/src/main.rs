use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use closest_pair::generators::GenSpec;
use closest_pair::pointset::{format_points, parse_points};
use closest_pair::Algorithm;
use cpp_bench::config::{
    parse_algorithms, parse_distributions, DEFAULT_AP_CAP, DEFAULT_MEMORY_BUDGET,
};
use cpp_bench::{
    aggregate, emit_plot, read_csv, run_benchmark, verify, write_csv, write_summary_csv,
    BenchConfig, PlotKind, VerifyConfig,
};

/// Closest-pair benchmark harness.
#[derive(Parser)]
#[command(name = "bench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time the algorithms over doubling n and write one CSV row per run.
    Run {
        #[arg(long, default_value = "all")]
        algos: String,
        /// uniform, tnormal or adversarial.
        #[arg(long, default_value = "uniform")]
        dist: String,
        /// Comma-separated sigmas for tnormal; several values make a sweep.
        #[arg(long, value_delimiter = ',')]
        sigma: Vec<f64>,
        #[arg(long, default_value_t = 1024)]
        nmin: usize,
        #[arg(long, default_value_t = 1 << 20)]
        nmax: usize,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Largest n for the quadratic `ap`; 0 removes the cap.
        #[arg(long, default_value_t = DEFAULT_AP_CAP)]
        ap_cap: usize,
        #[arg(long, default_value_t = DEFAULT_MEMORY_BUDGET)]
        mem_budget: u64,
        #[arg(long)]
        no_warmup: bool,
        /// Also write per-(algorithm, n) sums and means here.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Check every algorithm against brute force.
    Verify {
        #[arg(long, default_value = "all")]
        algos: String,
        #[arg(long, default_value = "uniform")]
        dist: String,
        #[arg(long, value_delimiter = ',')]
        sigma: Vec<f64>,
        #[arg(long, default_value_t = 2)]
        nmin: usize,
        #[arg(long, default_value_t = 8192)]
        nmax: usize,
        /// Explicit sizes; overrides --nmin/--nmax.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
    },
    /// Render an SVG chart from a results CSV.
    Plot {
        /// runtime_loglog, iteration_ratio or sigma_sweep.
        #[arg(long, default_value = "runtime_loglog")]
        kind: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a generated point set, one `x,y` per line.
    Gen {
        #[arg(long, default_value = "uniform")]
        dist: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve a point-set file with one algorithm.
    Solve {
        #[arg(long, default_value = "mm")]
        algo: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    match execute(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Worker threads for verification. Timing runs ignore it.
fn bench_threads() -> anyhow::Result<usize> {
    match std::env::var("BENCH_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t >= 1)
            .with_context(|| format!("BENCH_THREADS must be a positive integer, got '{v}'")),
        Err(_) => Ok(1),
    }
}

fn execute(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Run {
            algos,
            dist,
            sigma,
            nmin,
            nmax,
            reps,
            seed,
            out,
            ap_cap,
            mem_budget,
            no_warmup,
            summary,
        } => {
            let config = BenchConfig {
                algorithms: parse_algorithms(&algos)?,
                n_min: nmin,
                n_max: nmax,
                reps,
                distributions: parse_distributions(&dist, &sigma)?,
                seed_base: seed,
                ap_cap: (ap_cap > 0).then_some(ap_cap),
                memory_budget: mem_budget,
                warmup: !no_warmup,
            };
            let outcome = run_benchmark(&config)?;
            write_csv(&outcome.records, &out)?;
            if let Some(path) = summary {
                write_summary_csv(&aggregate(&outcome.records), &path)?;
            }
            for f in &outcome.failures {
                eprintln!(
                    "skipped {} n={} {} seed={}: {}",
                    f.algorithm.as_deref().unwrap_or("all"),
                    f.n,
                    f.distribution,
                    f.seed,
                    f.message
                );
            }
            eprintln!(
                "{} records written to {}",
                outcome.records.len(),
                out.display()
            );
            Ok(true)
        }
        Command::Verify {
            algos,
            dist,
            sigma,
            nmin,
            nmax,
            sizes,
            seeds,
            tolerance,
        } => {
            let algorithms = parse_algorithms(&algos)?;
            let sizes = if sizes.is_empty() {
                if nmin < 2 || nmin > nmax {
                    bail!("need 2 <= nmin <= nmax");
                }
                std::iter::successors(Some(nmin), |&n| n.checked_mul(2))
                    .take_while(|&n| n <= nmax)
                    .collect()
            } else {
                sizes
            };
            let config = VerifyConfig {
                sizes,
                distributions: parse_distributions(&dist, &sigma)?,
                seeds,
                tolerance,
                threads: bench_threads()?,
                ..VerifyConfig::for_algorithms(&algorithms)
            };
            let report = verify(&config)?;
            for m in report.failures.iter().take(20) {
                println!(
                    "FAIL {} n={} {} seed={}: expected {:e}, {}",
                    m.candidate, m.n, m.distribution, m.seed, m.expected, m.message
                );
            }
            println!(
                "{} {} instances, {} checks, max relative discrepancy {:e}",
                if report.passed() { "PASS" } else { "FAIL" },
                report.instances,
                report.checks,
                report.max_rel_discrepancy
            );
            Ok(report.passed())
        }
        Command::Plot { kind, input, out } => {
            let kind: PlotKind = kind.parse()?;
            let records = read_csv(&input)?;
            emit_plot(&records, kind, &out)?;
            Ok(true)
        }
        Command::Gen {
            dist,
            n,
            sigma,
            seed,
            out,
        } => {
            let sigmas: Vec<f64> = sigma.into_iter().collect();
            let distribution = parse_distributions(&dist, &sigmas)?[0];
            let points = GenSpec {
                n,
                distribution,
                seed,
            }
            .generate()?;
            std::fs::write(&out, format_points(&points))
                .with_context(|| format!("writing {}", out.display()))?;
            Ok(true)
        }
        Command::Solve { algo, input, seed } => {
            let algorithm: Algorithm = algo.parse()?;
            let text = std::fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let points = parse_points(&text).with_context(|| input.display().to_string())?;
            let s = algorithm.run(&points, seed)?;
            println!(
                "delta={:e} pair=({}, {}) outer={} inner={} dist_evals={}",
                s.delta(),
                s.pair.first_index,
                s.pair.second_index,
                s.counters.outer_iterations,
                s.counters.inner_iterations,
                s.counters.distance_evaluations
            );
            Ok(true)
        }
    }
}

//! Acceptance suite. Prints one `[PASS]` or `[FAIL]` line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;

use closest_pair::generators::{
    gen_adversarial_mm, gen_truncated_normal, gen_uniform, Distribution, GenSpec,
};
use closest_pair::{
    cpp_ap, cpp_aps, cpp_km, cpp_mm, cpp_ps, cpp_rl, delta_bar, rng_from_seed, Algorithm, Point,
    SamplingMode,
};
use cpp_bench::{run_benchmark, verify, BenchConfig, VerifyConfig};
use rand::Rng;

type Criterion = (&'static str, &'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len().is_multiple_of(2) {
        (v[m - 1] + v[m]) / 2.0
    } else {
        v[m]
    }
}

fn ac1_oracle_equivalence() -> Outcome {
    let mut algorithms = Algorithm::ALL
        .iter()
        .copied()
        .filter(|&a| a != Algorithm::Ap)
        .collect::<Vec<_>>();
    algorithms.push(Algorithm::Rl(SamplingMode::Points));
    let config = VerifyConfig {
        sizes: vec![2, 3, 5, 17, 64, 512, 4096],
        distributions: vec![Distribution::Uniform, Distribution::truncated_normal(0.2)],
        seeds: 100,
        tolerance: 1e-12,
        threads: std::thread::available_parallelism().map_or(1, |t| t.get()),
        ..VerifyConfig::for_algorithms(&algorithms)
    };
    match verify(&config) {
        Ok(r) => outcome(
            r.passed() && r.instances == 1400,
            format!(
                "{} instances, {} checks, {} failures, max relative discrepancy {:e}",
                r.instances,
                r.checks,
                r.failures.len(),
                r.max_rel_discrepancy
            ),
        ),
        Err(e) => outcome(false, format!("error: {e}")),
    }
}

fn ac2_packing_spot_value() -> Outcome {
    let b = delta_bar(100).expect("n = 100 is valid");
    let side = (1.0 / b.delta_bar).ceil();
    let near = (b.delta_bar - 0.117).abs() <= 0.001;
    outcome(
        near && side == 9.0,
        format!(
            "delta_bar(100) = {:.7} (needs 0.117 +/- 0.001: {}), ceil(1/delta_bar) = {side} (needs 9: {})",
            b.delta_bar,
            if near { "ok" } else { "no" },
            if side == 9.0 { "ok" } else { "no" }
        ),
    )
}

fn ac3_bound_soundness() -> Outcome {
    let mut rng = rng_from_seed(2024);
    let mut worst = 0.0f64;
    let mut violations = 0;
    for seed in 0..200u64 {
        let n = rng.gen_range(2..=256);
        let points = gen_uniform(n, seed).unwrap();
        let delta = cpp_ap(&points).unwrap().delta();
        let bound = delta_bar(n).unwrap().delta_bar;
        worst = worst.max(delta / bound);
        if delta > bound {
            violations += 1;
        }
    }
    outcome(
        violations == 0,
        format!("200 instances, {violations} violations, max delta/delta_bar = {worst:.4}"),
    )
}

fn ac4_ap_counter_law() -> Outcome {
    let mut ok = true;
    let mut ratios = Vec::new();
    let mut prev = None;
    for k in 10..=16 {
        let n = 1usize << k;
        let c = cpp_ap(&gen_uniform(n, k as u64).unwrap()).unwrap().counters;
        let i2 = c.inner_per_outer();
        ok &= i2 == n as f64 / 2.0;
        if let Some(p) = prev {
            let r = i2 / p;
            ok &= r == 2.0;
            ratios.push(format!("{r:.3}"));
        }
        prev = Some(i2);
    }
    outcome(
        ok,
        format!("ratios for n = 2^11..2^16: [{}]", ratios.join(", ")),
    )
}

fn ac5_aps_growth() -> Outcome {
    let mean_i2 = |n: usize| {
        (0..5u64)
            .map(|seed| {
                cpp_aps(&gen_uniform(n, 500 + seed).unwrap())
                    .unwrap()
                    .counters
                    .inner_per_outer()
            })
            .sum::<f64>()
            / 5.0
    };
    let i2: Vec<f64> = (11..=18).map(|k| mean_i2(1 << k)).collect();
    let ratios: Vec<f64> = i2.windows(2).map(|w| w[1] / w[0]).collect();
    let in_range = ratios.iter().all(|&r| r > 1.0 && r < 2.0);
    let monotone = ratios.windows(2).all(|w| w[1] >= w[0] - 0.1);
    outcome(
        in_range && monotone,
        format!(
            "ratios for n = 2^12..2^18: [{}]; all in (1, 2): {in_range}; nondecreasing within 0.1: {monotone}",
            ratios.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>().join(", ")
        ),
    )
}

fn ac6_mm_linearity() -> Outcome {
    let medians: Vec<f64> = (10..=18)
        .map(|k| {
            let n = 1usize << k;
            median(
                (0..10u64)
                    .map(|seed| {
                        let points = gen_uniform(n, 600 + seed).unwrap();
                        cpp_mm(&points).unwrap().counters.distance_evaluations as f64 / n as f64
                    })
                    .collect(),
            )
        })
        .collect();
    let max = medians.iter().cloned().fold(f64::MIN, f64::max);
    let min = medians.iter().cloned().fold(f64::MAX, f64::min);
    outcome(
        max <= 8.0 && max / min <= 2.0,
        format!(
            "median dist_evals/n for n = 2^10..2^18: [{}]; max {max:.3} (<= 8), max/min {:.3} (<= 2)",
            medians.iter().map(|m| format!("{m:.3}")).collect::<Vec<_>>().join(", "),
            max / min
        ),
    )
}

fn ac7_mm_adversarial() -> Outcome {
    let points = gen_adversarial_mm(1000).unwrap();
    let evals = cpp_mm(&points).unwrap().counters.distance_evaluations;
    let required = 0.4 * (996.0 * 995.0) / 2.0;
    outcome(
        evals as f64 >= required,
        format!("dist_evals = {evals}, required >= {required:.0}"),
    )
}

fn ac8_truncated_normal_moments() -> Outcome {
    let points = gen_truncated_normal(100_000, Point::new(0.5, 0.5), 0.2, 8).unwrap();
    let n = points.len() as f64;
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, coord) in [
        ("x", (|p: &Point| p.x) as fn(&Point) -> f64),
        ("y", |p: &Point| p.y),
    ] {
        let mean = points.iter().map(coord).sum::<f64>() / n;
        let var = points
            .iter()
            .map(|p| (coord(p) - mean).powi(2))
            .sum::<f64>()
            / (n - 1.0);
        ok &= (mean - 0.5).abs() <= 0.005 && (var - 0.036).abs() <= 0.003;
        parts.push(format!("{name}: mean {mean:.5}, variance {var:.5}"));
    }
    outcome(ok, parts.join("; "))
}

fn ac9_counter_ranking() -> Outcome {
    let n = 1usize << 18;
    let (mut mm, mut ps, mut km) = (0u64, 0u64, 0u64);
    for seed in 0..5u64 {
        let points = gen_uniform(n, 900 + seed).unwrap();
        mm += cpp_mm(&points).unwrap().counters.distance_evaluations;
        ps += cpp_ps(&points).unwrap().counters.distance_evaluations;
        km += cpp_km(&points, &mut rng_from_seed(seed))
            .unwrap()
            .counters
            .distance_evaluations;
    }
    outcome(
        mm < ps && mm < km,
        format!("dist_evals totals over 5 instances at n = 2^18: mm {mm}, ps {ps}, km {km}"),
    )
}

fn ac10_determinism() -> Outcome {
    let mut failures = Vec::new();
    let uniform = gen_uniform(5000, 3).unwrap();
    let specs = [
        GenSpec {
            n: 5000,
            distribution: Distribution::Uniform,
            seed: 3,
        },
        GenSpec {
            n: 5000,
            distribution: Distribution::truncated_normal(0.2),
            seed: 3,
        },
        GenSpec {
            n: 5000,
            distribution: Distribution::truncated_normal(0.01),
            seed: 4,
        },
        GenSpec {
            n: 1000,
            distribution: Distribution::AdversarialMm,
            seed: 0,
        },
    ];
    for spec in specs {
        let (a, b) = (spec.generate().unwrap(), spec.generate().unwrap());
        let bits = |v: &[Point]| {
            v.iter()
                .flat_map(|p| [p.x.to_bits(), p.y.to_bits()])
                .collect::<Vec<_>>()
        };
        if bits(&a) != bits(&b) {
            failures.push(format!("generator {}", spec.distribution.name()));
        }
    }
    if cpp_mm(&uniform).unwrap() != cpp_mm(&uniform).unwrap() {
        failures.push("mm".into());
    }
    for seed in [0, 1, 99] {
        for mode in [SamplingMode::Points, SamplingMode::Distances] {
            let a = cpp_rl(&uniform, &mut rng_from_seed(seed), mode).unwrap();
            let b = cpp_rl(&uniform, &mut rng_from_seed(seed), mode).unwrap();
            if a != b {
                failures.push(format!("rl {mode:?} seed {seed}"));
            }
        }
        if cpp_km(&uniform, &mut rng_from_seed(seed)).unwrap()
            != cpp_km(&uniform, &mut rng_from_seed(seed)).unwrap()
        {
            failures.push(format!("km seed {seed}"));
        }
    }
    let config = BenchConfig {
        n_min: 256,
        n_max: 1024,
        reps: 2,
        warmup: false,
        ..Default::default()
    };
    let strip = |mut v: Vec<cpp_bench::BenchRecord>| {
        v.iter_mut().for_each(|r| r.elapsed_us = 0.0);
        v
    };
    if strip(run_benchmark(&config).unwrap().records)
        != strip(run_benchmark(&config).unwrap().records)
    {
        failures.push("benchmark records".into());
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            "generators, mm, rl (both modes), km and benchmark records reproduce exactly"
                .to_string()
        } else {
            format!("not reproducible: {}", failures.join(", "))
        },
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC-1", "oracle equivalence", ac1_oracle_equivalence),
        ("AC-2", "packing-bound spot value", ac2_packing_spot_value),
        ("AC-3", "bound soundness", ac3_bound_soundness),
        ("AC-4", "ap counter law", ac4_ap_counter_law),
        ("AC-5", "aps subquadratic growth", ac5_aps_growth),
        ("AC-6", "mm linearity witness", ac6_mm_linearity),
        ("AC-7", "mm adversarial blow-up", ac7_mm_adversarial),
        (
            "AC-8",
            "truncated-normal moments",
            ac8_truncated_normal_moments,
        ),
        ("AC-9", "counter ranking at n = 2^18", ac9_counter_ranking),
        ("AC-10", "determinism", ac10_determinism),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let start = std::time::Instant::now();
        let o = check();
        if !o.passed {
            failed += 1;
        }
        println!(
            "[{}] {id} {name}: {} ({:.1}s)",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

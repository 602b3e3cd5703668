use std::path::Path;
use std::process::{Command, Output};

fn bench(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bench"))
        .args(args)
        .current_dir(cwd)
        .env_remove("BENCH_THREADS")
        .output()
        .expect("bench binary runs")
}

#[test]
fn run_then_plot() {
    let dir = tempfile::tempdir().unwrap();
    let out = bench(
        &[
            "run",
            "--algos",
            "aps,mm",
            "--dist",
            "uniform",
            "--nmin",
            "1024",
            "--nmax",
            "4096",
            "--reps",
            "2",
            "--seed",
            "42",
            "--out",
            "results.csv",
            "--summary",
            "summary.csv",
        ],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = std::fs::read_to_string(dir.path().join("results.csv")).unwrap();
    assert_eq!(csv.lines().count(), 13);
    let summary = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    assert_eq!(summary.lines().count(), 7);
    assert!(
        summary.starts_with("algorithm,distribution,sigma,n,reps,sum_elapsed_us,mean_elapsed_us")
    );

    for kind in ["runtime_loglog", "iteration_ratio"] {
        let out = bench(
            &[
                "plot",
                "--kind",
                kind,
                "--in",
                "results.csv",
                "--out",
                "fig.svg",
            ],
            dir.path(),
        );
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let svg = std::fs::read_to_string(dir.path().join("fig.svg")).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 2);
    }
}

#[test]
fn sigma_sweep_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = bench(
        &[
            "run",
            "--algos",
            "ps,mm",
            "--dist",
            "tnormal",
            "--sigma",
            "0.5,0.25,0.125",
            "--nmin",
            "256",
            "--nmax",
            "512",
            "--reps",
            "1",
            "--out",
            "sweep.csv",
        ],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 2 * 2 * 3);
    let out = bench(
        &[
            "plot",
            "--kind",
            "sigma_sweep",
            "--in",
            "sweep.csv",
            "--out",
            "s.svg",
        ],
        dir.path(),
    );
    assert!(out.status.success());
}

#[test]
fn verify_passes_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = bench(
        &["verify", "--algos", "all", "--nmax", "256", "--seeds", "10"],
        dir.path(),
    );
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("PASS"), "{stdout}");
}

#[test]
fn gen_then_solve() {
    let dir = tempfile::tempdir().unwrap();
    let out = bench(
        &[
            "gen",
            "--dist",
            "tnormal",
            "--n",
            "1024",
            "--sigma",
            "0.2",
            "--seed",
            "7",
            "--out",
            "points.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("points.csv")).unwrap();
    assert_eq!(text.lines().count(), 1024);
    let points = closest_pair::pointset::parse_points(&text).unwrap();
    let expected = closest_pair::cpp_ap(&points).unwrap().delta();

    let out = bench(&["solve", "--algo", "dc", "--in", "points.csv"], dir.path());
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(
        stdout.starts_with(&format!("delta={expected:e} ")),
        "{stdout}"
    );
}

#[test]
fn errors_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let missing = bench(&["plot", "--in", "nope.csv", "--out", "x.svg"], dir.path());
    assert!(!missing.status.success());
    assert!(String::from_utf8_lossy(&missing.stderr).contains("nope.csv"));

    let bad_algo = bench(&["verify", "--algos", "zz"], dir.path());
    assert!(!bad_algo.status.success());

    let unwritable = bench(
        &[
            "run",
            "--algos",
            "mm",
            "--nmin",
            "64",
            "--nmax",
            "64",
            "--reps",
            "1",
            "--out",
            "no/such/dir/r.csv",
        ],
        dir.path(),
    );
    assert!(!unwritable.status.success());
}

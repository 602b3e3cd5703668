use std::collections::BTreeMap;
use std::path::Path;

use closest_pair::OpCounters;

use crate::{Error, Result};

pub const CSV_HEADER: [&str; 10] = [
    "algorithm",
    "n",
    "distribution",
    "sigma",
    "seed",
    "elapsed_us",
    "outer_iters",
    "inner_iters",
    "dist_evals",
    "delta",
];

/// One timed algorithm run.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algorithm: String,
    pub n: usize,
    pub distribution: String,
    pub sigma: Option<f64>,
    pub seed: u64,
    pub elapsed_us: f64,
    pub counters: OpCounters,
    pub delta: f64,
}

impl BenchRecord {
    /// A zero distance means the instance contains coincident points.
    pub fn has_duplicate(&self) -> bool {
        self.delta == 0.0
    }

    fn to_row(&self) -> [String; 10] {
        [
            self.algorithm.clone(),
            self.n.to_string(),
            self.distribution.clone(),
            self.sigma.map(|s| format!("{s:?}")).unwrap_or_default(),
            self.seed.to_string(),
            format!("{:?}", self.elapsed_us),
            self.counters.outer_iterations.to_string(),
            self.counters.inner_iterations.to_string(),
            self.counters.distance_evaluations.to_string(),
            format!("{:.16e}", self.delta),
        ]
    }

    fn from_row(row: &csv::StringRecord) -> std::result::Result<Self, String> {
        if row.len() != CSV_HEADER.len() {
            return Err(format!(
                "expected {} fields, got {}",
                CSV_HEADER.len(),
                row.len()
            ));
        }
        fn num<T: std::str::FromStr>(field: &str, name: &str) -> std::result::Result<T, String>
        where
            T::Err: std::fmt::Display,
        {
            field.parse().map_err(|e| format!("{name}: '{field}': {e}"))
        }
        Ok(BenchRecord {
            algorithm: row[0].to_string(),
            n: num(&row[1], "n")?,
            distribution: row[2].to_string(),
            sigma: match &row[3] {
                "" => None,
                s => Some(num(s, "sigma")?),
            },
            seed: num(&row[4], "seed")?,
            elapsed_us: num(&row[5], "elapsed_us")?,
            counters: OpCounters {
                outer_iterations: num(&row[6], "outer_iters")?,
                inner_iterations: num(&row[7], "inner_iters")?,
                distance_evaluations: num(&row[8], "dist_evals")?,
            },
            delta: num(&row[9], "delta")?,
        })
    }
}

fn csv_error(path: &Path) -> impl Fn(csv::Error) -> Error + '_ {
    move |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    }
}

pub fn write_csv(records: &[BenchRecord], path: &Path) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)
        .map_err(csv_error(path))?;
    w.write_record(CSV_HEADER).map_err(csv_error(path))?;
    for r in records {
        w.write_record(r.to_row()).map_err(csv_error(path))?;
    }
    w.flush().map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_csv(path: &Path) -> Result<Vec<BenchRecord>> {
    let mut r = csv::Reader::from_path(path).map_err(csv_error(path))?;
    let header = r.headers().map_err(csv_error(path))?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Record {
            path: path.to_path_buf(),
            record: 0,
            message: format!(
                "unexpected header '{}'",
                header.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }
    r.records()
        .enumerate()
        .map(|(k, row)| {
            let row = row.map_err(csv_error(path))?;
            BenchRecord::from_row(&row).map_err(|message| Error::Record {
                path: path.to_path_buf(),
                record: k + 1,
                message,
            })
        })
        .collect()
}

/// Per-(algorithm, distribution, sigma, n) aggregate over repetitions.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub algorithm: String,
    pub distribution: String,
    pub sigma: Option<f64>,
    pub n: usize,
    pub reps: usize,
    pub sum_elapsed_us: f64,
    pub mean_elapsed_us: f64,
    /// Mean over repetitions of inner iterations per outer iteration.
    pub mean_inner_per_outer: f64,
    pub mean_dist_evals: f64,
}

/// Groups records and averages them, in first-seen algorithm order and
/// ascending `(distribution, sigma, n)` within an algorithm.
pub fn aggregate(records: &[BenchRecord]) -> Vec<SummaryRow> {
    let mut order: Vec<&str> = Vec::new();
    let mut groups: BTreeMap<(usize, String, u64, usize), Vec<&BenchRecord>> = BTreeMap::new();
    for r in records {
        let a = match order.iter().position(|&a| a == r.algorithm) {
            Some(a) => a,
            None => {
                order.push(&r.algorithm);
                order.len() - 1
            }
        };
        // Sigma enters the key through its bit pattern; `None` sorts first.
        let sigma_key = r.sigma.map_or(0, |s| s.to_bits() ^ (1 << 63));
        groups
            .entry((a, r.distribution.clone(), sigma_key, r.n))
            .or_default()
            .push(r);
    }
    groups
        .into_values()
        .map(|rs| {
            let reps = rs.len();
            let sum_elapsed_us: f64 = rs.iter().map(|r| r.elapsed_us).sum();
            let mean = |f: &dyn Fn(&BenchRecord) -> f64| {
                rs.iter().map(|r| f(r)).sum::<f64>() / reps as f64
            };
            SummaryRow {
                algorithm: rs[0].algorithm.clone(),
                distribution: rs[0].distribution.clone(),
                sigma: rs[0].sigma,
                n: rs[0].n,
                reps,
                sum_elapsed_us,
                mean_elapsed_us: sum_elapsed_us / reps as f64,
                mean_inner_per_outer: mean(&|r| r.counters.inner_per_outer()),
                mean_dist_evals: mean(&|r| r.counters.distance_evaluations as f64),
            }
        })
        .collect()
}

pub fn write_summary_csv(rows: &[SummaryRow], path: &Path) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)
        .map_err(csv_error(path))?;
    w.write_record([
        "algorithm",
        "distribution",
        "sigma",
        "n",
        "reps",
        "sum_elapsed_us",
        "mean_elapsed_us",
        "mean_inner_per_outer",
        "mean_dist_evals",
    ])
    .map_err(csv_error(path))?;
    for r in rows {
        w.write_record([
            r.algorithm.clone(),
            r.distribution.clone(),
            r.sigma.map(|s| format!("{s:?}")).unwrap_or_default(),
            r.n.to_string(),
            r.reps.to_string(),
            format!("{:.3}", r.sum_elapsed_us),
            format!("{:.3}", r.mean_elapsed_us),
            format!("{:.6}", r.mean_inner_per_outer),
            format!("{:.3}", r.mean_dist_evals),
        ])
        .map_err(csv_error(path))?;
    }
    w.flush().map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn record(algorithm: &str, n: usize, elapsed_us: f64) -> BenchRecord {
        BenchRecord {
            algorithm: algorithm.into(),
            n,
            distribution: "uniform".into(),
            sigma: None,
            seed: 7,
            elapsed_us,
            counters: OpCounters {
                outer_iterations: n as u64 - 1,
                inner_iterations: (n * (n - 1) / 2) as u64,
                distance_evaluations: (n * (n - 1) / 2) as u64,
            },
            delta: 0.1 / 3.0,
        }
    }

    #[test]
    fn header_only_for_no_records() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        write_csv(&[], &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(
            text,
            "algorithm,n,distribution,sigma,seed,elapsed_us,outer_iters,inner_iters,dist_evals,delta\n"
        );
        assert!(read_csv(&path).unwrap().is_empty());
    }

    #[test]
    fn one_record_two_lines_and_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        let mut r = record("ap", 1024, 1234.5);
        r.sigma = Some(0.2);
        r.distribution = "tnormal".into();
        write_csv(std::slice::from_ref(&r), &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.ends_with('\n') && !text.contains('\r'));
        assert!(text.contains("3.3333333333333333e-2"), "{text}");
        assert_eq!(read_csv(&path).unwrap(), vec![r]);
    }

    #[test]
    fn malformed_rows_are_reported() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        std::fs::write(
            &path,
            "algorithm,n,distribution,sigma,seed,elapsed_us,outer_iters,inner_iters,dist_evals,delta\nap,x,uniform,,1,1,1,1,1,1\n",
        )
        .unwrap();
        assert!(matches!(
            read_csv(&path),
            Err(Error::Record { record: 1, .. })
        ));
        assert!(matches!(
            read_csv(&dir.path().join("missing.csv")),
            Err(Error::Csv { .. })
        ));
    }

    #[test]
    fn aggregate_means_and_sums() {
        let records = vec![
            record("mm", 1024, 10.0),
            record("mm", 1024, 30.0),
            record("ap", 1024, 5.0),
            record("mm", 2048, 50.0),
        ];
        let rows = aggregate(&records);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].algorithm, "mm");
        assert_eq!((rows[0].n, rows[0].reps), (1024, 2));
        assert_eq!(rows[0].sum_elapsed_us, 40.0);
        assert_eq!(rows[0].mean_elapsed_us, 20.0);
        assert_eq!(rows[0].mean_inner_per_outer, 512.0);
        assert_eq!(rows[1].n, 2048);
        assert_eq!(rows[2].algorithm, "ap");
    }
}

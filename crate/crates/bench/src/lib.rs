//! Measurement harness: doubling-size timing runs, CSV records, log-log SVG
//! plots, and brute-force verification of every algorithm.

pub mod config;
pub mod plot;
pub mod records;
pub mod runner;
pub mod verify;

use std::path::PathBuf;

pub use config::BenchConfig;
pub use plot::{emit_plot, render_plot, PlotKind};
pub use records::{aggregate, read_csv, write_csv, write_summary_csv, BenchRecord, SummaryRow};
pub use runner::{instance_seed, run_benchmark, BenchOutcome, RunFailure};
pub use verify::{relative_discrepancy, verify, Candidate, Mismatch, VerifyConfig, VerifyReport};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{path}, record {record}: {message}")]
    Record {
        path: PathBuf,
        record: usize,
        message: String,
    },
    #[error("{0}")]
    Plot(String),
    #[error(transparent)]
    Core(#[from] closest_pair::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Verification harness for the corona symmetry results: theorem sweeps
//! over enumerated graphs, randomized lemma suites, the conjecture search,
//! a persistent polynomial cache and the `indpoly` command line.

pub mod cache;
pub mod cli;
pub mod random;
pub mod report;
pub mod search;
pub mod suites;

pub use report::{ConjectureCandidate, Failure, SearchReport, VerificationReport};

/// Errors that stop a command before any mathematics is checked (bad input,
/// exceeded guards, I/O). Failed checks are report payloads, never errors.
#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] indpoly_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, HarnessError>;

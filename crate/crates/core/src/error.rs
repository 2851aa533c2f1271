//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or configuration value violated its invariants.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An operation was called outside its domain (time outside the horizon,
    /// empty sample set, zero-mass window, ...).
    #[error("{0}")]
    Domain(String),

    /// Every particle weight collapsed to zero while assimilating an interval.
    #[error("all particle weights are zero at interval {interval}; the model cannot explain the observation")]
    Degeneracy { interval: usize },

    /// The branching simulation exceeded the configured event cap.
    #[error("simulation produced more than {cap} events in interval {interval}")]
    SimulationOverflow { interval: usize, cap: usize },

    /// A data or configuration file failed to parse.
    #[error("{path}: {msg}")]
    Parse { path: String, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code: 1 for validation/parse problems, 2 for runtime failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::InvalidParameter(_) | Error::Parse { .. } => 1,
            _ => 2,
        }
    }
}

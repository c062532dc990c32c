use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Model validation failed; every violation is listed.
    #[error("invalid model:\n  {}", violations.join("\n  "))]
    InvalidModel { violations: Vec<String> },

    /// A policy does not fit the allocation or model it is used with.
    #[error("policy mismatch: {0}")]
    PolicyMismatch(String),

    /// A configured enumeration or state-space cap would be exceeded.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// Value iteration ran out of sweeps before reaching the stopping residual.
    #[error("no convergence after {iterations} sweeps (residual {residual:.3e})")]
    NotConverged { iterations: usize, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

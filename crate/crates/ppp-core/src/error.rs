use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature did not reach the requested tolerance. Carries the
    /// partial value and the error estimate at the point of giving up.
    #[error("quadrature did not converge: partial value {partial:e}, error estimate {estimate:e}")]
    NonConvergence { partial: f64, estimate: f64 },

    /// An oscillatory tail whose lobes grow instead of decaying.
    #[error("divergent integral detected: partial value {partial:e}")]
    Divergent { partial: f64 },

    /// Matrix handed to the Pfaffian violates its structural contract.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A computation would exceed the configured resource budget.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Invalid run configuration (CLI or config file).
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

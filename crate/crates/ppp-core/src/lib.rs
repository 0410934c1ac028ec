//! Numerical machinery for Pfaffian point processes on the real line.
//!
//! The crate evaluates the orthogonal/symplectic sine and Bessel matrix
//! kernels, their correlation functions (via Pfaffians), variances of
//! additive statistics, screening and defect diagnostics, spectral
//! measures of linear statistics for the stationary processes, occupation
//! number covariances, and Monte Carlo cross-validation against finite-N
//! beta-ensembles.

pub mod acceptance;
pub mod ensembles;
pub mod error;
pub mod io;
pub mod kernels;
pub mod occupation;
pub mod pfaffian;
pub mod quad;
pub mod rigidity;
pub mod spectral;
pub mod specfun;

pub use error::{Error, Result};

/// Configure the global rayon pool from the `PPP_THREADS` env var.
/// No-op if the pool was already built or the variable is unset/invalid.
pub fn configure_threads_from_env() {
    if let Ok(v) = std::env::var("PPP_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

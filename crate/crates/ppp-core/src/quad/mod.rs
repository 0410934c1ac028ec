//! Adaptive and oscillatory quadrature.

mod adaptive;
mod gk;
mod oscillatory;

pub use adaptive::{integrate, integrate_with, Endpoint, IntegralSpec, Quadrature};
pub use gk::{gk15, Gk15};
pub use oscillatory::{integrate_oscillatory_tail, OscHint};

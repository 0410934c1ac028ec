//! Special functions: real-order Bessel J, its derivative and cumulative
//! integral, the sine-kernel building blocks, and log-gamma.

mod bessel;
mod gamma;
mod sine;

pub use bessel::{bessel_j, bessel_j_cumulative, bessel_j_cumulative_tail, bessel_j_deriv, BesselOrder, CumulativeBessel};
pub(crate) use bessel::bessel_j_unchecked;
pub use gamma::ln_gamma;
pub use sine::{cos_integral, eps_sign, sinc_pi, sinc_pi_deriv, sine_integral, sine_kernel_parts, sine_kernel_primitive, SineParts};

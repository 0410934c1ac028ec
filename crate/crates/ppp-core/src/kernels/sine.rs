//! Stationary sine matrix kernels (orthogonal and symplectic).

use crate::specfun::{eps_sign, sinc_pi, sinc_pi_deriv, sine_kernel_primitive};

/// 2×2 entry bundle at displacement d = x − y.
#[derive(Debug, Clone, Copy)]
pub struct SineEntries {
    pub k11: f64,
    pub k12: f64,
    pub k21: f64,
    pub k22: f64,
}

pub fn sine1_entries(d: f64) -> SineEntries {
    let s = sinc_pi(d);
    SineEntries {
        k11: s,
        k12: sine_kernel_primitive(d) - eps_sign(d),
        k21: sinc_pi_deriv(d),
        k22: s,
    }
}

pub fn sine4_entries(d: f64) -> SineEntries {
    let s = sinc_pi(d);
    SineEntries {
        k11: 0.5 * s,
        k12: 0.5 * sine_kernel_primitive(d),
        k21: 0.5 * sinc_pi_deriv(d),
        k22: 0.5 * s,
    }
}

/// det K for the orthogonal sine kernel as a function of d = x − y.
pub fn sine1_det(d: f64) -> f64 {
    let e = sine1_entries(d);
    e.k11 * e.k22 - e.k12 * e.k21
}

/// det K for the symplectic sine kernel.
pub fn sine4_det(d: f64) -> f64 {
    let e = sine4_entries(d);
    e.k11 * e.k22 - e.k12 * e.k21
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrices() {
        let e1 = sine1_entries(0.0);
        assert_eq!((e1.k11, e1.k12, e1.k21, e1.k22), (1.0, 0.0, 0.0, 1.0));
        let e4 = sine4_entries(0.0);
        assert_eq!((e4.k11, e4.k12, e4.k21, e4.k22), (0.5, 0.0, 0.0, 0.5));
    }

    #[test]
    fn det_at_zero() {
        assert_eq!(sine1_det(0.0), 1.0);
        assert_eq!(sine4_det(0.0), 0.25);
    }

    #[test]
    fn sine4_large_distance_cosine_tail() {
        // ρ^{(2,T)}(d) = −det K ≈ cos(πd)/(8d) at d = 20, so det ≈ −1/160
        let d = 20.0;
        let got = -sine4_det(d);
        let want = (std::f64::consts::PI * d).cos() / (8.0 * d);
        assert!((got - want).abs() < 4.0 / (d * d), "{got} vs {want}");
    }
}

//! Sine-kernel building blocks: S(x) = sin(πx)/(πx), its derivative, the
//! primitive IS(x) = ∫₀ˣ S, and the half-sign function ε. Also the sine
//! and cosine integrals Si/Ci used for analytic oscillatory tails.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::quad::gk15;

/// S(x) = sin(πx)/(πx) with S(0) = 1.
pub fn sinc_pi(x: f64) -> f64 {
    let z = PI * x;
    if z.abs() < 1e-4 {
        let z2 = z * z;
        return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0);
    }
    z.sin() / z
}

/// S'(x) = (cos(πx) − S(x))/x with S'(0) = 0.
pub fn sinc_pi_deriv(x: f64) -> f64 {
    if x.abs() < 0.02 {
        let p2 = PI * PI;
        let x2 = x * x;
        // −π²x/3 + π⁴x³/30 − π⁶x⁵/840
        return -p2 * x / 3.0 * (1.0 - 0.1 * p2 * x2 * (1.0 - p2 * x2 / 28.0));
    }
    ((PI * x).cos() - sinc_pi(x)) / x
}

/// IS(x) = ∫₀ˣ S(t) dt = Si(πx)/π; odd in x.
pub fn sine_kernel_primitive(x: f64) -> f64 {
    sine_integral(PI * x) / PI
}

/// ε(x) = sgn(x)/2 with ε(0) = 0.
pub fn eps_sign(x: f64) -> f64 {
    if x > 0.0 {
        0.5
    } else if x < 0.0 {
        -0.5
    } else {
        0.0
    }
}

/// The bundle (S, S', IS, ε) evaluated at x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineParts {
    pub s: f64,
    pub s_deriv: f64,
    pub s_primitive: f64,
    pub eps: f64,
}

pub fn sine_kernel_parts(x: f64) -> SineParts {
    SineParts {
        s: sinc_pi(x),
        s_deriv: sinc_pi_deriv(x),
        s_primitive: sine_kernel_primitive(x),
        eps: eps_sign(x),
    }
}

const SI_SERIES_CUT: f64 = 12.0;
const SI_ASYM_CUT: f64 = 45.0;

/// Si(z) = ∫₀ᶻ sin t / t dt, any real z (odd).
pub fn sine_integral(z: f64) -> f64 {
    if z < 0.0 {
        return -sine_integral(-z);
    }
    if z < SI_SERIES_CUT {
        si_series(z)
    } else if z < SI_ASYM_CUT {
        // anchor at the series endpoint, bridge with quadrature
        let mut acc = si_series(SI_SERIES_CUT);
        let mut lo = SI_SERIES_CUT;
        while lo < z {
            let hi = (lo + 3.0).min(z);
            acc += gk15(|t: f64| t.sin() / t, lo, hi).value;
            lo = hi;
        }
        acc
    } else {
        let (f, g) = si_aux(z);
        FRAC_PI_2 - f * z.cos() - g * z.sin()
    }
}

/// Ci(z) = γ + ln z + ∫₀ᶻ (cos t − 1)/t dt, z > 0. Used only for large-z
/// tails, where the auxiliary-function asymptotics are already exact.
pub fn cos_integral(z: f64) -> f64 {
    debug_assert!(z > 0.0);
    if z >= SI_ASYM_CUT {
        let (f, g) = si_aux(z);
        return f * z.sin() - g * z.cos();
    }
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    if z < SI_SERIES_CUT {
        // series: γ + ln z + Σ (−1)^k z^{2k} / (2k (2k)!)
        let mut term = 1.0;
        let mut sum = 0.0;
        let z2 = z * z;
        for k in 1..120 {
            let kf = k as f64;
            term *= -z2 / ((2.0 * kf) * (2.0 * kf - 1.0));
            let contrib = term / (2.0 * kf);
            sum += contrib;
            if contrib.abs() < 1e-17 * sum.abs().max(1.0) {
                break;
            }
        }
        return EULER_GAMMA + z.ln() + sum;
    }
    let mut acc = cos_integral(SI_SERIES_CUT - 1e-12);
    let mut lo = SI_SERIES_CUT - 1e-12;
    while lo < z {
        let hi = (lo + 3.0).min(z);
        acc += gk15(|t: f64| t.cos() / t, lo, hi).value;
        lo = hi;
    }
    acc
}

fn si_series(z: f64) -> f64 {
    let z2 = z * z;
    let mut term = z;
    let mut sum = z;
    for k in 1..120 {
        let kf = k as f64;
        term *= -z2 / ((2.0 * kf) * (2.0 * kf + 1.0));
        let contrib = term / (2.0 * kf + 1.0);
        sum += contrib;
        if contrib.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// Auxiliary asymptotics: f(z) ~ (1/z) Σ (−1)^k (2k)!/z^{2k},
/// g(z) ~ (1/z²) Σ (−1)^k (2k+1)!/z^{2k}; Si = π/2 − f cos − g sin.
fn si_aux(z: f64) -> (f64, f64) {
    let z2 = z * z;
    let mut f = 0.0;
    let mut g = 0.0;
    let mut tf = 1.0; // (2k)! / z^{2k}
    let mut tg = 1.0; // (2k+1)! / z^{2k}
    let mut sign = 1.0;
    for k in 0..14 {
        if k > 0 {
            let kf = k as f64;
            tf *= (2.0 * kf) * (2.0 * kf - 1.0) / z2;
            tg *= (2.0 * kf + 1.0) * (2.0 * kf) / z2;
        }
        f += sign * tf;
        g += sign * tg;
        sign = -sign;
        if tf < 1e-17 && tg < 1e-17 {
            break;
        }
    }
    (f / z, g / z2)
}

//! Bessel functions of the first kind for real order ν > −1 on x ≥ 0,
//! with derivative and cumulative integral ∫₀ˣ J_ν.
//!
//! Three regimes: ascending series for small argument, Steed's continued
//! fractions (CF1 + CF2) in the middle, Hankel asymptotic expansion for
//! large argument. The cumulative integral is a lazily extended panel
//! cache; the first panel is integrated from the series term by term so
//! that orders ν ∈ (−1, 0) with an integrable singularity at 0 stay exact.

use std::f64::consts::PI;
use std::sync::RwLock;

use super::gamma::ln_gamma;
use crate::error::{Error, Result};
use crate::quad::gk15;

/// Real Bessel order, restricted to ν > −1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu <= -1.0 {
            return Err(Error::Domain(format!("Bessel order must be > -1, got {nu}")));
        }
        Ok(BesselOrder(nu))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

const SERIES_CUT: f64 = 9.0;
const STEED_MAX_IT: usize = 20_000;
const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-290;

fn asym_cut(nu: f64) -> f64 {
    (1.5 * nu * nu).max(40.0)
}

/// J_ν(x) for ν > −1, x ≥ 0.
pub fn bessel_j(order: BesselOrder, x: f64) -> Result<f64> {
    let nu = order.get();
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("Bessel argument must be >= 0, got {x}")));
    }
    Ok(bessel_j_unchecked(nu, x))
}

pub(crate) fn bessel_j_unchecked(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
    }
    if x < SERIES_CUT {
        j_series(nu, x)
    } else if x < asym_cut(nu) {
        if nu >= 0.0 {
            j_steed(nu, x)
        } else {
            // downward order recurrence from (ν+1, ν+2), stable for x > ν
            let j1 = j_steed(nu + 1.0, x);
            let j2 = j_steed(nu + 2.0, x);
            2.0 * (nu + 1.0) / x * j1 - j2
        }
    } else {
        j_asymptotic(nu, x)
    }
}

/// Ascending series, valid for any ν > −1 and small-to-moderate x.
fn j_series(nu: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        let k = k as f64;
        term *= -q / (k * (nu + k));
        sum += term;
        if term.abs() < EPS * sum.abs() {
            break;
        }
    }
    let ln_pref = nu * (0.5 * x).ln() - ln_gamma(nu + 1.0);
    sum * ln_pref.exp()
}

/// Steed's method (CF1 + CF2), ν ≥ 0, x ≳ 2.
fn j_steed(nu: f64, x: f64) -> f64 {
    let nl = ((nu - x + 1.5).floor().max(0.0)) as usize;
    let xmu = nu - nl as f64;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1 for J'_ν / J_ν with sign tracking
    let mut isign = 1.0_f64;
    let mut h = nu * xi;
    if h < FPMIN {
        h = FPMIN;
    }
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..STEED_MAX_IT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    debug_assert!(converged, "CF1 failed for nu={nu}, x={x}");

    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let mut fact = nu * xi;
    for _ in (1..=nl).rev() {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    // CF2 for p + iq = (J' + iY')/(J + iY) at order xmu
    let xmu2 = xmu * xmu;
    let mut a = 0.25 - xmu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    for i in 2..STEED_MAX_IT {
        a += 2.0 * (i as f64 - 1.0);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di = -di / den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        let temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            break;
        }
    }
    let gam = (p - f) / q;
    let mut rjmu = (w / ((p - f) * gam + q)).sqrt();
    if rjl < 0.0 {
        rjmu = -rjmu;
    }
    // rjl is the unnormalized J_xmu, rjl1 the unnormalized J_nu
    rjl1 * (rjmu / rjl)
}

/// Hankel asymptotic expansion with adaptive truncation.
fn j_asymptotic(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let chi = x - (0.5 * nu + 0.25) * PI;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut prev = f64::INFINITY;
    for m in 1..=30usize {
        let mm = m as f64;
        term *= (mu - (2.0 * mm - 1.0).powi(2)) / (mm * 8.0 * x);
        if term.abs() > prev {
            break; // divergent tail of the asymptotic series
        }
        prev = term.abs();
        // sign pattern: m = 2j+1 -> Q with (−1)^j ; m = 2j -> P with (−1)^j
        match m % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-18 {
            break;
        }
    }
    (2.0 / (PI * x)).sqrt() * (chi.cos() * p - chi.sin() * q)
}

/// J'_ν(x) = (ν/x) J_ν(x) − J_{ν+1}(x); x = 0 needs ν ≥ 1.
pub fn bessel_j_deriv(order: BesselOrder, x: f64) -> Result<f64> {
    let nu = order.get();
    if x < 0.0 {
        return Err(Error::Domain(format!("Bessel argument must be >= 0, got {x}")));
    }
    if x == 0.0 {
        return if nu > 1.0 {
            Ok(0.0)
        } else if nu == 1.0 {
            Ok(0.5)
        } else if nu == 0.0 {
            Ok(0.0)
        } else {
            Err(Error::Domain(format!(
                "J'_nu singular at x=0 for 0 < nu < 1 or nu < 0 (nu={nu})"
            )))
        };
    }
    let j = bessel_j_unchecked(nu, x);
    let j1 = bessel_j_unchecked(nu + 1.0, x);
    Ok(nu / x * j - j1)
}

/// Cumulative integral ∫₀ˣ J_ν(t) dt with a lazily extended panel cache.
///
/// Panels are π/2 wide. The first panel is summed from the ascending
/// series integrated term by term (handles the x^ν endpoint behaviour for
/// ν < 0 exactly); later panels use Gauss–Kronrod.
pub struct CumulativeBessel {
    nu: f64,
    state: RwLock<CumState>,
}

struct CumState {
    /// prefix[i] = ∫₀^{edges[i]} J_ν ; edges[0] = first panel end
    edges: Vec<f64>,
    prefix: Vec<f64>,
}

const PANEL: f64 = PI / 2.0;

impl CumulativeBessel {
    pub fn new(order: BesselOrder) -> Self {
        CumulativeBessel {
            nu: order.get(),
            state: RwLock::new(CumState { edges: Vec::new(), prefix: Vec::new() }),
        }
    }

    pub fn order(&self) -> f64 {
        self.nu
    }

    /// ∫₀ˣ J_ν(t) dt, x ≥ 0.
    pub fn value(&self, x: f64) -> f64 {
        debug_assert!(x >= 0.0);
        if x == 0.0 {
            return 0.0;
        }
        if x <= PANEL {
            return self.series_integral(x);
        }
        self.ensure(x);
        let st = self.state.read().unwrap();
        // last edge strictly below x
        let idx = match st.edges.binary_search_by(|e| e.partial_cmp(&x).unwrap()) {
            Ok(i) => return st.prefix[i],
            Err(i) => i,
        };
        // idx >= 1 because x > PANEL = edges[0]
        let base = st.prefix[idx - 1];
        let lo = st.edges[idx - 1];
        let nu = self.nu;
        base + gk15(|t| bessel_j_unchecked(nu, t), lo, x).value
    }

    /// ∫ₓ^∞ J_ν(t) dt = 1 − ∫₀ˣ J_ν(t) dt.
    pub fn tail(&self, x: f64) -> f64 {
        1.0 - self.value(x)
    }

    fn ensure(&self, x: f64) {
        {
            let st = self.state.read().unwrap();
            if st.edges.last().map_or(false, |&e| e >= x) {
                return;
            }
        }
        let mut st = self.state.write().unwrap();
        if st.edges.is_empty() {
            st.edges.push(PANEL);
            let first = self.series_integral(PANEL);
            st.prefix.push(first);
        }
        while *st.edges.last().unwrap() < x {
            let lo = *st.edges.last().unwrap();
            let hi = lo + PANEL;
            let nu = self.nu;
            let inc = gk15(|t| bessel_j_unchecked(nu, t), lo, hi).value;
            let base = *st.prefix.last().unwrap();
            st.edges.push(hi);
            st.prefix.push(base + inc);
        }
    }

    /// Term-by-term integrated ascending series, for 0 ≤ x ≤ π/2.
    fn series_integral(&self, x: f64) -> f64 {
        let nu = self.nu;
        let q = 0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0 / (nu + 1.0);
        for k in 1..200 {
            let kf = k as f64;
            term *= -q / (kf * (nu + kf));
            let contrib = term / (nu + 2.0 * kf + 1.0);
            sum += contrib;
            if contrib.abs() < EPS * sum.abs() {
                break;
            }
        }
        // ∫₀ˣ t^{ν+2k} dt / (2^{ν+2k} k! Γ(ν+k+1)) summed above; prefix x^{ν+1}/2^ν/Γ(ν+1)
        let ln_pref = (nu + 1.0) * x.ln() - nu * 2f64.ln() - ln_gamma(nu + 1.0);
        sum * ln_pref.exp()
    }
}

/// Convenience wrapper: one-shot ∫₀ˣ J_ν without keeping the cache.
pub fn bessel_j_cumulative(order: BesselOrder, x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("cumulative Bessel needs x >= 0, got {x}")));
    }
    Ok(CumulativeBessel::new(order).value(x))
}

/// One-shot tail ∫ₓ^∞ J_ν = 1 − ∫₀ˣ J_ν.
pub fn bessel_j_cumulative_tail(order: BesselOrder, x: f64) -> Result<f64> {
    Ok(1.0 - bessel_j_cumulative(order, x)?)
}

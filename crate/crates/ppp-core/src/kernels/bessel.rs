//! Scalar Bessel kernels: the determinantal kernel 𝕂_{2,a}, the symplectic
//! scalar kernel K_s and the orthogonal scalar kernel K_{1,s}, with closed
//! x-derivatives and the primitive ∫ K(x,t) dt needed by the matrix kernels.
//!
//! Both matrix-kernel families reduce to one numerator shape
//!   N(u,v) = u² J_{c+1}(u) J_c(v) − u v J_{c+1}(v) J_c(u)
//! evaluated at square-root arguments, with denominators carrying the
//! removable singularity at u = v. Near the diagonal everything switches
//! to a third-order Taylor expansion in (v − u) built from the Bessel ODE.

use crate::specfun::{bessel_j_unchecked, BesselOrder, CumulativeBessel};

/// J_c, J_{c+1} and their first three derivatives at one argument.
#[derive(Debug, Clone, Copy)]
pub(crate) struct JPair {
    pub j0: f64,  // J_c(z)
    pub j1: f64,  // J_{c+1}(z)
    pub d0: f64,  // J_c'(z)
    pub d1: f64,  // J_{c+1}'(z)
    pub dd0: f64, // J_c''(z)
    pub dd1: f64,
    pub ddd0: f64, // J_c'''(z)
    pub ddd1: f64,
}

pub(crate) fn jpair(c: f64, z: f64) -> JPair {
    let j0 = bessel_j_unchecked(c, z);
    let j1 = bessel_j_unchecked(c + 1.0, z);
    let d0 = c / z * j0 - j1;
    let d1 = bessel_j_unchecked(c + 2.0, z); // reuse slot: J_{c+2}
    let d1 = (c + 1.0) / z * j1 - d1;
    let ode = |nu: f64, j: f64, dj: f64| -dj / z - (1.0 - nu * nu / (z * z)) * j;
    let dd0 = ode(c, j0, d0);
    let dd1 = ode(c + 1.0, j1, d1);
    let ode3 = |nu: f64, j: f64, dj: f64, ddj: f64| {
        -ddj / z + dj / (z * z) - (1.0 - nu * nu / (z * z)) * dj - 2.0 * nu * nu / (z * z * z) * j
    };
    let ddd0 = ode3(c, j0, d0, dd0);
    let ddd1 = ode3(c + 1.0, j1, d1, dd1);
    JPair { j0, j1, d0, d1, dd0, dd1, ddd0, ddd1 }
}

/// N(u, v) for order pair (c, c+1).
fn n_far(c: f64, u: f64, v: f64) -> f64 {
    let ju0 = bessel_j_unchecked(c, u);
    let ju1 = bessel_j_unchecked(c + 1.0, u);
    let jv0 = bessel_j_unchecked(c, v);
    let jv1 = bessel_j_unchecked(c + 1.0, v);
    u * u * ju1 * jv0 - u * v * jv1 * ju0
}

/// ∂N/∂u at (u, v).
fn n_du(c: f64, u: f64, v: f64) -> f64 {
    let ju0 = bessel_j_unchecked(c, u);
    let ju1 = bessel_j_unchecked(c + 1.0, u);
    let jv0 = bessel_j_unchecked(c, v);
    let jv1 = bessel_j_unchecked(c + 1.0, v);
    (u * u * ju0 + (1.0 - c) * u * ju1) * jv0 - v * jv1 * ((1.0 + c) * ju0 - u * ju1)
}

/// v-Taylor coefficients of N at v = u: returns (N_v, N_vv, N_vvv).
fn n_taylor(c: f64, u: f64) -> (f64, f64, f64) {
    let p = jpair(c, u);
    let nv = u * u * p.j1 * p.d0 - u * p.j1 * p.j0 - u * u * p.d1 * p.j0;
    let nvv = u * u * p.j1 * p.dd0 - 2.0 * u * p.d1 * p.j0 - u * u * p.dd1 * p.j0;
    let nvvv = u * u * p.j1 * p.ddd0 - 3.0 * u * p.dd1 * p.j0 - u * u * p.ddd1 * p.j0;
    (nv, nvv, nvvv)
}

/// Relative diagonal window where the Taylor branch takes over.
const DIAG_REL: f64 = 5e-4;

/// N(u,v)/(u² − v²) with the removable diagonal handled.
pub(crate) fn ratio(c: f64, u: f64, v: f64) -> f64 {
    if (v - u).abs() <= DIAG_REL * u.max(1e-12) {
        let e = v - u;
        let (nv, nvv, nvvv) = n_taylor(c, u);
        // (u² − v²) = −e (u + v)
        return -(nv + 0.5 * nvv * e + nvvv * e * e / 6.0) / (u + v);
    }
    n_far(c, u, v) / ((u - v) * (u + v))
}

/// ∂/∂u of N/(u² − v²), far branch only (the caller handles near-diagonal
/// derivatives by Richardson differences of the far branch).
fn ratio_du_far(c: f64, u: f64, v: f64) -> f64 {
    let d = (u - v) * (u + v);
    n_du(c, u, v) / d - n_far(c, u, v) * 2.0 * u / (d * d)
}

/// Determinantal Bessel kernel 𝕂_{2,a}(x, y), x, y > 0.
pub fn bessel2_kernel(a: f64, x: f64, y: f64) -> f64 {
    // N(u,v) = u · [u J_{a+1}(u) J_a(v) − v J_{a+1}(v) J_a(u)], so
    // 𝕂_{2,a} = N(√x, √y) / (2 √x (x − y))
    let u = x.sqrt();
    let v = y.sqrt();
    ratio(a, u, v) / (2.0 * u)
}

/// State for the symplectic scalar kernel K_s at parameter s > 0.
pub struct SymplecticScalar {
    pub s: f64,
    a: f64,
    cum: CumulativeBessel,
}

impl SymplecticScalar {
    pub fn new(s: f64) -> Self {
        let a = 2.0 * s - 1.0;
        SymplecticScalar { s, a, cum: CumulativeBessel::new(BesselOrder::new(a).expect("a > -1 for s > 0")) }
    }

    /// A(x) = ∫₀^{√x} J_{2s−1}(2t) dt = ½ ∫₀^{2√x} J_{2s−1}.
    pub fn a_int(&self, x: f64) -> f64 {
        0.5 * self.cum.value(2.0 * x.sqrt())
    }

    /// K_s(x, y); x ≥ 0, y > 0.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let u = 2.0 * x.sqrt();
        let v = 2.0 * y.sqrt();
        let part1 = ratio(self.a, u, v) / v;
        let part2 = bessel_j_unchecked(self.a, v) / v * self.cum.value(u) * 0.5;
        part1 - part2
    }

    /// ∂K_s/∂x (x, y); x > 0, y > 0.
    pub fn deriv_x(&self, x: f64, y: f64) -> f64 {
        let m = x.abs().max(1.0);
        let dxy = (x - y).abs();
        if dxy <= 1e-9 * m {
            return 0.0; // skew-symmetry forces the diagonal to zero
        }
        if dxy <= 1e-3 * m {
            // Richardson differences of the far formula, steps clear of y
            let h = (0.02 * m).min(0.5 * x);
            let fd = |hh: f64| (self.eval(x + hh, y) - self.eval(x - hh, y)) / (2.0 * hh);
            let d1 = fd(h);
            let d2 = fd(0.5 * h);
            return (4.0 * d2 - d1) / 3.0;
        }
        let u = 2.0 * x.sqrt();
        let v = 2.0 * y.sqrt();
        let du_dx = 2.0 / u;
        let t1 = ratio_du_far(self.a, u, v) / v;
        let t2 = bessel_j_unchecked(self.a, v) / v * bessel_j_unchecked(self.a, u) * 0.5;
        du_dx * (t1 - t2)
    }

    /// I12(x, y) = ∫ₓʸ K_s(x, t) dt (signed).
    pub fn primitive(&self, x: f64, y: f64) -> f64 {
        let u = 2.0 * x.sqrt();
        let w_to = 2.0 * y.sqrt();
        let ax = 0.5 * self.cum.value(u);
        let ay = 0.5 * self.cum.value(w_to);
        0.5 * rint(self.a, u, w_to) - ax * (ay - ax)
    }

    /// Diagonal value K_s(x, x).
    pub fn diag(&self, x: f64) -> f64 {
        self.eval(x, x)
    }
}

/// State for the orthogonal scalar kernel K_{1,s}.
pub struct OrthogonalScalar {
    pub s: f64,
    b: f64,
    cum: CumulativeBessel,
}

impl OrthogonalScalar {
    pub fn new(s: f64) -> Self {
        let b = s + 1.0;
        OrthogonalScalar { s, b, cum: CumulativeBessel::new(BesselOrder::new(b).expect("b > -1")) }
    }

    /// C(x) = ∫_{√x}^∞ J_{s+1}(t) dt = 1 − ∫₀^{√x} J_{s+1}.
    pub fn c_int(&self, x: f64) -> f64 {
        1.0 - self.cum.value(x.sqrt())
    }

    /// K_{1,s}(x, y); x ≥ 0, y > 0.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let u = x.sqrt();
        let v = y.sqrt();
        let part1 = ratio(self.b, u, v) / (2.0 * v);
        let part2 = bessel_j_unchecked(self.b, v) / (4.0 * v) * self.c_int(x);
        part1 + part2
    }

    pub fn deriv_x(&self, x: f64, y: f64) -> f64 {
        let m = x.abs().max(1.0);
        let dxy = (x - y).abs();
        if dxy <= 1e-9 * m {
            return 0.0;
        }
        if dxy <= 1e-3 * m {
            let h = (0.02 * m).min(0.5 * x);
            let fd = |hh: f64| (self.eval(x + hh, y) - self.eval(x - hh, y)) / (2.0 * hh);
            let d1 = fd(h);
            let d2 = fd(0.5 * h);
            return (4.0 * d2 - d1) / 3.0;
        }
        let u = x.sqrt();
        let v = y.sqrt();
        let du_dx = 0.5 / u;
        let t1 = ratio_du_far(self.b, u, v) / (2.0 * v);
        let t2 = bessel_j_unchecked(self.b, v) / (4.0 * v) * bessel_j_unchecked(self.b, u);
        du_dx * (t1 - t2)
    }

    /// I12(x, y) = ∫ₓʸ K_{1,s}(x, t) dt (signed).
    pub fn primitive(&self, x: f64, y: f64) -> f64 {
        let u = x.sqrt();
        let w_to = y.sqrt();
        let cx = self.c_int(x);
        rint(self.b, u, w_to) + cx * 0.5 * (self.cum.value(w_to) - self.cum.value(u))
    }

    pub fn diag(&self, x: f64) -> f64 {
        self.eval(x, x)
    }
}

/// ∫_u^W N_c(u, w)/(u² − w²) dw by Gauss–Kronrod panels ≤ π/2 wide
/// (resolves the J oscillation in w; the integrand is smooth through w = u).
pub(crate) fn rint(c: f64, u: f64, w_to: f64) -> f64 {
    let mut acc = 0.0;
    let step = std::f64::consts::FRAC_PI_2;
    let (lo, hi, sign) = if w_to >= u { (u, w_to, 1.0) } else { (w_to, u, -1.0) };
    let mut a = lo;
    while a < hi {
        let b = (a + step).min(hi);
        acc += crate::quad::gk15(|w| ratio(c, u, w), a, b).value;
        a = b;
    }
    sign * acc
}

/// Fixed-x evaluation slice for the Bessel matrix kernels. Caches the
/// w-cumulative of ∫ N(u,w)/(u²−w²) dw in both directions from u, so that
/// repeated det-evaluations at many y (inner integrals) cost O(1) panels.
/// Single-thread use; create one per outer quadrature node.
pub(crate) struct BesselSlice<'a> {
    sym: Option<&'a SymplecticScalar>,
    ort: Option<&'a OrthogonalScalar>,
    c: f64,
    pub x: f64,
    u: f64,
    ax: f64, // A(x) for β=4; C(x) for β=1
    ju0: f64,
    ju1: f64,
    up: std::cell::RefCell<(Vec<f64>, Vec<f64>)>,   // edges ≥ u, prefix
    down: std::cell::RefCell<(Vec<f64>, Vec<f64>)>, // edges ≤ u (descending), prefix of ∫ from edge to u with sign
}

const SLICE_STEP: f64 = std::f64::consts::FRAC_PI_2;

impl<'a> BesselSlice<'a> {
    pub fn symplectic(k: &'a SymplecticScalar, x: f64) -> Self {
        let u = 2.0 * x.sqrt();
        BesselSlice {
            sym: Some(k),
            ort: None,
            c: k.a,
            x,
            u,
            ax: 0.5 * k.cum.value(u),
            ju0: bessel_j_unchecked(k.a, u),
            ju1: bessel_j_unchecked(k.a + 1.0, u),
            up: std::cell::RefCell::new((vec![u], vec![0.0])),
            down: std::cell::RefCell::new((vec![u], vec![0.0])),
        }
    }

    pub fn orthogonal(k: &'a OrthogonalScalar, x: f64) -> Self {
        let u = x.sqrt();
        BesselSlice {
            sym: None,
            ort: Some(k),
            c: k.b,
            x,
            u,
            ax: 1.0 - k.cum.value(u),
            ju0: bessel_j_unchecked(k.b, u),
            ju1: bessel_j_unchecked(k.b + 1.0, u),
            up: std::cell::RefCell::new((vec![u], vec![0.0])),
            down: std::cell::RefCell::new((vec![u], vec![0.0])),
        }
    }

    /// Cached ∫_u^w ratio(c, u, ·) (signed).
    fn rint_cached(&self, w: f64) -> f64 {
        if (w - self.u).abs() < 1e-15 {
            return 0.0;
        }
        if w >= self.u {
            let mut st = self.up.borrow_mut();
            while *st.0.last().unwrap() < w {
                let a = *st.0.last().unwrap();
                let b = a + SLICE_STEP;
                let inc = crate::quad::gk15(|t| ratio(self.c, self.u, t), a, b).value;
                let base = *st.1.last().unwrap();
                st.0.push(b);
                st.1.push(base + inc);
            }
            let idx = match st.0.binary_search_by(|e| e.partial_cmp(&w).unwrap()) {
                Ok(i) => return st.1[i],
                Err(i) => i,
            };
            let base = st.1[idx - 1];
            let lo = st.0[idx - 1];
            base + crate::quad::gk15(|t| ratio(self.c, self.u, t), lo, w).value
        } else {
            let mut st = self.down.borrow_mut();
            while *st.0.last().unwrap() > w {
                let a = *st.0.last().unwrap();
                let b = (a - SLICE_STEP).max(0.0);
                let inc = crate::quad::gk15(|t| ratio(self.c, self.u, t), a, b).value;
                let base = *st.1.last().unwrap();
                st.0.push(b);
                st.1.push(base + inc);
                if b == 0.0 {
                    break;
                }
            }
            let idx = match st.0.binary_search_by(|e| w.partial_cmp(e).unwrap()) {
                Ok(i) => return st.1[i],
                Err(i) => i,
            };
            let base = st.1[idx - 1];
            let lo = st.0[idx - 1];
            base + crate::quad::gk15(|t| ratio(self.c, self.u, t), lo, w).value
        }
    }

    /// det K(x, y) for the matrix kernel this slice belongs to.
    pub fn det(&self, y: f64) -> f64 {
        if let Some(k) = self.sym {
            let v = 2.0 * y.sqrt();
            let k_xy = ratio(self.c, self.u, v) / v - bessel_j_unchecked(self.c, v) / v * self.ax;
            let ay = 0.5 * k.cum.value(v);
            let k_yx = ratio(self.c, v, self.u) / self.u - self.ju0 / self.u * ay;
            let d1 = self.deriv_sym(y, v);
            let i12 = 0.5 * self.rint_cached(v) - self.ax * (ay - self.ax);
            k_xy * k_yx + i12 * d1
        } else {
            let k = self.ort.unwrap();
            let v = y.sqrt();
            let cy = 1.0 - k.cum.value(v);
            let k_xy = ratio(self.c, self.u, v) / (2.0 * v) + bessel_j_unchecked(self.c, v) / (4.0 * v) * self.ax;
            let k_yx = ratio(self.c, v, self.u) / (2.0 * self.u) + self.ju0 / (4.0 * self.u) * cy;
            let d1 = self.deriv_ort(y, v);
            let i12 = self.rint_cached(v) + self.ax * 0.5 * ((1.0 - cy) - (1.0 - self.ax));
            let eps = crate::specfun::eps_sign(self.x - y);
            k_xy * k_yx + (i12 + eps) * d1
        }
    }

    fn deriv_sym(&self, y: f64, v: f64) -> f64 {
        let m = self.x.abs().max(1.0);
        if (self.x - y).abs() <= 1e-3 * m {
            return self.sym.unwrap().deriv_x(self.x, y);
        }
        let du_dx = 2.0 / self.u;
        let t1 = ratio_du_far(self.c, self.u, v) / v;
        let t2 = bessel_j_unchecked(self.c, v) / v * self.ju0 * 0.5;
        du_dx * (t1 - t2)
    }

    fn deriv_ort(&self, y: f64, v: f64) -> f64 {
        let m = self.x.abs().max(1.0);
        if (self.x - y).abs() <= 1e-3 * m {
            return self.ort.unwrap().deriv_x(self.x, y);
        }
        let du_dx = 0.5 / self.u;
        let t1 = ratio_du_far(self.c, self.u, v) / (2.0 * v);
        let t2 = bessel_j_unchecked(self.c, v) / (4.0 * v) * self.ju0;
        du_dx * (t1 - t2)
    }

    /// Product of the scalar kernel both ways: K(x,y) K(y,x) (defect integrand).
    pub fn kk(&self, y: f64) -> f64 {
        if let Some(k) = self.sym {
            let v = 2.0 * y.sqrt();
            let k_xy = ratio(self.c, self.u, v) / v - bessel_j_unchecked(self.c, v) / v * self.ax;
            let ay = 0.5 * k.cum.value(v);
            let k_yx = ratio(self.c, v, self.u) / self.u - self.ju0 / self.u * ay;
            k_xy * k_yx
        } else {
            let k = self.ort.unwrap();
            let v = y.sqrt();
            let cy = 1.0 - k.cum.value(v);
            let k_xy = ratio(self.c, self.u, v) / (2.0 * v) + bessel_j_unchecked(self.c, v) / (4.0 * v) * self.ax;
            let k_yx = ratio(self.c, v, self.u) / (2.0 * self.u) + self.ju0 / (4.0 * self.u) * cy;
            k_xy * k_yx
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate;
    use crate::specfun::bessel_j_unchecked as j;

    #[test]
    fn bessel2_symmetry() {
        let a = 1.0;
        for (x, y) in [(1.0, 2.0), (0.3, 5.5), (10.0, 10.7)] {
            let k1 = bessel2_kernel(a, x, y);
            let k2 = bessel2_kernel(a, y, x);
            assert!((k1 - k2).abs() < 1e-12 * k1.abs().max(1e-6), "{k1} vs {k2}");
        }
    }

    #[test]
    fn bessel2_diagonal_difference_quotient() {
        // diagonal value vs centered difference quotient at h = 1e-4
        let a = 1.0;
        let x = 1.0;
        let diag = bessel2_kernel(a, x, x);
        let h = 1e-4;
        let approx = 0.5 * (bessel2_kernel(a, x, x + h) + bessel2_kernel(a, x, x - h));
        assert!((diag - approx).abs() < 1e-7, "{diag} vs {approx}");
    }

    #[test]
    fn bessel2_taylor_matches_far_formula() {
        // evaluate just inside and outside the diagonal window
        let a = 1.0;
        let x = 3.0_f64;
        let u = x.sqrt();
        for &rel in &[2e-4, 4.9e-4, 5.1e-4, 1e-3] {
            let v = u * (1.0 + rel);
            let tay = -(|| {
                let e = v - u;
                let (nv, nvv, nvvv) = n_taylor(a, u);
                (nv + 0.5 * nvv * e + nvvv * e * e / 6.0) / (u + v)
            })();
            let far = n_far(a, u, v) / ((u - v) * (u + v));
            assert!((tay - far).abs() < 2e-9 * far.abs().max(1e-3), "rel={rel}: {tay} vs {far}");
        }
    }

    #[test]
    fn symplectic_vanishes_at_zero() {
        let k = SymplecticScalar::new(1.0);
        assert_eq!(k.eval(0.0, 2.0), 0.0);
        // and the paper's infinite-y limit −J_{2s−1}(2√x)/(4√x) at y = 1e6 within 1e−2
        let x = 2.0_f64;
        let lim = -j(1.0, 2.0 * x.sqrt()) / (4.0 * x.sqrt());
        let v = k.eval(1e6, x);
        assert!((v - lim).abs() < 1e-2, "{v} vs {lim}");
    }

    #[test]
    fn symplectic_construction_consistency() {
        // the two hard-edge constructions agree:
        // 2𝕂_{2,2s}(4x,4y) − 2(x/y)^{1/2}𝕂_{2,2s−1}(4x,4y)
        //   = −J_{2s}(2√x) J_{2s−1}(2√y)/(2√y) at (s,x,y) = (1, 0.7, 1.9)
        let (s, x, y) = (1.0, 0.7, 1.9);
        let lhs = 2.0 * bessel2_kernel(2.0 * s, 4.0 * x, 4.0 * y)
            - 2.0 * (x / y).sqrt() * bessel2_kernel(2.0 * s - 1.0, 4.0 * x, 4.0 * y);
        let rhs = -j(2.0 * s, 2.0 * x.sqrt()) * j(2.0 * s - 1.0, 2.0 * y.sqrt()) / (2.0 * y.sqrt());
        assert!((lhs - rhs).abs() < 1e-9, "{lhs} vs {rhs}");
    }

    #[test]
    fn symplectic_matches_direct_assembly() {
        let k = SymplecticScalar::new(1.0);
        for (x, y) in [(1.0, 4.0), (0.5, 0.6), (7.0, 2.0)] {
            let direct = 2.0 * (x / y as f64).sqrt() * bessel2_kernel(1.0, 4.0 * x, 4.0 * y)
                - j(1.0, 2.0 * (y as f64).sqrt()) / (2.0 * (y as f64).sqrt()) * k.a_int(x);
            let got = k.eval(x, y);
            assert!((got - direct).abs() < 1e-12 * direct.abs().max(1e-9), "{got} vs {direct}");
        }
    }

    #[test]
    fn orthogonal_matches_direct_assembly() {
        let k = OrthogonalScalar::new(1.0);
        for (x, y) in [(1.0, 4.0), (0.5, 0.6), (7.0, 2.0)] {
            let direct = (x / y as f64).sqrt() * bessel2_kernel(2.0, x, y)
                + j(2.0, (y as f64).sqrt()) / (4.0 * (y as f64).sqrt()) * k.c_int(x);
            let got = k.eval(x, y);
            assert!((got - direct).abs() < 1e-12 * direct.abs().max(1e-9), "{got} vs {direct}");
        }
    }

    #[test]
    fn orthogonal_boundary_values() {
        let k = OrthogonalScalar::new(1.0);
        // K_{1,s}(0, x) = J_{s+1}(√x)/(4√x)
        let x = 3.0_f64;
        let want = j(2.0, x.sqrt()) / (4.0 * x.sqrt());
        let got = k.eval(0.0, x);
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        // lim_{y→∞} K_{1,s}(y, x) = 0 at y = 1e6 within 1e−2
        let v = k.eval(1e6, x);
        assert!(v.abs() < 1e-2, "{v}");
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let k4 = SymplecticScalar::new(1.0);
        let k1 = OrthogonalScalar::new(1.0);
        for (x, y) in [(1.0_f64, 3.0_f64), (2.5, 0.7), (5.0, 5.5)] {
            let h = 1e-5 * x.max(1.0);
            let fd4 = (k4.eval(x + h, y) - k4.eval(x - h, y)) / (2.0 * h);
            let d4 = k4.deriv_x(x, y);
            assert!((d4 - fd4).abs() < 1e-6 * fd4.abs().max(1.0), "b4 ({x},{y}): {d4} vs {fd4}");
            let fd1 = (k1.eval(x + h, y) - k1.eval(x - h, y)) / (2.0 * h);
            let d1 = k1.deriv_x(x, y);
            assert!((d1 - fd1).abs() < 1e-6 * fd1.abs().max(1.0), "b1 ({x},{y}): {d1} vs {fd1}");
        }
    }

    #[test]
    fn derivative_skewness() {
        let k4 = SymplecticScalar::new(1.0);
        for (x, y) in [(1.0, 3.0), (0.5, 2.5), (2.0, 7.0), (4.0, 4.002)] {
            let r = k4.deriv_x(x, y) + k4.deriv_x(y, x);
            assert!(r.abs() < 1e-8, "({x},{y}): {r}");
        }
    }

    #[test]
    fn primitive_matches_adaptive_quadrature() {
        let k4 = SymplecticScalar::new(1.0);
        let (x, y) = (1.0, 6.0);
        let want = integrate(|t| k4.eval(x, t), x, y, 1e-11, 1e-10).unwrap().value;
        let got = k4.primitive(x, y);
        assert!((got - want).abs() < 1e-9, "{got} vs {want}");
        // reversed orientation
        let got_rev = k4.primitive(y, x);
        let want_rev = integrate(|t| k4.eval(y, t), y, x, 1e-11, 1e-10).unwrap().value;
        assert!((got_rev - want_rev).abs() < 1e-9, "{got_rev} vs {want_rev}");

        let k1 = OrthogonalScalar::new(1.0);
        let want1 = integrate(|t| k1.eval(x, t), x, y, 1e-11, 1e-10).unwrap().value;
        let got1 = k1.primitive(x, y);
        assert!((got1 - want1).abs() < 1e-9, "{got1} vs {want1}");
    }
}

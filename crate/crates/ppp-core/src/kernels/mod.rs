//! The kernel catalog: 2×2 Pfaffian matrix kernels for the orthogonal and
//! symplectic sine and Bessel processes, scalar determinantal kernels, and
//! correlation functions via Pfaffians.

mod bessel;
mod sine;

pub use bessel::{bessel2_kernel, OrthogonalScalar, SymplecticScalar};
pub(crate) use bessel::BesselSlice;
pub use sine::{sine1_det, sine1_entries, sine4_det, sine4_entries};

use crate::error::{Error, Result};
use crate::pfaffian::{pfaffian, AntisymmetricMatrix, Pfaffian};
use crate::specfun::eps_sign;

/// Which matrix kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelKind {
    Sine1,
    Sine4,
    Bessel1,
    Bessel4,
}

impl KernelKind {
    pub fn label(&self) -> &'static str {
        match self {
            KernelKind::Sine1 => "sine1",
            KernelKind::Sine4 => "sine4",
            KernelKind::Bessel1 => "bessel1",
            KernelKind::Bessel4 => "bessel4",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "sine1" => Ok(KernelKind::Sine1),
            "sine4" => Ok(KernelKind::Sine4),
            "bessel1" => Ok(KernelKind::Bessel1),
            "bessel4" => Ok(KernelKind::Bessel4),
            other => Err(Error::Config(format!("unknown kernel '{other}'"))),
        }
    }
}

/// Scalar kernels (determinantal side of the catalog).
pub enum ScalarKernel {
    Sine2,
    Bessel2 { a: f64 },
}

impl ScalarKernel {
    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        match self {
            ScalarKernel::Sine2 => Ok(crate::specfun::sinc_pi(x - y)),
            ScalarKernel::Bessel2 { a } => {
                if x <= 0.0 || y <= 0.0 {
                    return Err(Error::Domain(format!("Bessel2 kernel needs x, y > 0, got ({x}, {y})")));
                }
                Ok(bessel2_kernel(*a, x, y))
            }
        }
    }
}

enum KernelBody {
    Sine1,
    Sine4,
    Bessel1(OrthogonalScalar),
    Bessel4(SymplecticScalar),
}

/// A 2×2 matrix kernel with its evaluators and metadata.
pub struct MatrixKernel {
    kind: KernelKind,
    s: Option<f64>,
    body: KernelBody,
}

/// Assemble a matrix kernel; `s` is required (and must be positive) for the
/// Bessel kernels and ignored for the sine ones.
pub fn matrix_kernel(kind: KernelKind, s: Option<f64>) -> Result<MatrixKernel> {
    let body = match kind {
        KernelKind::Sine1 => KernelBody::Sine1,
        KernelKind::Sine4 => KernelBody::Sine4,
        KernelKind::Bessel1 | KernelKind::Bessel4 => {
            let s = s.ok_or_else(|| Error::Config("Bessel kernels need the parameter s".into()))?;
            if !(s > 0.0) {
                return Err(Error::Domain(format!("Bessel parameter s must be > 0, got {s}")));
            }
            if kind == KernelKind::Bessel1 {
                KernelBody::Bessel1(OrthogonalScalar::new(s))
            } else {
                KernelBody::Bessel4(SymplecticScalar::new(s))
            }
        }
    };
    Ok(MatrixKernel { kind, s: if matches!(kind, KernelKind::Sine1 | KernelKind::Sine4) { None } else { s }, body })
}

/// The four entries at a point pair.
#[derive(Debug, Clone, Copy)]
pub struct Entries {
    pub k11: f64,
    pub k12: f64,
    pub k21: f64,
    pub k22: f64,
}

impl MatrixKernel {
    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    pub fn s(&self) -> Option<f64> {
        self.s
    }

    pub fn is_stationary(&self) -> bool {
        matches!(self.kind, KernelKind::Sine1 | KernelKind::Sine4)
    }

    /// Domain lower edge: −∞ for the sine processes, 0 for Bessel.
    pub fn domain_is_half_line(&self) -> bool {
        !self.is_stationary()
    }

    pub fn check_domain(&self, x: f64) -> Result<()> {
        if self.domain_is_half_line() && x < 0.0 {
            return Err(Error::Domain(format!("{} lives on [0, ∞), got {x}", self.kind.label())));
        }
        if !x.is_finite() {
            return Err(Error::Domain(format!("non-finite point {x}")));
        }
        Ok(())
    }

    pub fn entries(&self, x: f64, y: f64) -> Result<Entries> {
        self.check_domain(x)?;
        self.check_domain(y)?;
        Ok(self.entries_unchecked(x, y))
    }

    pub(crate) fn entries_unchecked(&self, x: f64, y: f64) -> Entries {
        match &self.body {
            KernelBody::Sine1 => {
                let e = sine::sine1_entries(x - y);
                Entries { k11: e.k11, k12: e.k12, k21: e.k21, k22: e.k22 }
            }
            KernelBody::Sine4 => {
                let e = sine::sine4_entries(x - y);
                Entries { k11: e.k11, k12: e.k12, k21: e.k21, k22: e.k22 }
            }
            KernelBody::Bessel4(k) => Entries {
                k11: k.eval(x, y),
                k12: -k.primitive(x, y),
                k21: k.deriv_x(x, y),
                k22: k.eval(y, x),
            },
            KernelBody::Bessel1(k) => Entries {
                k11: k.eval(x, y),
                k12: -k.primitive(x, y) - eps_sign(x - y),
                k21: k.deriv_x(x, y),
                k22: k.eval(y, x),
            },
        }
    }

    /// det K(x, y) = K₁₁K₂₂ − K₁₂K₂₁.
    pub fn det(&self, x: f64, y: f64) -> Result<f64> {
        let e = self.entries(x, y)?;
        Ok(e.k11 * e.k22 - e.k12 * e.k21)
    }

    pub(crate) fn det_unchecked(&self, x: f64, y: f64) -> f64 {
        let e = self.entries_unchecked(x, y);
        e.k11 * e.k22 - e.k12 * e.k21
    }

    /// First correlation function ρ⁽¹⁾(x) = K₁₁(x, x).
    pub fn rho1(&self, x: f64) -> Result<f64> {
        self.check_domain(x)?;
        Ok(match &self.body {
            KernelBody::Sine1 => 1.0,
            KernelBody::Sine4 => 0.5,
            KernelBody::Bessel4(k) => k.diag(x),
            KernelBody::Bessel1(k) => k.diag(x),
        })
    }

    /// Intensity for the stationary kernels.
    pub fn intensity(&self) -> Option<f64> {
        match self.kind {
            KernelKind::Sine1 => Some(1.0),
            KernelKind::Sine4 => Some(0.5),
            _ => None,
        }
    }

    /// Truncated pair correlation ρ^{(2,T)}(x, y) = −det K(x, y).
    pub fn rho2_truncated(&self, x: f64, y: f64) -> Result<f64> {
        Ok(-self.det(x, y)?)
    }

    /// Fixed-x slice with cached primitives for inner integrals over y.
    /// `None` for the stationary kernels (their det is a cheap function of
    /// x − y and needs no cache).
    pub(crate) fn bessel_slice(&self, x: f64) -> Option<BesselSlice<'_>> {
        match &self.body {
            KernelBody::Bessel4(k) => Some(BesselSlice::symplectic(k, x)),
            KernelBody::Bessel1(k) => Some(BesselSlice::orthogonal(k, x)),
            _ => None,
        }
    }

    /// det K(x, y) as a function of the displacement for stationary kernels.
    pub fn stationary_det(&self, d: f64) -> Option<f64> {
        match self.kind {
            KernelKind::Sine1 => Some(sine::sine1_det(d)),
            KernelKind::Sine4 => Some(sine::sine4_det(d)),
            _ => None,
        }
    }

    /// k-point correlation function: Pf [K(x_i, x_j) J] over the 2k×2k
    /// block matrix. Coincident points yield 0 with the degeneracy flag.
    pub fn correlation(&self, points: &[f64]) -> Result<Pfaffian> {
        if points.is_empty() {
            return Err(Error::Domain("correlation needs at least one point".into()));
        }
        for &p in points {
            self.check_domain(p)?;
        }
        let k = points.len();
        for i in 0..k {
            for j in 0..i {
                if points[i] == points[j] {
                    return Ok(Pfaffian { value: 0.0, degenerate: true });
                }
            }
        }
        let n = 2 * k;
        let mut m = vec![0.0; n * n];
        // Block (i, j) = K(x_i, x_j) J = [[−K12, K11], [−K22, K21]].
        // Fill i ≤ j and mirror the transpose with a sign so the matrix is
        // antisymmetric by construction.
        for i in 0..k {
            for j in i..k {
                let e = self.entries_unchecked(points[i], points[j]);
                let block = [[-e.k12, e.k11], [-e.k22, e.k21]];
                for (r, row) in block.iter().enumerate() {
                    for (c, &v) in row.iter().enumerate() {
                        let v = if i == j && r == c { 0.0 } else { v };
                        m[(2 * i + r) * n + (2 * j + c)] = v;
                        m[(2 * j + c) * n + (2 * i + r)] = -v;
                    }
                }
            }
        }
        let a = AntisymmetricMatrix::new(n, m)?;
        Ok(pfaffian(&a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kernels() -> Vec<MatrixKernel> {
        vec![
            matrix_kernel(KernelKind::Sine1, None).unwrap(),
            matrix_kernel(KernelKind::Sine4, None).unwrap(),
            matrix_kernel(KernelKind::Bessel1, Some(1.0)).unwrap(),
            matrix_kernel(KernelKind::Bessel4, Some(1.0)).unwrap(),
        ]
    }

    fn pair_for(k: &MatrixKernel, t: f64) -> (f64, f64) {
        if k.domain_is_half_line() {
            (0.3 + 2.0 * t, 0.4 + 3.1 * t)
        } else {
            (-1.0 + 2.0 * t, 1.5 - 0.7 * t)
        }
    }

    #[test]
    fn skew_condition() {
        for k in kernels() {
            for i in 0..12 {
                let t = i as f64 * 0.37 + 0.05;
                let (x, y) = pair_for(&k, t);
                let e = k.entries(x, y).unwrap();
                let f = k.entries(y, x).unwrap();
                let scale = 1.0_f64.max(e.k11.abs());
                assert!((e.k22 - f.k11).abs() < 1e-9 * scale, "{} k22 vs k11", k.kind().label());
                assert!((e.k12 + f.k12).abs() < 1e-9 * scale, "{} k12 odd: {} vs {}", k.kind().label(), e.k12, f.k12);
                assert!((e.k21 + f.k21).abs() < 1e-9 * scale, "{} k21 odd", k.kind().label());
            }
        }
    }

    #[test]
    fn det_symmetry() {
        for k in kernels() {
            for i in 0..12 {
                let t = i as f64 * 0.41 + 0.07;
                let (x, y) = pair_for(&k, t);
                let d1 = k.det(x, y).unwrap();
                let d2 = k.det(y, x).unwrap();
                assert!((d1 - d2).abs() < 1e-9 * d1.abs().max(1.0), "{}", k.kind().label());
            }
        }
    }

    #[test]
    fn rho1_values() {
        assert_eq!(matrix_kernel(KernelKind::Sine1, None).unwrap().rho1(3.3).unwrap(), 1.0);
        assert_eq!(matrix_kernel(KernelKind::Sine4, None).unwrap().rho1(-1.0).unwrap(), 0.5);
        // bessel4 diagonal vs difference-quotient oracle at x = 2
        let k = matrix_kernel(KernelKind::Bessel4, Some(1.0)).unwrap();
        let x = 2.0;
        let diag = k.rho1(x).unwrap();
        let h = 1e-4;
        let avg = 0.5 * (k.entries(x, x + h).unwrap().k11 + k.entries(x, x - h).unwrap().k11);
        assert!((diag - avg).abs() < 1e-6, "{diag} vs {avg}");
    }

    #[test]
    fn rho2_trivial_values() {
        let s1 = matrix_kernel(KernelKind::Sine1, None).unwrap();
        assert!((s1.rho2_truncated(2.0, 2.0).unwrap() + 1.0).abs() < 1e-14);
        let s4 = matrix_kernel(KernelKind::Sine4, None).unwrap();
        assert!((s4.rho2_truncated(0.5, 0.5).unwrap() + 0.25).abs() < 1e-14);
    }

    #[test]
    fn correlation_k1_is_rho1() {
        for k in kernels() {
            let x = if k.domain_is_half_line() { 1.7 } else { -0.4 };
            let c = k.correlation(&[x]).unwrap();
            assert!((c.value - k.rho1(x).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn correlation_k2_matches_formula() {
        for k in kernels() {
            let (x, y) = pair_for(&k, 0.55);
            let c = k.correlation(&[x, y]).unwrap().value;
            let want = k.rho1(x).unwrap() * k.rho1(y).unwrap() - k.det(x, y).unwrap();
            assert!((c - want).abs() < 1e-10 * want.abs().max(1.0), "{}: {c} vs {want}", k.kind().label());
        }
    }

    #[test]
    fn correlation_k3_brute_force_oracle() {
        // cross-check the 6×6 Pfaffian against the explicit 15-matching
        // expansion (done inside the pfaffian module's brute tests); here
        // verify against the cofactor identity Pf = Σ over first row.
        let k = matrix_kernel(KernelKind::Sine1, None).unwrap();
        let pts = [0.0, 0.3, 0.9];
        let v = k.correlation(&pts).unwrap().value;
        assert!(v.is_finite() && v >= 0.0, "{v}");
        // independent check: build the 6×6 matrix and expand Pf by
        // definition over perfect matchings
        let n = 6;
        let mut m = vec![0.0; 36];
        for i in 0..3 {
            for j in 0..3 {
                let e = k.entries(pts[i], pts[j]).unwrap();
                let block = [[-e.k12, e.k11], [-e.k22, e.k21]];
                for r in 0..2 {
                    for c in 0..2 {
                        m[(2 * i + r) * n + (2 * j + c)] = block[r][c];
                    }
                }
            }
        }
        fn pf_def(n: usize, rows: &[usize], m: &[f64]) -> f64 {
            if rows.is_empty() {
                return 1.0;
            }
            let i = rows[0];
            let mut acc = 0.0;
            for (pos, &j) in rows.iter().enumerate().skip(1) {
                let sign = if pos % 2 == 1 { 1.0 } else { -1.0 };
                let rest: Vec<usize> = rows[1..].iter().copied().filter(|&r| r != j).collect();
                acc += sign * m[i * n + j] * pf_def(n, &rest, m);
            }
            acc
        }
        let rows: Vec<usize> = (0..6).collect();
        let brute = pf_def(6, &rows, &m);
        assert!((v - brute).abs() < 1e-9 * brute.abs().max(1.0), "{v} vs {brute}");
    }

    #[test]
    fn coincident_points_degenerate() {
        let k = matrix_kernel(KernelKind::Sine4, None).unwrap();
        let c = k.correlation(&[1.0, 1.0]).unwrap();
        assert_eq!(c.value, 0.0);
        assert!(c.degenerate);
    }

    #[test]
    fn coincident_exclusion_rho2_vanishes() {
        for k in kernels() {
            let x = if k.domain_is_half_line() { 2.2 } else { 0.9 };
            // ρ²(x,x) via nearly coincident points
            let r2 = k.correlation(&[x, x + 1e-9]).unwrap().value;
            assert!(r2.abs() < 1e-8, "{}: {r2}", k.kind().label());
        }
    }

    #[test]
    fn positivity_of_correlations() {
        // ρ^{(k)} ≥ −1e−8 on scattered point sets, k ≤ 4
        for k in kernels() {
            for trial in 0..6 {
                let t = trial as f64 * 0.61 + 0.13;
                let base = if k.domain_is_half_line() { 0.4 + t } else { -2.0 + t };
                let pts = [base, base + 0.9, base + 2.3, base + 3.8];
                for kk in 1..=4 {
                    let v = k.correlation(&pts[..kk]).unwrap().value;
                    assert!(v >= -1e-8, "{} k={kk}: {v}", k.kind().label());
                }
            }
        }
    }

    #[test]
    fn stationarity_of_sine_kernels() {
        let s1 = matrix_kernel(KernelKind::Sine1, None).unwrap();
        for shift in [0.0, 1.4, -3.3] {
            let a = s1.entries(0.3 + shift, 1.1 + shift).unwrap();
            let b = s1.entries(0.3, 1.1).unwrap();
            assert!((a.k11 - b.k11).abs() < 1e-15);
            assert!((a.k12 - b.k12).abs() < 1e-15);
            assert!((a.k21 - b.k21).abs() < 1e-15);
        }
    }

    #[test]
    fn unknown_kernel_name_rejected() {
        assert!(KernelKind::parse("sine3").is_err());
        assert!(matrix_kernel(KernelKind::Bessel4, None).is_err());
        assert!(matrix_kernel(KernelKind::Bessel1, Some(-1.0)).is_err());
    }
}

//! Globally adaptive bisection on finite intervals.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::gk::gk15;
use crate::error::{Error, Result};

/// Value with a conservative error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
}

/// Which endpoint carries a declared integrable algebraic singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Lower,
    Upper,
}

/// Description of a finite-interval integral.
pub struct IntegralSpec {
    pub a: f64,
    pub b: f64,
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Endpoint with an integrable algebraic singularity; handled by the
    /// substitution x = endpoint ± t².
    pub singularity: Option<Endpoint>,
    /// Initial subdivision points strictly inside (a, b).
    pub breakpoints: Vec<f64>,
    pub max_panels: usize,
}

impl IntegralSpec {
    pub fn new(a: f64, b: f64) -> Self {
        IntegralSpec {
            a,
            b,
            abs_tol: 1e-12,
            rel_tol: 1e-8,
            singularity: None,
            breakpoints: Vec::new(),
            max_panels: 4000,
        }
    }

    pub fn tol(mut self, abs_tol: f64, rel_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self.rel_tol = rel_tol;
        self
    }

    pub fn singular_at(mut self, e: Endpoint) -> Self {
        self.singularity = Some(e);
        self
    }

    pub fn breakpoints(mut self, pts: Vec<f64>) -> Self {
        self.breakpoints = pts;
        self
    }

    pub fn max_panels(mut self, n: usize) -> Self {
        self.max_panels = n;
        self
    }
}

struct Panel {
    err: f64,
    a: f64,
    b: f64,
    val: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.partial_cmp(&other.err).unwrap_or(Ordering::Equal)
    }
}

/// Adaptive quadrature of `f` over the finite interval described by `spec`.
pub fn integrate_with<F: FnMut(f64) -> f64>(mut f: F, spec: &IntegralSpec) -> Result<Quadrature> {
    if !(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) {
        return Err(Error::Config("quadrature tolerances must be positive".into()));
    }
    if !spec.a.is_finite() || !spec.b.is_finite() {
        return Err(Error::Config("integrate() needs finite endpoints".into()));
    }
    match spec.singularity {
        Some(Endpoint::Lower) => {
            // x = a + t², dx = 2t dt, t in [0, sqrt(b-a)]
            let a = spec.a;
            let w = (spec.b - spec.a).sqrt();
            let inner = IntegralSpec {
                a: 0.0,
                b: w,
                abs_tol: spec.abs_tol,
                rel_tol: spec.rel_tol,
                singularity: None,
                breakpoints: spec.breakpoints.iter().map(|&p| (p - a).sqrt()).collect(),
                max_panels: spec.max_panels,
            };
            integrate_core(
                &mut |t| {
                    let x = a + t * t;
                    if x == a {
                        0.0
                    } else {
                        2.0 * t * f(x)
                    }
                },
                &inner,
            )
        }
        Some(Endpoint::Upper) => {
            let b = spec.b;
            let w = (spec.b - spec.a).sqrt();
            let inner = IntegralSpec {
                a: 0.0,
                b: w,
                abs_tol: spec.abs_tol,
                rel_tol: spec.rel_tol,
                singularity: None,
                breakpoints: spec.breakpoints.iter().map(|&p| (b - p).sqrt()).collect(),
                max_panels: spec.max_panels,
            };
            integrate_core(
                &mut |t| {
                    let x = b - t * t;
                    if x == b {
                        0.0
                    } else {
                        2.0 * t * f(x)
                    }
                },
                &inner,
            )
        }
        None => integrate_core(&mut f, spec),
    }
}

fn integrate_core(f: &mut dyn FnMut(f64) -> f64, spec: &IntegralSpec) -> Result<Quadrature> {
    {
        {
            let mut f = f;
            let mut heap = BinaryHeap::new();
            let mut edges: Vec<f64> = Vec::with_capacity(spec.breakpoints.len() + 2);
            edges.push(spec.a);
            let (lo, hi) = if spec.a <= spec.b { (spec.a, spec.b) } else { (spec.b, spec.a) };
            let mut pts: Vec<f64> = spec
                .breakpoints
                .iter()
                .copied()
                .filter(|p| *p > lo && *p < hi)
                .collect();
            pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
            if spec.a > spec.b {
                pts.reverse();
            }
            edges.extend(pts);
            edges.push(spec.b);
            let mut total = 0.0;
            let mut total_err = 0.0;
            for w in edges.windows(2) {
                let r = gk15(&mut f, w[0], w[1]);
                total += r.value;
                total_err += r.error;
                heap.push(Panel { err: r.error, a: w[0], b: w[1], val: r.value });
            }
            let mut n_panels = heap.len();
            loop {
                let tol = spec.abs_tol.max(spec.rel_tol * total.abs());
                if total_err <= tol {
                    return Ok(Quadrature { value: total, error: total_err });
                }
                if n_panels >= spec.max_panels {
                    return Err(Error::NonConvergence { partial: total, estimate: total_err });
                }
                let worst = heap.pop().expect("non-empty heap");
                let mid = 0.5 * (worst.a + worst.b);
                if mid == worst.a || mid == worst.b {
                    // interval at floating-point resolution; keep its estimate
                    total_err -= worst.err * 0.999;
                    heap.push(Panel { err: worst.err * 1e-3, ..worst });
                    continue;
                }
                let left = gk15(&mut f, worst.a, mid);
                let right = gk15(&mut f, mid, worst.b);
                total += left.value + right.value - worst.val;
                total_err += left.error + right.error - worst.err;
                heap.push(Panel { err: left.error, a: worst.a, b: mid, val: left.value });
                heap.push(Panel { err: right.error, a: mid, b: worst.b, val: right.value });
                n_panels += 1;
            }
        }
    }
}

/// Adaptive quadrature with default panel budget and no declared singularity.
pub fn integrate<F: FnMut(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<Quadrature> {
    integrate_with(f, &IntegralSpec::new(a, b).tol(abs_tol, rel_tol))
}

use ppp_core::kernels::{matrix_kernel, KernelKind};
use ppp_core::rigidity::variance_sweep;
use std::time::Instant;

fn main() {
    ppp_core::configure_threads_from_env();
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(|s| s.as_str()).unwrap_or("sine1");
    let tmax: f64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(100.0);
    let (kind, s) = match which {
        "sine1" => (KernelKind::Sine1, None),
        "sine4" => (KernelKind::Sine4, None),
        "bessel4" => (KernelKind::Bessel4, Some(1.0)),
        _ => (KernelKind::Bessel1, Some(1.0)),
    };
    let k = matrix_kernel(kind, s).unwrap();
    let mut ts = vec![10.0];
    if tmax >= 100.0 { ts.push(100.0); }
    if tmax >= 1000.0 { ts.push(1000.0); }
    let t0 = Instant::now();
    let rows = variance_sweep(&k, 1.0, &ts).unwrap();
    for r in &rows {
        println!("{} T={}: Var={:.6} (err {:.1e})  [{:.1}s cum]", r.kernel, r.t, r.variance, r.err_estimate, t0.elapsed().as_secs_f64());
    }
}

//! Finite-w martingale projection kernels and their w → ∞ limit.
use disct::kernels::{finite_w_kernel, hmatrix, limit_kernel};
use disct::{LatticePoint, QuadConfig};

fn main() -> disct::Result<()> {
    let cfg = QuadConfig::new(1e-7, 1e-9, 200_000);
    let h = hmatrix(1, 1)?;
    let (n, m) = (LatticePoint::new(vec![1]), LatticePoint::new(vec![0]));
    for w in [2.0, 10.0, 50.0] {
        let k = finite_w_kernel(&n, &m, &h, w, 1, &cfg)?;
        println!("w = {w:>4}: K^w_H(1, 0) = {:.6} ± {:.1e}", k.value, k.abs_error);
    }
    let lim = limit_kernel(&n, &m, &h, 1, &cfg)?;
    println!("limit:     K_H(1, 0)   = {:.6}", lim.value);
    Ok(())
}

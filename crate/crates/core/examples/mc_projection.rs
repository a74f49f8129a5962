//! Monte Carlo estimate of the martingale projection T^w_H δ_0(1) against quadrature.
use disct::kernels::{finite_w_kernel, hmatrix};
use disct::mc::{estimate_projection, SdeConfig};
use disct::{LatticePoint, QuadConfig, Sequence};

fn main() -> disct::Result<()> {
    let w = 10.0;
    let cfg = SdeConfig { paths: 20_000, w_start: w, ..Default::default() };
    let h = hmatrix(1, 1)?;
    let (n, zero) = (LatticePoint::new(vec![1]), LatticePoint::zero(1));
    let est = estimate_projection(&Sequence::delta(zero.clone()), &h, &cfg, &n)?;
    let quad = finite_w_kernel(&n, &zero, &h, w, 1, &QuadConfig::new(1e-7, 1e-9, 200_000))?;
    println!("MC {:.4} ± {:.4} from {} hits; quadrature {:.4}", est.value, est.stderr, est.hits, quad.value);
    Ok(())
}

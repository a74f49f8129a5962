//! The d = 1 probabilistic Hilbert kernel: closed form against the half-space integral.
use disct::kernels::{hilbert_dis_kernel, prob_hilbert_kernel_1d, prob_riesz_kernel};
use disct::{LatticePoint, QuadConfig};

fn main() -> disct::Result<()> {
    let cfg = QuadConfig::default();
    for n in 1..=5i64 {
        let closed = prob_hilbert_kernel_1d(n);
        let general = prob_riesz_kernel(&LatticePoint::new(vec![n]), 1, 1, &cfg)?;
        println!(
            "n = {n}: closed {closed:.12}  integral {:.12}  1/(πn) {:.12}",
            general.value,
            hilbert_dis_kernel(n)
        );
    }
    Ok(())
}

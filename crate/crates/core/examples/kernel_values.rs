//! The three discrete Riesz kernels in the plane (probabilistic, rotations, CZ).
use disct::kernels::{cz_riesz_kernel, prob_riesz_kernel, rotation_kernel_2d};
use disct::{LatticePoint, QuadConfig};

fn main() -> disct::Result<()> {
    let cfg = QuadConfig::relaxed();
    println!("n        prob      rot       cz");
    for n in [[1, 0], [1, 1], [2, 1], [3, 2]] {
        let n = LatticePoint::new(n.to_vec());
        let p = prob_riesz_kernel(&n, 1, 2, &cfg)?;
        println!(
            "{:<8} {:.5}   {:.5}   {:.5}   (quad err {:.0e})",
            n.to_string(),
            p.value,
            rotation_kernel_2d(&n, 1)?,
            cz_riesz_kernel(&n, 1, 2)?,
            p.abs_error
        );
    }
    Ok(())
}

//! Method-of-rotations kernel: d = 2 closed form, the general integral, and d = 3.
use disct::kernels::{cz_riesz_kernel, rotation_kernel, rotation_kernel_2d};
use disct::{LatticePoint, QuadConfig};

fn main() -> disct::Result<()> {
    let cfg = QuadConfig::new(1e-10, 1e-13, 100_000);
    for m in [1i64, 2, 4, 8, 16] {
        let n = LatticePoint::new(vec![m, 0]);
        let k = rotation_kernel_2d(&n, 1)?;
        let gap = n.norm2() * (k - cz_riesz_kernel(&n, 1, 2)?).abs();
        println!("({m},0): K_rot = {k:.8}  integral {:.8}  |n|²|K_rot − K_CZ| = {gap:.3e}", rotation_kernel(&n, 1, 2, &cfg)?.value);
    }
    let n = LatticePoint::new(vec![1, 1, 0]);
    println!("d = 3, (1,1,0): {:.8}  CZ {:.8}", rotation_kernel(&n, 1, 3, &cfg)?.value, cz_riesz_kernel(&n, 1, 3)?);
    Ok(())
}

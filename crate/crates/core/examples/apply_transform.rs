//! Applying a discrete Riesz transform to a finitely supported sequence.
use disct::transforms::{apply_kernel, lp_norm, KernelTable};
use disct::{KernelKind, LatticePoint, QuadConfig, Sequence};

fn main() -> disct::Result<()> {
    let table = KernelTable::new(KernelKind::Rotation(1), 2, QuadConfig::relaxed())?;
    let f = Sequence::from_pairs(2, [(LatticePoint::new(vec![0, 0]), 1.0), (LatticePoint::new(vec![1, 0]), -1.0)])?;
    let out = apply_kernel(&f, &table, 20)?;
    println!("‖f‖₂ = {:.4}, ‖Tf‖₂ = {:.4} (truncation {}, tail ≤ {:.1e})", lp_norm(&f, 2.0)?, lp_norm(&out.g, 2.0)?, out.radius, out.tail_bound);
    for n in [[0, 0], [1, 0], [2, 0], [0, 1]] {
        let n = LatticePoint::new(n.to_vec());
        println!("Tf{n} = {:.6}", out.g.get(&n));
    }
    Ok(())
}

//! Both sides of the Littlewood–Paley type inequality for a pair of sequences.
use disct::transforms::littlewood_paley_check;
use disct::{LatticePoint, QuadConfig, Sequence};

fn main() -> disct::Result<()> {
    let cfg = QuadConfig::relaxed();
    let delta = Sequence::delta(LatticePoint::zero(1));
    let pair = Sequence::from_slice_1d(0, &[1.0, -0.5]);
    for p in [2.0, 3.0] {
        let r = littlewood_paley_check(&delta, &pair, p, &cfg)?;
        println!("p = {p}: lhs {:.6} ± {:.1e}  rhs {:.6}  holds {}", r.lhs.value, r.lhs.abs_error, r.rhs, r.holds);
    }
    Ok(())
}

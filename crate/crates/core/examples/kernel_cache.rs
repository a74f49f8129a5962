//! Kernel tables persisted as CSV in a cache directory (what DISCT_CACHE selects).
use disct::transforms::KernelTable;
use disct::{KernelKind, LatticePoint, QuadConfig};

fn main() -> disct::Result<()> {
    let dir = std::env::temp_dir().join("disct-example-cache");
    let cfg = QuadConfig::relaxed();
    let t = KernelTable::with_cache_dir(KernelKind::ProbRiesz(1), 2, cfg, &dir)?;
    t.ensure_cube(2)?;
    println!("{} representatives stored in {}", t.len(), t.cache_path().unwrap().display());
    // a second table reads the file instead of integrating again
    let again = KernelTable::with_cache_dir(KernelKind::ProbRiesz(1), 2, cfg, &dir)?;
    let n = LatticePoint::new(vec![-1, 2]);
    println!("K_H{n} = {:.6} (loaded: {})", again.get(&n).unwrap().value, again.len());
    Ok(())
}

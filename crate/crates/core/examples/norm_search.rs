//! Lower bounds for ℓ^p operator norms, compared with cot(π/(2p*)).
use disct::transforms::{cot_bound, norm_lower_bound_search, KernelTable, SearchOptions};
use disct::{KernelKind, QuadConfig};

fn main() -> disct::Result<()> {
    for kind in [KernelKind::HilbertDis, KernelKind::ProbHilbert] {
        let table = KernelTable::new(kind.clone(), 1, QuadConfig::relaxed())?;
        for p in [2.0, 3.0] {
            let opts = SearchOptions { box_side: if p == 2.0 { 256 } else { 64 }, budget: 2000, ..Default::default() };
            let s = norm_lower_bound_search(&table, p, &opts)?;
            println!("{kind} p = {p}: ≥ {:.5} ({}, box {}), cot bound {:.5}", s.best_ratio, s.method, s.box_side, cot_bound(p)?);
        }
    }
    Ok(())
}

//! Exit law of the Doob h-process from (0, w) against p_n(0, w)/h(0, w).
use disct::mc::{exit_chi_square, exit_probability, simulate_exit, SdeConfig};
use disct::LatticePoint;

fn main() -> disct::Result<()> {
    let cfg = SdeConfig { paths: 20_000, w_start: 2.0, ..Default::default() };
    let dist = simulate_exit(&cfg, 1)?;
    for n in -3..=3i64 {
        let n = LatticePoint::new(vec![n]);
        println!("{n}: {:.4}  exact {:.4}", dist.frequency(&n), exit_probability(&n, cfg.w_start));
    }
    let chi = exit_chi_square(&dist, 20.0)?;
    println!("χ² = {:.1} on {} dof, p = {:.3}", chi.statistic, chi.dof, chi.p_value);
    Ok(())
}

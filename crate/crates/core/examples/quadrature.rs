//! Adaptive 1-D, semi-infinite and half-space quadrature with error estimates.
use disct::numerics::{integrate_1d, integrate_halfspace, integrate_semiinf, Decay, HalfSpaceDomain};
use disct::poisson::poisson_p_at;
use disct::QuadConfig;

fn main() -> disct::Result<()> {
    let cfg = QuadConfig::default();
    let r = integrate_1d(|x| x.sqrt(), 0.0, 1.0, &cfg)?;
    println!("∫₀¹ √x dx        = {:.15} ± {:.1e} ({} evals)", r.value, r.abs_error, r.evals);

    let r = integrate_semiinf(|y| if y == 0.0 { 0.0 } else { y.powi(3) / y.sinh().powi(2) }, Decay::Exponential, &cfg)?;
    println!("∫₀^∞ y³/sinh²y   = {:.15} ± {:.1e}", r.value, r.abs_error);

    // the Poisson kernel has unit mass on every horizontal line, so y ≤ 1 gives 1
    let dom = HalfSpaceDomain::new(2).with_y_max(1.0);
    let r = integrate_halfspace(|x, y| poisson_p_at(x, y), &dom, &QuadConfig::relaxed())?;
    println!("∫∫_(y<1) p(x,y)  = {:.8} ± {:.1e}", r.value, r.abs_error);
    Ok(())
}

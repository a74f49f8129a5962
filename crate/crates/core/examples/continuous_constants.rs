//! Constants of the continuous probabilistic Hilbert kernel.
use disct::kernels::{fourier_bound_const, fourier_bound_half_term, j_tail_l1_norm};
use disct::numerics::{integrate_semiinf, Decay};
use disct::QuadConfig;

fn main() -> disct::Result<()> {
    let z = integrate_semiinf(|y| if y == 0.0 { 0.0 } else { y.powi(3) / y.sinh().powi(2) }, Decay::Exponential, &QuadConfig::default())?;
    println!("(3/2)ζ(3)       = {:.12}", z.value);
    println!("‖J‖₁            = {:.6}", j_tail_l1_norm(&QuadConfig::default())?.value);
    println!("Fourier bound   = {:.6}", fourier_bound_const());
    println!("half term       = {:.7}", fourier_bound_half_term());
    Ok(())
}

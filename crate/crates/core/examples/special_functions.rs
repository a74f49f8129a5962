//! Digamma, trigamma and their cancellation-free differences.
use disct::numerics::{digamma, digamma_diff, trigamma, trigamma_diff, EULER_GAMMA};

fn main() -> disct::Result<()> {
    println!("ψ(1)  = {:.16}  (−γ = {:.16})", digamma(1.0)?, -EULER_GAMMA);
    println!("ψ'(1) = {:.16}  (π²/6 = {:.16})", trigamma(1.0)?, std::f64::consts::PI.powi(2) / 6.0);
    let x = 2f64.powi(-30);
    println!("ψ(1+x) − ψ(1), x = 2⁻³⁰: diff {:.15e}, naive {:.15e}", digamma_diff(1.0 + x, 1.0)?, digamma(1.0 + x)? - digamma(1.0)?);
    println!("ψ'(1+x) − ψ'(1):          diff {:.15e}, naive {:.15e}", trigamma_diff(1.0 + x, 1.0)?, trigamma(1.0 + x)? - trigamma(1.0)?);
    Ok(())
}

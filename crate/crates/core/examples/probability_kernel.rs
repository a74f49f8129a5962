//! The probability kernel P with H_dis = T_H ∗ P, and a check of the factorization.
use disct::multipliers::{convolution_factorization_check, pkernel_coefficients};

fn main() -> disct::Result<()> {
    let p = pkernel_coefficients(1 << 16)?;
    println!("ΣP = {:.12}, min P = {:.3e}, tail mass {:.3e}", p.sum(), p.min(), p.tail_mass);
    for n in 0..=5 {
        println!("P({n}) = {:.10}", p.get(n));
    }
    let f = convolution_factorization_check(500, 1 << 16)?;
    println!("max |(K_H ∗ P)(n) − 1/(πn)|, |n| ≤ 10: {:.2e}", f.max_deviation);
    Ok(())
}

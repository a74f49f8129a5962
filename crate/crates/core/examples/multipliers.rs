//! Fourier multipliers of H_dis, T_H and the probability kernel on [0, 1/2].
use disct::multipliers::{hdis_multiplier, multiplier_mtilde, pkernel_multiplier, u_function};

fn main() {
    println!("xi     hdis    mtilde    F(P)      u");
    for i in 0..=10 {
        let xi = i as f64 / 20.0;
        println!(
            "{xi:.2}   {:.4}  {:.6}  {:.6}  {:.6}",
            hdis_multiplier(xi),
            multiplier_mtilde(xi),
            pkernel_multiplier(xi),
            u_function(xi)
        );
    }
}

use std::f64::consts::PI;

use crate::numerics::{integrate_from, integrate_halfspace, integrate_semiinf, Decay, QuadConfig, QuadResult};
use crate::poisson::{c_d, pow_half, PeriodicPoissonEvaluator};
use crate::{Error, Result};

use super::prob::{hilbert_correction, integrands_at, lattice_domain, Y_CUT};

/// The continuous kernel K_H(z) on R \ {0}.
///
/// Equal to 1/(πz) inside the unit interval and to the discrete closed form
/// outside it, so it jumps at |z| = 1.
pub fn continuous_prob_hilbert(z: f64) -> Result<f64> {
    if z == 0.0 {
        return Err(Error::Pole("continuous kernel is singular at z = 0".into()));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("z must be finite, got {z}")));
    }
    let base = 1.0 / (PI * z);
    Ok(if z.abs() < 1.0 { base } else { base * (1.0 + hilbert_correction(z)) })
}

/// ‖J‖_{L¹} = 2 ∫₁^∞ (1/(πz)) ∫₀^∞ 2y³/((y²+π²z²) sinh²y) dy dz, as a nested integral.
pub fn j_tail_l1_norm(cfg: &QuadConfig) -> Result<QuadResult> {
    let r = integrate_from(|z| hilbert_correction(z) / (PI * z), 1.0, Decay::Algebraic, cfg)?;
    Ok(r.scale(2.0))
}

/// (1/π) ∫₀^∞ y ln(y²/π²+1)/sinh²y dy.
pub fn fourier_bound_half_term() -> f64 {
    let f = |y: f64| {
        if y == 0.0 {
            return 0.0;
        }
        let r = y / y.sinh();
        r * r * (y * y / (PI * PI)).ln_1p() / y
    };
    let cfg = QuadConfig::new(1e-13, 1e-15, 2000);
    let v = match integrate_semiinf(f, Decay::Exponential, &cfg) {
        Ok(r) => r.value,
        Err(Error::NoConvergence { best, .. }) => best.value,
        Err(e) => panic!("smooth integrand failed: {e}"),
    };
    v / PI
}

/// Bound on the Fourier multiplier of the continuous kernel, 1 + ‖J‖_{L¹}, from
/// the single-integral form 1 + (2/π)∫₀^∞ y ln(y²/π²+1)/sinh²y dy.
pub fn fourier_bound_const() -> f64 {
    1.0 + 2.0 * fourier_bound_half_term()
}

/// The continuous probabilistic Riesz kernel K_{H^(k)}(z) on R^d \ {0}.
///
/// For |z| ≥ 1 this is c_d z_k/|z|^{d+1} plus the (1/h − 1)-weighted integral
/// of U_z, which is the kernel written around its h = 1 value.
pub fn continuous_prob_riesz(z: &[f64], k: usize, d: usize, cfg: &QuadConfig) -> Result<QuadResult> {
    if d == 0 || z.len() != d || k == 0 || k > d {
        return Err(Error::Domain(format!("need z of length d = {d} and 1 ≤ k ≤ d, got k = {k}")));
    }
    if z.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("z must be finite".into()));
    }
    let r2: f64 = z.iter().map(|v| v * v).sum();
    if r2 == 0.0 {
        return Err(Error::Pole("continuous kernel is singular at z = 0".into()));
    }
    let cz = c_d(d) * z[k - 1] / pow_half(r2, d + 1);
    if r2 < 1.0 || z[k - 1] == 0.0 {
        return Ok(QuadResult::new(cz, 0.0, 1));
    }
    let ev = PeriodicPoissonEvaluator::new(d);
    let dom = lattice_domain(d, &[z], 1.0)
        .with_y_max(Y_CUT)
        .with_y_breaks(vec![0.25, 0.5, 1.0, 2.0, 4.0]);
    let corr = integrate_halfspace(|x, y| integrands_at(z, k - 1, x, y).u * (1.0 / ev.h(x, y) - 1.0), &dom, cfg)?;
    Ok(corr.shift(cz))
}

use std::f64::consts::PI;

use crate::lattice::LatticePoint;
use crate::numerics::{integrate_halfspace, integrate_semiinf, Decay, HalfSpaceDomain, QuadConfig, QuadResult};
use crate::poisson::{c_d, pow_half, HalfSpacePoint, PeriodicPoissonEvaluator};
use crate::Result;

use super::check_axis;

/// Height above which 1/h − 1 is below 1e-15 and the h-weighted integrals are
/// replaced by their closed-form tails.
pub const Y_CUT: f64 = 6.0;

/// The three integrands of the probabilistic Riesz kernel at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbIntegrands {
    pub s: f64,
    pub t: f64,
    pub u: f64,
}

#[inline]
pub(crate) fn integrands_at(n: &[f64], k: usize, x: &[f64], y: f64) -> ProbIntegrands {
    let d = x.len();
    let c = c_d(d);
    let df = (d + 1) as f64;
    let y2 = y * y;
    let mut r0 = y2;
    let mut rn = y2;
    for i in 0..d {
        r0 += x[i] * x[i];
        let t = x[i] - n[i];
        rn += t * t;
    }
    let base = c * c * df * x[k] * y2 / (pow_half(r0, d + 3) * pow_half(rn, d + 1));
    let s = 2.0 * base;
    let t = (4.0 / 3.0) * df * base * y2 / rn;
    ProbIntegrands { s, t, u: 4.0 * s - 3.0 * t }
}

/// S_n, T_n and U_n = 4S_n − 3T_n at `pt`, for the axis k (1-based).
pub fn prob_integrands(n: &LatticePoint, k: usize, d: usize, pt: &HalfSpacePoint) -> Result<ProbIntegrands> {
    check_axis(n, k, d)?;
    Ok(integrands_at(&n.as_f64(), k - 1, &pt.x, pt.y))
}

/// ∫_{y>Y} ∫ U_n dx dy in closed form.
pub fn u_tail(n: &[f64], k: usize, y_cut: f64) -> f64 {
    let d = n.len();
    let c = c_d(d);
    let nk = n[k - 1];
    let n2: f64 = n.iter().map(|v| v * v).sum();
    let s = 2.0 * y_cut;
    let r2 = n2 + s * s;
    let dpk = -((d + 1) as f64) * c * nk * s / pow_half(r2, d + 3);
    c * nk / pow_half(r2, d + 1) + s * dpk
}

pub(crate) fn lattice_domain(d: usize, pts: &[&[f64]], pad: f64) -> HalfSpaceDomain {
    let mut breaks = Vec::with_capacity(d);
    let mut scale: f64 = 1.0;
    for i in 0..d {
        let lo = pts.iter().map(|p| p[i]).fold(0.0f64, f64::min) - pad;
        let hi = pts.iter().map(|p| p[i]).fold(0.0f64, f64::max) + pad;
        scale = scale.max(hi.abs()).max(lo.abs());
        let mut b: Vec<f64> = (lo.floor() as i64..=hi.ceil() as i64).map(|v| v as f64).collect();
        b.extend(pts.iter().map(|p| p[i]));
        breaks.push(b);
    }
    HalfSpaceDomain::new(d).with_x_breaks(breaks).with_x_scale(scale)
}

/// K_{H^(k)}(n) = ∫∫ U_n/h over the half-space.
pub fn prob_riesz_kernel(n: &LatticePoint, k: usize, d: usize, cfg: &QuadConfig) -> Result<QuadResult> {
    check_axis(n, k, d)?;
    if n.coords()[k - 1] == 0 {
        return Ok(QuadResult::new(0.0, 0.0, 1));
    }
    prob_riesz_kernel_with(&PeriodicPoissonEvaluator::new(d), n, k, cfg)
}

/// As [`prob_riesz_kernel`] with a caller-owned h evaluator.
pub fn prob_riesz_kernel_with(
    ev: &PeriodicPoissonEvaluator,
    n: &LatticePoint,
    k: usize,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    let d = ev.d;
    check_axis(n, k, d)?;
    if n.coords()[k - 1] == 0 {
        return Ok(QuadResult::new(0.0, 0.0, 1));
    }
    let nf = n.as_f64();
    let dom = lattice_domain(d, &[&nf], 1.0)
        .with_y_max(Y_CUT)
        .with_y_breaks(vec![0.25, 0.5, 1.0, 2.0, 4.0]);
    let body = integrate_halfspace(|x, y| integrands_at(&nf, k - 1, x, y).u / ev.h(x, y), &dom, cfg)?;
    Ok(body.shift(u_tail(&nf, k, Y_CUT)))
}

/// Half-space integrals of S_n, T_n and U_n with h replaced by 1.
pub fn prob_integrals(n: &LatticePoint, k: usize, d: usize, cfg: &QuadConfig) -> Result<[QuadResult; 3]> {
    check_axis(n, k, d)?;
    let nf = n.as_f64();
    let dom = lattice_domain(d, &[&nf], 1.0).with_y_breaks(vec![0.25, 0.5, 1.0, 2.0, 4.0]);
    let s = integrate_halfspace(|x, y| integrands_at(&nf, k - 1, x, y).s, &dom, cfg)?;
    let t = integrate_halfspace(|x, y| integrands_at(&nf, k - 1, x, y).t, &dom, cfg)?;
    let u = integrate_halfspace(|x, y| integrands_at(&nf, k - 1, x, y).u, &dom, cfg)?;
    Ok([s, t, u])
}

/// ∫₀^∞ 2y³/((y²+π²z²) sinh²y) dy.
pub fn hilbert_correction(z: f64) -> f64 {
    let a = PI * PI * z * z;
    let f = |y: f64| {
        if y == 0.0 {
            return 0.0;
        }
        let r = y / y.sinh();
        2.0 * y * r * r / (y * y + a)
    };
    let cfg = QuadConfig::new(1e-13, 1e-15, 2000);
    match integrate_semiinf(f, Decay::Exponential, &cfg) {
        Ok(r) => r.value,
        Err(crate::Error::NoConvergence { best, .. }) => best.value,
        Err(e) => panic!("smooth integrand failed: {e}"),
    }
}

/// K_H(n) for d = 1 from the closed form (1/(πn))(1 + ∫₀^∞ 2y³/((y²+π²n²) sinh²y) dy).
pub fn prob_hilbert_kernel_1d(n: i64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let z = n as f64;
    (1.0 + hilbert_correction(z)) / (PI * z)
}

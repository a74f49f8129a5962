//! The half-space Poisson kernel, its Z^d periodization h, the Green's function
//! with pole (0, w), the boundary profile Ψ and the h-harmonic extension.

use std::f64::consts::PI;

use libm::{erf, erfc};
use statrs::function::gamma::{gamma, gamma_ur};

use crate::lattice::{LatticePoint, Sequence};
use crate::{Error, Result};

/// Largest d for which gradients fit the fixed-size buffers below.
pub const MAX_D: usize = 7;

const TWO_OVER_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// Normalizing constant c_d = Γ((d+1)/2) π^{-(d+1)/2}.
pub fn c_d(d: usize) -> f64 {
    match d {
        1 => 1.0 / PI,
        2 => 0.5 / PI,
        3 => 1.0 / (PI * PI),
        _ => gamma((d as f64 + 1.0) / 2.0) * PI.powf(-(d as f64 + 1.0) / 2.0),
    }
}

/// r2^{k/2} for a nonnegative integer k.
#[inline]
pub(crate) fn pow_half(r2: f64, k: usize) -> f64 {
    if k % 2 == 0 {
        r2.powi((k / 2) as i32)
    } else {
        r2.powi((k / 2) as i32) * r2.sqrt()
    }
}

/// A point (x, y) of the upper half-space R^d × R_+.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfSpacePoint {
    pub x: Vec<f64>,
    pub y: f64,
}

impl HalfSpacePoint {
    pub fn new(x: Vec<f64>, y: f64) -> Result<Self> {
        if !(y > 0.0) || !y.is_finite() {
            return Err(Error::Domain(format!("half-space point needs y > 0, got {y}")));
        }
        Ok(HalfSpacePoint { x, y })
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    fn shifted(&self, n: &LatticePoint) -> Vec<f64> {
        self.x.iter().zip(n.coords()).map(|(a, &b)| a - b as f64).collect()
    }
}

/// p(x, y) for an already shifted x.
#[inline]
pub fn poisson_p_at(x: &[f64], y: f64) -> f64 {
    let d = x.len();
    let r2: f64 = x.iter().map(|v| v * v).sum::<f64>() + y * y;
    c_d(d) * y / pow_half(r2, d + 1)
}

/// Gradient (∂x_1, …, ∂x_d, ∂y) of p at an already shifted x, written into `out`.
/// Returns p itself.
#[inline]
pub fn poisson_grad_at(x: &[f64], y: f64, out: &mut [f64]) -> f64 {
    let d = x.len();
    let rx2: f64 = x.iter().map(|v| v * v).sum();
    let r2 = rx2 + y * y;
    let p = c_d(d) * y / pow_half(r2, d + 1);
    let a = -((d + 1) as f64) * p / r2;
    for i in 0..d {
        out[i] = a * x[i];
    }
    out[d] = (rx2 - d as f64 * y * y) / (y * r2) * p;
    p
}

/// The Poisson kernel p_n(x, y) = c_d y / (|x−n|² + y²)^{(d+1)/2}.
pub fn poisson_p(pt: &HalfSpacePoint, n: &LatticePoint) -> f64 {
    poisson_p_at(&pt.shifted(n), pt.y)
}

/// Gradient of p_n as a vector of length d+1, y component last.
pub fn poisson_grad(pt: &HalfSpacePoint, n: &LatticePoint) -> Vec<f64> {
    let mut g = vec![0.0; pt.dim() + 1];
    poisson_grad_at(&pt.shifted(n), pt.y, &mut g);
    g
}

/// h for d = 1 in closed form, written to stay finite for all y > 0.
pub fn h_closed_form_d1(x: f64, y: f64) -> f64 {
    let q = (-2.0 * PI * y).exp();
    let omq = -(-2.0 * PI * y).exp_m1();
    let s = (PI * x).sin();
    omq * (1.0 + q) / (omq * omq + 4.0 * q * s * s)
}

/// h and its gradient (∂x, ∂y) for d = 1 in closed form.
pub fn h_closed_form_d1_grad(x: f64, y: f64) -> (f64, [f64; 2]) {
    let q = (-2.0 * PI * y).exp();
    let omq = -(-2.0 * PI * y).exp_m1();
    let s = (PI * x).sin();
    let num = omq * (1.0 + q);
    let den = omq * omq + 4.0 * q * s * s;
    let h = num / den;
    let hx = -num * 4.0 * PI * q * (2.0 * PI * x).sin() / (den * den);
    let c = (2.0 * PI * x).cos();
    let dnum = -2.0 * q;
    let dden = -2.0 * c + 2.0 * q;
    let hy = (dnum * den - num * dden) / (den * den) * (-2.0 * PI * q);
    (h, [hx, hy])
}

// Regularized upper incomplete gamma Q(s, z) with s = (d+1)/2, and dQ/dz.
#[inline]
fn q_upper(d: usize, z: f64) -> (f64, f64) {
    match d {
        1 => {
            let e = (-z).exp();
            (e, -e)
        }
        2 => {
            let sz = z.sqrt();
            let e = (-z).exp();
            (erfc(sz) + TWO_OVER_SQRT_PI * sz * e, -TWO_OVER_SQRT_PI * sz * e)
        }
        3 => {
            let e = (-z).exp();
            ((1.0 + z) * e, -z * e)
        }
        _ => {
            let s = (d as f64 + 1.0) / 2.0;
            (gamma_ur(s, z), -z.powf(s - 1.0) * (-z).exp() / gamma(s))
        }
    }
}

/// Evaluates h(x,y) = Σ_n p_n(x,y) and its gradient.
///
/// Below `y_direct_max` the lattice sum is Ewald-split: each p_m is cut by the
/// incomplete gamma factor Q(s, α|·|²) and the smooth remainder is summed in
/// Fourier space, which makes both pieces converge like a Gaussian.
/// Between `y_direct_max` and `y_const_min` the plain Fourier series
/// Σ_k e^{−2π|k|y} e^{2πik·x} is used, and above `y_const_min` h is 1.
#[derive(Debug, Clone)]
pub struct PeriodicPoissonEvaluator {
    pub d: usize,
    pub y_direct_max: f64,
    pub y_const_min: f64,
    pub lattice_radius: usize,
    pub fourier_radius: usize,
    alpha: f64,
    z_cut: f64,
    // lattice offsets m, flattened with stride d
    offsets: Vec<f64>,
    // half of Z^d \ {0} (first nonzero coordinate positive), sorted by |k|
    half_k: Vec<i32>,
    half_norm: Vec<f64>,
}

/// Value and gradient of h; `grad` holds d+1 entries, the y derivative last.
#[derive(Debug, Clone, Copy)]
pub struct HValue {
    pub h: f64,
    pub grad: [f64; MAX_D + 1],
}

// exp(-2π K y) below this is dropped from the Fourier series
const FOURIER_LOG_EPS: f64 = 37.0;
// erfc argument where reciprocal Ewald terms are dropped
const EWALD_ERFC_ARG: f64 = 6.2;

impl PeriodicPoissonEvaluator {
    pub fn new(d: usize) -> Self {
        Self::with_switch(d, 1.0, 10.0)
    }

    /// Evaluator with explicit regime switch points.
    pub fn with_switch(d: usize, y_direct_max: f64, y_const_min: f64) -> Self {
        assert!((1..=MAX_D).contains(&d), "dimension {d} outside 1..={MAX_D}");
        assert!(y_direct_max > 0.0 && y_direct_max < y_const_min);
        let alpha = PI;
        let z_cut = 40.0;
        let r_real = (z_cut / alpha).sqrt() + 0.5 * (d as f64).sqrt();
        let lattice_radius = r_real.ceil() as usize;
        let mut offsets = Vec::new();
        for m in LatticePoint::cube(d, lattice_radius as i64) {
            if m.norm() <= r_real {
                offsets.extend(m.coords().iter().map(|&c| c as f64));
            }
        }
        let k_ewald = Self::ewald_k_limit(alpha, y_direct_max);
        let k_fourier = Self::fourier_k_limit(d, y_direct_max);
        let kmax = k_ewald.max(k_fourier);
        let fourier_radius = kmax.ceil() as usize;
        let mut ks: Vec<(f64, Vec<i64>)> = LatticePoint::cube(d, fourier_radius as i64)
            .into_iter()
            .filter(|k| {
                let first = k.coords().iter().find(|&&c| c != 0);
                matches!(first, Some(&c) if c > 0) && k.norm() <= kmax
            })
            .map(|k| (k.norm(), k.0))
            .collect();
        ks.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        let mut half_k = Vec::with_capacity(ks.len() * d);
        let mut half_norm = Vec::with_capacity(ks.len());
        for (n, k) in ks {
            half_norm.push(n);
            half_k.extend(k.iter().map(|&c| c as i32));
        }
        PeriodicPoissonEvaluator {
            d,
            y_direct_max,
            y_const_min,
            lattice_radius,
            fourier_radius,
            alpha,
            z_cut,
            offsets,
            half_k,
            half_norm,
        }
    }

    fn ewald_k_limit(alpha: f64, y: f64) -> f64 {
        (EWALD_ERFC_ARG + y * alpha.sqrt()) * alpha.sqrt() / PI
    }

    fn fourier_k_limit(d: usize, y: f64) -> f64 {
        (FOURIER_LOG_EPS + d as f64 * (1.0 + 1.0 / y).ln()) / (2.0 * PI * y)
    }

    /// h(x, y) using the regime switch.
    pub fn h(&self, x: &[f64], y: f64) -> f64 {
        if y >= self.y_const_min {
            1.0
        } else if y > self.y_direct_max {
            self.fourier(x, y, false).h
        } else {
            self.direct(x, y, false).h
        }
    }

    /// h(x, y) and its gradient using the regime switch.
    pub fn h_grad(&self, x: &[f64], y: f64) -> HValue {
        if y >= self.y_const_min {
            HValue { h: 1.0, grad: [0.0; MAX_D + 1] }
        } else if y > self.y_direct_max {
            self.fourier(x, y, true)
        } else {
            self.direct(x, y, true)
        }
    }

    /// Lattice-sum evaluation, valid for every y > 0.
    pub fn h_direct(&self, x: &[f64], y: f64) -> HValue {
        self.direct(x, y, true)
    }

    /// Fourier-series evaluation; the truncation grows like 1/y so keep y away from 0.
    pub fn h_fourier(&self, x: &[f64], y: f64) -> HValue {
        self.fourier(x, y, true)
    }

    // e^{2πi j x_i} for j = 0..=r, per coordinate, stored as (cos, sin).
    fn phases(&self, x: &[f64], r: usize) -> Vec<(f64, f64)> {
        let d = self.d;
        let mut out = vec![(1.0, 0.0); d * (r + 1)];
        for i in 0..d {
            let (s, c) = (2.0 * PI * x[i]).sin_cos();
            for j in 1..=r {
                let (pc, ps) = out[i * (r + 1) + j - 1];
                out[i * (r + 1) + j] = (pc * c - ps * s, pc * s + ps * c);
            }
        }
        out
    }

    #[inline]
    fn cos_sin(&self, ph: &[(f64, f64)], r: usize, k: &[i32]) -> (f64, f64) {
        let mut re = 1.0;
        let mut im = 0.0;
        for (i, &ki) in k.iter().enumerate() {
            let (c, s) = ph[i * (r + 1) + ki.unsigned_abs() as usize];
            let s = if ki < 0 { -s } else { s };
            let nre = re * c - im * s;
            im = re * s + im * c;
            re = nre;
        }
        (re, im)
    }

    fn fourier(&self, x: &[f64], y: f64, want_grad: bool) -> HValue {
        let d = self.d;
        let kmax = Self::fourier_k_limit(d, y);
        let r = self.fourier_radius.min(kmax.ceil() as usize);
        let ph = self.phases(x, r);
        let mut h = 1.0;
        let mut g = [0.0; MAX_D + 1];
        for (j, &kn) in self.half_norm.iter().enumerate() {
            if kn > kmax {
                break;
            }
            let k = &self.half_k[j * d..(j + 1) * d];
            if k.iter().any(|&c| c.unsigned_abs() as usize > r) {
                continue;
            }
            let e = 2.0 * (-2.0 * PI * kn * y).exp();
            let (c, s) = self.cos_sin(&ph, r, k);
            h += e * c;
            if want_grad {
                for i in 0..d {
                    g[i] -= 2.0 * PI * k[i] as f64 * e * s;
                }
                g[d] -= 2.0 * PI * kn * e * c;
            }
        }
        HValue { h, grad: g }
    }

    fn direct(&self, x: &[f64], y: f64, want_grad: bool) -> HValue {
        let d = self.d;
        let alpha = self.alpha;
        let sa = alpha.sqrt();
        let cd = c_d(d);
        let mut xr = [0.0; MAX_D];
        for i in 0..d {
            xr[i] = x[i] - x[i].round();
        }
        let mut h = 0.0;
        let mut g = [0.0; MAX_D + 1];
        let y2 = y * y;
        let mut dx = [0.0; MAX_D];
        for m in self.offsets.chunks_exact(d) {
            let mut rx2 = 0.0;
            for i in 0..d {
                dx[i] = xr[i] - m[i];
                rx2 += dx[i] * dx[i];
            }
            let r2 = rx2 + y2;
            let z = alpha * r2;
            if z > self.z_cut {
                continue;
            }
            let p = cd * y / pow_half(r2, d + 1);
            let (q, dq) = q_upper(d, z);
            h += p * q;
            if want_grad {
                let a = -((d + 1) as f64) * p / r2;
                for i in 0..d {
                    g[i] += a * dx[i] * q + p * dq * 2.0 * alpha * dx[i];
                }
                g[d] += (rx2 - d as f64 * y2) / (y * r2) * p * q + p * dq * 2.0 * alpha * y;
            }
        }
        // reciprocal part
        h += erf(y * sa);
        if want_grad {
            g[d] += TWO_OVER_SQRT_PI * sa * (-alpha * y2).exp();
        }
        let kmax = Self::ewald_k_limit(alpha, y);
        let r = self.fourier_radius.min(kmax.ceil() as usize);
        let ph = self.phases(&xr[..d], r);
        for (j, &kn) in self.half_norm.iter().enumerate() {
            if kn > kmax {
                break;
            }
            let k = &self.half_k[j * d..(j + 1) * d];
            if k.iter().any(|&c| c.unsigned_abs() as usize > r) {
                continue;
            }
            let a = PI * kn / sa;
            let e1 = (-2.0 * PI * y * kn).exp();
            let e2 = 1.0 / e1;
            let c1 = erfc(a - y * sa);
            let c2 = erfc(a + y * sa);
            let fk = e1 * c1 - e2 * c2;
            let (c, s) = self.cos_sin(&ph, r, k);
            h += fk * c;
            if want_grad {
                for i in 0..d {
                    g[i] -= 2.0 * PI * k[i] as f64 * fk * s;
                }
                let dfy = -2.0 * PI * kn * (e1 * c1 + e2 * c2) + 2.0 * TWO_OVER_SQRT_PI * sa * (-a * a - alpha * y2).exp();
                g[d] += dfy * c;
            }
        }
        HValue { h, grad: g }
    }

    /// lim_{y→0} h(x, y)/y = c_d Σ_m |x − m|^{−(d+1)} for x ∉ Z^d.
    pub fn h_over_y_limit(&self, x: &[f64]) -> f64 {
        let d = self.d;
        let alpha = self.alpha;
        let sa = alpha.sqrt();
        let cd = c_d(d);
        let mut xr = [0.0; MAX_D];
        for i in 0..d {
            xr[i] = x[i] - x[i].round();
        }
        let mut total = 0.0;
        for m in self.offsets.chunks_exact(d) {
            let r2: f64 = (0..d).map(|i| (xr[i] - m[i]).powi(2)).sum();
            let z = alpha * r2;
            if z > self.z_cut {
                continue;
            }
            total += cd / pow_half(r2, d + 1) * q_upper(d, z).0;
        }
        total += TWO_OVER_SQRT_PI * sa;
        let kmax = Self::ewald_k_limit(alpha, 0.0);
        let r = self.fourier_radius.min(kmax.ceil() as usize);
        let ph = self.phases(&xr[..d], r);
        for (j, &kn) in self.half_norm.iter().enumerate() {
            if kn > kmax {
                break;
            }
            let k = &self.half_k[j * d..(j + 1) * d];
            let a = PI * kn / sa;
            let (c, _) = self.cos_sin(&ph, r, k);
            total += 2.0 * c * (TWO_OVER_SQRT_PI * sa * (-a * a).exp() - 2.0 * PI * kn * erfc(a));
        }
        total
    }

    /// Ψ(x), the boundary limit of p_0/h.
    pub fn psi(&self, x: &[f64]) -> f64 {
        let d = self.d;
        let mut nearest = [0.0; MAX_D];
        let mut dist2 = 0.0;
        for i in 0..d {
            nearest[i] = x[i].round();
            dist2 += (x[i] - nearest[i]).powi(2);
        }
        let at_origin = nearest[..d].iter().all(|&c| c == 0.0);
        if dist2 < 1e-12 {
            // dominant-term ratio next to a lattice point
            if at_origin {
                return 1.0;
            }
            let r2: f64 = x[..d].iter().map(|v| v * v).sum();
            return pow_half(dist2 / r2, d + 1);
        }
        let r2: f64 = x[..d].iter().map(|v| v * v).sum();
        c_d(d) / pow_half(r2, d + 1) / self.h_over_y_limit(x)
    }
}

/// h at a half-space point.
pub fn periodic_h(pt: &HalfSpacePoint, ev: &PeriodicPoissonEvaluator) -> f64 {
    ev.h(&pt.x, pt.y)
}

/// Gradient of h as a vector of length d+1, y component last.
pub fn periodic_h_grad(pt: &HalfSpacePoint, ev: &PeriodicPoissonEvaluator) -> Vec<f64> {
    let v = ev.h_grad(&pt.x, pt.y);
    v.grad[..=pt.dim()].to_vec()
}

/// Green's function of the upper half-space with pole (0, w), normalized for
/// Brownian motion with generator Δ/2.
pub fn green_w(pt: &HalfSpacePoint, w: f64) -> Result<f64> {
    if !(w > 0.0) {
        return Err(Error::Domain(format!("pole height must be positive, got {w}")));
    }
    let rx2: f64 = pt.x.iter().map(|v| v * v).sum();
    if rx2 + (pt.y - w).powi(2) == 0.0 {
        return Err(Error::Pole(format!("green_w evaluated at its pole (0, {w})")));
    }
    Ok(green_w_at(&pt.x, pt.y, w))
}

/// G_w at raw coordinates; infinite at the pole.
pub(crate) fn green_w_at(x: &[f64], y: f64, w: f64) -> f64 {
    let d = x.len();
    let rx2: f64 = x.iter().map(|v| v * v).sum();
    let rm2 = rx2 + (y - w).powi(2);
    if d == 1 {
        // log(rp2/rm2) with the cancellation handled by ln_1p
        (4.0 * y * w / rm2).ln_1p() / (2.0 * PI)
    } else {
        let rp2 = rx2 + (y + w).powi(2);
        let k = gamma((d as f64 - 1.0) / 2.0) / (2.0 * PI.powf((d as f64 + 1.0) / 2.0));
        k * (1.0 / pow_half(rm2, d - 1) - 1.0 / pow_half(rp2, d - 1))
    }
}

/// The envelope g(t) bounding G_w(x,y)/(2y p_n(0,w)) at t = y/w.
pub fn g_bound(t: f64, d: usize) -> Result<f64> {
    if !(t > 0.0) && t != 0.0 {
        return Err(Error::Domain(format!("g_bound needs t ≥ 0, got {t}")));
    }
    if t == 1.0 {
        return Err(Error::Pole("g_bound has a pole at t = 1".into()));
    }
    Ok(if d == 1 {
        if t == 0.0 {
            2.0
        } else {
            (4.0 * t / ((t - 1.0) * (t - 1.0))).ln_1p() / (2.0 * t)
        }
    } else {
        2f64.powf((d as f64 + 1.0) / 2.0) * (t - 1.0).abs().powi(-(d as i32 + 1))
    })
}

/// Ψ(x) for x ∈ R^d, the interpolation profile of the discrete harmonic extension.
pub fn psi_boundary(x: &[f64]) -> f64 {
    let d = x.len();
    if d == 1 {
        let t = x[0];
        if t == 0.0 {
            return 1.0;
        }
        let s = (PI * t).sin() / (PI * t);
        return s * s;
    }
    PeriodicPoissonEvaluator::new(d).psi(x)
}

/// u_f(x, y) = Σ_n f(n) p_n(x, y) / h(x, y).
pub fn harmonic_extension(f: &Sequence, pt: &HalfSpacePoint, ev: &PeriodicPoissonEvaluator) -> f64 {
    let h = ev.h(&pt.x, pt.y);
    let mut s = 0.0;
    for (n, v) in f.iter() {
        s += v * poisson_p(pt, n);
    }
    s / h
}

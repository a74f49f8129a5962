//! Fourier multipliers of the one-dimensional transforms and the probability
//! kernel P that factors the discrete Hilbert transform through T_H.
//!
//! Odd multipliers are stored in symmetrized form: the multiplier is
//! −i·sign(ξ)·g(ξ) and only the real g is returned.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::kernels::prob_hilbert_kernel_1d;
use crate::lattice::{LatticePoint, Sequence};
use crate::numerics::{digamma_diff, trigamma_diff};
use crate::{Error, Result};

fn dpsi(a: f64, b: f64) -> f64 {
    digamma_diff(a, b).expect("arguments kept positive")
}

fn dpsi1(a: f64, b: f64) -> f64 {
    trigamma_diff(a, b).expect("arguments kept positive")
}

/// Reduce ξ to [−1/2, 1/2).
pub fn fold(xi: f64) -> f64 {
    let r = xi - xi.round();
    if r >= 0.5 {
        r - 1.0
    } else {
        r
    }
}

/// φ(x) = ψ(1+x) + ψ(1−x) − 2ψ(1) for 0 ≤ x < 1.
pub fn phi(x: f64) -> f64 {
    dpsi(1.0 + x, 1.0) + dpsi(1.0 - x, 1.0)
}

/// φ'(x) = ψ'(1+x) − ψ'(1−x) for 0 ≤ x < 1.
pub fn phi_prime(x: f64) -> f64 {
    dpsi1(1.0 + x, 1.0 - x)
}

/// Symmetrized multiplier of T_H on R.
///
/// For |ξ| < 1 this is 1 + 2(1−|ξ|)(ψ(1+|ξ|)−ψ(1)) + |ξ|(1−|ξ|)(ψ'(1+|ξ|)−ψ'(1)),
/// which is continuous at |ξ| = 1; for |ξ| ≥ 1 it is 1/|ξ|.
pub fn multiplier_m(xi: f64) -> f64 {
    let a = xi.abs();
    if a >= 1.0 {
        return 1.0 / a;
    }
    1.0 + 2.0 * (1.0 - a) * dpsi(1.0 + a, 1.0) + a * (1.0 - a) * dpsi1(1.0 + a, 1.0)
}

/// Symmetrized multiplier M̃ of T_H on the torus, periodic in ξ.
pub fn multiplier_mtilde(xi: f64) -> f64 {
    let a = fold(xi).abs();
    1.0 + (1.0 - 2.0 * a) * phi(a) + a * (1.0 - a) * phi_prime(a)
}

/// Symmetrized multiplier 1 − 2|ξ| of the discrete Hilbert transform.
pub fn hdis_multiplier(xi: f64) -> f64 {
    1.0 - 2.0 * fold(xi).abs()
}

/// Neville extrapolation to h = 0 through the points (h_j, v_j).
fn extrapolate_to_zero(h: &[f64], v: &[f64]) -> f64 {
    let mut p = v.to_vec();
    let n = p.len();
    for k in 1..n {
        for i in 0..n - k {
            p[i] = (h[i + k] * p[i] - h[i] * p[i + 1]) / (h[i + k] - h[i]);
        }
    }
    p[0]
}

/// F(P)(±1/2) by extrapolation of (1−2ξ)/M̃(ξ) along ξ = 1/2 − 2^{−j}.
pub fn pkernel_multiplier_at_half() -> f64 {
    pkernel_multiplier_at_half_with_error().0
}

/// As [`pkernel_multiplier_at_half`] with the change from dropping the coarsest node
/// as an error estimate.
pub fn pkernel_multiplier_at_half_with_error() -> (f64, f64) {
    let hs: Vec<f64> = (4..11).map(|j| 0.5f64.powi(j)).collect();
    let vs: Vec<f64> = hs.iter().map(|&h| 2.0 * h / multiplier_mtilde(0.5 - h)).collect();
    let v = extrapolate_to_zero(&hs, &vs);
    let coarse = extrapolate_to_zero(&hs[1..], &vs[1..]);
    (v, (v - coarse).abs())
}

/// F(P)(ξ) = (1−2|ξ|)/M̃(ξ), periodic, with the removable point ±1/2 filled in.
pub fn pkernel_multiplier(xi: f64) -> f64 {
    let a = fold(xi).abs();
    if a == 0.5 {
        return pkernel_multiplier_at_half();
    }
    (1.0 - 2.0 * a) / multiplier_mtilde(a)
}

/// u(x) = M̃(x)/(1−2x) − 1, so that F(P) = 1/(1+u).
pub fn u_function(x: f64) -> f64 {
    1.0 / pkernel_multiplier(x) - 1.0
}

/// A multiplier sampled on the grid ξ_j = −1/2 + j/N.
#[derive(Debug, Clone, Serialize)]
pub struct MultiplierSamples {
    pub n: usize,
    pub grid: Vec<f64>,
    pub values: Vec<Complex64>,
}

impl MultiplierSamples {
    pub fn grid(n: usize) -> Vec<f64> {
        (0..n).map(|j| -0.5 + j as f64 / n as f64).collect()
    }

    /// Samples of the odd multiplier −i·sign(ξ)·g(ξ).
    pub fn from_symmetrized(n: usize, g: impl Fn(f64) -> f64) -> Self {
        let grid = Self::grid(n);
        let values = grid
            .iter()
            .map(|&x| if x == 0.0 { Complex64::new(0.0, 0.0) } else { Complex64::new(0.0, -x.signum() * g(x)) })
            .collect();
        MultiplierSamples { n, grid, values }
    }

    /// Samples of an even real multiplier.
    pub fn from_even(n: usize, g: impl Fn(f64) -> f64) -> Self {
        let grid = Self::grid(n);
        let values = grid.iter().map(|&x| Complex64::new(g(x), 0.0)).collect();
        MultiplierSamples { n, grid, values }
    }
}

/// Σ_{0<|k|≤N} K_H(k) e^{−2πikξ} on a grid of `grid_n` points.
pub fn th_multiplier_from_kernel(n_terms: usize, grid_n: usize) -> Result<MultiplierSamples> {
    if n_terms == 0 || grid_n == 0 {
        return Err(Error::Domain("need at least one term and one grid point".into()));
    }
    let k: Vec<f64> = (1..=n_terms as i64).map(prob_hilbert_kernel_1d).collect();
    let grid = MultiplierSamples::grid(grid_n);
    let values = grid
        .iter()
        .map(|&xi| {
            let mut s = Complex64::new(0.0, 0.0);
            for (i, &kv) in k.iter().enumerate() {
                let n = (i + 1) as f64;
                let e = Complex64::from_polar(1.0, -2.0 * PI * n * xi);
                // K_H(−n) = −K_H(n)
                s += kv * (e - e.conj());
            }
            s
        })
        .collect();
    Ok(MultiplierSamples { n: grid_n, grid, values })
}

/// The coefficients P(n), −N/2 ≤ n < N/2, from an N-point inverse DFT of F(P).
#[derive(Debug, Clone, Serialize)]
pub struct PKernel {
    pub n: usize,
    /// P(n) at index n + N/2.
    pub values: Vec<f64>,
    /// Largest |Im| left after inversion.
    pub imag_residue: f64,
    /// Σ_{|n| > N/4} P(n).
    pub tail_mass: f64,
}

impl PKernel {
    pub fn get(&self, k: i64) -> f64 {
        let half = (self.n / 2) as i64;
        if k < -half || k >= half {
            0.0
        } else {
            self.values[(k + half) as usize]
        }
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn to_sequence(&self) -> Sequence {
        let half = (self.n / 2) as i64;
        Sequence::from_slice_1d(-half, &self.values)
    }
}

/// Invert F(P) on an N-point grid. All N coefficients are kept.
pub fn pkernel_coefficients(n: usize) -> Result<PKernel> {
    if !n.is_power_of_two() || n < 1 << 10 {
        return Err(Error::Domain(format!("grid size must be a power of two ≥ 1024, got {n}")));
    }
    let mut buf: Vec<Complex64> = (0..n)
        .map(|j| {
            let xi = if j < n / 2 { j as f64 / n as f64 } else { j as f64 / n as f64 - 1.0 };
            Complex64::new(pkernel_multiplier(xi), 0.0)
        })
        .collect();
    // P(k) = (1/N) Σ_j F(ξ_j) e^{2πijk/N}
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    let half = n / 2;
    let mut values = vec![0.0; n];
    let mut imag: f64 = 0.0;
    for (j, c) in buf.iter().enumerate() {
        let k = if j < half { j as i64 } else { j as i64 - n as i64 };
        values[(k + half as i64) as usize] = c.re / n as f64;
        imag = imag.max((c.im / n as f64).abs());
    }
    if imag > 1e-10 {
        return Err(Error::InversionResidue(imag));
    }
    let quarter = (n / 4) as i64;
    let tail_mass = (0..n)
        .filter(|&i| (i as i64 - half as i64).abs() > quarter)
        .map(|i| values[i])
        .sum();
    Ok(PKernel { n, values, imag_residue: imag, tail_mass })
}

/// Result of comparing K_H ∗ P with the discrete Hilbert kernel.
#[derive(Debug, Clone, Serialize)]
pub struct FactorizationReport {
    pub radius: usize,
    pub grid: usize,
    /// (n, (K_H ∗ P)(n), 1/(πn)) for |n| ≤ 10.
    pub rows: Vec<(i64, f64, f64)>,
    pub max_deviation: f64,
    pub p_sum: f64,
    pub p_min: f64,
    pub p_tail_mass: f64,
}

/// Truncated convolution (K_H ∗ P)(n) = Σ_{|m|≤R} K_H(n−m) P(m) for |n| ≤ 10.
pub fn convolution_factorization_check(radius: usize, grid: usize) -> Result<FactorizationReport> {
    if radius < 1 {
        return Err(Error::Domain("radius must be positive".into()));
    }
    let p = pkernel_coefficients(grid)?;
    let r = radius as i64;
    let kmax = r + 10;
    let kh: Vec<f64> = (0..=kmax).map(prob_hilbert_kernel_1d).collect();
    let k_at = |j: i64| if j >= 0 { kh[j as usize] } else { -kh[(-j) as usize] };
    let mut rows = Vec::with_capacity(21);
    let mut max_dev: f64 = 0.0;
    for n in -10..=10i64 {
        let conv: f64 = (-r..=r).map(|m| k_at(n - m) * p.get(m)).sum();
        let want = if n == 0 { 0.0 } else { 1.0 / (PI * n as f64) };
        max_dev = max_dev.max((conv - want).abs());
        rows.push((n, conv, want));
    }
    Ok(FactorizationReport {
        radius,
        grid,
        rows,
        max_deviation: max_dev,
        p_sum: p.sum(),
        p_min: p.min(),
        p_tail_mass: p.tail_mass,
    })
}

/// Multiplier of a one-dimensional sequence, Σ f(n) e^{−2πinξ}.
pub fn fourier_series(f: &Sequence, xi: f64) -> Complex64 {
    f.iter()
        .map(|(n, v): (&LatticePoint, f64)| v * Complex64::from_polar(1.0, -2.0 * PI * n.coords()[0] as f64 * xi))
        .sum()
}

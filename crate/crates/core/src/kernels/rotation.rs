use std::f64::consts::PI;

use crate::lattice::LatticePoint;
use crate::numerics::{integrate_boxes, QuadConfig, QuadResult};
use crate::poisson::{c_d, pow_half};
use crate::{Error, Result};

use super::check_axis;

/// Closed-form rotation kernel for d = 2, axis i (1-based).
pub fn rotation_kernel_2d(n: &LatticePoint, i: usize) -> Result<f64> {
    check_axis(n, i, 2)?;
    let c = n.coords();
    let ni = c[i - 1];
    if ni == 0 {
        return Ok(0.0);
    }
    let j = 2 - i;
    let norm = |dj: i64| {
        let mut v = [c[0], c[1]];
        v[j] += dj;
        ((v[0] * v[0] + v[1] * v[1]) as f64).sqrt()
    };
    Ok((norm(1) + norm(-1) - 2.0 * n.norm()) / (2.0 * PI * ni as f64))
}

/// Rotation kernel for d ≥ 2 by quadrature.
///
/// After moving axis k to the front and reflecting so that n_1 > 0, the double
/// integral over b ∈ [0,1]^{d−1} and the shifted cube of side 1/n_1 collapses to
/// (c_d/n_1^d) ∫_{[−1,1]^{d−1}} Π(1−|w_j|) (1 + |ñ+w|²/n_1²)^{−(d+1)/2} dw.
pub fn rotation_kernel(n: &LatticePoint, k: usize, d: usize, cfg: &QuadConfig) -> Result<QuadResult> {
    check_axis(n, k, d)?;
    if d < 2 {
        return Err(Error::Domain("rotation kernels need d ≥ 2".into()));
    }
    let v = n.swapped(0, k - 1);
    let n1 = v.coords()[0];
    if n1 == 0 {
        return Ok(QuadResult::new(0.0, 0.0, 1));
    }
    let sign = n1.signum() as f64;
    let v = if n1 < 0 { v.neg() } else { v };
    let n1 = v.coords()[0] as f64;
    let rest: Vec<f64> = v.coords()[1..].iter().map(|&c| c as f64).collect();
    let m = d - 1;
    let f = |w: &[f64]| {
        let mut tent = 1.0;
        let mut r2 = 0.0;
        for j in 0..m {
            tent *= 1.0 - w[j].abs();
            let a = (rest[j] + w[j]) / n1;
            r2 += a * a;
        }
        tent / pow_half(1.0 + r2, d + 1)
    };
    let mut boxes = Vec::with_capacity(1 << m);
    for mask in 0..(1usize << m) {
        let lo: Vec<f64> = (0..m).map(|j| if mask >> j & 1 == 1 { 0.0 } else { -1.0 }).collect();
        let hi: Vec<f64> = lo.iter().map(|l| l + 1.0).collect();
        boxes.push((lo, hi));
    }
    let r = integrate_boxes(&f, &boxes, cfg)?;
    Ok(r.scale(sign * c_d(d) / n1.powi(d as i32)))
}

//! Convolution with kernel tables, ℓ^p norms and operator-norm estimates.

mod littlewood_paley;
mod search;
mod table;

use std::collections::BTreeSet;
use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::lattice::{LatticePoint, Sequence};
use crate::{Error, Result};

pub use littlewood_paley::{littlewood_paley_check, LpReport};
pub use search::{norm_lower_bound_search, random_sequence, NormSearch, SearchOptions};
pub use table::{canonical, KernelTable, CACHE_ENV};

/// Default truncation radius for apply_kernel.
pub fn default_radius(d: usize) -> i64 {
    if d == 1 {
        200
    } else {
        40
    }
}

/// Output of [`apply_kernel`].
#[derive(Debug, Clone, Serialize)]
pub struct Applied {
    pub g: Sequence,
    pub radius: i64,
    /// C‖f‖₁/(R+1)^d with C = max |K(n)||n|^d over the table; bounds the omitted
    /// terms at every output point as long as the measured decay holds.
    pub tail_bound: f64,
}

/// All points within ∞-distance r of the support of f.
pub fn dilated_support(f: &Sequence, r: i64) -> Vec<LatticePoint> {
    let cube = LatticePoint::cube(f.dim(), r);
    let mut out = BTreeSet::new();
    for (m, _) in f.iter() {
        for c in &cube {
            out.insert(m.add(c));
        }
    }
    out.into_iter().collect()
}

/// g(n) = Σ_{|n−m|∞ ≤ R} K(n−m) f(m) on supp f dilated by R.
pub fn apply_kernel(f: &Sequence, table: &KernelTable, radius: i64) -> Result<Applied> {
    if radius < 1 {
        return Err(Error::Domain(format!("radius must be ≥ 1, got {radius}")));
    }
    if f.dim() != table.dim() {
        return Err(Error::Domain(format!("sequence lives on Z^{} but the kernel on Z^{}", f.dim(), table.dim())));
    }
    let d = f.dim();
    if f.is_empty() {
        return Ok(Applied { g: Sequence::new(d), radius, tail_bound: 0.0 });
    }
    table.ensure_cube(radius)?;
    let src: Vec<(LatticePoint, f64)> = f.iter().map(|(n, v)| (n.clone(), v)).collect();
    let out = dilated_support(f, radius);
    let vals: Vec<(LatticePoint, f64)> = out
        .into_par_iter()
        .map(|n| {
            let mut s = 0.0;
            for (m, v) in &src {
                let j = n.sub(m);
                if j.norm_inf() <= radius {
                    s += table.get(&j).expect("cube filled").value * v;
                }
            }
            (n, s)
        })
        .collect();
    let g = Sequence::from_pairs(d, vals)?;
    let l1 = lp_norm(f, 1.0)?;
    let tail_bound = table.decay_constant() * l1 / ((radius + 1) as f64).powi(d as i32);
    Ok(Applied { g, radius, tail_bound })
}

/// (Σ|f(n)|^p)^{1/p} for p ≥ 1; p = ∞ gives the sup norm.
pub fn lp_norm(f: &Sequence, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::Domain(format!("lp_norm needs p ≥ 1, got {p}")));
    }
    if p.is_infinite() {
        return Ok(f.max_abs());
    }
    // scale by the max to avoid overflow for large p
    let m = f.max_abs();
    if m == 0.0 {
        return Ok(0.0);
    }
    let s: f64 = f.iter().map(|(_, v)| (v.abs() / m).powf(p)).sum();
    Ok(m * s.powf(1.0 / p))
}

/// p* = max(p, p/(p−1)).
pub fn p_star(p: f64) -> Result<f64> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::Domain(format!("need 1 < p < ∞, got {p}")));
    }
    Ok(p.max(p / (p - 1.0)))
}

/// cot(π/(2p*)), the ℓ^p norm of the discrete Hilbert-type transforms.
pub fn cot_bound(p: f64) -> Result<f64> {
    let ps = p_star(p)?;
    Ok(1.0 / (PI / (2.0 * ps)).tan())
}

/// ‖Tf‖_p / ‖f‖_p with T truncated at radius R.
pub fn norm_ratio(f: &Sequence, table: &KernelTable, p: f64, radius: i64) -> Result<f64> {
    let nf = lp_norm(f, p)?;
    if nf == 0.0 {
        return Err(Error::Domain("norm_ratio needs f ≠ 0".into()));
    }
    let g = apply_kernel(f, table, radius)?.g;
    Ok(lp_norm(&g, p)? / nf)
}

/// H_dis f(n) = (1/π) Σ_{m≠n} f(m)/(n−m) on supp f dilated by R, with no truncation
/// in m.
pub fn hdis_apply_reference(f: &Sequence, radius: i64) -> Result<Sequence> {
    if f.dim() != 1 {
        return Err(Error::Domain("hdis_apply_reference needs d = 1".into()));
    }
    let src: Vec<(i64, f64)> = f.iter().map(|(n, v)| (n.coords()[0], v)).collect();
    let pairs = dilated_support(f, radius).into_iter().map(|n| {
        let x = n.coords()[0];
        let s: f64 = src.iter().filter(|(m, _)| *m != x).map(|&(m, v)| v / (x - m) as f64).sum();
        (n, s / PI)
    });
    Sequence::from_pairs(1, pairs)
}

/// Full convolution (a ∗ b)(n) = Σ_m a(n−m) b(m).
pub fn convolve(a: &Sequence, b: &Sequence) -> Result<Sequence> {
    if a.dim() != b.dim() {
        return Err(Error::Domain("convolve needs sequences on the same lattice".into()));
    }
    let mut pairs = Vec::with_capacity(a.len() * b.len());
    for (n, u) in a.iter() {
        for (m, v) in b.iter() {
            pairs.push((n.add(m), u * v));
        }
    }
    Sequence::from_pairs(a.dim(), pairs)
}

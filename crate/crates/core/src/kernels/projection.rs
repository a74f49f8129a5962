use crate::lattice::LatticePoint;
use crate::numerics::{integrate_halfspace, QuadConfig, QuadResult};
use crate::poisson::{green_w_at, poisson_grad_at, poisson_p_at, PeriodicPoissonEvaluator, MAX_D};
use crate::{Error, Result};

use super::prob::lattice_domain;
use super::ConstantMatrix;

/// h · (A∇(p_m/h)) · ∇(p_n/h) at (x, y).
#[inline]
fn gradient_form(ev: &PeriodicPoissonEvaluator, a: &ConstantMatrix, n: &[f64], m: &[f64], x: &[f64], y: f64) -> f64 {
    let d = x.len();
    let hv = ev.h_grad(x, y);
    let h = hv.h;
    let mut xs = [0.0; MAX_D];
    let mut gm = [0.0; MAX_D + 1];
    let mut gn = [0.0; MAX_D + 1];
    for i in 0..d {
        xs[i] = x[i] - m[i];
    }
    let pm = poisson_grad_at(&xs[..d], y, &mut gm);
    for i in 0..d {
        xs[i] = x[i] - n[i];
    }
    let pn = poisson_grad_at(&xs[..d], y, &mut gn);
    let h2 = h * h;
    for i in 0..=d {
        gm[i] = gm[i] / h - pm * hv.grad[i] / h2;
        gn[i] = gn[i] / h - pn * hv.grad[i] / h2;
    }
    h * a.bilinear(&gm[..=d], &gn[..=d])
}

fn check_args(n: &LatticePoint, m: &LatticePoint, a: &ConstantMatrix, d: usize) -> Result<()> {
    if d == 0 || d > MAX_D {
        return Err(Error::Domain(format!("dimension {d} out of range 1..={MAX_D}")));
    }
    if n.dim() != d || m.dim() != d {
        return Err(Error::Domain(format!("lattice points must have dimension {d}")));
    }
    if a.d() != d {
        return Err(Error::Domain(format!("matrix is {0}×{0}, expected {1}×{1}", a.dim(), d + 1)));
    }
    Ok(())
}

fn y_breaks(top: f64) -> Vec<f64> {
    let mut v = vec![0.25];
    while *v.last().unwrap() < top {
        let next = v.last().unwrap() * 2.0;
        v.push(next);
    }
    v
}

/// K^w_A(n, m) = ∫∫ (G_w/p_n(0,w)) h A∇(p_m/h)·∇(p_n/h).
pub fn finite_w_kernel(
    n: &LatticePoint,
    m: &LatticePoint,
    a: &ConstantMatrix,
    w: f64,
    d: usize,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    check_args(n, m, a, d)?;
    if !(w > 0.0) || !w.is_finite() {
        return Err(Error::Domain(format!("w must be positive and finite, got {w}")));
    }
    if a.op_norm() == 0.0 {
        return Ok(QuadResult::new(0.0, 0.0, 1));
    }
    let ev = PeriodicPoissonEvaluator::new(d);
    let nf = n.as_f64();
    let mf = m.as_f64();
    let neg_n: Vec<f64> = nf.iter().map(|v| -v).collect();
    let pn0 = poisson_p_at(&neg_n, w);
    let mut yb = y_breaks(4.0 * w);
    yb.push(w);
    let dom = lattice_domain(d, &[&nf, &mf], 1.0).with_y_breaks(yb);
    integrate_halfspace(|x, y| green_w_at(x, y, w) / pn0 * gradient_form(&ev, a, &nf, &mf, x, y), &dom, cfg)
}

/// K_A(n, m) = lim_{w→∞} K^w_A(n, m) = ∫∫ 2y h A∇(p_m/h)·∇(p_n/h).
pub fn limit_kernel(n: &LatticePoint, m: &LatticePoint, a: &ConstantMatrix, d: usize, cfg: &QuadConfig) -> Result<QuadResult> {
    check_args(n, m, a, d)?;
    if a.op_norm() == 0.0 {
        return Ok(QuadResult::new(0.0, 0.0, 1));
    }
    let ev = PeriodicPoissonEvaluator::new(d);
    let nf = n.as_f64();
    let mf = m.as_f64();
    let dom = lattice_domain(d, &[&nf, &mf], 1.0).with_y_breaks(y_breaks(64.0));
    integrate_halfspace(|x, y| 2.0 * y * gradient_form(&ev, a, &nf, &mf, x, y), &dom, cfg)
}

use serde::Serialize;

use super::{lp_norm, p_star};
use crate::kernels::lattice_domain;
use crate::lattice::Sequence;
use crate::numerics::{integrate_halfspace, QuadConfig, QuadResult};
use crate::poisson::{poisson_grad_at, PeriodicPoissonEvaluator, MAX_D};
use crate::{Error, Result};

/// Both sides of the Littlewood–Paley type inequality
/// ∫∫ 2y h |∇u_f||∇u_g| ≤ (p*−1)‖f‖_p‖g‖_q.
#[derive(Debug, Clone, Serialize)]
pub struct LpReport {
    pub p: f64,
    pub lhs: QuadResult,
    pub rhs: f64,
    pub holds: bool,
}

// ∇u_f = (∇P_f − u_f ∇h)/h with P_f = Σ f(n) p_n
fn grad_u(src: &[(Vec<f64>, f64)], x: &[f64], y: f64, h: f64, gh: &[f64], out: &mut [f64]) {
    let d = x.len();
    let mut xs = [0.0; MAX_D];
    let mut g = [0.0; MAX_D + 1];
    let mut pf = 0.0;
    out.iter_mut().for_each(|o| *o = 0.0);
    for (n, v) in src {
        for i in 0..d {
            xs[i] = x[i] - n[i];
        }
        pf += v * poisson_grad_at(&xs[..d], y, &mut g);
        for i in 0..=d {
            out[i] += v * g[i];
        }
    }
    let u = pf / h;
    for i in 0..=d {
        out[i] = (out[i] - u * gh[i]) / h;
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|a| a * a).sum::<f64>().sqrt()
}

/// Evaluates the left side by half-space quadrature and compares with (p*−1)‖f‖_p‖g‖_q.
pub fn littlewood_paley_check(f: &Sequence, g: &Sequence, p: f64, cfg: &QuadConfig) -> Result<LpReport> {
    let ps = p_star(p)?;
    let q = p / (p - 1.0);
    let d = f.dim();
    if g.dim() != d {
        return Err(Error::Domain("f and g must live on the same lattice".into()));
    }
    let rhs = (ps - 1.0) * lp_norm(f, p)? * lp_norm(g, q)?;
    if f.is_empty() || g.is_empty() {
        return Ok(LpReport { p, lhs: QuadResult::new(0.0, 0.0, 1), rhs, holds: true });
    }
    let sf: Vec<(Vec<f64>, f64)> = f.iter().map(|(n, v)| (n.as_f64(), v)).collect();
    let sg: Vec<(Vec<f64>, f64)> = g.iter().map(|(n, v)| (n.as_f64(), v)).collect();
    let pts: Vec<&[f64]> = sf.iter().chain(&sg).map(|(n, _)| n.as_slice()).collect();
    let dom = lattice_domain(d, &pts, 1.0).with_y_breaks(vec![0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0]);
    let ev = PeriodicPoissonEvaluator::new(d);
    let lhs = integrate_halfspace(
        |x, y| {
            let hv = ev.h_grad(x, y);
            let mut gf = [0.0; MAX_D + 1];
            let mut gg = [0.0; MAX_D + 1];
            grad_u(&sf, x, y, hv.h, &hv.grad[..=d], &mut gf[..=d]);
            grad_u(&sg, x, y, hv.h, &hv.grad[..=d], &mut gg[..=d]);
            2.0 * y * hv.h * norm(&gf[..=d]) * norm(&gg[..=d])
        },
        &dom,
        cfg,
    )?;
    let holds = lhs.value <= rhs + lhs.abs_error;
    Ok(LpReport { p, lhs, rhs, holds })
}

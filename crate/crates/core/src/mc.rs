//! Monte Carlo simulation of the Doob h-process dZ = dB + ∇h/h dt started at (0, w).

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::kernels::ConstantMatrix;
use crate::lattice::{LatticePoint, Sequence};
use crate::poisson::{h_closed_form_d1_grad, poisson_grad_at, poisson_p_at, PeriodicPoissonEvaluator, MAX_D};
use crate::{Error, Result};

/// Conditioning hits required by [`estimate_projection`].
pub const MIN_HITS: usize = 100;

/// Euler–Maruyama settings.
///
/// The step is Δt = min(dt_base·max(1, y²), boundary_factor·y²): fine near the
/// boundary where the drift grows like 1/y, and scale invariant far above it where h ≈ 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SdeConfig {
    pub dt_base: f64,
    /// Absorption height; the exit point is the lattice point nearest to x.
    pub y_floor: f64,
    pub w_start: f64,
    pub boundary_factor: f64,
    pub paths: usize,
    pub seed: u64,
    /// Paths still alive after this many steps are counted as capped.
    pub max_steps: usize,
}

impl Default for SdeConfig {
    fn default() -> Self {
        SdeConfig { dt_base: 2e-3, y_floor: 1e-3, w_start: 2.0, boundary_factor: 0.02, paths: 100_000, seed: 1, max_steps: 2_000_000 }
    }
}

impl SdeConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.dt_base > 0.0) {
            return Err(Error::Domain(format!("dt_base must be positive, got {}", self.dt_base)));
        }
        if !(self.y_floor > 0.0 && self.y_floor < 0.1) {
            return Err(Error::Domain(format!("y_floor must lie in (0, 0.1), got {}", self.y_floor)));
        }
        if !(self.w_start > self.y_floor) || !self.w_start.is_finite() {
            return Err(Error::Domain(format!("w_start must exceed y_floor, got {}", self.w_start)));
        }
        if !(self.boundary_factor > 0.0 && self.boundary_factor <= 1.0) {
            return Err(Error::Domain(format!("boundary_factor must lie in (0, 1], got {}", self.boundary_factor)));
        }
        if self.paths < 1000 {
            return Err(Error::Domain(format!("need at least 1000 paths, got {}", self.paths)));
        }
        if self.max_steps == 0 {
            return Err(Error::Domain("max_steps must be positive".into()));
        }
        Ok(())
    }

    fn step(&self, y: f64) -> f64 {
        (self.dt_base * y.max(1.0).powi(2)).min(self.boundary_factor * y * y)
    }
}

enum Field {
    Line,
    General(PeriodicPoissonEvaluator),
}

impl Field {
    fn new(d: usize) -> Self {
        if d == 1 {
            Field::Line
        } else {
            Field::General(PeriodicPoissonEvaluator::new(d))
        }
    }

    // h and ∇h at (x, y); gradient written into `grad`
    fn eval(&self, x: &[f64], y: f64, grad: &mut [f64]) -> f64 {
        match self {
            Field::Line => {
                let (h, g) = h_closed_form_d1_grad(x[0], y);
                grad[..2].copy_from_slice(&g);
                h
            }
            Field::General(ev) => {
                let v = ev.h_grad(x, y);
                let d = x.len();
                grad[..=d].copy_from_slice(&v.grad[..=d]);
                v.h
            }
        }
    }
}

fn check_d(d: usize) -> Result<()> {
    if d == 0 || d > MAX_D {
        return Err(Error::Domain(format!("dimension {d} out of range 1..={MAX_D}")));
    }
    Ok(())
}

/// The drift ∇h/h at (x, y), y component last.
pub fn drift_field(x: &[f64], y: f64) -> Result<Vec<f64>> {
    let d = x.len();
    check_d(d)?;
    if !(y > 0.0) {
        return Err(Error::Domain(format!("drift needs y > 0, got {y}")));
    }
    let mut g = [0.0; MAX_D + 1];
    let h = Field::new(d).eval(x, y, &mut g);
    Ok(g[..=d].iter().map(|v| v / h).collect())
}

fn path_rng(seed: u64, path: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(path as u64);
    rng
}

// One path; `on_step(x, y, h, ∇h, ΔB)` sees the state before each increment.
// Returns the exit point or None when the step cap is hit.
fn run_path<F>(cfg: &SdeConfig, field: &Field, d: usize, path: usize, mut on_step: F) -> Option<LatticePoint>
where
    F: FnMut(&[f64], f64, f64, &[f64], &[f64]),
{
    let mut rng = path_rng(cfg.seed, path);
    let mut x = [0.0; MAX_D];
    let mut y = cfg.w_start;
    let mut grad = [0.0; MAX_D + 1];
    let mut db = [0.0; MAX_D + 1];
    for _ in 0..cfg.max_steps {
        let dt = cfg.step(y);
        let sq = dt.sqrt();
        let h = field.eval(&x[..d], y, &mut grad);
        for v in db[..=d].iter_mut() {
            let z: f64 = StandardNormal.sample(&mut rng);
            *v = sq * z;
        }
        on_step(&x[..d], y, h, &grad[..=d], &db[..=d]);
        for i in 0..d {
            x[i] += db[i] + grad[i] / h * dt;
        }
        y += db[d] + grad[d] / h * dt;
        if y <= cfg.y_floor {
            return Some(LatticePoint(x[..d].iter().map(|v| v.round() as i64).collect()));
        }
    }
    None
}

/// Empirical exit law of the h-process.
#[derive(Debug, Clone, Serialize)]
pub struct ExitDistribution {
    pub d: usize,
    pub config: SdeConfig,
    pub counts: BTreeMap<LatticePoint, usize>,
    /// Paths that reached `max_steps` without exiting.
    pub capped: usize,
    pub total_steps: u64,
}

impl ExitDistribution {
    pub fn count(&self, n: &LatticePoint) -> usize {
        self.counts.get(n).copied().unwrap_or(0)
    }

    pub fn exited(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn frequency(&self, n: &LatticePoint) -> f64 {
        self.count(n) as f64 / self.config.paths as f64
    }
}

/// Simulates `cfg.paths` independent paths from (0, w) and records where they exit.
pub fn simulate_exit(cfg: &SdeConfig, d: usize) -> Result<ExitDistribution> {
    cfg.validate()?;
    check_d(d)?;
    let field = Field::new(d);
    let results: Vec<(Option<LatticePoint>, u64)> = (0..cfg.paths)
        .into_par_iter()
        .map(|i| {
            let mut steps = 0u64;
            let exit = run_path(cfg, &field, d, i, |_, _, _, _, _| steps += 1);
            (exit, steps)
        })
        .collect();
    let mut counts = BTreeMap::new();
    let mut capped = 0;
    let mut total_steps = 0;
    for (e, s) in results {
        total_steps += s;
        match e {
            Some(n) => *counts.entry(n).or_insert(0) += 1,
            None => capped += 1,
        }
    }
    Ok(ExitDistribution { d, config: *cfg, counts, capped, total_steps })
}

/// Exact exit probability p_n(0, w)/h(0, w).
pub fn exit_probability(n: &LatticePoint, w: f64) -> f64 {
    let d = n.dim();
    let neg: Vec<f64> = n.coords().iter().map(|&c| -(c as f64)).collect();
    let mut g = [0.0; MAX_D + 1];
    let h = Field::new(d).eval(&vec![0.0; d], w, &mut g);
    poisson_p_at(&neg, w) / h
}

/// Pearson χ² comparison of an exit law with p_n(0,w)/h(0,w).
#[derive(Debug, Clone, Serialize)]
pub struct ChiSquareReport {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    /// (label, observed, expected) per bin; the last bin pools the tails.
    pub bins: Vec<(String, usize, f64)>,
}

/// Bins every lattice point with expected count ≥ `min_expected`, pools the rest.
pub fn exit_chi_square(dist: &ExitDistribution, min_expected: f64) -> Result<ChiSquareReport> {
    let w = dist.config.w_start;
    let total = dist.exited() as f64;
    if dist.d != 1 {
        return Err(Error::Domain("the χ² exit test enumerates the line and needs d = 1".into()));
    }
    let mut bins = Vec::new();
    let mut mass = 0.0;
    let mut seen = 0usize;
    let mut r = 0i64;
    loop {
        let n = LatticePoint(vec![r]);
        let e = total * exit_probability(&n, w);
        if e < min_expected {
            break;
        }
        let mut push = |n: LatticePoint| {
            let e = total * exit_probability(&n, w);
            let o = dist.count(&n);
            mass += e;
            seen += o;
            bins.push((n.to_string(), o, e));
        };
        push(n);
        if r > 0 {
            push(LatticePoint(vec![-r]));
        }
        r += 1;
    }
    bins.push(("tail".into(), dist.exited() - seen, total - mass));
    let statistic: f64 = bins.iter().map(|(_, o, e)| (*o as f64 - e).powi(2) / e).sum();
    let dof = bins.len() - 1;
    let chi = ChiSquared::new(dof as f64).map_err(|e| Error::Domain(e.to_string()))?;
    Ok(ChiSquareReport { statistic, dof, p_value: chi.sf(statistic), bins })
}

/// Monte Carlo estimate of T^w_A f(n) = E[(A⋆M^f)_τ | exit = n].
#[derive(Debug, Clone, Serialize)]
pub struct ProjectionEstimate {
    pub n: LatticePoint,
    pub value: f64,
    pub stderr: f64,
    pub hits: usize,
    pub paths: usize,
    pub capped: usize,
    /// u_f(0, w) = M_0.
    pub start_value: f64,
    /// Mean and standard error of the transform over all exited paths; zero in expectation.
    pub mean_all: f64,
    pub stderr_all: f64,
}

// ∇u_f = (∇P_f − u_f ∇h)/h with P_f = Σ f(m) p_m
fn grad_u(src: &[(Vec<f64>, f64)], x: &[f64], y: f64, h: f64, gh: &[f64], out: &mut [f64]) {
    let d = x.len();
    let mut xs = [0.0; MAX_D];
    let mut g = [0.0; MAX_D + 1];
    let mut pf = 0.0;
    out.iter_mut().for_each(|o| *o = 0.0);
    for (m, v) in src {
        for i in 0..d {
            xs[i] = x[i] - m[i];
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

/// Accumulates Σ A∇u_f(Z)·ΔB along each path and averages over paths exiting at n.
pub fn estimate_projection(f: &Sequence, a: &ConstantMatrix, cfg: &SdeConfig, n: &LatticePoint) -> Result<ProjectionEstimate> {
    cfg.validate()?;
    let d = f.dim();
    check_d(d)?;
    if d > 2 {
        return Err(Error::Domain("projection estimates are supported for d ≤ 2".into()));
    }
    if a.d() != d || n.dim() != d {
        return Err(Error::Domain(format!("matrix and exit point must match d = {d}")));
    }
    let src: Vec<(Vec<f64>, f64)> = f.iter().map(|(m, v)| (m.as_f64(), v)).collect();
    let field = Field::new(d);
    let zero_a = a.op_norm() == 0.0;
    let results: Vec<(Option<LatticePoint>, f64)> = (0..cfg.paths)
        .into_par_iter()
        .map(|i| {
            let mut acc = 0.0;
            let mut gu = [0.0; MAX_D + 1];
            let exit = run_path(cfg, &field, d, i, |x, y, h, gh, db| {
                if zero_a {
                    return;
                }
                grad_u(&src, x, y, h, gh, &mut gu[..=d]);
                acc += a.bilinear(&gu[..=d], db);
            });
            (exit, acc)
        })
        .collect();
    let mut hits = Vec::new();
    let mut all = Vec::with_capacity(results.len());
    let mut capped = 0;
    for (e, v) in results {
        match e {
            Some(m) => {
                if &m == n {
                    hits.push(v);
                }
                all.push(v);
            }
            None => capped += 1,
        }
    }
    if hits.len() < MIN_HITS {
        return Err(Error::TooFewHits { hits: hits.len(), needed: MIN_HITS });
    }
    let (value, stderr) = mean_stderr(&hits);
    let (mean_all, stderr_all) = mean_stderr(&all);
    let mut g = [0.0; MAX_D + 1];
    let x0 = vec![0.0; d];
    let h0 = field.eval(&x0, cfg.w_start, &mut g);
    let start_value = src.iter().map(|(m, v)| {
        let neg: Vec<f64> = m.iter().map(|c| -c).collect();
        v * poisson_p_at(&neg, cfg.w_start)
    }).sum::<f64>() / h0;
    Ok(ProjectionEstimate { n: n.clone(), value, stderr, hits: hits.len(), paths: cfg.paths, capped, start_value, mean_all, stderr_all })
}

fn mean_stderr(v: &[f64]) -> (f64, f64) {
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    let var = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0).max(1.0);
    (mean, (var / n).sqrt())
}

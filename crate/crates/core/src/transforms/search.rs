use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::table::KernelTable;
use crate::lattice::{LatticePoint, Sequence};
use crate::{Error, Result};

/// Settings for [`norm_lower_bound_search`].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SearchOptions {
    /// Side length L of the box {0, …, L−1}^d the operator is compressed to.
    pub box_side: usize,
    /// Power iterations (p = 2) or local-search steps (other p).
    pub budget: usize,
    pub seed: u64,
    /// Random starting vectors added to the smooth seeds when p ≠ 2.
    pub restarts: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { box_side: 256, budget: 400, seed: 0, restarts: 4 }
    }
}

/// Best ratio found and the sequence attaining it.
#[derive(Debug, Clone, Serialize)]
pub struct NormSearch {
    pub p: f64,
    pub best_ratio: f64,
    pub witness: Sequence,
    pub method: &'static str,
    pub iterations: usize,
    pub box_side: usize,
}

// K(n − m) for n, m in the box, row-major.
struct BoxOperator {
    pts: Vec<LatticePoint>,
    mat: Vec<f64>,
}

impl BoxOperator {
    fn new(table: &KernelTable, side: usize) -> Result<Self> {
        let d = table.dim();
        let r = side as i64 - 1;
        table.ensure_cube(r)?;
        let pts: Vec<LatticePoint> = LatticePoint::cube(d, r).into_iter().filter(|n| n.coords().iter().all(|&c| c >= 0)).collect();
        let n = pts.len();
        let mut mat = vec![0.0; n * n];
        for (i, a) in pts.iter().enumerate() {
            for (j, b) in pts.iter().enumerate() {
                mat[i * n + j] = table.get(&a.sub(b)).expect("cube filled").value;
            }
        }
        Ok(BoxOperator { pts, mat })
    }

    fn len(&self) -> usize {
        self.pts.len()
    }

    fn apply(&self, v: &[f64], out: &mut [f64]) {
        let n = self.len();
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.mat[i * n..(i + 1) * n].iter().zip(v).map(|(a, b)| a * b).sum();
        }
    }

    fn apply_t(&self, v: &[f64], out: &mut [f64]) {
        let n = self.len();
        out.iter_mut().for_each(|o| *o = 0.0);
        for (i, &vi) in v.iter().enumerate() {
            for (o, a) in out.iter_mut().zip(&self.mat[i * n..(i + 1) * n]) {
                *o += a * vi;
            }
        }
    }

    fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        let n = self.len();
        (0..n).map(move |i| self.mat[i * n + j])
    }

    fn to_sequence(&self, v: &[f64]) -> Sequence {
        let d = self.pts[0].dim();
        Sequence::from_pairs(d, self.pts.iter().cloned().zip(v.iter().copied())).expect("same dimension")
    }
}

fn pnorm(v: &[f64], p: f64) -> f64 {
    let m = v.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    if m == 0.0 {
        return 0.0;
    }
    m * v.iter().map(|x| (x.abs() / m).powf(p)).sum::<f64>().powf(1.0 / p)
}

/// Lower bound for the ℓ^p operator norm of the kernel, from its compression to a box.
///
/// For p = 2 this is the largest singular value of the compression, found by power
/// iteration on TᵀT. Otherwise smooth dilated profiles and random vectors are
/// improved by greedy coordinate moves. Any ratio returned is attained by the
/// witness, so it is a lower bound for the norm of the truncated operator.
pub fn norm_lower_bound_search(table: &KernelTable, p: f64, opts: &SearchOptions) -> Result<NormSearch> {
    super::p_star(p)?;
    if opts.budget == 0 || opts.box_side < 2 {
        return Err(Error::Domain("search needs budget ≥ 1 and box side ≥ 2".into()));
    }
    if table.dim() > 2 {
        return Err(Error::Domain("norm search builds a dense box operator and supports d ≤ 2".into()));
    }
    let op = BoxOperator::new(table, opts.box_side)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    if p == 2.0 {
        power_iteration(&op, opts, &mut rng)
    } else {
        local_search(&op, p, opts, &mut rng)
    }
}

fn power_iteration(op: &BoxOperator, opts: &SearchOptions, rng: &mut ChaCha8Rng) -> Result<NormSearch> {
    let n = op.len();
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mut u = vec![0.0; n];
    let mut best = 0.0;
    let mut best_v = v.clone();
    for _ in 0..opts.budget {
        let nv = pnorm(&v, 2.0);
        v.iter_mut().for_each(|x| *x /= nv);
        op.apply(&v, &mut u);
        let ratio = pnorm(&u, 2.0);
        if ratio > best {
            best = ratio;
            best_v.copy_from_slice(&v);
        }
        if ratio == 0.0 {
            break;
        }
        op.apply_t(&u, &mut v);
    }
    Ok(NormSearch {
        p: 2.0,
        best_ratio: best,
        witness: op.to_sequence(&best_v),
        method: "power_iteration",
        iterations: opts.budget,
        box_side: opts.box_side,
    })
}

// smooth profiles on the box: even and odd bumps, and a signed power profile
fn seeds(op: &BoxOperator, p: f64, side: usize) -> Vec<Vec<f64>> {
    let c = (side as f64 - 1.0) / 2.0;
    let mut out = Vec::new();
    for frac in [0.125, 0.25, 0.5] {
        let s = frac * side as f64;
        let prof = |f: &dyn Fn(f64, f64) -> f64| -> Vec<f64> {
            op.pts
                .iter()
                .map(|n| {
                    let x: Vec<f64> = n.coords().iter().map(|&v| (v as f64 - c) / s).collect();
                    let r2: f64 = x.iter().map(|v| v * v).sum();
                    f(x[0], r2)
                })
                .collect()
        };
        out.push(prof(&|_, r2| (1.0 - r2).max(0.0).powi(2)));
        out.push(prof(&|x0, r2| x0 * (1.0 - r2).max(0.0).powi(2)));
        out.push(prof(&|x0, r2| {
            if r2 >= 1.0 || x0 == 0.0 {
                0.0
            } else {
                x0.signum() * x0.abs().powf(-1.0 / p) * (1.0 - r2)
            }
        }));
    }
    out
}

fn local_search(op: &BoxOperator, p: f64, opts: &SearchOptions, rng: &mut ChaCha8Rng) -> Result<NormSearch> {
    let n = op.len();
    let mut starts = seeds(op, p, opts.box_side);
    for _ in 0..opts.restarts {
        starts.push((0..n).map(|_| rng.gen_range(-1.0..1.0)).collect());
    }
    let steps = (opts.budget / starts.len()).max(1);
    let mut best = 0.0;
    let mut best_f = vec![0.0; n];
    let mut tf = vec![0.0; n];
    let mut trial = vec![0.0; n];
    for mut f in starts {
        if pnorm(&f, p) == 0.0 {
            continue;
        }
        op.apply(&f, &mut tf);
        let mut cur = pnorm(&tf, p) / pnorm(&f, p);
        let mut step = 0.5;
        for _ in 0..steps {
            let j = rng.gen_range(0..n);
            let scale = f.iter().fold(0.0f64, |a, x| a.max(x.abs()));
            let delta = step * scale * if rng.gen::<bool>() { 1.0 } else { -1.0 };
            for (t, (a, col)) in trial.iter_mut().zip(tf.iter().zip(op.column(j))) {
                *t = a + delta * col;
            }
            f[j] += delta;
            let nf = pnorm(&f, p);
            let r = if nf > 0.0 { pnorm(&trial, p) / nf } else { 0.0 };
            if r > cur {
                cur = r;
                tf.copy_from_slice(&trial);
            } else {
                f[j] -= delta;
                step = (step * 0.995f64).max(1e-3);
            }
        }
        if cur > best {
            best = cur;
            best_f.copy_from_slice(&f);
        }
    }
    Ok(NormSearch {
        p,
        best_ratio: best,
        witness: op.to_sequence(&best_f),
        method: "local_search",
        iterations: opts.budget,
        box_side: opts.box_side,
    })
}

/// Seeded random sequence on {0, …, len−1} with values uniform in [−1, 1].
pub fn random_sequence(len: usize, seed: u64) -> Sequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vals: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
    Sequence::from_slice_1d(0, &vals)
}

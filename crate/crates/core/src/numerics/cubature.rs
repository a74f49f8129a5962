use std::collections::BinaryHeap;

use super::{integrate_1d, QuadConfig, QuadResult};
use crate::{Error, Result};

// Genz–Malik degree 7 rule with embedded degree 5 rule.
const L2: f64 = 0.358_568_582_800_318_1; // sqrt(9/70)
const L4: f64 = 0.948_683_298_050_513_8; // sqrt(9/10)
const L5: f64 = 0.688_247_201_611_685_3; // sqrt(9/19)
const W2: f64 = 980.0 / 6561.0;
const W4: f64 = 200.0 / 19683.0;
const WE2: f64 = 245.0 / 486.0;
const WE4: f64 = 25.0 / 729.0;

struct Rule {
    dim: usize,
    w1: f64,
    w3: f64,
    w5: f64,
    we1: f64,
    we3: f64,
}

impl Rule {
    fn new(dim: usize) -> Self {
        let n = dim as f64;
        Rule {
            dim,
            w1: (12824.0 - 9120.0 * n + 400.0 * n * n) / 19683.0,
            w3: (1820.0 - 400.0 * n) / 19683.0,
            w5: 6859.0 / 19683.0 / (1u64 << dim) as f64,
            we1: (729.0 - 950.0 * n + 50.0 * n * n) / 729.0,
            we3: (265.0 - 100.0 * n) / 1458.0,
        }
    }

    fn points(&self) -> usize {
        let n = self.dim;
        1 + 4 * n + 2 * n * (n - 1) + (1 << n)
    }

    /// Returns (integral, error estimate, axis to split).
    fn apply<F: Fn(&[f64]) -> f64 + ?Sized>(&self, f: &F, c: &[f64], h: &[f64], p: &mut [f64]) -> Result<(f64, f64, usize)> {
        let n = self.dim;
        let eval = |p: &[f64]| -> Result<f64> {
            let v = f(p);
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::NonFinite { point: p.to_vec() })
            }
        };
        p.copy_from_slice(c);
        let f0 = eval(p)?;
        let mut s2 = 0.0;
        let mut s3 = 0.0;
        let mut best_axis = 0;
        let mut best_diff = -1.0;
        let ratio = (L2 * L2) / (L4 * L4);
        for i in 0..n {
            p[i] = c[i] - L2 * h[i];
            let a1 = eval(p)?;
            p[i] = c[i] + L2 * h[i];
            let a2 = eval(p)?;
            p[i] = c[i] - L4 * h[i];
            let b1 = eval(p)?;
            p[i] = c[i] + L4 * h[i];
            let b2 = eval(p)?;
            p[i] = c[i];
            s2 += a1 + a2;
            s3 += b1 + b2;
            let diff = (a1 + a2 - 2.0 * f0 - ratio * (b1 + b2 - 2.0 * f0)).abs();
            // prefer wider axes when the fourth differences tie
            if diff > best_diff * (1.0 + 1e-10) || (diff >= best_diff * (1.0 - 1e-10) && h[i] > h[best_axis]) {
                best_diff = diff;
                best_axis = i;
            }
        }
        let mut s4 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                for (si, sj) in [(-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 1.0)] {
                    p[i] = c[i] + si * L4 * h[i];
                    p[j] = c[j] + sj * L4 * h[j];
                    s4 += eval(p)?;
                }
                p[i] = c[i];
                p[j] = c[j];
            }
        }
        let mut s5 = 0.0;
        for mask in 0..(1usize << n) {
            for i in 0..n {
                let s = if mask >> i & 1 == 1 { 1.0 } else { -1.0 };
                p[i] = c[i] + s * L5 * h[i];
            }
            s5 += eval(p)?;
        }
        let vol: f64 = h.iter().map(|x| 2.0 * x).product();
        let r7 = vol * (self.w1 * f0 + W2 * s2 + self.w3 * s3 + W4 * s4 + self.w5 * s5);
        let r5 = vol * (self.we1 * f0 + WE2 * s2 + self.we3 * s3 + WE4 * s4);
        Ok((r7, (r7 - r5).abs(), best_axis))
    }
}

struct Region {
    c: Vec<f64>,
    h: Vec<f64>,
    value: f64,
    err: f64,
    axis: usize,
}

impl PartialEq for Region {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Region {}
impl PartialOrd for Region {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Region {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&o.err)
    }
}

/// Adaptive cubature over the box `[lo, hi]`.
pub fn integrate_box<F: Fn(&[f64]) -> f64 + ?Sized>(f: &F, lo: &[f64], hi: &[f64], cfg: &QuadConfig) -> Result<QuadResult> {
    integrate_boxes(f, &[(lo.to_vec(), hi.to_vec())], cfg)
}

/// Adaptive cubature over a union of disjoint boxes sharing one global error budget.
///
/// Splitting a domain at known kinks or peaks before starting keeps the rule
/// away from them.
pub fn integrate_boxes<F: Fn(&[f64]) -> f64 + ?Sized>(
    f: &F,
    boxes: &[(Vec<f64>, Vec<f64>)],
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    cfg.validate()?;
    if boxes.is_empty() {
        return Ok(QuadResult::new(0.0, 0.0, 1));
    }
    let dim = boxes[0].0.len();
    for (lo, hi) in boxes {
        if lo.len() != dim || hi.len() != dim {
            return Err(Error::Domain("boxes must share one dimension".into()));
        }
        if lo.iter().zip(hi).any(|(a, b)| !(a < b)) {
            return Err(Error::Domain(format!("empty box {lo:?} .. {hi:?}")));
        }
    }
    if dim == 0 {
        return Err(Error::Domain("cubature needs dimension ≥ 1".into()));
    }
    if dim == 1 {
        let n = boxes.len() as f64;
        let sub = QuadConfig { abs_tol: cfg.abs_tol / n, ..*cfg };
        let mut total = QuadResult::new(0.0, 0.0, 1);
        for (lo, hi) in boxes {
            total = total.add(integrate_1d(|x| f(&[x]), lo[0], hi[0], &sub)?);
        }
        return Ok(total);
    }

    let rule = Rule::new(dim);
    let mut scratch = vec![0.0; dim];
    let mut heap = BinaryHeap::with_capacity(boxes.len() * 4);
    let mut evals = 0usize;
    for (lo, hi) in boxes {
        let c: Vec<f64> = lo.iter().zip(hi).map(|(a, b)| 0.5 * (a + b)).collect();
        let h: Vec<f64> = lo.iter().zip(hi).map(|(a, b)| 0.5 * (b - a)).collect();
        let (value, err, axis) = rule.apply(f, &c, &h, &mut scratch)?;
        evals += rule.points();
        heap.push(Region { c, h, value, err, axis });
    }
    let mut total: f64 = heap.iter().map(|r| r.value).sum();
    let mut total_err: f64 = heap.iter().map(|r| r.err).sum();
    let mut splits = 0usize;
    while total_err > cfg.target(total) {
        if splits >= cfg.max_subdivisions {
            return Err(Error::NoConvergence {
                best: QuadResult::new(total, total_err, evals),
                subdivisions: splits,
            });
        }
        let r = heap.pop().expect("heap is never empty");
        let ax = r.axis;
        let hh = 0.5 * r.h[ax];
        if hh <= 4.0 * f64::EPSILON * r.c[ax].abs().max(1e-300) {
            // cannot refine further; report what we have
            heap.push(r);
            let best = QuadResult::new(total, total_err, evals);
            return Err(Error::NoConvergence { best, subdivisions: splits });
        }
        let mut h = r.h.clone();
        h[ax] = hh;
        let mut c1 = r.c.clone();
        c1[ax] -= hh;
        let mut c2 = r.c;
        c2[ax] += hh;
        let (v1, e1, a1) = rule.apply(f, &c1, &h, &mut scratch)?;
        let (v2, e2, a2) = rule.apply(f, &c2, &h, &mut scratch)?;
        evals += 2 * rule.points();
        splits += 1;
        total += v1 + v2 - r.value;
        total_err += e1 + e2 - r.err;
        heap.push(Region { c: c1, h: h.clone(), value: v1, err: e1, axis: a1 });
        heap.push(Region { c: c2, h, value: v2, err: e2, axis: a2 });
        if splits % 1024 == 0 {
            total = heap.iter().map(|r| r.value).sum();
            total_err = heap.iter().map(|r| r.err).sum();
        }
    }
    let value = heap.iter().map(|r| r.value).sum();
    let err = heap.iter().map(|r| r.err).sum();
    Ok(QuadResult::new(value, err, evals))
}

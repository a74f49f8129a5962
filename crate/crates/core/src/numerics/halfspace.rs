use super::{integrate_boxes, Decay, QuadConfig, QuadResult};
use crate::{Error, Result};

/// Largest dimension of R^d handled by [`integrate_halfspace`].
pub const MAX_DIM: usize = 7;

/// Description of how R^d × R_+ is mapped onto a box before cubature.
///
/// Each x coordinate goes through x = s·t/(1−t²), t ∈ (−1,1). The y axis is either
/// truncated to (0, y_max) or mapped from (0,1) according to `decay`.
/// Breakpoints are given in the original coordinates and become faces of the
/// initial boxes.
#[derive(Debug, Clone)]
pub struct HalfSpaceDomain {
    pub d: usize,
    pub x_scale: f64,
    pub x_breaks: Vec<Vec<f64>>,
    pub y_max: Option<f64>,
    pub y_scale: f64,
    pub y_breaks: Vec<f64>,
    pub decay: Decay,
}

impl HalfSpaceDomain {
    pub fn new(d: usize) -> Self {
        HalfSpaceDomain {
            d,
            x_scale: 1.0,
            x_breaks: vec![vec![0.0]; d],
            y_max: None,
            y_scale: 1.0,
            y_breaks: vec![],
            decay: Decay::Algebraic,
        }
    }

    pub fn with_x_breaks(mut self, breaks: Vec<Vec<f64>>) -> Self {
        self.x_breaks = breaks;
        self
    }

    pub fn with_y_breaks(mut self, breaks: Vec<f64>) -> Self {
        self.y_breaks = breaks;
        self
    }

    pub fn with_y_max(mut self, y_max: f64) -> Self {
        self.y_max = Some(y_max);
        self
    }

    pub fn with_decay(mut self, decay: Decay, y_scale: f64) -> Self {
        self.decay = decay;
        self.y_scale = y_scale;
        self
    }

    pub fn with_x_scale(mut self, s: f64) -> Self {
        self.x_scale = s;
        self
    }

    fn x_to_t(&self, x: f64) -> f64 {
        if x == 0.0 {
            0.0
        } else {
            let s = self.x_scale;
            (-s + (s * s + 4.0 * x * x).sqrt()) / (2.0 * x)
        }
    }

    fn y_to_u(&self, y: f64) -> f64 {
        match (self.y_max, self.decay) {
            (Some(_), _) => y,
            (None, Decay::Algebraic) => y / (y + self.y_scale),
            (None, Decay::Exponential) => -(-y / self.y_scale).exp_m1(),
        }
    }

    fn u_range(&self) -> (f64, f64) {
        match self.y_max {
            Some(m) => (0.0, m),
            None => (0.0, 1.0),
        }
    }

    /// Initial grid of boxes in the mapped coordinates.
    fn boxes(&self) -> Vec<(Vec<f64>, Vec<f64>)> {
        let mut axes: Vec<Vec<f64>> = Vec::with_capacity(self.d + 1);
        for i in 0..self.d {
            let mut cuts = vec![-1.0, 1.0];
            if let Some(b) = self.x_breaks.get(i) {
                cuts.extend(b.iter().map(|&x| self.x_to_t(x)));
            }
            axes.push(sorted_unique(cuts));
        }
        let (u0, u1) = self.u_range();
        let mut cuts = vec![u0, u1];
        cuts.extend(self.y_breaks.iter().map(|&y| self.y_to_u(y)).filter(|&u| u > u0 && u < u1));
        axes.push(sorted_unique(cuts));

        let mut out = vec![(Vec::new(), Vec::new())];
        for cuts in &axes {
            let mut next = Vec::with_capacity(out.len() * (cuts.len() - 1));
            for (lo, hi) in &out {
                for w in cuts.windows(2) {
                    let mut l = lo.clone();
                    let mut h = hi.clone();
                    l.push(w[0]);
                    h.push(w[1]);
                    next.push((l, h));
                }
            }
            out = next;
        }
        out
    }
}

fn sorted_unique(mut v: Vec<f64>) -> Vec<f64> {
    v.retain(|x| x.is_finite());
    v.sort_by(|a, b| a.total_cmp(b));
    v.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    v
}

/// Integral of `f(x, y)` over R^d × R_+.
///
/// The integrand receives `x` as a slice of length `d` and `y > 0`.
pub fn integrate_halfspace<F>(f: F, dom: &HalfSpaceDomain, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(&[f64], f64) -> f64,
{
    let d = dom.d;
    if d == 0 || d > MAX_DIM {
        return Err(Error::Domain(format!("integrate_halfspace supports 1 ≤ d ≤ {MAX_DIM}, got {d}")));
    }
    let s = dom.x_scale;
    let mapped = |t: &[f64]| -> f64 {
        let mut x = [0.0f64; MAX_DIM];
        let mut jac = 1.0;
        for i in 0..d {
            let ti = t[i];
            let q = 1.0 - ti * ti;
            x[i] = s * ti / q;
            jac *= s * (1.0 + ti * ti) / (q * q);
        }
        let u = t[d];
        let (y, jy) = match (dom.y_max, dom.decay) {
            (Some(_), _) => (u, 1.0),
            (None, Decay::Algebraic) => {
                let q = 1.0 - u;
                (dom.y_scale * u / q, dom.y_scale / (q * q))
            }
            (None, Decay::Exponential) => {
                let q = 1.0 - u;
                (-dom.y_scale * q.ln(), dom.y_scale / q)
            }
        };
        let v = f(&x[..d], y);
        if v == 0.0 {
            0.0
        } else {
            v * jac * jy
        }
    };
    let boxes = dom.boxes();
    integrate_boxes(&mapped, &boxes, cfg).map_err(|e| match e {
        // report the offending point in the original coordinates
        Error::NonFinite { point } => {
            let mut x: Vec<f64> = point[..d].iter().map(|&t| s * t / (1.0 - t * t)).collect();
            let u = point[d];
            x.push(match (dom.y_max, dom.decay) {
                (Some(_), _) => u,
                (None, Decay::Algebraic) => dom.y_scale * u / (1.0 - u),
                (None, Decay::Exponential) => -dom.y_scale * (1.0 - u).ln(),
            });
            Error::NonFinite { point: x }
        }
        other => other,
    })
}

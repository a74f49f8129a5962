//! Discrete and continuous kernels of the three Riesz-transform families.

mod continuous;
mod matrix;
mod prob;
mod projection;
mod rotation;

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice::LatticePoint;
use crate::numerics::{QuadConfig, QuadResult};
use crate::poisson::{c_d, pow_half};
use crate::{Error, Result};

pub use continuous::{continuous_prob_hilbert, continuous_prob_riesz, fourier_bound_const, fourier_bound_half_term, j_tail_l1_norm};
pub use matrix::{hmatrix, ConstantMatrix};
pub use prob::{
    hilbert_correction, prob_hilbert_kernel_1d, prob_integrals, prob_integrands, prob_riesz_kernel, prob_riesz_kernel_with,
    u_tail, ProbIntegrands, Y_CUT,
};
pub use projection::{finite_w_kernel, limit_kernel};
pub(crate) use prob::lattice_domain;
pub use rotation::{rotation_kernel, rotation_kernel_2d};

pub(crate) fn check_axis(n: &LatticePoint, k: usize, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    if k == 0 || k > d {
        return Err(Error::Domain(format!("axis k = {k} out of range 1..={d}")));
    }
    if n.dim() != d {
        return Err(Error::Domain(format!("lattice point {n} does not have dimension {d}")));
    }
    Ok(())
}

/// c_d n_k/|n|^{d+1}, zero at the origin.
pub fn cz_riesz_kernel(n: &LatticePoint, k: usize, d: usize) -> Result<f64> {
    check_axis(n, k, d)?;
    if n.is_zero() {
        return Ok(0.0);
    }
    Ok(c_d(d) * n.coords()[k - 1] as f64 / pow_half(n.norm2(), d + 1))
}

/// The discrete Hilbert kernel 1/(πn), zero at n = 0.
pub fn hilbert_dis_kernel(n: i64) -> f64 {
    if n == 0 {
        0.0
    } else {
        1.0 / (PI * n as f64)
    }
}

/// Which kernel family to evaluate. Axes are 1-based.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum KernelKind {
    CzRiesz(usize),
    ProbRiesz(usize),
    Rotation(usize),
    /// K^w_A(n, 0).
    FiniteW(ConstantMatrix, f64),
    HilbertDis,
    ProbHilbert,
}

impl KernelKind {
    /// Short tag used in tables and cache keys.
    pub fn tag(&self) -> &'static str {
        match self {
            KernelKind::CzRiesz(_) => "cz",
            KernelKind::ProbRiesz(_) => "prob",
            KernelKind::Rotation(_) => "rot",
            KernelKind::FiniteW(..) => "finite_w",
            KernelKind::HilbertDis => "hilbert_dis",
            KernelKind::ProbHilbert => "prob_hilbert",
        }
    }

    /// The axis k, or 1 for the one-dimensional families.
    pub fn axis(&self) -> usize {
        match self {
            KernelKind::CzRiesz(k) | KernelKind::ProbRiesz(k) | KernelKind::Rotation(k) => *k,
            KernelKind::FiniteW(..) | KernelKind::HilbertDis | KernelKind::ProbHilbert => 1,
        }
    }

    /// Whether values come from quadrature rather than a closed form.
    pub fn is_expensive(&self, d: usize) -> bool {
        match self {
            KernelKind::ProbRiesz(_) => d >= 2,
            KernelKind::Rotation(_) => d >= 3,
            KernelKind::FiniteW(..) => true,
            _ => false,
        }
    }

    /// Parse "cz", "prob", "rot", "hilbert_dis", "prob_hilbert" with an axis.
    pub fn parse(name: &str, k: usize) -> Result<Self> {
        Ok(match name {
            "cz" | "cz_riesz" => KernelKind::CzRiesz(k),
            "prob" | "prob_riesz" => KernelKind::ProbRiesz(k),
            "rot" | "rotation" => KernelKind::Rotation(k),
            "hilbert_dis" | "hdis" => KernelKind::HilbertDis,
            "prob_hilbert" | "ph" => KernelKind::ProbHilbert,
            _ => return Err(Error::Usage(format!("unknown kernel kind '{name}'"))),
        })
    }

    /// K(n) for this family in dimension n.dim().
    pub fn eval(&self, n: &LatticePoint, cfg: &QuadConfig) -> Result<QuadResult> {
        let d = n.dim();
        let one_d = |what: &str| {
            if d != 1 {
                Err(Error::Domain(format!("{what} is only defined for d = 1")))
            } else {
                Ok(n.coords()[0])
            }
        };
        match self {
            KernelKind::CzRiesz(k) => Ok(QuadResult::new(cz_riesz_kernel(n, *k, d)?, 0.0, 1)),
            KernelKind::ProbRiesz(k) => {
                if d == 1 {
                    check_axis(n, *k, d)?;
                    Ok(QuadResult::new(prob_hilbert_kernel_1d(n.coords()[0]), 0.0, 1))
                } else {
                    prob_riesz_kernel(n, *k, d, cfg)
                }
            }
            KernelKind::Rotation(k) => {
                if d == 1 {
                    // on the line the rotation and CZ transforms coincide
                    Ok(QuadResult::new(cz_riesz_kernel(n, *k, d)?, 0.0, 1))
                } else if d == 2 {
                    Ok(QuadResult::new(rotation_kernel_2d(n, *k)?, 0.0, 1))
                } else {
                    rotation_kernel(n, *k, d, cfg)
                }
            }
            KernelKind::FiniteW(a, w) => finite_w_kernel(n, &LatticePoint::zero(d), a, *w, d, cfg),
            KernelKind::HilbertDis => Ok(QuadResult::new(hilbert_dis_kernel(one_d("hilbert_dis")?), 0.0, 1)),
            KernelKind::ProbHilbert => Ok(QuadResult::new(prob_hilbert_kernel_1d(one_d("prob_hilbert")?), 0.0, 1)),
        }
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelKind::FiniteW(_, w) => write!(f, "finite_w(w={w})"),
            KernelKind::HilbertDis | KernelKind::ProbHilbert => write!(f, "{}", self.tag()),
            _ => write!(f, "{}{}", self.tag(), self.axis()),
        }
    }
}

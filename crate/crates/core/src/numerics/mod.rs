//! Adaptive quadrature over intervals, half-lines, boxes and the upper half-space,
//! plus the digamma/trigamma functions used by the multiplier formulas.

mod cubature;
mod gk;
mod halfspace;
mod special;

pub use cubature::{integrate_box, integrate_boxes};
pub use gk::{integrate_1d, integrate_from, integrate_semiinf, Decay};
pub use halfspace::{integrate_halfspace, HalfSpaceDomain};
pub use special::{digamma, digamma_diff, trigamma, trigamma_diff, EULER_GAMMA};

use serde::{Deserialize, Serialize};

/// Value of an adaptive integration with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
    pub evals: usize,
}

impl QuadResult {
    pub fn new(value: f64, abs_error: f64, evals: usize) -> Self {
        QuadResult { value, abs_error: abs_error.abs(), evals: evals.max(1) }
    }

    /// Scales value and error by a constant.
    pub fn scale(self, c: f64) -> Self {
        QuadResult { value: self.value * c, abs_error: self.abs_error * c.abs(), evals: self.evals }
    }

    /// Adds a constant that carries no error of its own.
    pub fn shift(self, c: f64) -> Self {
        QuadResult { value: self.value + c, ..self }
    }

    pub fn add(self, other: QuadResult) -> Self {
        QuadResult {
            value: self.value + other.value,
            abs_error: self.abs_error + other.abs_error,
            evals: self.evals + other.evals,
        }
    }
}

/// Tolerances and the subdivision budget for the adaptive integrators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig { rel_tol: 1e-8, abs_tol: 1e-10, max_subdivisions: 1_000_000 }
    }
}

impl QuadConfig {
    pub fn new(rel_tol: f64, abs_tol: f64, max_subdivisions: usize) -> Self {
        QuadConfig { rel_tol, abs_tol, max_subdivisions }
    }

    /// Looser setting used for three dimensional kernel tables.
    pub fn relaxed() -> Self {
        QuadConfig { rel_tol: 1e-5, abs_tol: 1e-7, max_subdivisions: 1_000_000 }
    }

    pub fn with_tol(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }

    pub(crate) fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }

    pub(crate) fn validate(&self) -> crate::Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(crate::Error::Domain(format!(
                "tolerances must be positive (rel {}, abs {})",
                self.rel_tol, self.abs_tol
            )));
        }
        if self.max_subdivisions == 0 {
            return Err(crate::Error::Domain("max_subdivisions must be at least 1".into()));
        }
        Ok(())
    }
}
